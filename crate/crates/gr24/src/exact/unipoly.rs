use super::field::Field;
use super::matrix::Matrix;
use super::rat::Rat;
use super::surd::Surd;
use std::fmt;

/// Dense univariate polynomial, coefficients lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly<F: Field = Rat> {
    coeffs: Vec<F>,
}

impl<F: Field> UniPoly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }
    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }
    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }
    pub fn x() -> Self {
        Self::new(vec![F::zero(), F::one()])
    }
    /// `x - r`
    pub fn linear_root(r: F) -> Self {
        Self::new(vec![-r, F::one()])
    }
    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }
    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
    }
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }
    pub fn deg(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }
    pub fn lc(&self) -> F {
        self.coeffs.last().cloned().unwrap_or_else(F::zero)
    }
    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
    pub fn eval_rat(&self, x: &Rat) -> F {
        self.eval(&F::from_rat(x))
    }
    pub fn scale(&self, s: &F) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * s).collect())
    }
    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + &o.coeff(i)).collect())
    }
    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - &o.coeff(i)).collect())
    }
    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + &(a.clone() * b);
            }
        }
        Self::new(out)
    }
    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(F::one()), |acc, _| acc.mul(self))
    }
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lc().inv())
    }
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let mut r = self.coeffs.clone();
        let dd = d.coeffs.len() - 1;
        if r.len() < d.coeffs.len() {
            return (Self::zero(), self.clone());
        }
        let inv = d.lc().inv();
        let mut q = vec![F::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = r[i + dd].clone() * &inv;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[i + j] = r[i + j].clone() - &(c.clone() * dc);
                }
            }
            q[i] = c;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }
    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }
    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }
    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * &F::from_int(i as i64))
                .collect(),
        )
    }
    pub fn squarefree(&self) -> Self {
        if self.deg() <= 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }
    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> UniPoly<G> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }
    /// Resultant via the Sylvester determinant.
    pub fn resultant(&self, o: &Self) -> F {
        let (m, n) = (self.deg(), o.deg());
        if m < 0 || n < 0 {
            return F::zero();
        }
        let (m, n) = (m as usize, n as usize);
        if m + n == 0 {
            return F::one();
        }
        let size = m + n;
        let mut s = Matrix::<F>::zeros(size, size);
        for i in 0..n {
            for (j, c) in self.coeffs.iter().rev().enumerate() {
                s[(i, i + j)] = c.clone();
            }
        }
        for i in 0..m {
            for (j, c) in o.coeffs.iter().rev().enumerate() {
                s[(n + i, i + j)] = c.clone();
            }
        }
        s.det()
    }
}

impl UniPoly<Rat> {
    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| Rat::int(x)).collect())
    }
    pub fn to_surd(&self) -> UniPoly<Surd> {
        self.map(|c| Surd::from_rat(c))
    }
}

/// Isolating interval `(lo, hi)` containing exactly one root, or the exact root when `lo == hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Rat,
    pub hi: Rat,
}

impl RootInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }
    pub fn width(&self) -> Rat {
        self.hi.clone() - &self.lo
    }
    pub fn contains(&self, x: &Rat) -> bool {
        if self.is_exact() {
            x == &self.lo
        } else {
            &self.lo < x && x < &self.hi
        }
    }
}

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum SturmError {
    #[error("zero polynomial")]
    ZeroPolynomial,
}

/// Sturm sequence of a squarefree polynomial.
pub struct Sturm<F: Field> {
    pub seq: Vec<UniPoly<F>>,
}

impl<F: Field> Sturm<F> {
    pub fn new(p: &UniPoly<F>) -> Result<Self, SturmError> {
        if p.is_zero() {
            return Err(SturmError::ZeroPolynomial);
        }
        let p = p.squarefree();
        let mut seq = vec![p.clone(), p.derivative()];
        while !seq.last().unwrap().is_zero() {
            let n = seq.len();
            let r = seq[n - 2].rem(&seq[n - 1]).neg();
            seq.push(r);
        }
        seq.pop();
        Ok(Sturm { seq })
    }
    pub fn poly(&self) -> &UniPoly<F> {
        &self.seq[0]
    }
    /// Sign variations at `x`, zeros skipped.
    pub fn variations(&self, x: &Rat) -> usize {
        let xf = F::from_rat(x);
        let mut last = 0i8;
        let mut v = 0;
        for q in &self.seq {
            let s = q.eval(&xf).signum();
            if s != 0 {
                if last != 0 && s != last {
                    v += 1;
                }
                last = s;
            }
        }
        v
    }
    /// Number of distinct roots in the open interval `(a, b)`.
    pub fn count_open(&self, a: &Rat, b: &Rat) -> usize {
        let n = self.variations(a) - self.variations(b);
        if self.seq[0].eval_rat(b).is_zero() {
            n - 1
        } else {
            n
        }
    }
    pub fn isolate(&self, lo: &Rat, hi: &Rat) -> Vec<RootInterval> {
        let mut out = Vec::new();
        if lo < hi {
            self.isolate_rec(lo.clone(), hi.clone(), &mut out);
        }
        out
    }
    fn isolate_rec(&self, a: Rat, b: Rat, out: &mut Vec<RootInterval>) {
        let n = self.count_open(&a, &b);
        if n == 0 {
            return;
        }
        if n == 1 {
            out.push(RootInterval { lo: a, hi: b });
            return;
        }
        let m = Rat::mid(&a, &b);
        self.isolate_rec(a, m.clone(), out);
        if self.seq[0].eval_rat(&m).is_zero() {
            out.push(RootInterval { lo: m.clone(), hi: m.clone() });
        }
        self.isolate_rec(m, b, out);
    }
    /// Shrinks an isolating interval until its width is below `width`.
    pub fn refine(&self, iv: &RootInterval, width: &Rat) -> RootInterval {
        let mut iv = iv.clone();
        while !iv.is_exact() && &iv.width() >= width {
            let m = Rat::mid(&iv.lo, &iv.hi);
            if self.seq[0].eval_rat(&m).is_zero() {
                return RootInterval { lo: m.clone(), hi: m };
            }
            if self.count_open(&iv.lo, &m) == 1 {
                iv.hi = m;
            } else {
                iv.lo = m;
            }
        }
        iv
    }
}

/// Cauchy bound: every real root has absolute value below the returned rational.
pub fn root_bound<F: Field>(p: &UniPoly<F>) -> Rat {
    let lc = p.lc();
    let mut m = Rat::zero();
    for c in &p.coeffs()[..p.coeffs().len().saturating_sub(1)] {
        let q = (c.clone() / &lc).abs();
        let ub = q.bounds(16).1;
        if ub > m {
            m = ub;
        }
    }
    m + Rat::one()
}

/// Isolating intervals for the real roots of `p` inside `(lo, hi)`.
pub fn sturm_isolate<F: Field>(p: &UniPoly<F>, lo: &Rat, hi: &Rat) -> Result<Vec<RootInterval>, SturmError> {
    Ok(Sturm::new(p)?.isolate(lo, hi))
}

/// Isolating intervals for all real roots of a nonzero polynomial, in increasing order.
pub fn real_roots<F: Field>(p: &UniPoly<F>) -> Result<Vec<RootInterval>, SturmError> {
    if p.is_zero() {
        return Err(SturmError::ZeroPolynomial);
    }
    if p.deg() == 0 {
        return Ok(vec![]);
    }
    let b = root_bound(p);
    sturm_isolate(p, &-b.clone(), &b)
}

/// Rational sample points, one in each open cell cut out by the real roots of `p`
/// (including the two unbounded cells).
pub fn cell_samples<F: Field>(p: &UniPoly<F>) -> Vec<Rat> {
    if p.deg() <= 0 {
        return vec![Rat::zero()];
    }
    let st = Sturm::new(p).expect("nonzero");
    let b = root_bound(p);
    let roots = st.isolate(&-b.clone(), &b);
    separate(&st, roots, &b)
}

/// Rationals separating consecutive isolated roots, plus one point beyond each end.
fn separate<F: Field>(st: &Sturm<F>, mut roots: Vec<RootInterval>, bound: &Rat) -> Vec<Rat> {
    let mut out = vec![-bound.clone() - Rat::one()];
    for i in 0..roots.len() {
        if i + 1 < roots.len() {
            // open intervals from isolation satisfy hi_i <= lo_{i+1}; a shared
            // endpoint is only a problem when one side is an exact root
            while roots[i].hi == roots[i + 1].lo && (roots[i].is_exact() || roots[i + 1].is_exact()) {
                for k in [i, i + 1] {
                    if !roots[k].is_exact() {
                        let w = roots[k].width() * Rat::new(1, 2);
                        roots[k] = st.refine(&roots[k], &w);
                    }
                }
            }
            let (a, b) = (&roots[i].hi, &roots[i + 1].lo);
            out.push(if a < b { Rat::simple_between(a, b) } else { a.clone() });
        }
    }
    out.push(bound.clone() + Rat::one());
    out
}

impl<F: Field> fmt::Display for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let m = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            };
            parts.push(if m.is_empty() { format!("({c})") } else { format!("({c})*{m}") });
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl<F: Field> fmt::Debug for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_and_gcd() {
        let a = UniPoly::from_ints(&[-1, 0, 1]);
        let b = UniPoly::from_ints(&[1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, UniPoly::from_ints(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.gcd(&UniPoly::from_ints(&[1, 2, 1])), b);
        assert_eq!(UniPoly::from_ints(&[1, 2, 1]).squarefree(), b);
    }

    #[test]
    fn sturm_basic() {
        let p = UniPoly::from_ints(&[2, -3, 1]);
        let ivs = sturm_isolate(&p, &Rat::int(0), &Rat::int(3)).unwrap();
        assert_eq!(ivs.len(), 2);
        assert!(sturm_isolate(&UniPoly::from_ints(&[1, 0, 1]), &Rat::int(-10), &Rat::int(10)).unwrap().is_empty());
        assert_eq!(sturm_isolate(&UniPoly::<Rat>::zero(), &Rat::int(0), &Rat::int(1)), Err(SturmError::ZeroPolynomial));
    }

    #[test]
    fn samples_interleave_roots() {
        let p = UniPoly::from_ints(&[0, -1, 0, 1]); // t^3 - t
        let s = cell_samples(&p);
        assert_eq!(s.len(), 4);
        for w in s.windows(2) {
            assert!(w[0] < w[1]);
        }
        for x in &s {
            assert!(!p.eval_rat(x).is_zero());
        }
    }

    #[test]
    fn resultant_detects_common_root() {
        let a = UniPoly::from_ints(&[-2, 1]);
        let b = UniPoly::from_ints(&[-4, 0, 1]);
        assert!(a.resultant(&b).is_zero());
        let c = UniPoly::from_ints(&[1, 0, 1]);
        assert_eq!(a.resultant(&c), Rat::int(5));
    }
}
