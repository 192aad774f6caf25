use super::field::Field;
use super::rat::Rat;
use super::unipoly::UniPoly;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write;

/// Exponent vector ordered by graded lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mono(pub Vec<u32>);

impl Mono {
    pub fn one(n: usize) -> Self {
        Mono(vec![0; n])
    }
    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Mono(e)
    }
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
    pub fn mul(&self, o: &Mono) -> Mono {
        Mono(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Mono {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| self.0.cmp(&o.0))
    }
}
impl PartialOrd for Mono {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// All monomials of total degree `d` in `n` variables, in increasing grlex order.
pub fn monomials(n: usize, d: u32) -> Vec<Mono> {
    fn rec(n: usize, d: u32, pre: &mut Vec<u32>, out: &mut Vec<Mono>) {
        if pre.len() == n - 1 {
            pre.push(d);
            out.push(Mono(pre.clone()));
            pre.pop();
            return;
        }
        for k in (0..=d).rev() {
            pre.push(k);
            rec(n, d - k, pre, out);
            pre.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Mono(vec![]));
        }
        return out;
    }
    rec(n, d, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Sparse multivariate polynomial in a fixed number of variables.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultiPoly<F: Field = Rat> {
    nvars: usize,
    terms: BTreeMap<Mono, F>,
}

impl<F: Field> MultiPoly<F> {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }
    pub fn constant(nvars: usize, c: F) -> Self {
        Self::from_terms(nvars, [(Mono::one(nvars), c)])
    }
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::from_terms(nvars, [(Mono::var(nvars, i), F::one())])
    }
    pub fn from_terms(nvars: usize, it: impl IntoIterator<Item = (Mono, F)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in it {
            assert_eq!(m.0.len(), nvars);
            p.add_term(m, c);
        }
        p
    }
    /// Linear form `sum c_i x_i`.
    pub fn linear(c: &[F]) -> Self {
        let n = c.len();
        Self::from_terms(n, c.iter().enumerate().map(|(i, c)| (Mono::var(n, i), c.clone())))
    }
    pub fn add_term(&mut self, m: Mono, c: F) {
        if c.is_zero() {
            return;
        }
        let v = match self.terms.remove(&m) {
            Some(old) => old + &c,
            None => c,
        };
        if !v.is_zero() {
            self.terms.insert(m, v);
        }
    }
    pub fn nvars(&self) -> usize {
        self.nvars
    }
    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &F)> {
        self.terms.iter()
    }
    pub fn coeff(&self, m: &Mono) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Mono::degree).max()
    }
    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }
    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }
    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    pub fn neg(&self) -> Self {
        self.scale(&-F::one())
    }
    pub fn scale(&self, s: &F) -> Self {
        Self::from_terms(self.nvars, self.terms.iter().map(|(m, c)| (m.clone(), c.clone() * s)))
    }
    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                r.add_term(m1.mul(m2), c1.clone() * c2);
            }
        }
        r
    }
    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(self.nvars, F::one()), |a, _| a.mul(self))
    }
    pub fn eval(&self, x: &[F]) -> F {
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (xi, &e) in x.iter().zip(&m.0) {
                for _ in 0..e {
                    t = t * xi;
                }
            }
            acc = acc + &t;
        }
        acc
    }
    /// Substitutes `x_i -> subs[i]`; all substitutes share one variable count.
    pub fn compose(&self, subs: &[MultiPoly<F>]) -> MultiPoly<F> {
        assert_eq!(subs.len(), self.nvars);
        let n = subs.first().map_or(0, |s| s.nvars);
        let mut r = MultiPoly::zero(n);
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(n, c.clone());
            for (s, &e) in subs.iter().zip(&m.0) {
                if e > 0 {
                    t = t.mul(&s.pow(e));
                }
            }
            r = r.add(&t);
        }
        r
    }
    pub fn partial(&self, i: usize) -> Self {
        let mut r = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            if m.0[i] > 0 {
                let mut e = m.clone();
                e.0[i] -= 1;
                r.add_term(e, c.clone() * &F::from_int(m.0[i] as i64));
            }
        }
        r
    }
    /// Coefficient vector over `monomials(nvars, d)`.
    pub fn coeff_vector(&self, d: u32) -> Vec<F> {
        monomials(self.nvars, d).iter().map(|m| self.coeff(m)).collect()
    }
    pub fn from_coeff_vector(nvars: usize, d: u32, v: &[F]) -> Self {
        Self::from_terms(nvars, monomials(nvars, d).into_iter().zip(v.iter().cloned()))
    }
    /// Univariate view of a polynomial in one variable.
    pub fn to_uni(&self) -> UniPoly<F> {
        assert_eq!(self.nvars, 1);
        let d = self.degree().unwrap_or(0) as usize;
        let mut c = vec![F::zero(); d + 1];
        for (m, v) in &self.terms {
            c[m.0[0] as usize] = v.clone();
        }
        UniPoly::new(c)
    }
    /// View as a polynomial in variable `i` with coefficients in the remaining variables.
    pub fn coeffs_in(&self, i: usize) -> Vec<MultiPoly<F>> {
        let d = self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0) as usize;
        let mut out = vec![MultiPoly::zero(self.nvars - 1); d + 1];
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let k = e.remove(i) as usize;
            out[k].add_term(Mono(e), c.clone());
        }
        out
    }
    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> MultiPoly<G> {
        MultiPoly::from_terms(self.nvars, self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }
    /// Renders with the given variable names, highest grlex term first.
    pub fn format_with(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let mut mono = String::new();
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => mono.push_str(names[i]),
                    _ => {
                        let _ = write!(mono, "{}^{}", names[i], e);
                    }
                }
            }
            let neg = c.signum() < 0 && c.is_rational();
            let mag = if neg { -c.clone() } else { c.clone() };
            let cs = mag.to_string();
            let cs = if !mag.is_rational() { format!("({cs})") } else { cs };
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if mono.is_empty() {
                s.push_str(&cs);
            } else if mag.is_one() {
                s.push_str(&mono);
            } else {
                let _ = write!(s, "{cs}*{mono}");
            }
        }
        s
    }
}

impl MultiPoly<Rat> {
    /// Clears denominators and content so that the coefficients are coprime integers
    /// with positive leading term.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lcm = Rat::lcm_denoms(self.terms.values());
        let scaled = self.scale(&Rat::from_bigint(lcm));
        let mut g = num_bigint::BigInt::from(0);
        for c in scaled.terms.values() {
            g = num_integer::Integer::gcd(&g, c.numer());
        }
        let mut r = scaled.scale(&Rat::from_bigint(g).recip());
        if r.terms.values().next_back().unwrap().signum() < 0 {
            r = r.neg();
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_count() {
        assert_eq!(monomials(6, 2).len(), 21);
        assert_eq!(monomials(3, 3).len(), 10);
        let m = monomials(2, 2);
        assert_eq!(m[0], Mono(vec![0, 2]));
        assert_eq!(m[2], Mono(vec![2, 0]));
    }

    #[test]
    fn compose_and_eval() {
        let x = MultiPoly::<Rat>::var(2, 0);
        let y = MultiPoly::<Rat>::var(2, 1);
        let p = x.mul(&y).add(&x.pow(2));
        let t = MultiPoly::<Rat>::var(1, 0);
        let one = MultiPoly::constant(1, Rat::one());
        let q = p.compose(&[t.add(&one), t.clone()]);
        assert_eq!(q.to_uni(), UniPoly::from_ints(&[1, 3, 2]));
        assert_eq!(p.eval(&[Rat::int(2), Rat::int(3)]), Rat::int(10));
        assert_eq!(p.format_with(&["a", "b"]), "a^2 + a*b".replace('*', ""));
    }
}
