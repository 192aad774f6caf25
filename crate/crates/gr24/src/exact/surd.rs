//! Real numbers of the form `c0 + c1*sqrt(r1) + ... + ck*sqrt(rk)` with rational
//! coefficients and distinct squarefree radicands. Such sums form a field
//! (a multiquadratic extension of Q) in which equality, sign and inverse are exact.

use super::field::Field;
use super::rat::Rat;
use num_bigint::{BigInt, BigUint};

use num_traits::One;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Squarefree radicand stored by its sorted prime factors; empty means 1.
pub type Radical = Vec<BigUint>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Surd {
    Q(Rat),
    Ext(BTreeMap<Radical, Rat>),
}

fn radical_value(r: &Radical) -> BigUint {
    r.iter().fold(BigUint::one(), |a, p| a * p)
}

/// sqrt(a)*sqrt(b) = coeff*sqrt(rad) for squarefree a, b.
fn mul_radicals(a: &Radical, b: &Radical) -> (BigUint, Radical) {
    let mut coeff = BigUint::one();
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] < b[j]) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j] < a[i] {
            out.push(b[j].clone());
            j += 1;
        } else {
            coeff *= &a[i];
            i += 1;
            j += 1;
        }
    }
    (coeff, out)
}

impl Surd {
    fn normalize(map: BTreeMap<Radical, Rat>) -> Surd {
        let map: BTreeMap<Radical, Rat> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        if map.keys().all(|k| k.is_empty()) {
            Surd::Q(map.into_values().next().unwrap_or_else(Rat::zero))
        } else {
            Surd::Ext(map)
        }
    }

    fn terms(&self) -> BTreeMap<Radical, Rat> {
        match self {
            Surd::Q(r) => {
                let mut m = BTreeMap::new();
                if !r.is_zero() {
                    m.insert(Vec::new(), r.clone());
                }
                m
            }
            Surd::Ext(m) => m.clone(),
        }
    }

    /// Exact square root of a nonnegative rational.
    pub fn sqrt_rat(q: &Rat) -> Surd {
        assert!(q.signum() >= 0, "square root of a negative rational");
        if q.is_zero() {
            return Surd::Q(Rat::zero());
        }
        // sqrt(n/d) = sqrt(n*d)/d
        let n = q.numer().magnitude() * q.denom().magnitude();
        let fac = num_prime::nt_funcs::factorize(n);
        let mut outside = BigUint::one();
        let mut rad: Radical = Vec::new();
        for (p, e) in fac {
            for _ in 0..e / 2 {
                outside *= &p;
            }
            if e % 2 == 1 {
                rad.push(p);
            }
        }
        rad.sort();
        let c = Rat::new(BigInt::from(outside), q.denom().clone());
        let mut m = BTreeMap::new();
        m.insert(rad, c);
        Surd::normalize(m)
    }

    pub fn radicands(&self) -> Vec<BigUint> {
        match self {
            Surd::Q(_) => vec![],
            Surd::Ext(m) => m.keys().filter(|k| !k.is_empty()).map(radical_value).collect(),
        }
    }

    fn conj_by(&self, p: &BigUint) -> Surd {
        let mut m = self.terms();
        for (k, c) in m.iter_mut() {
            if k.contains(p) {
                *c = -c.clone();
            }
        }
        Surd::normalize(m)
    }

    fn some_prime(&self) -> Option<BigUint> {
        match self {
            Surd::Q(_) => None,
            Surd::Ext(m) => m.keys().find(|k| !k.is_empty()).map(|k| k[0].clone()),
        }
    }

    /// Interval enclosure with each square root approximated to `bits` binary digits.
    fn enclosure(&self, bits: u32) -> (Rat, Rat) {
        let mut lo = Rat::zero();
        let mut hi = Rat::zero();
        let scale = BigUint::one() << (2 * bits as usize);
        let den = BigInt::one() << (bits as usize);
        for (k, c) in self.terms() {
            if k.is_empty() {
                lo += &c;
                hi += &c;
                continue;
            }
            let v = radical_value(&k) * &scale;
            let s = v.sqrt();
            let exact = &s * &s == v;
            let a = Rat::new(BigInt::from(s.clone()), den.clone());
            let b = if exact { a.clone() } else { Rat::new(BigInt::from(s + 1u32), den.clone()) };
            if c.signum() > 0 {
                lo += &(c.clone() * &a);
                hi += &(c * &b);
            } else {
                lo += &(c.clone() * &b);
                hi += &(c * &a);
            }
        }
        (lo, hi)
    }
}

impl Field for Surd {
    fn zero() -> Surd {
        Surd::Q(Rat::zero())
    }
    fn one() -> Surd {
        Surd::Q(Rat::one())
    }
    fn is_zero(&self) -> bool {
        matches!(self, Surd::Q(r) if r.is_zero())
    }
    fn from_rat(r: &Rat) -> Surd {
        Surd::Q(r.clone())
    }
    fn signum(&self) -> i8 {
        match self {
            Surd::Q(r) => r.signum(),
            Surd::Ext(_) => {
                let mut bits = 32;
                loop {
                    let (lo, hi) = self.enclosure(bits);
                    if lo.signum() > 0 {
                        return 1;
                    }
                    if hi.signum() < 0 {
                        return -1;
                    }
                    bits *= 2;
                }
            }
        }
    }
    fn to_f64(&self) -> f64 {
        match self {
            Surd::Q(r) => r.to_f64(),
            Surd::Ext(m) => m
                .iter()
                .map(|(k, c)| c.to_f64() * Rat::from_bigint(BigInt::from(radical_value(k))).to_f64().sqrt())
                .sum(),
        }
    }
    fn as_rat(&self) -> Option<Rat> {
        match self {
            Surd::Q(r) => Some(r.clone()),
            Surd::Ext(_) => None,
        }
    }
    fn bounds(&self, bits: u32) -> (Rat, Rat) {
        match self {
            Surd::Q(r) => (r.clone(), r.clone()),
            Surd::Ext(_) => self.enclosure(bits + 8),
        }
    }
}

impl Add for Surd {
    type Output = Surd;
    fn add(self, o: Surd) -> Surd {
        self + &o
    }
}
impl<'a> Add<&'a Surd> for Surd {
    type Output = Surd;
    fn add(self, o: &'a Surd) -> Surd {
        if let (Surd::Q(a), Surd::Q(b)) = (&self, o) {
            return Surd::Q(a + b);
        }
        let mut m = self.terms();
        for (k, c) in o.terms() {
            let e = m.entry(k).or_insert_with(Rat::zero);
            *e += &c;
        }
        Surd::normalize(m)
    }
}
impl Neg for Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        match self {
            Surd::Q(r) => Surd::Q(-r),
            Surd::Ext(m) => Surd::Ext(m.into_iter().map(|(k, c)| (k, -c)).collect()),
        }
    }
}
impl Sub for Surd {
    type Output = Surd;
    fn sub(self, o: Surd) -> Surd {
        self + &(-o)
    }
}
impl<'a> Sub<&'a Surd> for Surd {
    type Output = Surd;
    fn sub(self, o: &'a Surd) -> Surd {
        self + &(-o.clone())
    }
}
impl Mul for Surd {
    type Output = Surd;
    fn mul(self, o: Surd) -> Surd {
        self * &o
    }
}
impl<'a> Mul<&'a Surd> for Surd {
    type Output = Surd;
    fn mul(self, o: &'a Surd) -> Surd {
        match (&self, o) {
            (Surd::Q(a), Surd::Q(b)) => Surd::Q(a * b),
            (Surd::Q(a), b) | (b, Surd::Q(a)) => {
                if a.is_zero() {
                    return Surd::zero();
                }
                Surd::normalize(b.terms().into_iter().map(|(k, c)| (k, c * a)).collect())
            }
            _ => {
                let mut m: BTreeMap<Radical, Rat> = BTreeMap::new();
                let (ta, tb) = (self.terms(), o.terms());
                for (ka, ca) in &ta {
                    for (kb, cb) in &tb {
                        let (g, r) = mul_radicals(ka, kb);
                        let c = ca * cb * Rat::from_bigint(BigInt::from(g));
                        let e = m.entry(r).or_insert_with(Rat::zero);
                        *e += &c;
                    }
                }
                Surd::normalize(m)
            }
        }
    }
}
impl Div for Surd {
    type Output = Surd;
    fn div(self, o: Surd) -> Surd {
        self / &o
    }
}
impl<'a> Div<&'a Surd> for Surd {
    type Output = Surd;
    fn div(self, o: &'a Surd) -> Surd {
        assert!(!o.is_zero(), "division by zero");
        match o {
            Surd::Q(b) => {
                let inv = Surd::Q(b.recip());
                self * &inv
            }
            Surd::Ext(_) => {
                // Multiply numerator and denominator by a conjugate until the
                // denominator is rational.
                let mut num = self;
                let mut den = o.clone();
                while let Some(p) = den.some_prime() {
                    let c = den.conj_by(&p);
                    num = num * &c;
                    den = den * &c;
                }
                num / &den
            }
        }
    }
}

impl From<Rat> for Surd {
    fn from(r: Rat) -> Surd {
        Surd::Q(r)
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Surd::Q(r) => write!(f, "{r}"),
            Surd::Ext(m) => {
                let mut first = true;
                for (k, c) in m {
                    let (sign, mag) = if c.signum() < 0 { ("-", c.abs()) } else { ("+", c.clone()) };
                    if first {
                        if sign == "-" {
                            write!(f, "-")?;
                        }
                    } else {
                        write!(f, " {sign} ")?;
                    }
                    first = false;
                    if k.is_empty() {
                        write!(f, "{mag}")?;
                    } else if mag.is_one() {
                        write!(f, "sqrt({})", radical_value(k))?;
                    } else {
                        write!(f, "{mag}*sqrt({})", radical_value(k))?;
                    }
                }
                Ok(())
            }
        }
    }
}

impl fmt::Debug for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl serde::Serialize for Surd {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
