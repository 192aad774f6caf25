use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

/// Exact rational number in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(pub BigRational);

impl Rat {
    pub fn new(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Rat {
        Rat(BigRational::new(n.into(), d.into()))
    }
    pub fn int(n: i64) -> Rat {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }
    pub fn from_bigint(n: BigInt) -> Rat {
        Rat(BigRational::from_integer(n))
    }
    pub fn zero() -> Rat {
        Rat(BigRational::zero())
    }
    pub fn one() -> Rat {
        Rat(BigRational::one())
    }
    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }
    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }
    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }
    pub fn signum(&self) -> i8 {
        match self.0.numer().sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }
    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }
    pub fn recip(&self) -> Rat {
        assert!(!self.is_zero(), "division by zero");
        Rat(self.0.recip())
    }
    pub fn pow(&self, e: u32) -> Rat {
        let mut r = Rat::one();
        for _ in 0..e {
            r = r * self;
        }
        r
    }
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or_else(|| {
            let n = self.numer().to_f64().unwrap_or(f64::MAX);
            let d = self.denom().to_f64().unwrap_or(f64::MAX);
            n / d
        })
    }
    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }
    /// Bit length of numerator plus denominator, a rough height measure.
    pub fn height_bits(&self) -> u64 {
        self.numer().bits() + self.denom().bits()
    }
    /// Midpoint of two rationals.
    pub fn mid(a: &Rat, b: &Rat) -> Rat {
        (a.clone() + b) * Rat::new(1, 2)
    }
    /// A rational with small denominator strictly between `a < b`.
    pub fn simple_between(a: &Rat, b: &Rat) -> Rat {
        debug_assert!(a < b);
        let mut den = BigInt::one();
        loop {
            let lo = (a.0.clone() * BigRational::from_integer(den.clone())).floor().to_integer() + 1;
            let cand = Rat(BigRational::new(lo, den.clone()));
            if &cand > a && &cand < b {
                return cand;
            }
            den *= 2;
        }
    }
    pub fn lcm_denoms<'a>(it: impl IntoIterator<Item = &'a Rat>) -> BigInt {
        it.into_iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
    }
    pub fn numer_abs_u(&self) -> BigUint {
        self.numer().magnitude().clone()
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, thiserror::Error, PartialEq)]
#[error("invalid rational literal {0:?}")]
pub struct ParseRatError(pub String);

impl FromStr for Rat {
    type Err = ParseRatError;
    fn from_str(s: &str) -> Result<Rat, ParseRatError> {
        let err = || ParseRatError(s.to_string());
        let t = s.trim();
        let (n, d) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let n = BigInt::from_str(n).map_err(|_| err())?;
        let d = BigInt::from_str(d).map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        Ok(Rat::new(n, d))
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Rat {
        Rat::int(n)
    }
}

macro_rules! rat_binop {
    ($tr:ident, $m:ident, $op:tt) => {
        impl $tr<Rat> for Rat {
            type Output = Rat;
            fn $m(self, o: Rat) -> Rat { Rat(self.0 $op o.0) }
        }
        impl<'a> $tr<&'a Rat> for Rat {
            type Output = Rat;
            fn $m(self, o: &'a Rat) -> Rat { Rat(self.0 $op &o.0) }
        }
        impl<'a, 'b> $tr<&'b Rat> for &'a Rat {
            type Output = Rat;
            fn $m(self, o: &'b Rat) -> Rat { Rat(&self.0 $op &o.0) }
        }
    };
}
rat_binop!(Add, add, +);
rat_binop!(Sub, sub, -);
rat_binop!(Mul, mul, *);

impl Div<Rat> for Rat {
    type Output = Rat;
    fn div(self, o: Rat) -> Rat {
        assert!(!o.is_zero(), "division by zero");
        Rat(self.0 / o.0)
    }
}
impl<'a> Div<&'a Rat> for Rat {
    type Output = Rat;
    fn div(self, o: &'a Rat) -> Rat {
        assert!(!o.is_zero(), "division by zero");
        Rat(self.0 / &o.0)
    }
}
impl<'a, 'b> Div<&'b Rat> for &'a Rat {
    type Output = Rat;
    fn div(self, o: &'b Rat) -> Rat {
        assert!(!o.is_zero(), "division by zero");
        Rat(&self.0 / &o.0)
    }
}
impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}
impl<'a> Neg for &'a Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}
impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, o: &Rat) {
        self.0 += &o.0;
    }
}
impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, o: &Rat) {
        self.0 -= &o.0;
    }
}
impl MulAssign<&Rat> for Rat {
    fn mul_assign(&mut self, o: &Rat) {
        self.0 *= &o.0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let r: Rat = "6/-4".parse().unwrap();
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!("7".parse::<Rat>().unwrap().to_string(), "7");
        assert!("1/0".parse::<Rat>().is_err());
        assert!("x".parse::<Rat>().is_err());
    }

    #[test]
    fn between() {
        let a = Rat::new(1, 3);
        let b = Rat::new(1, 2);
        let m = Rat::simple_between(&a, &b);
        assert!(a < m && m < b);
        assert_eq!(m, Rat::new(3, 8));
    }
}
