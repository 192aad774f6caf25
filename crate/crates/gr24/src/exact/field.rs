use super::rat::Rat;
use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

/// An exact ordered subfield of the reals.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + std::hash::Hash
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rat(r: &Rat) -> Self;
    /// Sign of the real number, decided exactly.
    fn signum(&self) -> i8;
    fn to_f64(&self) -> f64;
    /// The value as a rational when it is one.
    fn as_rat(&self) -> Option<Rat>;
    /// Rational lower and upper bounds of width at most `2^-bits` (when irrational).
    fn bounds(&self, bits: u32) -> (Rat, Rat);

    fn from_int(n: i64) -> Self {
        Self::from_rat(&Rat::int(n))
    }
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn inv(&self) -> Self {
        Self::one() / self
    }
    fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self.clone()
        } else {
            self.clone()
        }
    }
    fn cmp_val(&self, other: &Self) -> std::cmp::Ordering {
        (self.clone() - other).signum().cmp(&0)
    }
    fn is_rational(&self) -> bool {
        self.as_rat().is_some()
    }
}

impl Field for Rat {
    fn zero() -> Rat {
        Rat::zero()
    }
    fn one() -> Rat {
        Rat::one()
    }
    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }
    fn from_rat(r: &Rat) -> Rat {
        r.clone()
    }
    fn signum(&self) -> i8 {
        Rat::signum(self)
    }
    fn to_f64(&self) -> f64 {
        Rat::to_f64(self)
    }
    fn as_rat(&self) -> Option<Rat> {
        Some(self.clone())
    }
    fn bounds(&self, _bits: u32) -> (Rat, Rat) {
        (self.clone(), self.clone())
    }
}
