use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary precision fraction, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Builds `n / d`. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Renders a rational as `"p/q"`, including integers (`"3/1"`, `"0/1"`).
pub fn fmt_q(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// A field of characteristic zero in which every coefficient of a
/// [`BinaryForm`](super::BinaryForm) lives.
///
/// `zero()` and `one()` are the prime-field constants; elements of an
/// extension combine with them freely.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(r: Rational) -> Self;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn from_int(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Exact division. Panics when `rhs` is zero.
    fn div(&self, rhs: &Self) -> Self {
        self.clone() * rhs.inv().expect("division by zero")
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn from_rational(r: Rational) -> Self {
        r
    }

    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}
