use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::scalar::{fmt_q, Rational};
use crate::error::{Error, Result};

/// Element `u + v·√d` of Q(√d).
///
/// `d` is `None` for elements created in Q itself; such elements adopt the
/// discriminant of whatever they are combined with. Combining elements of
/// two different extensions panics: only one quadratic extension is ever
/// built per computation.
#[derive(Clone, Debug)]
pub struct QuadExt {
    u: Rational,
    v: Rational,
    d: Option<Rational>,
}

impl QuadExt {
    /// Element of a proper extension. Rejects discriminants that are
    /// squares in Q.
    pub fn new(u: Rational, v: Rational, d: Rational) -> Result<Self> {
        if is_rational_square(&d) {
            return Err(Error::SquareDiscriminant(fmt_q(&d)));
        }
        Ok(QuadExt { u, v, d: Some(d) })
    }

    pub fn rational(u: Rational) -> Self {
        QuadExt {
            u,
            v: Rational::zero(),
            d: None,
        }
    }

    /// `√d` as an element of Q(√d).
    pub fn sqrt_of(d: Rational) -> Result<Self> {
        QuadExt::new(Rational::zero(), Rational::one(), d)
    }

    pub fn u(&self) -> &Rational {
        &self.u
    }

    pub fn v(&self) -> &Rational {
        &self.v
    }

    pub fn discriminant(&self) -> Option<&Rational> {
        self.d.as_ref()
    }

    pub fn is_rational(&self) -> bool {
        self.v.is_zero()
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.u.clone())
    }

    pub fn conj(&self) -> Self {
        QuadExt {
            u: self.u.clone(),
            v: -self.v.clone(),
            d: self.d.clone(),
        }
    }

    /// Field norm `u² − v²d`.
    pub fn norm(&self) -> Rational {
        match &self.d {
            None => &self.u * &self.u,
            Some(d) => &self.u * &self.u - &self.v * &self.v * d,
        }
    }

    fn join(&self, other: &Self) -> Option<Rational> {
        match (&self.d, &other.d) {
            (None, x) | (x, None) => x.clone(),
            (Some(a), Some(b)) if a == b => Some(a.clone()),
            (Some(a), Some(b)) => panic!(
                "nested quadratic extensions are not supported: Q(sqrt({})) vs Q(sqrt({}))",
                fmt_q(a),
                fmt_q(b)
            ),
        }
    }
}

impl PartialEq for QuadExt {
    fn eq(&self, other: &Self) -> bool {
        self.u == other.u
            && self.v == other.v
            && (self.v.is_zero() || self.d == other.d)
    }
}

impl Eq for QuadExt {}

impl From<Rational> for QuadExt {
    fn from(r: Rational) -> Self {
        QuadExt::rational(r)
    }
}

impl Add for QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: QuadExt) -> QuadExt {
        let d = self.join(&rhs);
        QuadExt {
            u: self.u + rhs.u,
            v: self.v + rhs.v,
            d,
        }
    }
}

impl Sub for QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: QuadExt) -> QuadExt {
        let d = self.join(&rhs);
        QuadExt {
            u: self.u - rhs.u,
            v: self.v - rhs.v,
            d,
        }
    }
}

impl Mul for QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: QuadExt) -> QuadExt {
        let d = self.join(&rhs);
        let vv = &self.v * &rhs.v;
        let u = &self.u * &rhs.u
            + match &d {
                Some(d) => vv * d,
                None => vv,
            };
        let v = &self.u * &rhs.v + &self.v * &rhs.u;
        QuadExt { u, v, d }
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt {
            u: -self.u,
            v: -self.v,
            d: self.d,
        }
    }
}

impl super::scalar::Scalar for QuadExt {
    fn zero() -> Self {
        QuadExt::rational(<Rational as Zero>::zero())
    }

    fn one() -> Self {
        QuadExt::rational(<Rational as One>::one())
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.u) && Zero::is_zero(&self.v)
    }

    fn from_rational(r: Rational) -> Self {
        QuadExt::rational(r)
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        let c = self.conj();
        Some(QuadExt {
            u: c.u / &n,
            v: c.v / &n,
            d: c.d,
        })
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.d {
            Some(d) if !self.v.is_zero() => write!(
                f,
                "({} + {}*sqrt({}))",
                fmt_q(&self.u),
                fmt_q(&self.v),
                fmt_q(d)
            ),
            _ => write!(f, "{}", self.u),
        }
    }
}

/// Square root of a rational number, either rational or of the form
/// `coeff·√d` with `d` a non-square integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SqrtResult {
    Rational(Rational),
    Extension { coeff: Rational, d: Rational },
}

impl SqrtResult {
    /// The discriminant of the field the root lives in, `None` for Q.
    pub fn field(&self) -> Option<&Rational> {
        match self {
            SqrtResult::Rational(_) => None,
            SqrtResult::Extension { d, .. } => Some(d),
        }
    }

    pub fn to_quad(&self) -> QuadExt {
        match self {
            SqrtResult::Rational(r) => QuadExt::rational(r.clone()),
            SqrtResult::Extension { coeff, d } => QuadExt {
                u: Rational::zero(),
                v: coeff.clone(),
                d: Some(d.clone()),
            },
        }
    }
}

// trial division bound for stripping square factors out of a discriminant
const SQUARE_STRIP_LIMIT: u64 = 100_000;

/// `√r` written over the smallest convenient discriminant: `r = n/m` is
/// rewritten as `n·m / m²`, small square factors of `n·m` are pulled out.
/// The remaining `d` is never a perfect square, though it may keep square
/// factors beyond the trial-division bound.
pub fn sqrt_rational(r: &Rational) -> SqrtResult {
    if r.is_zero() {
        return SqrtResult::Rational(Rational::zero());
    }
    let mut rest = r.numer() * r.denom();
    let mut outside = BigInt::one();
    let mut p: u64 = 2;
    loop {
        let pp = BigInt::from(p * p);
        if pp > rest.abs() || p > SQUARE_STRIP_LIMIT {
            break;
        }
        while (&rest % &pp).is_zero() {
            rest /= &pp;
            outside *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest.is_positive() {
        let s = rest.sqrt();
        if &s * &s == rest {
            outside *= s;
            rest = BigInt::one();
        }
    }
    let coeff = Rational::new(outside, r.denom().clone());
    if rest.is_one() {
        SqrtResult::Rational(coeff)
    } else {
        SqrtResult::Extension {
            coeff,
            d: Rational::from_integer(rest),
        }
    }
}

fn is_rational_square(r: &Rational) -> bool {
    if r.is_negative() {
        return false;
    }
    let is_sq = |n: &BigInt| {
        let s = n.sqrt();
        &s * &s == *n
    };
    is_sq(r.numer()) && is_sq(r.denom())
}
