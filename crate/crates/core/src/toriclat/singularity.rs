use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::lattice::LatticePoint;
use crate::error::{Error, Result};

/// Two-dimensional strictly convex cone spanned by two primitive vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone2 {
    pub u: LatticePoint<2>,
    pub v: LatticePoint<2>,
}

impl Cone2 {
    pub fn new(u: LatticePoint<2>, v: LatticePoint<2>) -> Result<Self> {
        for w in [&u, &v] {
            if !w.is_primitive() {
                return Err(Error::NonPrimitive(w.to_string()));
            }
        }
        if det(&u, &v).is_zero() {
            return Err(Error::DependentGenerators);
        }
        Ok(Cone2 { u, v })
    }
}

impl fmt::Display for Cone2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cone({}, {})", self.u, self.v)
    }
}

fn det(a: &LatticePoint<2>, b: &LatticePoint<2>) -> BigInt {
    &a.0[0] * &b.0[1] - &a.0[1] * &b.0[0]
}

/// Cyclic quotient singularity `1/r(1, s)`, canonical representative
/// `s = min(s, s⁻¹ mod r)`. `r = 1` is a smooth point (`s = 0`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicType {
    pub r: u64,
    pub s: u64,
}

impl CyclicType {
    /// Canonicalizes `1/r(1, s)`. Panics unless `gcd(r, s) = 1`.
    pub fn new(r: u64, s: u64) -> Self {
        assert!(r >= 1);
        if r == 1 {
            return CyclicType { r: 1, s: 0 };
        }
        let s = s % r;
        let inv = mod_inverse(s, r).expect("gcd(s, r) must be 1");
        CyclicType { r, s: s.min(inv) }
    }

    pub fn is_smooth(&self) -> bool {
        self.r == 1
    }

    /// Du Val `A_{r−1}`: `s ≡ −1 mod r`.
    pub fn is_a_type(&self) -> bool {
        self.r == 1 || self.s == self.r - 1
    }
}

impl fmt::Display for CyclicType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_smooth() {
            write!(f, "smooth")
        } else {
            write!(f, "1/{}(1,{})", self.r, self.s)
        }
    }
}

fn mod_inverse(s: u64, r: u64) -> Option<u64> {
    let e = (s as i128).extended_gcd(&(r as i128));
    e.gcd.is_one().then(|| e.x.rem_euclid(r as i128) as u64)
}

/// Type of the singularity of the affine toric surface of `c`.
///
/// With `e` completing `u` to a positive basis, `v = k·u + r·e` and the
/// cone is `1/r(1, −k)`.
pub fn cyclic_type(c: &Cone2) -> Result<CyclicType> {
    let (mut u, mut v) = (c.u.clone(), c.v.clone());
    let mut r = det(&u, &v);
    if r.is_zero() {
        return Err(Error::DependentGenerators);
    }
    if r.is_negative() {
        std::mem::swap(&mut u, &mut v);
        r = -r;
    }
    // e with det(u, e) = 1: u0 * e1 - u1 * e0 = 1
    let eg = u.0[0].extended_gcd(&u.0[1]);
    if !eg.gcd.is_one() && eg.gcd != -BigInt::one() {
        return Err(Error::NonPrimitive(u.to_string()));
    }
    let sign = eg.gcd.clone();
    let e = LatticePoint([-&eg.y * &sign, &eg.x * &sign]);
    debug_assert!(det(&u, &e).is_one());
    let k = det(&v, &e);
    let s = (-k).mod_floor(&r);
    let r = r
        .to_u64()
        .ok_or_else(|| Error::VerificationFailed("cone index does not fit in 64 bits".into()))?;
    Ok(CyclicType::new(r, s.to_u64().unwrap()))
}

/// Dimension of the Q-Gorenstein deformation space of `1/r(1,s)`, for the
/// two families used here: A-type and `s = 1`.
pub fn qg_t1_dim(t: CyclicType) -> Result<u64> {
    if t.is_a_type() {
        return Ok(t.r - 1);
    }
    match (t.r, t.s) {
        (4, 1) => Ok(1),
        (r, 1) if r == 3 || r >= 5 => Ok(0),
        (r, s) => Err(Error::UnsupportedSingularity { r, s }),
    }
}

fn check_hypothesis(a: u64) -> Result<()> {
    if a == 3 || a >= 5 {
        Ok(())
    } else {
        Err(Error::OutsideHypothesis { a })
    }
}

/// Torus characters of the first order Q-Gorenstein deformations of
/// `zw = x^a y^a`: `(0, ±2), …, (0, ±a)`.
pub fn t1_weights(a: u64) -> Result<Vec<LatticePoint<2>>> {
    check_hypothesis(a)?;
    let a = a as i64;
    Ok((2..=a)
        .flat_map(|k| [LatticePoint::new2(0, k), LatticePoint::new2(0, -k)])
        .collect())
}

/// Rank of the subgroup of Z² spanned by the given vectors.
pub fn lattice_rank(vs: &[LatticePoint<2>]) -> usize {
    let nonzero: Vec<_> = vs.iter().filter(|v| !v.is_zero()).collect();
    match nonzero.first() {
        None => 0,
        Some(first) => {
            if nonzero.iter().any(|v| !det(first, v).is_zero()) {
                2
            } else {
                1
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuliDims {
    pub a: u64,
    /// `dim H⁰(T¹_QG)`, `None` outside `a = 3, a ≥ 5`.
    pub t1_dim: Option<u64>,
    pub torus_quotient_dim: Option<u64>,
    /// `dim P(H⁰(O(2a))) − dim SL₂ = 2a − 3`.
    pub git_dim: u64,
}

impl ModuliDims {
    pub fn dims_agree(&self) -> Option<bool> {
        self.torus_quotient_dim.map(|d| d == self.git_dim)
    }
}

pub fn moduli_dims(a: u64) -> Result<ModuliDims> {
    if a < 2 {
        return Err(Error::InvalidParameter {
            what: "a",
            requirement: "a >= 2",
            value: a.to_string(),
        });
    }
    let git_dim = (2 * a + 1 - 1) - 3;
    let (t1_dim, torus_quotient_dim) = match t1_weights(a) {
        Ok(w) => {
            let n = w.len() as u64;
            (Some(n), Some(n - lattice_rank(&w) as u64))
        }
        Err(Error::OutsideHypothesis { .. }) => (None, None),
        Err(e) => return Err(e),
    };
    Ok(ModuliDims {
        a,
        t1_dim,
        torus_quotient_dim,
        git_dim,
    })
}
