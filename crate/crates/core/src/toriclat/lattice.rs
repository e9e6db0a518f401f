use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Point of an integer lattice (`N`, `M` or `M ⊕ Z`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint<const D: usize>(pub [BigInt; D]);

impl LatticePoint<2> {
    pub fn new2(x: i64, y: i64) -> Self {
        LatticePoint([x.into(), y.into()])
    }
}

impl LatticePoint<3> {
    pub fn new3(x: i64, y: i64, z: i64) -> Self {
        LatticePoint([x.into(), y.into(), z.into()])
    }
}

impl<const D: usize> LatticePoint<D> {
    pub fn coords(&self) -> &[BigInt; D] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// gcd of the coordinates is 1.
    pub fn is_primitive(&self) -> bool {
        self.0
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
            .is_one()
    }

    pub fn add(&self, o: &Self) -> Self {
        LatticePoint(std::array::from_fn(|i| &self.0[i] + &o.0[i]))
    }

    pub fn sub(&self, o: &Self) -> Self {
        LatticePoint(std::array::from_fn(|i| &self.0[i] - &o.0[i]))
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        LatticePoint(std::array::from_fn(|i| &self.0[i] * k))
    }
}

impl<const D: usize> fmt::Display for LatticePoint<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", cs.join(", "))
    }
}
