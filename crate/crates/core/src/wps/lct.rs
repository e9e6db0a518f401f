use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactalg::{multiplicity_profile, rat, BinaryForm, Rational, Scalar};

/// `1/2 + 1/k`, the log canonical threshold of the A_{k−1} curve germ
/// `x² + y^k = 0` on a smooth surface.
pub fn lct_cusp(k: u64) -> Result<Rational> {
    if k < 1 {
        return Err(Error::InvalidParameter {
            what: "k",
            requirement: "k >= 1",
            value: k.to_string(),
        });
    }
    Ok(rat(1, 2) + Rational::new(BigInt::from(1), BigInt::from(k)))
}

/// The coefficient `(a + 2) / 2a` at which `(P(1,1,a), c·D)` is log
/// Calabi–Yau for the double-cover branch curve `D = (z² + g = 0)`.
pub fn wall(a: u64) -> Rational {
    Rational::new(BigInt::from(a + 2), BigInt::from(2 * a))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WallVerdict {
    Klt,
    LcNotKlt,
    NotLc,
}

impl WallVerdict {
    pub fn name(self) -> &'static str {
        match self {
            WallVerdict::Klt => "klt at wall",
            WallVerdict::LcNotKlt => "lc at wall, not klt",
            WallVerdict::NotLc => "not lc at wall",
        }
    }

    /// Verdict for a pair whose lct is `lct`, at coefficient `wall`.
    pub fn compare(lct: &Rational, wall: &Rational) -> Self {
        if lct > wall {
            WallVerdict::Klt
        } else if lct == wall {
            WallVerdict::LcNotKlt
        } else {
            WallVerdict::NotLc
        }
    }

    pub fn is_lc(self) -> bool {
        self != WallVerdict::NotLc
    }
}

impl fmt::Display for WallVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WallReport {
    /// Largest root multiplicity of `g`.
    pub k: u64,
    pub lct_bound: Rational,
    pub wall: Rational,
    pub verdict: WallVerdict,
}

/// Compares the lct bound coming from the worst root of `g` with the wall
/// `(a + 2)/2a`.
pub fn pair_wall_report<F: Scalar>(a: usize, g: &BinaryForm<F>) -> Result<WallReport> {
    if a < 2 {
        return Err(Error::InvalidParameter {
            what: "a",
            requirement: "a >= 2",
            value: a.to_string(),
        });
    }
    if g.is_zero() {
        return Err(Error::ZeroForm);
    }
    if g.degree() != 2 * a {
        return Err(Error::DegreeMismatch {
            expected: 2 * a,
            found: g.degree(),
        });
    }
    let k = multiplicity_profile(g)?.max_multiplicity() as u64;
    WallReport::new(a as u64, k)
}

impl WallReport {
    /// Report for a branch curve whose worst root has multiplicity `k`.
    pub fn new(a: u64, k: u64) -> Result<Self> {
        let lct_bound = lct_cusp(k)?;
        let wall = wall(a);
        let verdict = WallVerdict::compare(&lct_bound, &wall);
        Ok(WallReport {
            k,
            lct_bound,
            wall,
            verdict,
        })
    }
}
