//! GIT stability of binary forms of degree `2a` under SL₂.
//!
//! For binary forms the Hilbert–Mumford criterion reduces to root
//! multiplicities: a form of degree `2a` is semistable iff no root has
//! multiplicity above `a`, stable iff none reaches `a`, and the strictly
//! polystable forms are those equivalent to `x^a y^a`.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactalg::{multiplicity_profile, BinaryForm, MultiplicityProfile, Scalar};
use crate::par;

/// Ordered so that `Unstable < SemistableNotPolystable < StrictlyPolystable < Stable`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GITClass {
    Unstable,
    SemistableNotPolystable,
    StrictlyPolystable,
    Stable,
}

impl GITClass {
    pub const ALL: [GITClass; 4] = [
        GITClass::Unstable,
        GITClass::SemistableNotPolystable,
        GITClass::StrictlyPolystable,
        GITClass::Stable,
    ];

    pub fn is_semistable(self) -> bool {
        self >= GITClass::SemistableNotPolystable
    }

    pub fn is_polystable(self) -> bool {
        self >= GITClass::StrictlyPolystable
    }

    pub fn is_stable(self) -> bool {
        self == GITClass::Stable
    }

    pub fn name(self) -> &'static str {
        match self {
            GITClass::Unstable => "Unstable",
            GITClass::SemistableNotPolystable => "SemistableNotPolystable",
            GITClass::StrictlyPolystable => "StrictlyPolystable",
            GITClass::Stable => "Stable",
        }
    }
}

impl fmt::Display for GITClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Class of any degree-`2a` form with the given root multiplicities.
pub fn classify_profile(profile: &MultiplicityProfile, a: usize) -> GITClass {
    let k = profile.max_multiplicity();
    if k > a {
        GITClass::Unstable
    } else if k < a {
        GITClass::Stable
    } else if profile.entries() == [(a, 2)] {
        GITClass::StrictlyPolystable
    } else {
        GITClass::SemistableNotPolystable
    }
}

/// GIT class of a binary form of degree `2a`. The zero form (of any
/// declared degree) is unstable.
pub fn git_classify<F: Scalar>(g: &BinaryForm<F>, a: usize) -> Result<GITClass> {
    if a == 0 {
        return Err(Error::InvalidParameter {
            what: "a",
            requirement: "a >= 1",
            value: a.to_string(),
        });
    }
    if g.is_zero() {
        return Ok(GITClass::Unstable);
    }
    if g.degree() != 2 * a {
        return Err(Error::DegreeMismatch {
            expected: 2 * a,
            found: g.degree(),
        });
    }
    Ok(classify_profile(&multiplicity_profile(g)?, a))
}

/// One stratum of the space of degree-`2a` binary forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stratum {
    /// Root multiplicities, non-increasing.
    pub partition: Vec<usize>,
    pub profile: MultiplicityProfile,
    pub class: GITClass,
}

/// Every partition of `2a`, read as a multiplicity profile and labeled with
/// its GIT class. Partitions come in reverse lexicographic order
/// (`[2a]` first, `[1, ..., 1]` last).
pub fn enumerate_strata(a: usize) -> Result<Vec<Stratum>> {
    if a == 0 {
        return Err(Error::InvalidParameter {
            what: "a",
            requirement: "a >= 1",
            value: a.to_string(),
        });
    }
    let parts = partitions(2 * a);
    Ok(par::map(&parts, |p| {
        let profile = MultiplicityProfile::from_multiplicities(p);
        let class = classify_profile(&profile, a);
        Stratum {
            partition: p.clone(),
            profile,
            class,
        }
    }))
}

/// Partitions of `n` in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(n, n, &mut cur, &mut out);
    out
}

fn fill(rest: usize, max_part: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if rest == 0 {
        out.push(cur.clone());
        return;
    }
    for part in (1..=max_part.min(rest)).rev() {
        cur.push(part);
        fill(rest - part, part, cur, out);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, Rational};

    fn x() -> BinaryForm<Rational> {
        BinaryForm::linear(int(1), int(0))
    }
    fn y() -> BinaryForm<Rational> {
        BinaryForm::linear(int(0), int(1))
    }

    #[test]
    fn multiplicity_a_boundary_case() {
        let g = x().pow(2).mul(&y().pow(2));
        assert_eq!(git_classify(&g, 2).unwrap(), GITClass::StrictlyPolystable);
    }

    #[test]
    fn quartic_power_unstable() {
        assert_eq!(git_classify(&x().pow(4), 2).unwrap(), GITClass::Unstable);
    }

    #[test]
    fn double_root_with_two_simple() {
        let g = x().pow(2).mul(&y()).mul(&x().add(&y()));
        assert_eq!(git_classify(&g, 2).unwrap(), GITClass::SemistableNotPolystable);
    }

    #[test]
    fn conjugate_pair_to_the_a() {
        let s = BinaryForm::new(vec![int(1), int(0), int(1)]);
        for a in 2..7 {
            assert_eq!(git_classify(&s.pow(a), a).unwrap(), GITClass::StrictlyPolystable);
        }
    }

    #[test]
    fn zero_and_degree_errors() {
        assert_eq!(
            git_classify(&BinaryForm::<Rational>::zero(4), 2).unwrap(),
            GITClass::Unstable
        );
        assert_eq!(
            git_classify(&x().pow(5), 2),
            Err(Error::DegreeMismatch {
                expected: 4,
                found: 5
            })
        );
    }

    #[test]
    fn strata_a2() {
        let s = enumerate_strata(2).unwrap();
        let got: Vec<_> = s.iter().map(|s| (s.partition.clone(), s.class)).collect();
        assert_eq!(
            got,
            vec![
                (vec![4], GITClass::Unstable),
                (vec![3, 1], GITClass::Unstable),
                (vec![2, 2], GITClass::StrictlyPolystable),
                (vec![2, 1, 1], GITClass::SemistableNotPolystable),
                (vec![1, 1, 1, 1], GITClass::Stable),
            ]
        );
    }

    #[test]
    fn strata_a1() {
        let s = enumerate_strata(1).unwrap();
        assert_eq!(s[0].class, GITClass::Unstable);
        assert_eq!(s[1].class, GITClass::StrictlyPolystable);
    }

    #[test]
    fn balanced_partition_always_polystable() {
        for a in 1..9 {
            let s = enumerate_strata(a).unwrap();
            let ab = s.iter().find(|s| s.partition == vec![a, a]).unwrap();
            assert_eq!(ab.class, GITClass::StrictlyPolystable);
        }
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<_> = (1..=10).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn class_lattice() {
        for c in GITClass::ALL {
            if c.is_stable() {
                assert!(c.is_polystable());
            }
            if c.is_polystable() {
                assert!(c.is_semistable());
            }
        }
    }
}
