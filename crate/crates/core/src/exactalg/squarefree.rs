use std::collections::BTreeMap;
use std::fmt;

use super::form::BinaryForm;
use super::scalar::Scalar;
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Multiset of root multiplicities of a binary form over C.
///
/// Each entry `(m, c)` means `c` distinct roots in P¹ of multiplicity `m`,
/// the root at infinity included. Entries are sorted by `m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiplicityProfile {
    entries: Vec<(usize, usize)>,
}

impl MultiplicityProfile {
    /// Builds a profile from `(multiplicity, count)` pairs; pairs with the
    /// same multiplicity are merged and zero counts dropped.
    pub fn from_entries(pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut map = BTreeMap::new();
        for (m, c) in pairs {
            assert!(m > 0, "multiplicity must be positive");
            if c > 0 {
                *map.entry(m).or_insert(0) += c;
            }
        }
        MultiplicityProfile {
            entries: map.into_iter().collect(),
        }
    }

    /// Profile of a partition, e.g. `[2, 1, 1]` gives `{(1, 2), (2, 1)}`.
    pub fn from_multiplicities(parts: &[usize]) -> Self {
        MultiplicityProfile::from_entries(parts.iter().map(|&m| (m, 1)))
    }

    pub fn entries(&self) -> &[(usize, usize)] {
        &self.entries
    }

    /// Degree of any form with this profile.
    pub fn degree(&self) -> usize {
        self.entries.iter().map(|(m, c)| m * c).sum()
    }

    pub fn max_multiplicity(&self) -> usize {
        self.entries.last().map_or(0, |e| e.0)
    }

    pub fn distinct_roots(&self) -> usize {
        self.entries.iter().map(|e| e.1).sum()
    }

    pub fn is_squarefree(&self) -> bool {
        self.max_multiplicity() <= 1
    }
}

impl fmt::Display for MultiplicityProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (m, c)) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({m}, {c})")?;
        }
        write!(f, "}}")
    }
}

/// Monic gcd of two forms of the same field.
///
/// The dehomogenized parts are combined with Euclid's algorithm, the common
/// power of `y` is restored separately so the root at infinity is kept.
pub fn gcd_forms<F: Scalar>(p: &BinaryForm<F>, q: &BinaryForm<F>) -> Result<BinaryForm<F>> {
    let (vp, vq) = (p.y_valuation(), q.y_valuation());
    let vy = match (vp, vq) {
        (None, None) => return Err(Error::BothZero),
        (Some(a), None) | (None, Some(a)) => a,
        (Some(a), Some(b)) => a.min(b),
    };
    let g = p.dehomogenize().gcd(&q.dehomogenize());
    let dg = g.degree().unwrap_or(0);
    Ok(BinaryForm::homogenize(&g, dg + vy))
}

/// Yun's squarefree decomposition of the `y = 1` part, with the factor `y`
/// tracked by valuation. Returns `(s_i, i)` for every nonconstant `s_i`,
/// sorted by `i`, such that `p = unit * Π s_i^i`.
pub fn squarefree_decompose<F: Scalar>(p: &BinaryForm<F>) -> Result<Vec<(BinaryForm<F>, usize)>> {
    let vy = p.y_valuation().ok_or(Error::ZeroForm)?;
    let mut parts: BTreeMap<usize, BinaryForm<F>> = yun(&p.dehomogenize().monic())
        .into_iter()
        .map(|(s, m)| {
            let d = s.degree().unwrap_or(0);
            (m, BinaryForm::homogenize(&s, d))
        })
        .collect();
    if vy > 0 {
        let y = BinaryForm::monomial(F::one(), 0, 1);
        let merged = match parts.remove(&vy) {
            Some(s) => s.mul(&y),
            None => y,
        };
        parts.insert(vy, merged);
    }
    Ok(parts.into_iter().map(|(m, s)| (s, m)).collect())
}

/// Multiplies the factors of a squarefree decomposition back together,
/// scaled by `unit`.
pub fn reconstruct<F: Scalar>(unit: &F, parts: &[(BinaryForm<F>, usize)]) -> BinaryForm<F> {
    parts
        .iter()
        .fold(BinaryForm::constant(unit.clone()), |acc, (s, m)| acc.mul(&s.pow(*m)))
}

pub fn multiplicity_profile<F: Scalar>(p: &BinaryForm<F>) -> Result<MultiplicityProfile> {
    let parts = squarefree_decompose(p)?;
    Ok(MultiplicityProfile::from_entries(
        parts.iter().map(|(s, m)| (*m, s.degree())),
    ))
}

/// Yun's algorithm on a monic polynomial; returns nonconstant parts only.
fn yun<F: Scalar>(f: &UniPoly<F>) -> Vec<(UniPoly<F>, usize)> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.exact_div(&a0);
    let mut d = df.exact_div(&a0).sub(&b.derivative());
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        let b_next = b.exact_div(&a);
        let c = d.exact_div(&a);
        d = c.sub(&b_next.derivative());
        if a.degree().unwrap_or(0) > 0 {
            out.push((a, i));
        }
        b = b_next;
        i += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, Rational};

    fn q(c: &[i64]) -> BinaryForm<Rational> {
        BinaryForm::new(c.iter().map(|&k| int(k)).collect())
    }

    fn x() -> BinaryForm<Rational> {
        q(&[1, 0])
    }

    fn y() -> BinaryForm<Rational> {
        q(&[0, 1])
    }

    #[test]
    fn gcd_shared_monomial() {
        let a = x().pow(2).mul(&y());
        let b = x().mul(&y().pow(2));
        assert_eq!(gcd_forms(&a, &b).unwrap(), x().mul(&y()));
    }

    #[test]
    fn gcd_divisor_relation() {
        let a = q(&[1, 0, 0, 0, -1]);
        let b = q(&[1, 0, -1]);
        assert_eq!(gcd_forms(&a, &b).unwrap(), b);
    }

    #[test]
    fn gcd_with_zero_and_both_zero() {
        let b = q(&[2, 0, -2]);
        assert_eq!(gcd_forms(&BinaryForm::zero(4), &b).unwrap(), q(&[1, 0, -1]));
        assert_eq!(
            gcd_forms(&BinaryForm::<Rational>::zero(2), &BinaryForm::zero(3)),
            Err(Error::BothZero)
        );
    }

    #[test]
    fn monomial_decomposition() {
        let p = x().pow(3).mul(&y().pow(5));
        let parts = squarefree_decompose(&p).unwrap();
        assert_eq!(parts, vec![(x(), 3), (y(), 5)]);
    }

    #[test]
    fn power_of_irreducible_quadratic() {
        let s = q(&[1, 0, 1]);
        let parts = squarefree_decompose(&s.pow(3)).unwrap();
        assert_eq!(parts, vec![(s, 3)]);
    }

    #[test]
    fn squarefree_is_idempotent() {
        let p = q(&[1, 0, 1]).mul(&x()).mul(&y());
        let parts = squarefree_decompose(&p).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].1, 1);
        assert_eq!(parts[0].0.normalized(), p.normalized());
    }

    #[test]
    fn zero_form_is_an_error() {
        assert_eq!(
            squarefree_decompose(&BinaryForm::<Rational>::zero(4)),
            Err(Error::ZeroForm)
        );
        assert_eq!(
            multiplicity_profile(&BinaryForm::<Rational>::zero(4)),
            Err(Error::ZeroForm)
        );
    }

    #[test]
    fn profiles() {
        for a in 1..6 {
            let p = x().pow(a).mul(&y().pow(a));
            assert_eq!(
                multiplicity_profile(&p).unwrap(),
                MultiplicityProfile::from_entries([(a, 2)])
            );
            assert_eq!(
                multiplicity_profile(&x().pow(2 * a)).unwrap(),
                MultiplicityProfile::from_entries([(2 * a, 1)])
            );
        }
        let p = q(&[1, 0, 1]).mul(&x()).mul(&y());
        assert_eq!(
            multiplicity_profile(&p).unwrap(),
            MultiplicityProfile::from_entries([(1, 4)])
        );
    }

    #[test]
    fn constant_form_has_empty_profile() {
        let p = multiplicity_profile(&q(&[5])).unwrap();
        assert_eq!(p.degree(), 0);
        assert_eq!(p.max_multiplicity(), 0);
    }

    #[test]
    fn reconstruct_with_unit() {
        let p = q(&[0, 3, -6, 3, 0]); // 3 x^3 y - 6 x^2 y^2 + 3 x y^3 = 3xy(x-y)^2
        let parts = squarefree_decompose(&p).unwrap();
        let unit = p.dehomogenize().lead().unwrap().clone();
        assert_eq!(reconstruct(&unit, &parts), p);
    }
}
