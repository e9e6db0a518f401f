use std::fmt;

use serde_json::{json, Value};

use super::equation::{quadratic_rank, WeightedEquation};
use super::lct::{wall, WallReport};
use super::normalize::{normalize, NormalForm};
use crate::exactalg::{fmt_q, multiplicity_profile, MultiplicityProfile, Rational};
use crate::gitforms::{classify_profile, GITClass};

/// K-stability verdict. `KStable` is part of the vocabulary but no
/// hypersurface of this family ever receives it: the `G_m` action
/// `(z, w) ↦ (tz, t⁻¹w)` on `zw + g̃ = 0` rules it out.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KClass {
    KUnstable,
    KSemistableNotPolystable,
    KPolystableNotKStable,
    KStable,
}

impl KClass {
    pub fn name(self) -> &'static str {
        match self {
            KClass::KUnstable => "KUnstable",
            KClass::KSemistableNotPolystable => "KSemistableNotPolystable",
            KClass::KPolystableNotKStable => "KPolystableNotKStable",
            KClass::KStable => "KStable",
        }
    }

    pub fn is_semistable(self) -> bool {
        self >= KClass::KSemistableNotPolystable
    }

    pub fn is_polystable(self) -> bool {
        self >= KClass::KPolystableNotKStable
    }

    /// The K-class of `z² + w² + g = 0` for `g ≠ 0` of the given GIT class.
    pub fn from_git(class: GITClass) -> KClass {
        match class {
            GITClass::Unstable => KClass::KUnstable,
            GITClass::SemistableNotPolystable => KClass::KSemistableNotPolystable,
            GITClass::StrictlyPolystable | GITClass::Stable => KClass::KPolystableNotKStable,
        }
    }
}

impl fmt::Display for KClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Everything decided about one equation.
#[derive(Clone, Debug, PartialEq)]
pub struct Verdict {
    pub a: usize,
    pub rank_q: u8,
    /// Present iff the quadratic part has rank 2.
    pub normal_form: Option<NormalForm>,
    pub gtilde_profile: Option<MultiplicityProfile>,
    pub git_class: Option<GITClass>,
    pub k_class: KClass,
    pub quasi_smooth: bool,
    pub wall_report: Option<WallReport>,
    pub wall: Rational,
    pub notes: Vec<String>,
}

pub const NOTE_ZERO_GTILDE: &str =
    "rank-2 quadratic part with vanishing g~: outside the g != 0 hypothesis, reported as KUnstable";
pub const NOTE_LOW_RANK: &str =
    "quadratic part in (z, w) has rank < 2; K-semistability requires rank 2";

/// Normalizes (when possible) and classifies.
pub fn analyze(eq: &WeightedEquation) -> Verdict {
    let a = eq.a();
    let rank_q = quadratic_rank(eq.q());
    let mut v = Verdict {
        a,
        rank_q,
        normal_form: None,
        gtilde_profile: None,
        git_class: None,
        k_class: KClass::KUnstable,
        quasi_smooth: false,
        wall_report: None,
        wall: wall(a as u64),
        notes: Vec::new(),
    };
    if rank_q < 2 {
        v.notes.push(NOTE_LOW_RANK.to_string());
        return v;
    }
    let nf = normalize(eq).expect("rank-2 equations always normalize and re-expand exactly");
    if nf.gtilde.is_zero() {
        v.git_class = Some(GITClass::Unstable);
        v.notes.push(NOTE_ZERO_GTILDE.to_string());
        v.normal_form = Some(nf);
        return v;
    }
    // g~ is Galois invariant, so the rational path is the usual one
    let profile = match nf.gtilde.to_rational() {
        Some(g) => multiplicity_profile(&g),
        None => multiplicity_profile(&nf.gtilde),
    }
    .expect("nonzero");
    let report = WallReport::new(a as u64, profile.max_multiplicity() as u64)
        .expect("a nonzero form has a root multiplicity >= 1");
    let class = classify_profile(&profile, a);
    v.quasi_smooth = profile.is_squarefree();
    v.gtilde_profile = Some(profile);
    v.git_class = Some(class);
    v.k_class = KClass::from_git(class);
    v.wall_report = Some(report);
    v.normal_form = Some(nf);
    v
}

pub fn k_classify(eq: &WeightedEquation) -> KClass {
    analyze(eq).k_class
}

/// Quasi-smooth iff the quadratic part has rank 2 and `g̃` is nonzero
/// without repeated linear factors.
pub fn quasi_smooth(eq: &WeightedEquation) -> bool {
    analyze(eq).quasi_smooth
}

impl Verdict {
    pub fn field_discriminant(&self) -> Option<&Rational> {
        self.normal_form.as_ref()?.field_discriminant.as_ref()
    }

    /// Stable JSON rendering; exact numbers are `"p/q"` strings.
    pub fn to_json(&self) -> Value {
        let profile = self.gtilde_profile.as_ref().map(|p| {
            p.entries()
                .iter()
                .map(|(m, c)| json!([m, c]))
                .collect::<Vec<_>>()
        });
        json!({
            "a": self.a,
            "rank_q": self.rank_q,
            "field_discriminant": self.field_discriminant().map(fmt_q),
            "gtilde": self.normal_form.as_ref().map(|n| n.gtilde.to_string()),
            "gtilde_profile": profile,
            "git_class": self.git_class.map(|c| c.name()),
            "k_class": self.k_class.name(),
            "quasi_smooth": self.quasi_smooth,
            "lct_bound": self.wall_report.as_ref().map(|w| fmt_q(&w.lct_bound)),
            "wall": fmt_q(&self.wall),
            "wall_verdict": self.wall_report.as_ref().map(|w| w.verdict.name()),
            "notes": self.notes,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wps::parse_equation;

    fn k(text: &str, a: usize) -> KClass {
        k_classify(&parse_equation(text, a).unwrap())
    }

    #[test]
    fn toric_surface_is_polystable() {
        for a in 2..7 {
            assert_eq!(
                k(&format!("z*w - x^{a}*y^{a}"), a),
                KClass::KPolystableNotKStable
            );
        }
    }

    #[test]
    fn squarefree_g_is_polystable_and_quasi_smooth() {
        for a in 2..7 {
            let eq = parse_equation(&format!("z^2 + w^2 + x^{0} + y^{0}", 2 * a), a).unwrap();
            let v = analyze(&eq);
            assert_eq!(v.k_class, KClass::KPolystableNotKStable);
            assert!(v.quasi_smooth);
        }
    }

    #[test]
    fn high_multiplicity_unstable() {
        for a in 2..7 {
            let text = format!("z^2 + w^2 + x^{}*y^{}", a + 1, a - 1);
            assert_eq!(k(&text, a), KClass::KUnstable);
        }
    }

    #[test]
    fn rank_one_unstable() {
        let eq = parse_equation("z^2 + x^4 + y^4", 2).unwrap();
        let v = analyze(&eq);
        assert_eq!(v.rank_q, 1);
        assert_eq!(v.k_class, KClass::KUnstable);
        assert!(!v.quasi_smooth);
    }

    #[test]
    fn toric_not_quasi_smooth() {
        assert!(!quasi_smooth(&parse_equation("z*w - x^2*y^2", 2).unwrap()));
    }

    #[test]
    fn semistable_not_polystable() {
        // x^3 * y * (x + y) * (x - y) with a = 3: one triple root, three simple
        let eq = parse_equation("z^2 + w^2 + x^3*y*(x+y)*(x-y)", 3).unwrap();
        assert_eq!(analyze(&eq).k_class, KClass::KSemistableNotPolystable);
    }

    #[test]
    fn vanishing_gtilde_flagged() {
        let eq = parse_equation("z*w + x^2*z + y^2*w + x^2*y^2", 2).unwrap();
        let v = analyze(&eq);
        assert_eq!(v.k_class, KClass::KUnstable);
        assert_eq!(v.notes, vec![NOTE_ZERO_GTILDE.to_string()]);
    }

    #[test]
    fn json_shape() {
        let v = analyze(&parse_equation("z*w - x^3*y^3", 3).unwrap());
        let j = v.to_json();
        assert_eq!(j["k_class"], "KPolystableNotKStable");
        assert_eq!(j["gtilde_profile"], json!([[3, 2]]));
        assert_eq!(j["lct_bound"], "5/6");
        assert_eq!(j["wall"], "5/6");
        assert_eq!(j["field_discriminant"], Value::Null);
    }
}
