use super::equation::{quadratic_rank, Affine, Equation, QuadPart, WeightedEquation, ZwTransform};
use crate::error::{Error, Result};
use crate::exactalg::{sqrt_rational, BinaryForm, Mat2, QuadExt, Rational, Scalar};

/// An equation brought to the form `zw + g̃(x, y) = 0`.
///
/// `transform` records how to get back: substituting it into
/// `zw + gtilde` reproduces the original equation exactly (the scalar is
/// always 1 with this construction). Coefficients live in Q or in the
/// splitting field Q(√d) of the quadratic part.
#[derive(Clone, Debug, PartialEq)]
pub struct NormalForm {
    pub a: usize,
    pub gtilde: BinaryForm<QuadExt>,
    pub transform: ZwTransform<QuadExt>,
    pub rank_q: u8,
    /// `d` of Q(√d), `None` when the quadratic part splits over Q.
    pub field_discriminant: Option<Rational>,
}

impl NormalForm {
    /// `zw + gtilde`.
    pub fn target(&self) -> Equation<QuadExt> {
        Equation::diagonal(self.a, QuadPart::zw(), self.gtilde.clone())
            .expect("degrees are consistent by construction")
    }

    /// Re-expands the recorded transform and compares with `eq` up to one
    /// nonzero scalar.
    pub fn verify(&self, eq: &WeightedEquation) -> Result<QuadExt> {
        let back = self.target().substitute(&self.transform);
        eq.to_quad().proportionality(&back).ok_or_else(|| {
            Error::VerificationFailed(format!(
                "normal form zw + ({}) does not re-expand to the input equation",
                self.gtilde
            ))
        })
    }
}

/// Factors the quadratic part over its splitting field, moves it to `zw`
/// and absorbs `f z + h w` by shifting `z` and `w`.
///
/// With `q = L₁ L₂` and `f z + h w = F₁ L₁ + F₂ L₂` the equation reads
/// `(L₁ + F₂)(L₂ + F₁) + g − F₁ F₂`, so `g̃ = g − F₁ F₂`.
pub fn normalize(eq: &WeightedEquation) -> Result<NormalForm> {
    let rank = quadratic_rank(eq.q());
    if rank < 2 {
        return Err(Error::RankDeficient { rank });
    }
    let QuadPart { alpha, beta, gamma } = eq.q().clone();
    let disc = beta.clone() * beta.clone() - Rational::from_int(4) * alpha.clone() * gamma.clone();
    let root = sqrt_rational(&disc);
    let lift = |r: &Rational| QuadExt::rational(r.clone());

    // rows: coefficients of L1 and L2 in (z, w)
    let m: Mat2<QuadExt> = if alpha.is_zero() {
        // q = w (βz + γw)
        Mat2::new(lift(&beta), lift(&gamma), QuadExt::zero(), QuadExt::one())
    } else {
        // q = α (z − r₁ w)(z − r₂ w), r = (−β ± √D) / 2α
        let s = root.to_quad();
        let two_alpha = lift(&(alpha.clone() * Rational::from_int(2)));
        let r1 = (lift(&-beta.clone()) + s.clone()).div(&two_alpha);
        let r2 = (lift(&-beta.clone()) - s).div(&two_alpha);
        Mat2::new(
            lift(&alpha),
            -(lift(&alpha) * r1),
            QuadExt::one(),
            -r2,
        )
    };
    // (z, w) = inv · (L1, L2)
    let inv = m.inverse()?;
    let f = eq.f().to_quad();
    let h = eq.h().to_quad();
    let big_f1 = f.scale(&inv.a).add(&h.scale(&inv.c));
    let big_f2 = f.scale(&inv.b).add(&h.scale(&inv.d));
    let gtilde = eq.g().to_quad().sub(&big_f1.mul(&big_f2));

    let transform = ZwTransform {
        z_image: Affine::new(m.a.clone(), m.b.clone(), big_f2),
        w_image: Affine::new(m.c.clone(), m.d.clone(), big_f1),
    };
    let nf = NormalForm {
        a: eq.a(),
        gtilde,
        transform,
        rank_q: rank,
        field_discriminant: root.field().cloned(),
    };
    nf.verify(eq)?;
    Ok(nf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, multiplicity_profile, MultiplicityProfile};
    use crate::wps::{parse_binary_form, parse_equation};

    #[test]
    fn toric_equation_is_already_normal() {
        for a in 2..6 {
            let text = format!("z*w - x^{a}*y^{a}");
            let eq = parse_equation(&text, a).unwrap();
            let nf = normalize(&eq).unwrap();
            assert_eq!(nf.gtilde, BinaryForm::monomial(QuadExt::rational(int(-1)), a, a));
            assert_eq!(nf.transform, ZwTransform::identity(a));
            assert_eq!(nf.field_discriminant, None);
        }
    }

    #[test]
    fn sum_of_squares_needs_i() {
        let eq = parse_equation("z^2 + w^2 + x^6 - x*y^5", 3).unwrap();
        let nf = normalize(&eq).unwrap();
        assert_eq!(nf.field_discriminant, Some(int(-1)));
        // unit multiple of g
        let ratio = nf.gtilde.normalized();
        assert_eq!(ratio, eq.g().to_quad().normalized());
    }

    #[test]
    fn shift_absorbs_linear_term() {
        let eq = parse_equation("z*w + x^3*z + x^2*y^4", 3).unwrap();
        let nf = normalize(&eq).unwrap();
        assert_eq!(nf.gtilde, eq.g().to_quad());
        // z ↦ z, w ↦ w + x^3
        assert_eq!(nf.transform.z_image.shift, BinaryForm::zero(3));
        assert_eq!(
            nf.transform.w_image.shift,
            BinaryForm::monomial(QuadExt::one(), 3, 0)
        );
    }

    #[test]
    fn cross_term_enters_gtilde() {
        // (z + y^2)(w + x^2) = zw + x^2 z + y^2 w + x^2 y^2
        let eq = parse_equation("z*w + x^2*z + y^2*w", 2).unwrap();
        let nf = normalize(&eq).unwrap();
        assert_eq!(nf.gtilde, BinaryForm::monomial(QuadExt::rational(int(-1)), 2, 2));
        assert_eq!(
            multiplicity_profile(&nf.gtilde).unwrap(),
            MultiplicityProfile::from_entries([(2, 2)])
        );
    }

    #[test]
    fn w_squared_only_alpha_zero() {
        let eq = parse_equation("3*z*w - 2*w^2 + x^4 + y^4 + x*y^3", 2).unwrap();
        let nf = normalize(&eq).unwrap();
        assert_eq!(nf.field_discriminant, None);
        nf.verify(&eq).unwrap();
    }

    #[test]
    fn irrational_split_with_shifts() {
        let eq = parse_equation("z^2 + z*w - w^2 + x^2*z + 3*x*y*w - y^4", 2).unwrap();
        let nf = normalize(&eq).unwrap();
        assert_eq!(nf.field_discriminant, Some(int(5)));
        // g~ is Galois invariant: g + (α h² − β f h + γ f²) / (β² − 4αγ)
        let want = parse_binary_form("-y^4 + (9*x^2*y^2 - 3*x^3*y - x^4)/5", 4).unwrap();
        assert_eq!(nf.gtilde, want.to_quad());
    }

    #[test]
    fn rank_deficient_rejected() {
        let eq = parse_equation("z^2 + 2*z*w + w^2 + x^4", 2).unwrap();
        assert_eq!(normalize(&eq), Err(Error::RankDeficient { rank: 1 }));
        let eq = parse_equation("x^2*z + y^4", 2).unwrap();
        assert_eq!(normalize(&eq), Err(Error::RankDeficient { rank: 0 }));
    }
}
