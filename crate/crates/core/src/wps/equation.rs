use std::fmt;

use super::parse::{fmt_monomial, parse_polynomial, MPoly};
use crate::error::{Error, Result};
use crate::exactalg::{act_gl2, BinaryForm, Mat2, QuadExt, Rational, Scalar};

/// `α z² + β zw + γ w²`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadPart<F> {
    pub alpha: F,
    pub beta: F,
    pub gamma: F,
}

impl<F: Scalar> QuadPart<F> {
    pub fn new(alpha: F, beta: F, gamma: F) -> Self {
        QuadPart { alpha, beta, gamma }
    }

    pub fn zw() -> Self {
        QuadPart::new(F::zero(), F::one(), F::zero())
    }

    /// `β² − 4αγ`.
    pub fn discriminant(&self) -> F {
        self.beta.clone() * self.beta.clone()
            - F::from_int(4) * self.alpha.clone() * self.gamma.clone()
    }

    pub fn is_zero(&self) -> bool {
        self.alpha.is_zero() && self.beta.is_zero() && self.gamma.is_zero()
    }

    fn map<G: Scalar>(&self, f: impl Fn(&F) -> G) -> QuadPart<G> {
        QuadPart::new(f(&self.alpha), f(&self.beta), f(&self.gamma))
    }
}

/// Rank of a binary quadratic form: 2 iff the discriminant is nonzero.
pub fn quadratic_rank<F: Scalar>(q: &QuadPart<F>) -> u8 {
    if q.is_zero() {
        0
    } else if q.discriminant().is_zero() {
        1
    } else {
        2
    }
}

/// `q(z,w) + f(x,y) z + h(x,y) w + g(x,y)` with `deg f = deg h = a` and
/// `deg g = 2a`, weights `(1, 1, a, a)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Equation<F> {
    a: usize,
    q: QuadPart<F>,
    f: BinaryForm<F>,
    h: BinaryForm<F>,
    g: BinaryForm<F>,
}

/// An equation with rational coefficients as produced by the parser.
pub type WeightedEquation = Equation<Rational>;

impl<F: Scalar> Equation<F> {
    pub fn new(
        a: usize,
        q: QuadPart<F>,
        f: BinaryForm<F>,
        h: BinaryForm<F>,
        g: BinaryForm<F>,
    ) -> Result<Self> {
        if a < 2 {
            return Err(Error::InvalidParameter {
                what: "a",
                requirement: "a >= 2",
                value: a.to_string(),
            });
        }
        for (form, want) in [(&f, a), (&h, a), (&g, 2 * a)] {
            if form.degree() != want {
                return Err(Error::DegreeMismatch {
                    expected: want,
                    found: form.degree(),
                });
            }
        }
        Ok(Equation { a, q, f, h, g })
    }

    /// `q(z,w) + g(x,y)` with no mixed terms.
    pub fn diagonal(a: usize, q: QuadPart<F>, g: BinaryForm<F>) -> Result<Self> {
        Equation::new(a, q, BinaryForm::zero(a), BinaryForm::zero(a), g)
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn q(&self) -> &QuadPart<F> {
        &self.q
    }

    pub fn f(&self) -> &BinaryForm<F> {
        &self.f
    }

    pub fn h(&self) -> &BinaryForm<F> {
        &self.h
    }

    pub fn g(&self) -> &BinaryForm<F> {
        &self.g
    }

    pub fn quadratic_rank(&self) -> u8 {
        quadratic_rank(&self.q)
    }

    pub fn is_zero(&self) -> bool {
        self.q.is_zero() && self.f.is_zero() && self.h.is_zero() && self.g.is_zero()
    }

    pub fn scale(&self, c: &F) -> Self {
        Equation {
            a: self.a,
            q: self.q.map(|v| v.clone() * c.clone()),
            f: self.f.scale(c),
            h: self.h.scale(c),
            g: self.g.scale(c),
        }
    }

    pub fn map<G: Scalar>(&self, m: impl Fn(&F) -> G) -> Equation<G> {
        Equation {
            a: self.a,
            q: self.q.map(&m),
            f: self.f.map(&m),
            h: self.h.map(&m),
            g: self.g.map(&m),
        }
    }

    /// Coefficients in a fixed order: `α, β, γ`, then `f`, `h`, `g`.
    fn flat(&self) -> impl Iterator<Item = &F> {
        [&self.q.alpha, &self.q.beta, &self.q.gamma]
            .into_iter()
            .chain(self.f.coeffs())
            .chain(self.h.coeffs())
            .chain(self.g.coeffs())
    }

    /// Projective representative: first nonzero coefficient in the
    /// [`flat`](Self::flat) order scaled to 1.
    pub fn normalized(&self) -> Self {
        match self.flat().find(|c| !c.is_zero()) {
            Some(c) => self.scale(&c.inv().unwrap()),
            None => self.clone(),
        }
    }

    /// `Some(λ)` with `self = λ · other`, `None` if the two are not
    /// proportional (or exactly one is zero).
    pub fn proportionality(&self, other: &Self) -> Option<F> {
        if self.a != other.a {
            return None;
        }
        let pivot = other.flat().position(|c| !c.is_zero());
        let lambda = match pivot {
            None => return self.is_zero().then(F::one),
            Some(k) => self.flat().nth(k).unwrap().div(other.flat().nth(k).unwrap()),
        };
        if lambda.is_zero() {
            return None;
        }
        self.flat()
            .zip(other.flat())
            .all(|(s, o)| *s == lambda.clone() * o.clone())
            .then_some(lambda)
    }

    /// The same equation as a sparse polynomial in `x, y, z, w`.
    pub fn to_mpoly(&self) -> MPoly<F> {
        let a = self.a as u32;
        let mut p = MPoly::term(self.q.alpha.clone(), [0, 0, 2, 0])
            .add(&MPoly::term(self.q.beta.clone(), [0, 0, 1, 1]))
            .add(&MPoly::term(self.q.gamma.clone(), [0, 0, 0, 2]));
        for (form, deg, ez, ew) in [
            (&self.f, a, 1, 0),
            (&self.h, a, 0, 1),
            (&self.g, 2 * a, 0, 0),
        ] {
            for (i, c) in form.coeffs().iter().enumerate() {
                p = p.add(&MPoly::term(c.clone(), [deg - i as u32, i as u32, ez, ew]));
            }
        }
        p
    }

    /// Pulls the equation back along `z ↦ z', w ↦ w'`.
    pub fn substitute(&self, t: &ZwTransform<F>) -> Self {
        let (zp, wp) = (&t.z_image, &t.w_image);
        let sq = |l: &Affine<F>, r: &Affine<F>, c: &F| l.product(r).scale(c);
        let mut acc = sq(zp, zp, &self.q.alpha)
            .add(&sq(zp, wp, &self.q.beta))
            .add(&sq(wp, wp, &self.q.gamma));
        acc = acc.add(&zp.times_form(&self.f)).add(&wp.times_form(&self.h));
        let g = acc.g.add(&self.g);
        Equation {
            a: self.a,
            q: acc.q,
            f: acc.f,
            h: acc.h,
            g,
        }
    }

    /// `p(A⁻¹(x,y))` applied to every form; `z, w` untouched.
    pub fn act_xy(&self, m: &Mat2<F>) -> Result<Self> {
        Ok(Equation {
            a: self.a,
            q: self.q.clone(),
            f: act_gl2(&self.f, m)?,
            h: act_gl2(&self.h, m)?,
            g: act_gl2(&self.g, m)?,
        })
    }

    /// Pull back by a full automorphism of P(1,1,a,a).
    pub fn apply(&self, aut: &Automorphism<F>) -> Result<Self> {
        if aut.zw.det().is_zero() {
            return Err(Error::SingularMatrix);
        }
        self.substitute(&aut.zw).act_xy(&aut.xy)
    }
}

impl Equation<Rational> {
    pub fn to_quad(&self) -> Equation<QuadExt> {
        self.map(|c| QuadExt::rational(c.clone()))
    }
}

impl<F: Scalar> fmt::Display for Equation<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_mpoly())
    }
}

/// Parses an equation and bins its monomials into `q, f, h, g`.
///
/// Every monomial must have weighted degree `2a` for weights `(1, 1, a, a)`.
pub fn parse_equation(text: &str, a: usize) -> Result<WeightedEquation> {
    if a < 2 {
        return Err(Error::InvalidParameter {
            what: "a",
            requirement: "a >= 2",
            value: a.to_string(),
        });
    }
    let poly = parse_polynomial(text, 2 * a as u32)?;
    let mut q = QuadPart::new(Rational::zero(), Rational::zero(), Rational::zero());
    let mut f = BinaryForm::zero(a);
    let mut h = BinaryForm::zero(a);
    let mut g = BinaryForm::zero(2 * a);
    for (e, c) in poly.terms() {
        let zw = e[2] + e[3];
        if zw >= 3 {
            return Err(Error::ZwDegree {
                monomial: fmt_monomial(e),
                degree: zw,
            });
        }
        let wdeg = u64::from(e[0]) + u64::from(e[1]) + a as u64 * u64::from(zw);
        if wdeg != 2 * a as u64 {
            return Err(Error::WeightedDegree {
                monomial: fmt_monomial(e),
                found: wdeg,
                expected: 2 * a as u64,
            });
        }
        let iy = e[1] as usize;
        match (e[2], e[3]) {
            (2, 0) => q.alpha = c.clone(),
            (1, 1) => q.beta = c.clone(),
            (0, 2) => q.gamma = c.clone(),
            (1, 0) => f = f.add(&BinaryForm::monomial(c.clone(), a - iy, iy)),
            (0, 1) => h = h.add(&BinaryForm::monomial(c.clone(), a - iy, iy)),
            _ => g = g.add(&BinaryForm::monomial(c.clone(), 2 * a - iy, iy)),
        }
    }
    let eq = Equation::new(a, q, f, h, g)?;
    if eq.is_zero() {
        return Err(Error::ZeroEquation);
    }
    Ok(eq)
}

/// Parses a binary form in `x, y` that must be homogeneous of `degree`
/// (the zero form is accepted).
pub fn parse_binary_form(text: &str, degree: usize) -> Result<BinaryForm<Rational>> {
    let poly = parse_polynomial(text, degree as u32)?;
    let mut out = BinaryForm::zero(degree);
    for (e, c) in poly.terms() {
        if e[2] != 0 || e[3] != 0 {
            return Err(Error::Syntax {
                position: 0,
                token: fmt_monomial(e),
                message: "a binary form may only use the variables x and y".into(),
            });
        }
        let d = (e[0] + e[1]) as usize;
        if d != degree {
            return Err(Error::WeightedDegree {
                monomial: fmt_monomial(e),
                found: d as u64,
                expected: degree as u64,
            });
        }
        let iy = e[1] as usize;
        out = out.add(&BinaryForm::monomial(c.clone(), degree - iy, iy));
    }
    Ok(out)
}

/// `c_z z + c_w w + s(x, y)` with `s` of degree `a`.
#[derive(Clone, Debug, PartialEq)]
pub struct Affine<F> {
    pub cz: F,
    pub cw: F,
    pub shift: BinaryForm<F>,
}

/// The four groups of an equation's coefficients, used while expanding.
struct Parts<F> {
    q: QuadPart<F>,
    f: BinaryForm<F>,
    h: BinaryForm<F>,
    g: BinaryForm<F>,
}

impl<F: Scalar> Parts<F> {
    fn add(&self, o: &Self) -> Self {
        Parts {
            q: QuadPart::new(
                self.q.alpha.clone() + o.q.alpha.clone(),
                self.q.beta.clone() + o.q.beta.clone(),
                self.q.gamma.clone() + o.q.gamma.clone(),
            ),
            f: self.f.add(&o.f),
            h: self.h.add(&o.h),
            g: self.g.add(&o.g),
        }
    }

    fn scale(&self, c: &F) -> Self {
        Parts {
            q: self.q.map(|v| v.clone() * c.clone()),
            f: self.f.scale(c),
            h: self.h.scale(c),
            g: self.g.scale(c),
        }
    }
}

impl<F: Scalar> Affine<F> {
    pub fn new(cz: F, cw: F, shift: BinaryForm<F>) -> Self {
        Affine { cz, cw, shift }
    }

    fn product(&self, o: &Self) -> Parts<F> {
        Parts {
            q: QuadPart::new(
                self.cz.clone() * o.cz.clone(),
                self.cz.clone() * o.cw.clone() + self.cw.clone() * o.cz.clone(),
                self.cw.clone() * o.cw.clone(),
            ),
            f: o.shift.scale(&self.cz).add(&self.shift.scale(&o.cz)),
            h: o.shift.scale(&self.cw).add(&self.shift.scale(&o.cw)),
            g: self.shift.mul(&o.shift),
        }
    }

    /// `self · form` for a form of degree `a`.
    fn times_form(&self, form: &BinaryForm<F>) -> Parts<F> {
        Parts {
            q: QuadPart::new(F::zero(), F::zero(), F::zero()),
            f: form.scale(&self.cz),
            h: form.scale(&self.cw),
            g: form.mul(&self.shift),
        }
    }
}

/// Substitution `z ↦ z_image, w ↦ w_image`.
#[derive(Clone, Debug, PartialEq)]
pub struct ZwTransform<F> {
    pub z_image: Affine<F>,
    pub w_image: Affine<F>,
}

impl<F: Scalar> ZwTransform<F> {
    pub fn identity(a: usize) -> Self {
        ZwTransform {
            z_image: Affine::new(F::one(), F::zero(), BinaryForm::zero(a)),
            w_image: Affine::new(F::zero(), F::one(), BinaryForm::zero(a)),
        }
    }

    /// Determinant of the linear part.
    pub fn det(&self) -> F {
        self.z_image.cz.clone() * self.w_image.cw.clone()
            - self.z_image.cw.clone() * self.w_image.cz.clone()
    }

    /// The images of `(x, y, z, w)` as polynomials, for substitution into
    /// an [`MPoly`].
    pub fn images(&self) -> [MPoly<F>; 4] {
        let lift = |aff: &Affine<F>| {
            let a = aff.shift.degree() as u32;
            let mut p = MPoly::term(aff.cz.clone(), [0, 0, 1, 0])
                .add(&MPoly::term(aff.cw.clone(), [0, 0, 0, 1]));
            for (i, c) in aff.shift.coeffs().iter().enumerate() {
                p = p.add(&MPoly::term(c.clone(), [a - i as u32, i as u32, 0, 0]));
            }
            p
        };
        [
            MPoly::var(0),
            MPoly::var(1),
            lift(&self.z_image),
            lift(&self.w_image),
        ]
    }
}

/// Automorphism of P(1,1,a,a): an invertible substitution of `(z, w)`
/// with degree-`a` shifts, followed by `p ↦ p(A⁻¹(x, y))`.
#[derive(Clone, Debug, PartialEq)]
pub struct Automorphism<F> {
    pub zw: ZwTransform<F>,
    pub xy: Mat2<F>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::int;

    #[test]
    fn binning_toric_equation() {
        let eq = parse_equation("z*w - x^2*y^2", 2).unwrap();
        assert_eq!(eq.q(), &QuadPart::new(int(0), int(1), int(0)));
        assert!(eq.f().is_zero() && eq.h().is_zero());
        assert_eq!(eq.g(), &BinaryForm::monomial(int(-1), 2, 2));
    }

    #[test]
    fn binning_diagonal() {
        let eq = parse_equation("z^2 + w^2 + x^6 + y^6", 3).unwrap();
        assert_eq!(eq.q(), &QuadPart::new(int(1), int(0), int(1)));
        let mut g = BinaryForm::zero(6);
        g = g.add(&BinaryForm::monomial(int(1), 6, 0));
        g = g.add(&BinaryForm::monomial(int(1), 0, 6));
        assert_eq!(eq.g(), &g);
    }

    #[test]
    fn binning_mixed_terms() {
        let eq = parse_equation("z*w + 2*x^3*z - y^3*w + x*y^5", 3).unwrap();
        assert_eq!(eq.f(), &BinaryForm::monomial(int(2), 3, 0));
        assert_eq!(eq.h(), &BinaryForm::monomial(int(-1), 0, 3));
        assert_eq!(eq.g(), &BinaryForm::monomial(int(1), 1, 5));
    }

    #[test]
    fn weighted_degree_violation() {
        for a in 2..6 {
            assert!(matches!(
                parse_equation("z^2 + x*y*z^2", a),
                Err(Error::WeightedDegree { .. })
            ));
        }
        assert!(matches!(
            parse_equation("z^2 + x^3", 2),
            Err(Error::WeightedDegree { .. })
        ));
    }

    #[test]
    fn cubic_in_zw_rejected() {
        assert!(matches!(
            parse_equation("z^3", 2),
            Err(Error::ZwDegree { degree: 3, .. })
        ));
    }

    #[test]
    fn zero_equation_rejected() {
        assert_eq!(parse_equation("z*w - w*z", 2), Err(Error::ZeroEquation));
    }

    #[test]
    fn ranks() {
        assert_eq!(quadratic_rank(&QuadPart::new(int(0), int(1), int(0))), 2);
        assert_eq!(quadratic_rank(&QuadPart::new(int(1), int(0), int(1))), 2);
        assert_eq!(quadratic_rank(&QuadPart::new(int(1), int(2), int(1))), 1);
        assert_eq!(quadratic_rank(&QuadPart::new(int(0), int(0), int(0))), 0);
    }

    #[test]
    fn structured_substitution_matches_sparse_expansion() {
        let eq = parse_equation("2*z^2 - z*w + 3*w^2 + x^2*z - x*y*w + x^4 - 5*y^4", 2).unwrap();
        let t = ZwTransform {
            z_image: Affine::new(int(1), int(2), parse_binary_form("x^2 - y^2", 2).unwrap()),
            w_image: Affine::new(int(-1), int(3), parse_binary_form("3*x*y", 2).unwrap()),
        };
        let via_parts = eq.substitute(&t).to_mpoly();
        let via_sparse = eq.to_mpoly().substitute(&t.images());
        assert_eq!(via_parts, via_sparse);
    }

    #[test]
    fn proportionality() {
        let eq = parse_equation("z*w + x^2*y^2", 2).unwrap();
        assert_eq!(eq.scale(&int(-3)).proportionality(&eq), Some(int(-3)));
        let other = parse_equation("z*w + x^4", 2).unwrap();
        assert_eq!(other.proportionality(&eq), None);
    }

    #[test]
    fn binary_form_parsing() {
        let f = parse_binary_form("x^2*y^2", 4).unwrap();
        assert_eq!(f, BinaryForm::monomial(int(1), 2, 2));
        assert!(parse_binary_form("x^2*y", 4).is_err());
        assert!(parse_binary_form("x*z", 2).is_err());
        assert!(parse_binary_form("0", 4).unwrap().is_zero());
    }
}
