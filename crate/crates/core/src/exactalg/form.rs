use std::fmt;

use super::scalar::{Rational, Scalar};
use super::unipoly::UniPoly;
use super::QuadExt;
use crate::error::{Error, Result};

/// Homogeneous polynomial in `x, y` of a declared degree.
///
/// `coeffs[i]` is the coefficient of `x^(degree - i) * y^i`. The zero form
/// keeps its declared degree.
#[derive(Clone, Debug, PartialEq)]
pub struct BinaryForm<F> {
    coeffs: Vec<F>,
}

impl<F: Scalar> BinaryForm<F> {
    /// Form from its coefficient list; the degree is `coeffs.len() - 1`.
    /// Panics on an empty list.
    pub fn new(coeffs: Vec<F>) -> Self {
        assert!(!coeffs.is_empty(), "a binary form needs degree + 1 coefficients");
        BinaryForm { coeffs }
    }

    pub fn zero(degree: usize) -> Self {
        BinaryForm {
            coeffs: vec![F::zero(); degree + 1],
        }
    }

    pub fn constant(c: F) -> Self {
        BinaryForm { coeffs: vec![c] }
    }

    /// `c * x^i * y^j`.
    pub fn monomial(c: F, i: usize, j: usize) -> Self {
        let mut f = BinaryForm::zero(i + j);
        f.coeffs[j] = c;
        f
    }

    /// `a*x + b*y`.
    pub fn linear(a: F, b: F) -> Self {
        BinaryForm { coeffs: vec![a, b] }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    /// Coefficient of `x^(degree - i) * y^i`.
    pub fn coeff(&self, i: usize) -> &F {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Largest `k` with `y^k | self`; `None` for the zero form.
    pub fn y_valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Largest `k` with `x^k | self`; `None` for the zero form.
    pub fn x_valuation(&self) -> Option<usize> {
        self.coeffs.iter().rev().position(|c| !c.is_zero())
    }

    /// `self(x, 1)` as a polynomial in `x`.
    pub fn dehomogenize(&self) -> UniPoly<F> {
        UniPoly::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// Homogenizes `u(x)` to the given degree, i.e. `y^degree * u(x/y)`.
    /// Panics if `u` has larger degree.
    pub fn homogenize(u: &UniPoly<F>, degree: usize) -> Self {
        if let Some(du) = u.degree() {
            assert!(du <= degree, "cannot homogenize degree {du} into {degree}");
        }
        let c = u.coeffs();
        BinaryForm {
            coeffs: (0..=degree)
                .map(|i| c.get(degree - i).cloned().unwrap_or_else(F::zero))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree(), "adding forms of different degree");
        BinaryForm {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        BinaryForm {
            coeffs: self.coeffs.iter().map(|a| -a.clone()).collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        BinaryForm {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = BinaryForm::<F>::zero(self.degree() + other.degree());
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out.coeffs[i + j] = out.coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        out
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = BinaryForm::constant(F::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Same form with every coefficient mapped through `f`.
    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> G) -> BinaryForm<G> {
        BinaryForm {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Leading nonzero coefficient in the order `x^d, x^(d-1) y, ...`.
    pub fn leading_coeff(&self) -> Option<&F> {
        self.coeffs.iter().find(|c| !c.is_zero())
    }

    /// Projective representative: scaled so the first nonzero coefficient
    /// is 1. The zero form is returned unchanged.
    pub fn normalized(&self) -> Self {
        match self.leading_coeff() {
            Some(c) => self.scale(&c.inv().unwrap()),
            None => self.clone(),
        }
    }
}

impl BinaryForm<Rational> {
    pub fn to_quad(&self) -> BinaryForm<QuadExt> {
        self.map(|c| QuadExt::rational(c.clone()))
    }
}

impl BinaryForm<QuadExt> {
    /// Discriminant of the extension any coefficient lives in.
    pub fn field_discriminant(&self) -> Option<Rational> {
        self.coeffs
            .iter()
            .filter(|c| !c.is_rational())
            .find_map(|c| c.discriminant().cloned())
    }

    /// The same form over Q, if every coefficient is rational.
    pub fn to_rational(&self) -> Option<BinaryForm<Rational>> {
        let coeffs = self.coeffs.iter().map(QuadExt::to_rational).collect::<Option<_>>()?;
        Some(BinaryForm { coeffs })
    }
}

impl<F: Scalar> fmt::Display for BinaryForm<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = match (d - i, i) {
                (0, 0) => String::new(),
                (px, 0) => pw("x", px),
                (0, py) => pw("y", py),
                (px, py) => format!("{}*{}", pw("x", px), pw("y", py)),
            };
            let cs = c.to_string();
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn pw(v: &str, e: usize) -> String {
    if e == 1 {
        v.to_string()
    } else {
        format!("{v}^{e}")
    }
}

/// 2x2 matrix `[[a, b], [c, d]]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat2<F> {
    pub a: F,
    pub b: F,
    pub c: F,
    pub d: F,
}

impl<F: Scalar> Mat2<F> {
    pub fn new(a: F, b: F, c: F, d: F) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn identity() -> Self {
        Mat2::new(F::one(), F::zero(), F::zero(), F::one())
    }

    pub fn det(&self) -> F {
        self.a.clone() * self.d.clone() - self.b.clone() * self.c.clone()
    }

    pub fn inverse(&self) -> Result<Self> {
        let inv_det = self.det().inv().ok_or(Error::SingularMatrix)?;
        Ok(Mat2::new(
            self.d.clone() * inv_det.clone(),
            -self.b.clone() * inv_det.clone(),
            -self.c.clone() * inv_det.clone(),
            self.a.clone() * inv_det,
        ))
    }

    pub fn mul(&self, o: &Self) -> Self {
        Mat2::new(
            self.a.clone() * o.a.clone() + self.b.clone() * o.c.clone(),
            self.a.clone() * o.b.clone() + self.b.clone() * o.d.clone(),
            self.c.clone() * o.a.clone() + self.d.clone() * o.c.clone(),
            self.c.clone() * o.b.clone() + self.d.clone() * o.d.clone(),
        )
    }

    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> G) -> Mat2<G> {
        Mat2::new(f(&self.a), f(&self.b), f(&self.c), f(&self.d))
    }
}

/// `p(A⁻¹(x, y))`: the left action of GL₂ on binary forms.
pub fn act_gl2<F: Scalar>(p: &BinaryForm<F>, m: &Mat2<F>) -> Result<BinaryForm<F>> {
    let inv = m.inverse()?;
    Ok(substitute_linear(p, &inv))
}

/// `p(a x + b y, c x + d y)`.
pub(crate) fn substitute_linear<F: Scalar>(p: &BinaryForm<F>, m: &Mat2<F>) -> BinaryForm<F> {
    let deg = p.degree();
    let lx = BinaryForm::linear(m.a.clone(), m.b.clone());
    let ly = BinaryForm::linear(m.c.clone(), m.d.clone());
    let px: Vec<_> = (0..=deg).map(|k| lx.pow(k)).collect();
    let py: Vec<_> = (0..=deg).map(|k| ly.pow(k)).collect();
    let mut out = BinaryForm::zero(deg);
    for (i, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        out = out.add(&px[deg - i].mul(&py[i]).scale(c));
    }
    out
}
