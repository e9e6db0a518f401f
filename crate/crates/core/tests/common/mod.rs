//! Seeded generators and independent oracles shared by the integration
//! tests and the acceptance runner.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use kstab::exactalg::{int, rat, BinaryForm, Mat2, MultiplicityProfile, Rational};
use kstab::gitforms::GITClass;
use kstab::toriclat::{LatticePolygon, QPoint};
use kstab::wps::{Affine, Automorphism, Equation, QuadPart, WeightedEquation, ZwTransform};
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_int(r: &mut impl Rng, bound: i64) -> i64 {
    r.gen_range(-bound..=bound)
}

pub fn small_rat(r: &mut impl Rng) -> Rational {
    rat(small_int(r, 6), r.gen_range(1..=4))
}

pub fn nonzero_rat(r: &mut impl Rng) -> Rational {
    loop {
        let q = small_rat(r);
        if !q.is_zero() {
            return q;
        }
    }
}

/// Random dense form of the given degree, each coefficient zero with
/// probability `sparsity`.
pub fn random_form(r: &mut impl Rng, degree: usize, sparsity: f64) -> BinaryForm<Rational> {
    let coeffs = (0..=degree)
        .map(|_| {
            if r.gen_bool(sparsity) {
                Rational::zero()
            } else {
                small_rat(r)
            }
        })
        .collect();
    BinaryForm::new(coeffs)
}

/// A random partition of `n`, biased so that every largest part is equally
/// likely.
pub fn random_partition(r: &mut impl Rng, n: usize) -> Vec<usize> {
    let top = r.gen_range(1..=n);
    let mut parts = vec![top];
    let mut rest = n - top;
    while rest > 0 {
        let m = r.gen_range(1..=top.min(rest));
        parts.push(m);
        rest -= m;
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}

fn is_square(n: i64) -> bool {
    n >= 0 && {
        let s = (n as f64).sqrt().round() as i64;
        (s - 1..=s + 1).any(|t| t >= 0 && t * t == n)
    }
}

/// A binary form built as an explicit product of linear factors with
/// rational roots and of irreducible quadratics (conjugate root pairs),
/// together with the profile of the construction.
pub struct KnownForm {
    pub form: BinaryForm<Rational>,
    pub multiplicities: Vec<usize>,
}

impl KnownForm {
    pub fn profile(&self) -> MultiplicityProfile {
        MultiplicityProfile::from_multiplicities(&self.multiplicities)
    }
}

pub fn known_form(r: &mut impl Rng, parts: &[usize]) -> KnownForm {
    let degree: usize = parts.iter().sum();
    let mut used_roots: HashSet<Option<Rational>> = HashSet::new();
    let mut used_quads: HashSet<(i64, i64)> = HashSet::new();
    let mut form = BinaryForm::constant(nonzero_rat(r));
    let mut i = 0;
    while i < parts.len() {
        let m = parts[i];
        let paired = i + 1 < parts.len() && parts[i + 1] == m && r.gen_bool(0.5);
        let factor = if paired {
            // x² + b x y + c y² with non-square discriminant
            loop {
                let (b, c) = (small_int(r, 5), small_int(r, 9));
                if !is_square(b * b - 4 * c) && used_quads.insert((b, c)) {
                    break BinaryForm::new(vec![int(1), int(b), int(c)])
                        .scale(&nonzero_rat(r));
                }
            }
        } else {
            // c (x − s y), or c y for the root at infinity
            loop {
                let at_infinity = r.gen_bool(0.15);
                let root = if at_infinity { None } else { Some(small_rat(r)) };
                if used_roots.insert(root.clone()) {
                    let c = nonzero_rat(r);
                    break match root {
                        None => BinaryForm::linear(int(0), c),
                        Some(s) => BinaryForm::linear(c.clone(), -(s * c)),
                    };
                }
            }
        };
        form = form.mul(&factor.pow(m));
        i += if paired { 2 } else { 1 };
    }
    assert_eq!(form.degree(), degree);
    KnownForm {
        form,
        multiplicities: parts.to_vec(),
    }
}

pub fn random_known_form(r: &mut impl Rng, degree: usize) -> KnownForm {
    let parts = random_partition(r, degree);
    known_form(r, &parts)
}

/// Squarefree form of the given degree.
pub fn squarefree_form(r: &mut impl Rng, degree: usize) -> BinaryForm<Rational> {
    known_form(r, &vec![1; degree]).form
}

/// GIT class read off directly from root multiplicities.
pub fn expected_class(mults: &[usize], a: usize) -> GITClass {
    let top = mults.iter().copied().max().unwrap_or(0);
    let at_top = mults.iter().filter(|&&m| m == top).count();
    if top > a {
        GITClass::Unstable
    } else if top == a && at_top == 2 && mults.len() == 2 {
        GITClass::StrictlyPolystable
    } else if top == a {
        GITClass::SemistableNotPolystable
    } else {
        GITClass::Stable
    }
}

pub fn invertible_matrix(r: &mut impl Rng) -> Mat2<Rational> {
    loop {
        let m = Mat2::new(small_rat(r), small_rat(r), small_rat(r), small_rat(r));
        if !m.det().is_zero() {
            return m;
        }
    }
}

fn maybe_zero(r: &mut impl Rng) -> Rational {
    if r.gen_bool(0.25) {
        Rational::zero()
    } else {
        small_rat(r)
    }
}

pub fn random_quad_part(r: &mut impl Rng) -> QuadPart<Rational> {
    QuadPart::new(maybe_zero(r), maybe_zero(r), maybe_zero(r))
}

/// Equation with random quadratic part (any rank), random shifts and `g`.
pub fn random_equation(r: &mut impl Rng, a: usize) -> WeightedEquation {
    loop {
        let eq = Equation::new(
            a,
            random_quad_part(r),
            random_form(r, a, 0.6),
            random_form(r, a, 0.6),
            random_form(r, 2 * a, 0.4),
        )
        .unwrap();
        if !eq.is_zero() {
            return eq;
        }
    }
}

/// Random equation whose quadratic part has rank 2.
pub fn random_rank2_equation(r: &mut impl Rng, a: usize) -> WeightedEquation {
    loop {
        let eq = random_equation(r, a);
        if eq.quadratic_rank() == 2 {
            return eq;
        }
    }
}

pub fn random_automorphism(r: &mut impl Rng, a: usize) -> Automorphism<Rational> {
    let lin = invertible_matrix(r);
    let zw = ZwTransform {
        z_image: Affine::new(lin.a.clone(), lin.b.clone(), random_form(r, a, 0.5)),
        w_image: Affine::new(lin.c.clone(), lin.d.clone(), random_form(r, a, 0.5)),
    };
    Automorphism {
        zw,
        xy: invertible_matrix(r),
    }
}

/// `q + f z + h w + g` whose normal form has `g̃ = target` exactly, for
/// `q` of nonzero discriminant `D = β² − 4αγ`, using
/// `g̃ = g + (α h² − β f h + γ f²) / D`.
pub fn with_gtilde(
    q: QuadPart<Rational>,
    f: BinaryForm<Rational>,
    h: BinaryForm<Rational>,
    target: &BinaryForm<Rational>,
) -> WeightedEquation {
    let a = f.degree();
    let d = q.discriminant();
    let corr = h
        .mul(&h)
        .scale(&q.alpha)
        .sub(&f.mul(&h).scale(&q.beta))
        .add(&f.mul(&f).scale(&q.gamma))
        .scale(&d.recip());
    Equation::new(a, q, f, h, target.sub(&corr)).unwrap()
}

/// Determinant by Gaussian elimination over Q.
pub fn det(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut d = int(1);
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        d *= &m[c][c];
        for i in c + 1..n {
            if !m[i][c].is_zero() {
                let f = &m[i][c] / &m[c][c];
                let pivot = m[c].clone();
                for (x, p) in m[i][c..].iter_mut().zip(&pivot[c..]) {
                    *x -= &f * p;
                }
            }
        }
    }
    d
}

/// Resultant of two binary forms of formal degrees `deg p`, `deg q`.
pub fn resultant(p: &BinaryForm<Rational>, q: &BinaryForm<Rational>) -> Rational {
    let (m, n) = (p.degree(), q.degree());
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![Rational::zero(); size];
        for (j, c) in p.coeffs().iter().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![Rational::zero(); size];
        for (j, c) in q.coeffs().iter().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    det(rows)
}

/// `∂g/∂x` and `∂g/∂y` of a form of degree `n ≥ 1`.
pub fn partials(g: &BinaryForm<Rational>) -> (BinaryForm<Rational>, BinaryForm<Rational>) {
    let n = g.degree();
    let c = g.coeffs();
    // c[i] multiplies x^(n-i) y^i
    let gx = (0..n).map(|i| &c[i] * int((n - i) as i64)).collect();
    let gy = (0..n).map(|i| &c[i + 1] * int((i + 1) as i64)).collect();
    (BinaryForm::new(gx), BinaryForm::new(gy))
}

/// `z² + w² + g = 0` is quasi-smooth iff `g_x, g_y` have no common zero
/// on P¹.
pub fn jacobian_quasi_smooth(g: &BinaryForm<Rational>) -> bool {
    let (gx, gy) = partials(g);
    !resultant(&gx, &gy).is_zero()
}

/// Area centroid by the shoelace formula.
pub fn shoelace_centroid(p: &LatticePolygon) -> QPoint {
    let v = p.vertices();
    let n = v.len();
    let mut a2 = Rational::zero();
    let mut cx = Rational::zero();
    let mut cy = Rational::zero();
    for i in 0..n {
        let (p0, p1) = (&v[i], &v[(i + 1) % n]);
        let w = &p0.x * &p1.y - &p1.x * &p0.y;
        cx += (&p0.x + &p1.x) * &w;
        cy += (&p0.y + &p1.y) * &w;
        a2 += w;
    }
    let six_a = a2 * int(3);
    QPoint::new(cx / &six_a, cy / six_a)
}

/// Random polygon with rational vertices and the origin strictly inside.
pub fn polygon_around_origin(r: &mut impl Rng) -> LatticePolygon {
    loop {
        let n = r.gen_range(3..=8);
        let pts: Vec<QPoint> = (0..n).map(|_| QPoint::new(small_rat(r), small_rat(r))).collect();
        if let Ok(p) = LatticePolygon::hull(pts) {
            if p.contains_strictly(&QPoint::origin()) {
                return p;
            }
        }
    }
}

pub fn symmetric_polygon(r: &mut impl Rng) -> LatticePolygon {
    loop {
        let n = r.gen_range(2..=5);
        let pts: Vec<QPoint> = (0..n).map(|_| QPoint::new(small_rat(r), small_rat(r))).collect();
        let all = pts.iter().cloned().chain(pts.iter().map(QPoint::neg));
        if let Ok(p) = LatticePolygon::hull(all) {
            return p;
        }
    }
}

/// Hilbert basis of the cone over `q × {1}` by brute force in machine
/// integers: all lattice points up to height `bound`, membership through
/// `m/t ∈ q`, then removal of every point that is a sum of two others.
pub fn brute_force_hilbert_basis(q: &LatticePolygon, bound: i64) -> Vec<(i64, i64, i64)> {
    let inside = |x: i64, y: i64, t: i64| {
        q.contains(&QPoint::new(rat(x, t), rat(y, t)))
    };
    let (mut lo, mut hi) = (i64::MAX, i64::MIN);
    for v in q.vertices() {
        for c in [&v.x, &v.y] {
            lo = lo.min(c.floor().to_integer().try_into().unwrap());
            hi = hi.max(c.ceil().to_integer().try_into().unwrap());
        }
    }
    let mut points: Vec<(i64, i64, i64)> = Vec::new();
    for t in 1..=bound {
        for x in lo * t..=hi * t {
            for y in lo * t..=hi * t {
                if inside(x, y, t) {
                    points.push((x, y, t));
                }
            }
        }
    }
    let set: HashSet<(i64, i64, i64)> = points.iter().copied().collect();
    let mut by_height: HashMap<i64, Vec<(i64, i64, i64)>> = HashMap::new();
    for p in &points {
        by_height.entry(p.2).or_default().push(*p);
    }
    let mut basis: Vec<(i64, i64, i64)> = points
        .iter()
        .copied()
        .filter(|&(x, y, t)| {
            !(1..t).any(|s| {
                by_height[&s]
                    .iter()
                    .any(|&(u, v, _)| set.contains(&(x - u, y - v, t - s)))
            })
        })
        .collect();
    basis.sort_by_key(|&(x, y, t)| (t, y, x));
    basis
}
