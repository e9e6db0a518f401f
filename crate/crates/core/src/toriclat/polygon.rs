use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::lattice::LatticePoint;
use crate::error::{Error, Result};
use crate::exactalg::{fmt_q, Rational};

/// Point of M_Q or N_Q with rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QPoint {
    pub x: Rational,
    pub y: Rational,
}

impl QPoint {
    pub fn new(x: Rational, y: Rational) -> Self {
        QPoint { x, y }
    }

    pub fn origin() -> Self {
        QPoint::new(Rational::zero(), Rational::zero())
    }

    pub fn from_lattice(p: &LatticePoint<2>) -> Self {
        QPoint::new(
            Rational::from_integer(p.0[0].clone()),
            Rational::from_integer(p.0[1].clone()),
        )
    }

    pub fn sub(&self, o: &QPoint) -> QPoint {
        QPoint::new(&self.x - &o.x, &self.y - &o.y)
    }

    pub fn add(&self, o: &QPoint) -> QPoint {
        QPoint::new(&self.x + &o.x, &self.y + &o.y)
    }

    pub fn scale(&self, c: &Rational) -> QPoint {
        QPoint::new(&self.x * c, &self.y * c)
    }

    pub fn dot(&self, o: &QPoint) -> Rational {
        &self.x * &o.x + &self.y * &o.y
    }

    pub fn neg(&self) -> QPoint {
        QPoint::new(-self.x.clone(), -self.y.clone())
    }

    pub fn is_origin(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }
}

impl fmt::Display for QPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", fmt_q(&self.x), fmt_q(&self.y))
    }
}

/// `(b − a) × (c − a)`, positive for a left turn.
pub fn cross(a: &QPoint, b: &QPoint, c: &QPoint) -> Rational {
    let u = b.sub(a);
    let v = c.sub(a);
    &u.x * &v.y - &u.y * &v.x
}

/// Strictly convex polygon, vertices counterclockwise without collinear
/// triples, starting at the lexicographically smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePolygon {
    vertices: Vec<QPoint>,
}

impl LatticePolygon {
    /// Validates an explicit counterclockwise vertex list.
    pub fn new(vertices: Vec<QPoint>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::DegeneratePolygon);
        }
        for i in 0..n {
            let turn = cross(&vertices[i], &vertices[(i + 1) % n], &vertices[(i + 2) % n]);
            if !turn.is_positive() {
                return Err(Error::VerificationFailed(format!(
                    "vertices are not strictly convex counterclockwise at {}",
                    vertices[(i + 1) % n]
                )));
            }
        }
        LatticePolygon::hull(vertices)
    }

    /// Convex hull of a finite point set (Andrew's monotone chain).
    pub fn hull(points: impl IntoIterator<Item = QPoint>) -> Result<Self> {
        let mut pts: Vec<QPoint> = points.into_iter().collect();
        pts.sort();
        pts.dedup();
        if pts.len() < 3 {
            return Err(Error::DegeneratePolygon);
        }
        let mut lower: Vec<QPoint> = Vec::new();
        for p in &pts {
            while lower.len() >= 2
                && !cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive()
            {
                lower.pop();
            }
            lower.push(p.clone());
        }
        let mut upper: Vec<QPoint> = Vec::new();
        for p in pts.iter().rev() {
            while upper.len() >= 2
                && !cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive()
            {
                upper.pop();
            }
            upper.push(p.clone());
        }
        lower.pop();
        upper.pop();
        lower.extend(upper);
        if lower.len() < 3 {
            return Err(Error::DegeneratePolygon);
        }
        Ok(LatticePolygon { vertices: lower })
    }

    pub fn vertices(&self) -> &[QPoint] {
        &self.vertices
    }

    /// Directed edges `(v_i, v_{i+1})`.
    pub fn edges(&self) -> impl Iterator<Item = (&QPoint, &QPoint)> {
        let n = self.vertices.len();
        (0..n).map(move |i| (&self.vertices[i], &self.vertices[(i + 1) % n]))
    }

    pub fn area(&self) -> Rational {
        let o = QPoint::origin();
        self.edges().map(|(a, b)| cross(&o, a, b)).sum::<Rational>() / Rational::from_integer(2.into())
    }

    pub fn contains_strictly(&self, p: &QPoint) -> bool {
        self.edges().all(|(a, b)| cross(a, b, p).is_positive())
    }

    pub fn contains(&self, p: &QPoint) -> bool {
        self.edges().all(|(a, b)| !cross(a, b, p).is_negative())
    }

    pub fn is_centrally_symmetric(&self) -> bool {
        self.vertices
            .iter()
            .all(|v| self.vertices.contains(&v.neg()))
    }
}

impl fmt::Display for LatticePolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        write!(f, "conv{{{}}}", vs.join(", "))
    }
}

/// Primitive integer vector on the ray through a nonzero rational vector.
pub fn primitive_ray(v: &QPoint) -> LatticePoint<2> {
    let l = v.x.denom().lcm(v.y.denom());
    let x = v.x.numer() * (&l / v.x.denom());
    let y = v.y.numer() * (&l / v.y.denom());
    let g = x.gcd(&y);
    LatticePoint([x / &g, y / g])
}

/// Complete 2-dimensional fan given by its rays in counterclockwise order,
/// starting from the ray of smallest angle in `[0, 2π)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan2 {
    rays: Vec<LatticePoint<2>>,
}

fn half(p: &LatticePoint<2>) -> u8 {
    let [x, y] = &p.0;
    if y.is_positive() || (y.is_zero() && x.is_positive()) {
        0
    } else {
        1
    }
}

fn angle_cmp(a: &LatticePoint<2>, b: &LatticePoint<2>) -> Ordering {
    half(a).cmp(&half(b)).then_with(|| {
        let c = &a.0[0] * &b.0[1] - &a.0[1] * &b.0[0];
        BigInt::zero().cmp(&c)
    })
}

fn det2(a: &LatticePoint<2>, b: &LatticePoint<2>) -> BigInt {
    &a.0[0] * &b.0[1] - &a.0[1] * &b.0[0]
}

impl Fan2 {
    /// Sorts the rays by angle and checks they are primitive, distinct and
    /// span a complete fan (consecutive angles below π).
    pub fn new(mut rays: Vec<LatticePoint<2>>) -> Result<Self> {
        for r in &rays {
            if !r.is_primitive() {
                return Err(Error::NonPrimitive(r.to_string()));
            }
        }
        rays.sort_by(angle_cmp);
        let n = rays.len();
        if n < 3 {
            return Err(Error::VerificationFailed(format!(
                "a complete fan needs at least 3 rays, got {n}"
            )));
        }
        for i in 0..n {
            let d = det2(&rays[i], &rays[(i + 1) % n]);
            if !d.is_positive() {
                return Err(Error::VerificationFailed(format!(
                    "rays {} and {} are not positively oriented; fan is not complete",
                    rays[i],
                    rays[(i + 1) % n]
                )));
            }
        }
        Ok(Fan2 { rays })
    }

    pub fn rays(&self) -> &[LatticePoint<2>] {
        &self.rays
    }

    /// Two-dimensional cones between consecutive rays.
    pub fn maximal_cones(&self) -> Vec<super::singularity::Cone2> {
        let n = self.rays.len();
        (0..n)
            .map(|i| {
                super::singularity::Cone2::new(self.rays[i].clone(), self.rays[(i + 1) % n].clone())
                    .expect("consecutive rays of a valid fan span a cone")
            })
            .collect()
    }
}

impl fmt::Display for Fan2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rs: Vec<String> = self.rays.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", rs.join(", "))
    }
}

/// Inner normal fan: one primitive inner normal per edge.
pub fn normal_fan(q: &LatticePolygon) -> Result<Fan2> {
    if q.area().is_zero() {
        return Err(Error::DegeneratePolygon);
    }
    // counterclockwise edge e has inner normal e rotated by +90°
    let rays = q
        .edges()
        .map(|(a, b)| {
            let e = b.sub(a);
            primitive_ray(&QPoint::new(-e.y, e.x))
        })
        .collect();
    Fan2::new(rays)
}

/// `{m : ⟨m, n⟩ ≥ −1 for all n ∈ P}`.
pub fn polar_dual(p: &LatticePolygon) -> Result<LatticePolygon> {
    if !p.contains_strictly(&QPoint::origin()) {
        return Err(Error::OriginNotInterior);
    }
    // each edge line {⟨m, ·⟩ = −1} gives one vertex of the dual
    let verts = p.edges().map(|(a, b)| {
        let det = &a.x * &b.y - &a.y * &b.x;
        QPoint::new((&a.y - &b.y) / &det, (&b.x - &a.x) / &det)
    });
    LatticePolygon::hull(verts)
}

/// Area centroid, from a fan triangulation around the vertex average.
pub fn barycenter(p: &LatticePolygon) -> Result<QPoint> {
    let n = p.vertices().len();
    let c = p
        .vertices()
        .iter()
        .fold(QPoint::origin(), |acc, v| acc.add(v))
        .scale(&Rational::new(BigInt::one(), BigInt::from(n)));
    let mut total = Rational::zero();
    let mut moment = QPoint::origin();
    for (a, b) in p.edges() {
        let w = cross(&c, a, b);
        let tri_centroid = c.add(a).add(b);
        moment = moment.add(&tri_centroid.scale(&w));
        total += w;
    }
    if total.is_zero() {
        return Err(Error::DegeneratePolygon);
    }
    Ok(moment.scale(&(Rational::from_integer(3.into()) * total).recip()))
}

/// Outcome of the barycenter test on a toric Fano surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BermanReport {
    pub polytope: LatticePolygon,
    pub dual: LatticePolygon,
    pub barycenter: QPoint,
    pub k_polystable: bool,
}

/// K-polystability of the toric Fano surface of `fan`: the barycenter of
/// the anticanonical polygon `{m : ⟨m, ray⟩ ≥ −1}` must be exactly 0.
pub fn berman_kpolystable(fan: &Fan2) -> Result<BermanReport> {
    let pts: Vec<QPoint> = fan.rays().iter().map(QPoint::from_lattice).collect();
    let polytope = LatticePolygon::hull(pts.clone())
        .map_err(|_| Error::NonFanoFan("rays span a degenerate polygon".into()))?;
    if polytope.vertices().len() != pts.len() {
        return Err(Error::NonFanoFan(
            "some ray generator is not a vertex of the ray polygon".into(),
        ));
    }
    let dual = polar_dual(&polytope)
        .map_err(|_| Error::NonFanoFan("origin is not interior to the ray polygon".into()))?;
    let barycenter = barycenter(&dual)?;
    Ok(BermanReport {
        k_polystable: barycenter.is_origin(),
        polytope,
        dual,
        barycenter,
    })
}
