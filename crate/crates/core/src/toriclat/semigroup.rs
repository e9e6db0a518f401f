use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::lattice::LatticePoint;
use super::polygon::{LatticePolygon, QPoint};
use crate::error::{Error, Result};
use crate::exactalg::Rational;
use crate::par;

/// Integer inequality `n·m + c·t ≥ 0` on `M ⊕ Z`.
#[derive(Clone, Debug)]
struct Facet {
    n: [BigInt; 2],
    c: BigInt,
}

impl Facet {
    fn eval(&self, p: &LatticePoint<3>) -> BigInt {
        &self.n[0] * &p.0[0] + &self.n[1] * &p.0[1] + &self.c * &p.0[2]
    }
}

/// The cone `τ` over `Q × {1}`, described by its facets and ray generators.
#[derive(Clone, Debug)]
pub struct PolygonCone {
    facets: Vec<Facet>,
    rays: Vec<LatticePoint<3>>,
    q: LatticePolygon,
}

impl PolygonCone {
    pub fn new(q: &LatticePolygon) -> Result<Self> {
        if q.area().is_zero() {
            return Err(Error::DegeneratePolygon);
        }
        let facets = q
            .edges()
            .map(|(a, b)| {
                // inner normal of a ccw edge, then n·m ≥ n·a on Q
                let e = b.sub(a);
                let n = QPoint::new(-e.y.clone(), e.x.clone());
                let off = n.dot(a);
                let l = n.x.denom().lcm(n.y.denom()).lcm(off.denom());
                let scale = |r: &Rational| r.numer() * (&l / r.denom());
                let (n0, n1, c) = (scale(&n.x), scale(&n.y), -scale(&off));
                let g = n0.gcd(&n1).gcd(&c);
                Facet {
                    n: [n0 / &g, n1 / &g],
                    c: c / g,
                }
            })
            .collect();
        let rays = q.vertices().iter().map(lift_vertex).collect();
        Ok(PolygonCone {
            facets,
            rays,
            q: q.clone(),
        })
    }

    pub fn rays(&self) -> &[LatticePoint<3>] {
        &self.rays
    }

    pub fn contains(&self, p: &LatticePoint<3>) -> bool {
        self.facets.iter().all(|f| !f.eval(p).is_negative())
    }

    /// Lattice points of `τ` at height `t`.
    pub fn level(&self, t: &BigInt) -> Vec<LatticePoint<3>> {
        let tr = Rational::from_integer(t.clone());
        let xs = self.q.vertices().iter().map(|v| &v.x * &tr);
        let ys = self.q.vertices().iter().map(|v| &v.y * &tr);
        let (x0, x1) = bounds(xs);
        let (y0, y1) = bounds(ys);
        let mut out = Vec::new();
        let mut y = y0;
        while y <= y1 {
            let mut x = x0.clone();
            while x <= x1 {
                let p = LatticePoint([x.clone(), y.clone(), t.clone()]);
                if self.contains(&p) {
                    out.push(p);
                }
                x += 1;
            }
            y += 1;
        }
        out
    }

    /// Upper bound on the height of a Hilbert basis element: outside the
    /// rays themselves, every element lies in the half-open parallelepiped
    /// of some simplex of a triangulation.
    pub fn height_bound(&self) -> BigInt {
        let h: Vec<&BigInt> = self.rays.iter().map(|r| &r.0[2]).collect();
        let max_ray = h.iter().copied().max().cloned().unwrap_or_default();
        let max_simplex = (1..h.len() - 1)
            .map(|i| h[0] + h[i] + h[i + 1] - 1)
            .max()
            .unwrap_or_default();
        max_ray.max(max_simplex)
    }
}

fn bounds(vals: impl Iterator<Item = Rational>) -> (BigInt, BigInt) {
    let vs: Vec<Rational> = vals.collect();
    let lo = vs.iter().min().unwrap().ceil().to_integer();
    let hi = vs.iter().max().unwrap().floor().to_integer();
    (lo, hi)
}

/// `(L·v, L)` with `L` the common denominator of `v`.
fn lift_vertex(v: &QPoint) -> LatticePoint<3> {
    let l = v.x.denom().lcm(v.y.denom());
    LatticePoint([
        v.x.numer() * (&l / v.x.denom()),
        v.y.numer() * (&l / v.y.denom()),
        l,
    ])
}

fn canonical_key(p: &LatticePoint<3>) -> (BigInt, BigInt, BigInt) {
    (p.0[2].clone(), p.0[1].clone(), p.0[0].clone())
}

/// Hilbert basis of `τ ∩ (M ⊕ Z)` for `τ` the cone over `Q × {1}`,
/// sorted by height, then second, then first coordinate.
pub fn semigroup_generators(q: &LatticePolygon) -> Result<Vec<LatticePoint<3>>> {
    let cone = PolygonCone::new(q)?;
    let bound = cone
        .height_bound()
        .to_u64()
        .ok_or_else(|| Error::VerificationFailed("height bound too large".into()))?;
    Ok(hilbert_basis_up_to(&cone, bound))
}

/// Irreducible elements of height at most `bound`. A point is reducible
/// iff it differs from a lower irreducible element by a point of `τ`, so
/// levels are processed in order and each level is filtered in parallel.
pub fn hilbert_basis_up_to(cone: &PolygonCone, bound: u64) -> Vec<LatticePoint<3>> {
    let mut basis: Vec<LatticePoint<3>> = Vec::new();
    for t in 1..=bound {
        let candidates = cone.level(&BigInt::from(t));
        let keep = par::map(&candidates, |x| {
            !basis.iter().any(|y| cone.contains(&x.sub(y)))
        });
        basis.extend(
            candidates
                .into_iter()
                .zip(keep)
                .filter_map(|(x, k)| k.then_some(x)),
        );
    }
    basis.sort_by_key(canonical_key);
    basis
}

/// Rational kernel of the matrix whose columns are `gens`, each basis
/// vector scaled to a primitive integer vector with positive leading entry.
pub fn relations(gens: &[LatticePoint<3>]) -> Vec<Vec<BigInt>> {
    let n = gens.len();
    let mut rows: Vec<Vec<Rational>> = (0..3)
        .map(|i| {
            gens.iter()
                .map(|g| Rational::from_integer(g.0[i].clone()))
                .collect()
        })
        .collect();
    // reduced row echelon form
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); n];
            v[free] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -rows[row][free].clone();
            }
            primitive_integer(&v)
        })
        .collect()
}

fn primitive_integer(v: &[Rational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    let sign = match ints.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => -BigInt::one(),
        _ => BigInt::one(),
    };
    ints.into_iter().map(|x| x / &g * &sign).collect()
}

/// The single relation among the generators of the semigroup of `Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YRelation {
    pub generators: Vec<LatticePoint<3>>,
    /// `(a, a, −1, −1)`: `a·g₁ + a·g₂ = g₃ + g₄`.
    pub coefficients: Vec<BigInt>,
    /// Heights of the generators, the weights of `x, y, z, w`.
    pub degrees: Vec<BigInt>,
}

impl YRelation {
    /// The binomial in `x, y, z, w` this relation encodes.
    pub fn binomial(&self) -> String {
        let a = &self.coefficients[0];
        format!("z*w - x^{a}*y^{a}")
    }
}

/// Checks that `gens` are `(0,0,1), (0,1,1), (1,0,a), (−1,a,a)` and that
/// their relation lattice is spanned by `(a, a, −1, −1)`.
pub fn verify_relation(gens: &[LatticePoint<3>], a: u64) -> Result<YRelation> {
    let ai = a as i64;
    let expected = [
        LatticePoint::new3(0, 0, 1),
        LatticePoint::new3(0, 1, 1),
        LatticePoint::new3(1, 0, ai),
        LatticePoint::new3(-1, ai, ai),
    ];
    if gens != expected {
        let got: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
        return Err(Error::VerificationFailed(format!(
            "unexpected generators [{}]",
            got.join(", ")
        )));
    }
    let rels = relations(gens);
    let want: Vec<BigInt> = [ai, ai, -1, -1].into_iter().map(BigInt::from).collect();
    if rels != [want.clone()] {
        return Err(Error::VerificationFailed(format!(
            "relation lattice {rels:?} differs from a*g1 + a*g2 = g3 + g4"
        )));
    }
    // the relation is homogeneous for the height grading
    let degrees: Vec<BigInt> = gens.iter().map(|g| g.0[2].clone()).collect();
    let weight: BigInt = want.iter().zip(&degrees).map(|(c, d)| c * d).sum();
    if !weight.is_zero() {
        return Err(Error::VerificationFailed("relation is not homogeneous".into()));
    }
    Ok(YRelation {
        generators: gens.to_vec(),
        coefficients: want,
        degrees,
    })
}
