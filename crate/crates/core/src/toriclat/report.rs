use std::fmt::Write as _;

use num_bigint::BigInt;
use serde_json::{json, Value};

use super::lattice::LatticePoint;
use super::polygon::{berman_kpolystable, normal_fan, Fan2, LatticePolygon, QPoint};
use super::semigroup::{semigroup_generators, verify_relation, YRelation};
use super::singularity::{cyclic_type, moduli_dims, qg_t1_dim, Cone2, CyclicType, ModuliDims};
use crate::error::{Error, Result};
use crate::exactalg::{fmt_q, int, rat, Rational};

fn check_a(a: u64) -> Result<()> {
    if a < 2 {
        return Err(Error::InvalidParameter {
            what: "a",
            requirement: "a >= 2",
            value: a.to_string(),
        });
    }
    Ok(())
}

/// `conv{(0,0), (0,1), (1/a,0), (−1/a,1)}`.
pub fn q_polygon(a: u64) -> Result<LatticePolygon> {
    check_a(a)?;
    let a = a as i64;
    LatticePolygon::hull([
        QPoint::new(int(0), int(0)),
        QPoint::new(int(0), int(1)),
        QPoint::new(rat(1, a), int(0)),
        QPoint::new(rat(-1, a), int(1)),
    ])
}

/// Convex hull of the ray generators of a fan.
pub fn p_polygon(fan: &Fan2) -> Result<LatticePolygon> {
    LatticePolygon::hull(fan.rays().iter().map(QPoint::from_lattice))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeReport {
    pub cone: Cone2,
    pub singularity: CyclicType,
    /// `None` when the type is outside the supported table.
    pub qg_t1_dim: Option<u64>,
}

/// Everything computed about the toric surface `zw = x^a y^a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YReport {
    pub a: u64,
    pub q: LatticePolygon,
    pub fan: Fan2,
    pub p: LatticePolygon,
    pub p_dual: LatticePolygon,
    pub barycenter: QPoint,
    pub k_polystable: bool,
    pub cones: Vec<ConeReport>,
    /// Sum of the local deformation dimensions over the four cones.
    pub local_t1_sum: Option<u64>,
    pub moduli: ModuliDims,
    pub hilbert_basis: Vec<LatticePoint<3>>,
    pub relation: YRelation,
}

pub fn analyze_y(a: u64) -> Result<YReport> {
    let q = q_polygon(a)?;
    let fan = normal_fan(&q)?;
    let berman = berman_kpolystable(&fan)?;
    let cones = fan
        .maximal_cones()
        .into_iter()
        .map(|cone| {
            let singularity = cyclic_type(&cone)?;
            Ok(ConeReport {
                qg_t1_dim: qg_t1_dim(singularity).ok(),
                singularity,
                cone,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let ai = a;
    let mut types: Vec<CyclicType> = cones.iter().map(|c| c.singularity).collect();
    types.sort();
    let mut want = vec![
        CyclicType::new(ai, ai - 1),
        CyclicType::new(ai, ai - 1),
        CyclicType::new(ai, 1),
        CyclicType::new(ai, 1),
    ];
    want.sort();
    if cones.len() != 4 || types != want {
        return Err(Error::VerificationFailed(format!(
            "expected four cones of types 1/{a}(1,{}) and 1/{a}(1,1)",
            a - 1
        )));
    }

    let moduli = moduli_dims(a)?;
    let local_t1_sum = if moduli.t1_dim.is_some() {
        cones.iter().map(|c| c.qg_t1_dim).sum::<Option<u64>>()
    } else {
        None
    };
    if let (Some(local), Some(global)) = (local_t1_sum, moduli.t1_dim) {
        if local != global {
            return Err(Error::VerificationFailed(format!(
                "local deformation dimensions sum to {local}, expected {global}"
            )));
        }
    }

    let hilbert_basis = semigroup_generators(&q)?;
    let relation = verify_relation(&hilbert_basis, a)?;
    Ok(YReport {
        a,
        p: berman.polytope,
        p_dual: berman.dual,
        barycenter: berman.barycenter,
        k_polystable: berman.k_polystable,
        q,
        fan,
        cones,
        local_t1_sum,
        moduli,
        hilbert_basis,
        relation,
    })
}

fn qpoint_json(p: &QPoint) -> Value {
    json!([fmt_q(&p.x), fmt_q(&p.y)])
}

fn polygon_json(p: &LatticePolygon) -> Value {
    Value::Array(p.vertices().iter().map(qpoint_json).collect())
}

fn int_json(n: &BigInt) -> Value {
    fmt_q(&Rational::from_integer(n.clone())).into()
}

fn lattice_json<const D: usize>(p: &LatticePoint<D>) -> Value {
    Value::Array(p.0.iter().map(int_json).collect())
}

fn opt_json(n: Option<u64>) -> Value {
    n.map_or(Value::Null, Value::from)
}

impl YReport {
    /// JSON report; coordinates and other exact values are `"p/q"` strings.
    pub fn to_json(&self) -> Value {
        let cones: Vec<Value> = self
            .cones
            .iter()
            .map(|c| {
                json!({
                    "generators": [lattice_json(&c.cone.u), lattice_json(&c.cone.v)],
                    "type": [c.singularity.r, c.singularity.s],
                    "qg_t1_dim": opt_json(c.qg_t1_dim),
                })
            })
            .collect();
        json!({
            "a": self.a,
            "q_vertices": polygon_json(&self.q),
            "fan_rays": self.fan.rays().iter().map(lattice_json).collect::<Vec<_>>(),
            "p_vertices": polygon_json(&self.p),
            "polar_vertices": polygon_json(&self.p_dual),
            "barycenter": qpoint_json(&self.barycenter),
            "k_polystable": self.k_polystable,
            "cones": cones,
            "hilbert_basis": self.hilbert_basis.iter().map(lattice_json).collect::<Vec<_>>(),
            "relation": {
                "coefficients": self.relation.coefficients.iter().map(int_json).collect::<Vec<_>>(),
                "degrees": self.relation.degrees.iter().map(int_json).collect::<Vec<_>>(),
                "binomial": self.relation.binomial(),
            },
            "t1_dim": opt_json(self.moduli.t1_dim),
            "local_t1_sum": opt_json(self.local_t1_sum),
            "torus_quotient_dim": opt_json(self.moduli.torus_quotient_dim),
            "git_dim": self.moduli.git_dim,
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let dim = |d: Option<u64>| d.map_or("unsupported (needs a = 3 or a >= 5)".to_string(), |d| d.to_string());
        let _ = writeln!(s, "a: {}", self.a);
        let _ = writeln!(s, "Q: {}", self.q);
        let _ = writeln!(s, "fan rays: {}", self.fan);
        let _ = writeln!(s, "P: {}", self.p);
        let _ = writeln!(s, "polar: {}", self.p_dual);
        let _ = writeln!(s, "barycenter: {}", self.barycenter);
        let _ = writeln!(s, "k-polystable: {}", self.k_polystable);
        for c in &self.cones {
            let _ = writeln!(
                s,
                "cone {}: {} qg_t1_dim {}",
                c.cone,
                c.singularity,
                c.qg_t1_dim.map_or("unsupported".to_string(), |d| d.to_string())
            );
        }
        let gens: Vec<String> = self.hilbert_basis.iter().map(|g| g.to_string()).collect();
        let _ = writeln!(s, "hilbert basis: {}", gens.join(", "));
        let a = self.a;
        let _ = writeln!(
            s,
            "relation: {a}*g1 + {a}*g2 = g3 + g4 ({})",
            self.relation.binomial()
        );
        let _ = writeln!(s, "t1_dim: {}", dim(self.moduli.t1_dim));
        let _ = writeln!(s, "torus_quotient_dim: {}", dim(self.moduli.torus_quotient_dim));
        let _ = writeln!(s, "git_dim: {}", self.moduli.git_dim);
        s
    }
}
