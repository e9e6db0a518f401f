//! Exact two-dimensional lattice geometry for the toric surface
//! `zw = x^a y^a`: fans, polar polygons, barycenters, cyclic quotient
//! singularities and the Hilbert basis of its semigroup.

mod lattice;
mod polygon;
mod report;
mod semigroup;
mod singularity;

pub use lattice::LatticePoint;
pub use polygon::{
    barycenter, berman_kpolystable, cross, normal_fan, polar_dual, primitive_ray, BermanReport,
    Fan2, LatticePolygon, QPoint,
};
pub use report::{analyze_y, p_polygon, q_polygon, ConeReport, YReport};
pub use semigroup::{
    hilbert_basis_up_to, relations, semigroup_generators, verify_relation, PolygonCone, YRelation,
};
pub use singularity::{
    cyclic_type, lattice_rank, moduli_dims, qg_t1_dim, t1_weights, Cone2, CyclicType, ModuliDims,
};
