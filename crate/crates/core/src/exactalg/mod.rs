//! Exact scalar and binary-form arithmetic over Q and a single quadratic
//! extension Q(√d).
//!
//! Multiplicities of roots are obtained from squarefree decomposition only;
//! nothing here ever factors into irreducibles.

mod form;
mod quadext;
mod scalar;
mod squarefree;
mod unipoly;

pub use form::{act_gl2, BinaryForm, Mat2};
pub use quadext::{sqrt_rational, QuadExt, SqrtResult};
pub use scalar::{fmt_q, int, rat, Rational, Scalar};
pub use squarefree::{
    gcd_forms, multiplicity_profile, reconstruct, squarefree_decompose, MultiplicityProfile,
};
pub use unipoly::UniPoly;
