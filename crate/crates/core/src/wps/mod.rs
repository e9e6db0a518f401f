//! Degree-`2a` hypersurfaces in P(1,1,a,a): parsing, normal form,
//! quasi-smoothness, K-stability verdicts and the lct wall report.

mod classify;
mod equation;
mod lct;
mod normalize;
mod parse;

pub use classify::{analyze, k_classify, quasi_smooth, KClass, Verdict, NOTE_LOW_RANK, NOTE_ZERO_GTILDE};
pub use equation::{
    parse_binary_form, parse_equation, quadratic_rank, Affine, Automorphism, Equation, QuadPart,
    WeightedEquation, ZwTransform,
};
pub use lct::{lct_cusp, pair_wall_report, wall, WallReport, WallVerdict};
pub use normalize::{normalize, NormalForm};
pub use parse::{fmt_monomial, parse_polynomial, Exponents, MPoly};
