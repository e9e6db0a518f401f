//! Exact classification of K-stability for degree-`2a` hypersurfaces in the
//! weighted projective space P(1,1,a,a).
//!
//! A hypersurface `q(z,w) + f z + h w + g = 0` is K-semistable (polystable)
//! exactly when its quadratic part has rank 2 and, after completing to the
//! normal form `zw + g̃(x,y) = 0`, the binary form `g̃ ≠ 0` is GIT semistable
//! (polystable). It is never K-stable.
//!
//! * [`exactalg`]: rationals, one quadratic extension, binary forms,
//!   squarefree decomposition.
//! * [`gitforms`]: GIT classes of binary forms from root multiplicities.
//! * [`wps`]: parsing, normalization, K-verdicts, log canonical thresholds.
//! * [`toriclat`]: the toric surface `zw = x^a y^a` (fan, polar polygon,
//!   Hilbert basis, singularities, deformation counts).
//! * [`batch`]: bulk classification, parallel with the `parallel` feature.

pub mod batch;
pub mod cli;
pub mod error;
pub mod exactalg;
pub mod gitforms;
mod par;
pub mod toriclat;
pub mod wps;

pub use error::{Error, Result};
