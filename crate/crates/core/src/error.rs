use thiserror::Error;

/// Everything that can go wrong in this crate.
///
/// Variants split into two families: input errors (syntax and degree
/// bookkeeping of user supplied polynomials) and mathematical rejections
/// (a precondition of an operation does not hold). [`Error::is_input_error`]
/// tells them apart; the CLI maps them to different exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {position} near `{token}`: {message}")]
    Syntax {
        position: usize,
        token: String,
        message: String,
    },
    #[error("monomial {monomial} has weighted degree {found}, expected {expected}")]
    WeightedDegree {
        monomial: String,
        found: u64,
        expected: u64,
    },
    #[error("monomial {monomial} has degree {degree} in (z, w); at most 2 is allowed")]
    ZwDegree { monomial: String, degree: u32 },
    #[error("the equation is identically zero")]
    ZeroEquation,

    #[error("operation is undefined on the zero form")]
    ZeroForm,
    #[error("gcd of two zero forms is undefined")]
    BothZero,
    #[error("matrix is singular (determinant 0)")]
    SingularMatrix,
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("{what} must satisfy {requirement} (got {value})")]
    InvalidParameter {
        what: &'static str,
        requirement: &'static str,
        value: String,
    },
    #[error("{0} is a square in Q; no proper quadratic extension exists")]
    SquareDiscriminant(String),
    #[error("quadratic part has rank {rank}; normalization requires a rank-2 quadratic form in (z, w)")]
    RankDeficient { rank: u8 },

    #[error("polygon is degenerate (zero area)")]
    DegeneratePolygon,
    #[error("origin is not in the interior of the polygon")]
    OriginNotInterior,
    #[error("fan is not the face fan of a Fano polygon: {0}")]
    NonFanoFan(String),
    #[error("cone generators are linearly dependent")]
    DependentGenerators,
    #[error("vector {0} is not primitive")]
    NonPrimitive(String),
    #[error("Q-Gorenstein deformation dimension of 1/{r}(1,{s}) is outside the supported family")]
    UnsupportedSingularity { r: u64, s: u64 },
    #[error("a = {a} is outside the hypothesis a = 3 or a >= 5")]
    OutsideHypothesis { a: u64 },
    #[error("verification failed: {0}")]
    VerificationFailed(String),
}

impl Error {
    /// True for malformed input (bad syntax or wrong degrees), false for
    /// rejected mathematical preconditions.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. }
                | Error::WeightedDegree { .. }
                | Error::ZwDegree { .. }
                | Error::ZeroEquation
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
