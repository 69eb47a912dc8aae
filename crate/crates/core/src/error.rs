use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("weight {0:?} is not weakly decreasing")]
    NotDominant(Vec<i32>),

    #[error("rank mismatch: {left:?} vs {right:?}")]
    RankMismatch { left: Vec<usize>, right: Vec<usize> },

    #[error("expected a genuine representation, found multiplicity {multiplicity} on {weight}")]
    NegativeMultiplicity { weight: String, multiplicity: i64 },

    #[error("torus character is not symmetric: maximal weight {0:?} is not dominant")]
    NotSymmetric(Vec<i32>),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("cohomology of {summand} (grading {grading:?}) appears in degrees {degrees:?}; the pushed-down complex is not minimal")]
    MixedDegrees {
        summand: String,
        grading: Vec<usize>,
        degrees: Vec<usize>,
    },

    #[error("block {multidegree} has {size} monomials, above the limit of {limit}; reduce the degree bound")]
    BlockTooLarge {
        multidegree: String,
        size: usize,
        limit: usize,
    },

    #[error("no term-level cancellation reproduces the target complex")]
    NoMatching,
}

pub type Result<T> = std::result::Result<T, Error>;
