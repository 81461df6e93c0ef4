use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("rational function is not series-expandable: denominator vanishes at the origin")]
    NotExpandable,
    #[error("singular system: determinant polynomial is identically zero")]
    SingularSystem,
    #[error("series coefficient at t^{order} has x-degree {degree}, above the length bound")]
    DegreeExceeded { order: usize, degree: usize },
    #[error("x -> 0 limit does not exist under the maxstat substitution")]
    SubstitutionDegenerate,
    #[error("permutation does not attain the maximum: element at position {position} sits in a singleton factor")]
    NotMaximal { position: usize },
    #[error("input does not avoid the pattern: position {position} matches")]
    NotAvoider { position: usize },
    #[error("wall is not stable: rows {lower} and {upper} share seam {seam}")]
    NotStable { lower: usize, upper: usize, seam: u32 },
    #[error("binary word has a singleton run at position {position}")]
    HasSingleton { position: usize },
    #[error("enumeration bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
