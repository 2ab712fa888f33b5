use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum FusionError {
    #[error("invalid rank n = {0} (need n >= 2)")]
    InvalidRank(usize),
    #[error("partition {partition} does not fit the {rows}x{cols} box")]
    PartitionOutsideBox {
        partition: String,
        rows: usize,
        cols: usize,
    },
    #[error("affine weight {weight} is not a level-{level} weight of su({n})")]
    InvalidWeight {
        weight: String,
        n: usize,
        level: usize,
    },
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("operator levels do not match: {left} vs {right}")]
    LevelMismatch { left: usize, right: usize },
    #[error("feasibility guard exceeded: {0}")]
    Infeasible(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, FusionError>;
