use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    BadPerm(String),

    #[error("generators have mismatched degrees ({0} vs {1})")]
    DegreeMismatch(usize, usize),

    #[error("group too large: order exceeds hard cap {cap}")]
    TooLarge { cap: u64 },

    #[error("{what} infeasible: {size} exceeds cap {cap}")]
    Infeasible { what: String, size: u64, cap: u64 },

    #[error("not a subgroup member: {0}")]
    NotInGroup(String),

    #[error("not a normal subgroup")]
    NotNormal,

    #[error("group is not abelian")]
    NotAbelian,

    #[error("group is not a p-group for p = {0}")]
    NotPGroup(u64),

    #[error("invalid construction parameters: {0}")]
    BadParams(String),

    #[error("construction validation failed: {0}")]
    ConstructionDefect(String),

    #[error("homomorphism validation failed: {0}")]
    BadHom(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("internal defect: {0}")]
    Internal(String),
}

impl Error {
    pub fn infeasible(what: impl Into<String>, size: u64, cap: u64) -> Error {
        Error::Infeasible {
            what: what.into(),
            size,
            cap,
        }
    }

    /// Cap-style errors become SKIPPED report entries rather than failures.
    pub fn is_infeasible(&self) -> bool {
        matches!(self, Error::Infeasible { .. } | Error::TooLarge { .. })
    }
}
