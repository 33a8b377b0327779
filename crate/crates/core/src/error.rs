/// Errors shared by parsing, decomposition, and the solvers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// The input violated its Pt-free promise. `path` is an induced path on
    /// `t` vertices witnessing the violation (0-based vertex ids).
    #[error("graph is not P{t}-free, witness path {path:?}")]
    NotPtFree { t: usize, path: Vec<u32> },

    /// A structural guarantee failed at runtime. On valid Pt-free inputs this
    /// indicates a bug, not a user error.
    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("arithmetic overflow while summing weights")]
    Overflow,

    #[error("generator gave up after {attempts} rejected samples")]
    GeneratorGaveUp { attempts: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit status used by the CLI: 1 usage/parse, 2 not-Pt-free,
    /// 3 invariant violation.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NotPtFree { .. } => 2,
            Error::InvariantViolation(_) => 3,
            _ => 1,
        }
    }
}
