use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum F2Error {
    #[error("form is not symmetric with zero diagonal")]
    NotSkew,
    #[error("form is not a nondegenerate symplectic form")]
    NotSymplectic,
    #[error("elimination met a self-pairing vector; the input is not a valid alternating form")]
    OddPivotStructure,
    #[error("commutation matrix has rank {rank}, which needs {} qubits, not {qubits}", rank / 2)]
    RankMismatch { rank: usize, qubits: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PauliError {
    #[error("site operators act on {left} and {right} qubits")]
    QubitMismatch { left: usize, right: usize },
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
}

impl PauliError {
    pub(crate) fn parse(column: usize, message: impl Into<String>) -> Self {
        PauliError::Parse { column, message: message.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("L = {0} is too small; need L >= {1}")]
    TooSmall(usize, usize),
    #[error("instance needs about {needed} bytes, over the budget of {budget} bytes")]
    MemoryBudget { needed: u64, budget: u64 },
    #[error("no closed formula for code {0}")]
    UnknownCode(u8),
    #[error("search space of 2^{bits} candidates exceeds the limit 2^{limit}")]
    SearchTooLarge { bits: u32, limit: u32 },
    #[error("code has no nontrivial logical operators at this size")]
    NoLogicals,
    #[error("relation lattice needs L divisible by {0}")]
    Embedding(usize),
    #[error("operator acts on {found} qubits per site, code has {expected}")]
    QubitMismatch { expected: usize, found: usize },
    #[error("ordered elimination is only defined for codes 0 to 4")]
    NoOrdering,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StringsError {
    #[error("anchors are not congruent cubes")]
    AnchorMismatch,
    #[error("operator is not a logical string segment")]
    NotSegment,
    #[error("no erasing move applies at site {0:?}")]
    Stuck([i64; 3]),
    #[error("no flat decomposition found")]
    NoFlatForm,
    #[error("width must be at least {0}")]
    Width(usize),
}
