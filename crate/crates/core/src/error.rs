use thiserror::Error;

/// Errors raised by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate atom name `{0}`")]
    DuplicateAtom(String),
    #[error("an algebra needs at least one atom")]
    NoAtoms,
    #[error("{0} atoms exceed the supported maximum of {max}", max = crate::algebra::MAX_ATOMS)]
    TooManyAtoms(usize),
    #[error("unknown atom `{0}`")]
    UnknownAtom(String),
    #[error("element {0:#b} is not an element of this algebra")]
    ForeignElement(u32),
    #[error("missing second operand for a binary operation")]
    MissingOperand,
    #[error("exhaustive check limited to {limit} atoms, got {atoms}")]
    OutsideExhaustiveScope { atoms: usize, limit: usize },
    #[error("family lacks the finite intersection property: meet of {sub_meet:?} is zero")]
    FipViolation { sub_meet: Vec<String> },
    #[error("expected a nonzero element")]
    ZeroElement,
    #[error("empty set of regions")]
    EmptySet,
    #[error("not a G-representative: {0}")]
    NotRepresentative(String),
    #[error("not an abstractive set: {0}")]
    NotAbstractive(String),
    #[error("chain is not descending at index {index}")]
    NotDescending { index: usize },
    #[error("interval lower bound {lower} is not below upper bound {upper}")]
    EmptyInterval { lower: String, upper: String },
    #[error("period must be positive, got {0}")]
    NonPositivePeriod(String),
    #[error("tail pattern must lie inside (0, {0})")]
    PatternOutsidePeriod(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
