use thiserror::Error;

/// Errors raised by constructors and operations whose preconditions fail.
///
/// Law checks never return these: a law that fails is reported inside a
/// [`Report`](crate::report::Report), not raised.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("universe label `{0}` appears more than once")]
    DuplicateLabel(String),
    #[error("universe of size {size} exceeds the configured cap of {cap}")]
    UniverseTooLarge { size: usize, cap: usize },
    #[error("universe must contain at least one element")]
    EmptyUniverse,
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("element index {index} is outside a universe of size {size}")]
    ElementOutOfRange { index: usize, size: usize },
    #[error("subsets belong to universes of different size")]
    UniverseMismatch,

    #[error("row `{row}` has {found} cells but the table has {expected} attributes")]
    RaggedRow { row: String, found: usize, expected: usize },
    #[error("unknown attribute `{0}`")]
    UnknownAttribute(String),
    #[error("attribute set must be nonempty")]
    EmptyAttributeSet,
    #[error("malformed input at {location}: {message}")]
    Malformed { location: String, message: String },

    #[error("relation is not an equivalence ({0} fails)")]
    NotEquivalence(&'static str),
    #[error("relation is not anti-serial: element `{0}` is in no neighbourhood")]
    NotAntiSerial(String),
    #[error("cover members must be nonempty")]
    EmptyCoverMember,
    #[error("element `{0}` is not covered by any member")]
    UncoveredElement(String),
    #[error("operation requires a proper cover (union of members = universe)")]
    ImproperCover,
    #[error("cover is not a base: {k1} ∩ {k2} has no member around element {x}")]
    NotABase { k1: String, k2: String, x: String },

    #[error("granular operator space axiom `{axiom}` fails at {witness}")]
    GosAxiom { axiom: &'static str, witness: String },
    #[error("granular neighbourhood of `{0}` is empty or undefined")]
    UndefinedGranule(String),
    #[error("partition does not cover the power set exactly")]
    NotAPartition,

    #[error("probability weights must be exact rationals like `1/4`, got `{0}`")]
    BadWeight(String),
    #[error("atom weights sum to {0}, expected exactly 1")]
    WeightsDoNotSumToOne(String),
    #[error("negative atom weight {0}")]
    NegativeWeight(String),
    #[error("atoms must partition the universe")]
    AtomsNotPartition,
    #[error("subset {0} is not an event of this probability space")]
    NotAnEvent(String),
    #[error("event family must be nonempty")]
    EmptyEventFamily,

    #[error("operation table is not total: expected {expected} entries, got {found}")]
    PartialTable { expected: usize, found: usize },
    #[error("Tarski axiom {axiom} fails at {witness}")]
    TarskiAxiom { axiom: &'static str, witness: String },
    #[error("family is not closed under {operation}: {witness}")]
    NotClosed { operation: &'static str, witness: String },
    #[error("algebra must have at least two elements")]
    TrivialAlgebra,
    #[error("enumeration of {required} candidates exceeds the budget of {budget}")]
    BudgetExceeded { required: u128, budget: u128 },
    #[error("map is not a semi-morphism: {0}")]
    NotSemiMorphism(String),

    #[error("relation is not a tolerance ({0} fails)")]
    NotTolerance(&'static str),
    #[error("set {0} is not a definable object")]
    NotDefinable(String),

    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Malformed {
            location: format!("line {} column {}", e.line(), e.column()),
            message: e.to_string(),
        }
    }
}
