use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("alphabet mismatch: expected [{expected}], found [{found}]")]
    AlphabetMismatch { expected: String, found: String },

    #[error("generator index {index} out of range for an alphabet of {len} generators")]
    GeneratorOutOfRange { index: usize, len: usize },

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("word is not a palindrome: {0}")]
    NotPalindrome(String),

    #[error("invalid group definition: {0}")]
    GroupDefinition(String),

    #[error("element does not belong to this group: {0}")]
    HandleMismatch(String),

    #[error("operation requires {expected}, got {found}")]
    WrongGroupKind { expected: &'static str, found: String },

    #[error("the palindromic elements do not generate the group ({reached} of {order} elements reached)")]
    NotGenerated { reached: usize, order: usize },

    #[error("word has nonzero exponent sums {0:?}; it is not in the derived subgroup")]
    NotInDerivedSubgroup(Vec<i64>),

    #[error("element {0} is not a product of commutators")]
    NotAProductOfCommutators(String),

    #[error("group is abelian; every relation reverses to a relation")]
    AbelianGroup,

    #[error("no reversal-asymmetric relation of length at most {budget}")]
    BudgetExhausted { budget: usize },

    #[error("invalid relation witness: {0}")]
    InvalidWitness(String),

    #[error("reverse of the constructed word does not evaluate to the identity")]
    ReverseNotTrivial,

    #[error("no valid shift found after {retries} retries")]
    NoValidShift { retries: usize },

    #[error("top group has no infinite-order generator")]
    NoInfiniteOrderGenerator,

    #[error("top group has no generators")]
    NoTopGenerators,

    #[error("construction emitted {count} factors, above its bound {bound}")]
    BoundExceeded { count: usize, bound: usize },

    #[error("verification failed: {0}")]
    Verification(#[from] VerificationFailure),

    #[error("{0} is not constructed by this library")]
    ExternalConstruction(&'static str),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

/// Why a factor list failed verification.
#[derive(Debug, Clone, PartialEq, Eq, Error, serde::Serialize, serde::Deserialize)]
#[serde(tag = "reason")]
pub enum VerificationFailure {
    #[error("factor {index} is not a palindrome")]
    NotPalindrome { index: usize },
    #[error("factor {index} is over the wrong alphabet")]
    AlphabetMismatch { index: usize },
    #[error("product of the factors does not equal the target")]
    ProductMismatch,
    #[error("factor {index} could not be evaluated: {message}")]
    Evaluation { index: usize, message: String },
}
