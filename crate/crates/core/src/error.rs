use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed scalar literal {0:?}")]
    MalformedScalar(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
    #[error("{0:?} is not an integer")]
    NotAnInteger(String),

    #[error("an algebra needs at least one atom")]
    NoAtoms,
    #[error("atom names must be nonempty")]
    EmptyAtomName,
    #[error("duplicate atom name {0:?}")]
    DuplicateAtom(String),
    #[error("algebras are limited to {max} atoms, got {got}")]
    TooManyAtoms { got: usize, max: usize },
    #[error("free algebra generator count {got} outside 1..={max}")]
    FreeGeneratorBounds { got: usize, max: usize },
    #[error("unknown atom {0:?}")]
    UnknownAtom(String),
    #[error("malformed element literal {0:?}")]
    MalformedElement(String),
    #[error("operands belong to different algebras")]
    AlgebraMismatch,
    #[error("{connective} expects {expected} operand(s), got {got}")]
    Arity {
        connective: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("idempotents for values {first} and {second} overlap")]
    NotOrthogonal { first: String, second: String },
    #[error("annihilator of an empty family is undefined")]
    EmptyGenerators,

    #[error("invalid step function: {0}")]
    InvalidSteps(String),
    #[error("scalar must be positive, got {0}")]
    NonPositiveScalar(String),
    #[error("argument must be nonnegative")]
    NegativeArgument,

    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("unbound generator x_{0}")]
    UnboundName(String),

    #[error("algebra with {elements} elements exceeds the exhaustive bound of {bound}")]
    TooLarge { elements: usize, bound: usize },
    #[error("no interpolant between {0} and {1}")]
    NoWitness(String, String),
    #[error("relation is not a de Vries proximity: {0}")]
    NotDeVries(String),
    #[error("pair ({0}, {1}) is not in the relation")]
    NotRelated(String, String),

    #[error("invalid de Vries morphism: {0}")]
    InvalidMorphism(String),
    #[error("morphism endpoints do not match")]
    EndpointMismatch,

    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Json(err.to_string())
    }
}
