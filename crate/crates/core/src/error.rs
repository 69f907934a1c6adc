use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{line}:{column}: {error}")]
    At {
        line: usize,
        column: usize,
        error: Box<Error>,
    },

    #[error("invalid identifier `{0}`")]
    InvalidIdentifier(String),

    #[error("`{0}` is reserved and cannot be used as a letter")]
    ReservedIdentifier(String),

    #[error("letter `{0}` is not in the declared alphabet")]
    UnknownLetter(String),

    #[error("malformed forest: {0}")]
    MalformedForest(String),

    #[error("invalid subforest marking: {0}")]
    InvalidMarking(String),

    #[error("the reduced coproduct is not defined on the unit forest")]
    UnitForest,

    #[error("the zero element has no filtration degree")]
    ZeroElement,

    #[error("letter `{0}` has no assigned value")]
    UnassignedLetter(String),

    #[error("element specialized at weight {element} but the model has weight {model}")]
    WeightMismatch { element: String, model: String },

    #[error("{0}")]
    Model(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
