use thiserror::Error;

use crate::witness::Witness;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("table is not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),
    #[error("index {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("table has {found} entries where {expected} were expected")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("element {0} is not an identity")]
    NotIdentity(usize),
    #[error("size exceeds the cap of {0}")]
    CapExceeded(usize),
    #[error("element {0} is not idempotent")]
    NotIdempotent(usize),
    #[error("J-class {0} is not regular")]
    NotRegular(usize),
    #[error("subset is not a normal subgroup of the chosen maximal subgroup")]
    NotNormal,
    #[error("invalid GGM coordinates: {0}")]
    InvalidCoordinates(String),
    #[error("map is not a morphism: ({0}*{1}) is not sent to the product of the images")]
    NotMorphism(usize, usize),
    #[error("morphism is not surjective: {0} has no preimage")]
    NotSurjective(usize),
    #[error("semigroup is not a monoid")]
    NotMonoid,
    #[error("subset is not closed under multiplication: {0}*{1}")]
    NotClosed(usize, usize),
    #[error("partition is not a congruence: {0}")]
    NotCongruence(String),
    #[error("variety `{0}` needs a parameter")]
    MissingParameter(String),
    #[error("invalid field `{0}`")]
    InvalidField(String),
    #[error("invalid variety id `{0}`")]
    InvalidVariety(String),
    #[error("arithmetic over {0} is not available")]
    UnsupportedField(String),
    #[error("automaton is not synchronizing")]
    NotSynchronizing,
    #[error("transition monoid is not in DS")]
    NotInDs(Witness),
    #[error("factor {0} is not trim")]
    NotTrim(usize),
    #[error("invalid automaton: {0}")]
    InvalidAutomaton(String),
    #[error("word of length {0} is too long to enumerate")]
    WordTooLong(usize),
    #[error("refused: {0}")]
    Refusal(Witness),
    #[error("no largest congruence in the family (found {0} maximal ones)")]
    NoLargest(usize),
    #[error("could not split module of dimension {0}")]
    Undecided(usize),
    #[error("unknown semigroup `{0}`")]
    UnknownSemigroup(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
