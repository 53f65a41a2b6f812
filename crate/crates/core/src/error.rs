use thiserror::Error;

use crate::presentation::Witness;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("table entry out of range: {0}")]
    OutOfRange(String),
    #[error("multiplication is not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),
    #[error("element {0} is not a two-sided identity")]
    BadIdentity(usize),
    #[error("size limit exceeded: {requested} elements requested, cap is {cap}")]
    SizeLimitExceeded { requested: usize, cap: usize },

    #[error("identity law fails at act element {0}")]
    IdentityLawFails(usize),
    #[error("act associativity fails: a={0}, m={1}, n={2}")]
    AssociativityFails(usize, usize, usize),
    #[error("acts are over different base monoids")]
    BaseMismatch,
    #[error("partition is not closed under the action")]
    NotACongruence,

    #[error("set does not generate the monoid")]
    NotMonoidGeneratingSet,
    #[error("set does not generate the act: {0}")]
    NotGenerating(String),
    #[error("not a presentation of the target act")]
    NotAPresentation,
    #[error("presentation verification failed: {0}")]
    VerificationFailed(Box<Witness>),

    #[error("subset is not a submonoid")]
    NotSubmonoid,
    #[error("complement of the submonoid is not an ideal")]
    ComplementNotIdeal,
    #[error("identity element must belong to U")]
    IdentityNotInU,
    #[error("element {0} is not a left zero")]
    NotLeftZero(usize),
    #[error("connectedness hypothesis fails for map {theta:?} at generator {x}")]
    HypothesisFails { theta: Vec<usize>, x: usize },

    #[error("{0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}
