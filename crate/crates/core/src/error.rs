use thiserror::Error;

/// Error type shared by every module of the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed spec: {0}")]
    MalformedSpec(String),

    /// A finite multiplication table failed a group axiom. The message
    /// names the failing law and the offending indices.
    #[error("group axiom failure: {0}")]
    GroupAxiom(String),

    #[error("{0} is not prime")]
    NonPrime(u64),

    /// An operation left the model's carrier window. Silent truncation
    /// would corrupt measure identities, so this is always a hard error.
    #[error("window overflow: {0}")]
    WindowOverflow(String),

    #[error("empty set: {0}")]
    EmptySet(String),

    /// Law or operation does not apply to the given model.
    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("bound exceeded: {0}")]
    BoundExceeded(String),

    #[error("operation requires an exact model: {0}")]
    NotExact(String),

    #[error("infeasible: {0}")]
    Infeasible(String),
}

pub type Result<T> = std::result::Result<T, Error>;
