use thiserror::Error;

use crate::ring::Elem;

/// Errors raised by constructors and operations across the crate.
///
/// Checkers that *decide* a property never return an error for a negative
/// verdict; they report it with a witness. Errors are reserved for malformed
/// input and violated preconditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed spec: {0}")]
    MalformedSpec(String),
    #[error("ring tables violate {axiom} at {witness:?}")]
    AxiomViolation { axiom: String, witness: Vec<Elem> },
    #[error("size {size} exceeds the cap of {cap}")]
    SizeCapExceeded { size: usize, cap: usize },
    #[error("not a ring automorphism: {reason} (witness {witness:?})")]
    NotAutomorphism { reason: String, witness: (Elem, Elem) },
    #[error("operands live over different rings")]
    RingMismatch,
    #[error("group coordinate overflow")]
    Overflow,
    #[error("series live over different twist systems")]
    TwistMismatch,
    #[error("duplicate exponent {0} in series terms")]
    DuplicateKey(String),
    #[error("twist system is not normalized (sigma_1 = id, tau(1,x) = tau(x,1) = 1)")]
    NotNormalized,
    #[error("operation undefined on the zero series")]
    ZeroSeries,
    #[error("operation undefined on the zero element")]
    ZeroElement,
    #[error("enumeration bounds too large: {0}")]
    BoundsTooLarge(String),
    #[error("base ring is not left fusible (witness {0})")]
    NotFusibleRing(String),
    #[error("twist is not sigma-compatible with the base ring (witness {0})")]
    NotSigmaCompatible(String),
    #[error("precondition failed: {0}")]
    PreconditionFail(String),
    #[error("derivation step failed direct evaluation: {0}")]
    TraceMismatch(String),
    #[error("no ideal K satisfies the annihilator sum identity: {0}")]
    NoK(String),
    #[error("hypothesis fails: {0}")]
    HypothesisFails(String),
}

pub type Result<T> = std::result::Result<T, Error>;
