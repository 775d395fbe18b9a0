use thiserror::Error;

/// Errors surfaced across the library. Search outcomes that are merely
/// uncertain are not errors; they live in `IsoVerdict` / `Verdict`.
#[derive(Debug, Error)]
pub enum AlgError {
    #[error("modulus {0} is not prime")]
    CompositeModulus(u64),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("structure constants are not associative at basis triple ({0},{1},{2})")]
    NotAssociative(usize, usize, usize),
    #[error("unit law fails at basis element {0}")]
    UnitLawFails(usize),
    #[error("relation ideal does not kill all paths of length {0} (length cap reached)")]
    NotAdmissibleWithinCap(usize),
    #[error("bad relation: {0}")]
    BadRelation(String),
    #[error("map is not an algebra automorphism: {0}")]
    NotAutomorphism(String),
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("operation requires a quiver presentation")]
    NotQuiverPresented,
    #[error("eAe is not Frobenius for this idempotent: D(Ae) is not isomorphic to eA")]
    NotCornerFrobenius,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("search inconclusive: {0}")]
    Inconclusive(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
