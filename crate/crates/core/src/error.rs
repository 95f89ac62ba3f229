use thiserror::Error;

/// Everything that can go wrong in the core library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("function is not non-decreasing: {0}")]
    NonMonotone(String),
    #[error("constant function on the whole real line (its generalized inverse is degenerate)")]
    ConstantFunction,
    #[error("breakpoints are not strictly increasing inside the domain: {0}")]
    UnorderedBreakpoints(String),
    #[error("breakpoint limits disagree with the affine pieces: {0}")]
    AffineMismatch(String),
    #[error("interval is empty")]
    EmptyInterval,
    #[error("invalid interval: {0}")]
    InvalidInterval(String),
    #[error("the zero measure has no distribution function")]
    ZeroMeasure,
    #[error("anchor {0} lies outside the carrier")]
    AnchorOutsideCarrier(String),
    #[error("measure has atoms, so it is not absolutely continuous")]
    NotAbsolutelyContinuous,
    #[error("atom at {0} sits on a jump of the map; the pushforward depends on the version")]
    VersionAmbiguous(String),
    #[error("mass is pushed onto the boundary of the target carrier: {0}")]
    MassOnCarrierBoundary(String),
    #[error("carrier mismatch: {0}")]
    CarrierMismatch(String),
    #[error("composition is not defined as an a.e. class: {0}")]
    AmbiguousComposition(String),
    #[error("invalid measure: {0}")]
    InvalidMeasure(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("quantile function has a jump at {0}; no quantile density exists")]
    QfNotAbsolutelyContinuous(String),
    #[error("unknown law `{0}`")]
    UnknownLaw(String),
    #[error("cannot parse number `{0}`")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
