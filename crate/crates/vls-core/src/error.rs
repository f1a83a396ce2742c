use mssc_kernel::MsscError;
use thiserror::Error;

/// Errors raised by the landscape-search engine and its plug-ins.
#[derive(Debug, Error)]
pub enum VlsError {
    #[error(transparent)]
    Kernel(#[from] MsscError),
    #[error("formulation {id} is not registered")]
    UnknownFormulation { id: usize },
    #[error("formulation registry must contain at least one formulation")]
    EmptyRegistry,
    #[error("cluster count must be at least 1")]
    InvalidClusterCount,
    #[error("shake power bounds require min <= max (got {min} > {max})")]
    InvalidPowerBounds { min: u32, max: u32 },
    #[error("expected {expected} radii for powers {min}..={max}, found {found}")]
    RadiiLengthMismatch {
        expected: usize,
        found: usize,
        min: u32,
        max: u32,
    },
    #[error("radii must be nonnegative and strictly increasing")]
    NonMonotoneRadii,
    #[error("shake power {power} outside [{min}, {max}]")]
    ShakePowerOutOfRange { power: u32, min: u32, max: u32 },
    #[error("neighborhood at power {power} admits no candidate")]
    DegenerateNeighborhood { power: u32 },
    #[error("cannot pad a solution on an empty sample")]
    PadOnEmptySample,
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}
