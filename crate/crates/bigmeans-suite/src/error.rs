use mssc_kernel::MsscError;
use thiserror::Error;
use vls_core::VlsError;

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error(transparent)]
    Vls(#[from] VlsError),
    #[error(transparent)]
    Kernel(#[from] MsscError),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("all {workers} workers failed; first failure: {first}")]
    AllWorkersFailed { workers: u32, first: String },
}
