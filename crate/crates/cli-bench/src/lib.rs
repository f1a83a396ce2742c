//! Command-line entry points for the sample-restart clustering stack, plus
//! the tiny-instance suite the oracle verification runs on.
//!
//! The binary exposes three subcommands:
//!
//! * `cluster` — run one algorithm on a dataset file and persist a result
//!   document, a label sidecar, and a per-iteration history CSV,
//! * `bench` — compare an algorithm against best-of-K full-data restarts on
//!   a synthetic Gaussian mixture, over several seeds,
//! * `verify` — replay the bundled tiny instances against the exhaustive
//!   oracle and exit nonzero on any violation.
//!
//! Exit codes: 0 success, 1 failed verification or runtime failure, 2 usage.

mod bench;
pub mod book;
mod cli;
mod cluster;
pub mod tiny;
mod verify;

pub use cli::{default_out_path, run, RangeArg, EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, OUT_DIR_ENV};
