//! The guide's chapters, attached as documentation so that every code block
//! in the book compiles and runs under `cargo test --doc`.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/landscapes.md")]
pub mod landscapes {}

#[doc = include_str!("../../../book/src/neighborhoods.md")]
pub mod neighborhoods {}

#[doc = include_str!("../../../book/src/search-and-change.md")]
pub mod search_and_change {}

#[doc = include_str!("../../../book/src/acceptance-rules.md")]
pub mod acceptance_rules {}

#[doc = include_str!("../../../book/src/engine.md")]
pub mod engine {}

#[doc = include_str!("../../../book/src/clustering-kernel.md")]
pub mod clustering_kernel {}

#[doc = include_str!("../../../book/src/restart-family.md")]
pub mod restart_family {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli_guide {}
