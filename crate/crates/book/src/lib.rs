//! The guide's chapters, one module each, so `cargo test` runs their snippets.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/phases.md")]
pub mod phases {}
#[doc = include_str!("../../../book/src/group.md")]
pub mod group {}
#[doc = include_str!("../../../book/src/tensors.md")]
pub mod tensors {}
#[doc = include_str!("../../../book/src/projection.md")]
pub mod projection {}
#[doc = include_str!("../../../book/src/mbqc.md")]
pub mod mbqc {}
#[doc = include_str!("../../../book/src/lcs.md")]
pub mod lcs {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
#[doc = include_str!("../../../README.md")]
pub mod readme {}
