//! The chapters of the guide, compiled as doc comments so that
//! `cargo test` runs every snippet.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/exact-arithmetic.md")]
pub mod exact_arithmetic {}

#[doc = include_str!("../../../book/src/graph-matrices.md")]
pub mod graph_matrices {}

#[doc = include_str!("../../../book/src/biregular.md")]
pub mod biregular_identities {}

#[doc = include_str!("../../../book/src/spanning-trees.md")]
pub mod spanning_trees {}

#[doc = include_str!("../../../book/src/relations.md")]
pub mod relations {}

#[doc = include_str!("../../../book/src/scanning.md")]
pub mod scanning {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
