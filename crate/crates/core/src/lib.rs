//! Exact spectral computations on small graphs.
//!
//! The adjacency matrix `A`, signless Laplacian `Q`, Laplacian `L` and
//! normalized Laplacian `NL` of a graph are built over big rationals (with
//! square roots handled symbolically for `NL`). On top of them the crate
//! checks the identities that hold for biregular graphs, transports
//! `charpoly(A)` to `charpoly(Q)`, counts spanning trees, searches for
//! polynomial relations `f(X) = g(Y)` and `X^r = f(Y)`, and scans every
//! small graph for counterexamples to conjectured characterizations.
//!
//! ```
//! use biregular::graph::make_named;
//! use biregular::trees::spanning_trees_matrixtree;
//!
//! let k4 = make_named("complete", &[4]).unwrap();
//! assert_eq!(spanning_trees_matrixtree(&k4), 16.into());
//! ```

pub mod error;
pub mod exact;
pub mod graph;
pub mod harness;
pub mod radical;
pub mod relations;
pub mod spectral;
pub mod trees;

pub use error::{Error, Result};
