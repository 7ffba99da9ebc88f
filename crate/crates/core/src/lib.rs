//! Hoffman graphs and graphs with smallest adjacency eigenvalue a little
//! below −2.
//!
//! The crate is organised bottom-up:
//!
//! - [`graph`]: simple graphs, named families, induced patterns, line-graph
//!   recognition, canonical labelling and graph6;
//! - [`spectra`]: smallest eigenvalues (Householder tridiagonalisation plus
//!   Sturm bisection), exact characteristic polynomials and real-root
//!   isolation for the algebraic constants α₀ = −1−√2, α₁ and β;
//! - [`hoffman`]: Hoffman graphs, their B-matrices, sums, clique extensions
//!   and the catalog of special Hoffman graphs;
//! - [`constructions`]: the certified regular families with λ_min in
//!   `[−1−√2, −2)` and `[α₁, −1−√2)`;
//! - [`search`]: the branch-and-prune enumeration of cubic graphs with
//!   λ_min in `[β, −2)`;
//! - [`verify`]: the acceptance checks shared by the CLI and the test suite.

pub mod constructions;
pub mod error;
pub mod graph;
pub mod hoffman;
pub mod search;
pub mod spectra;
pub mod verify;

pub use error::{Error, Result};
pub use graph::SimpleGraph;
pub use hoffman::HoffmanGraph;
