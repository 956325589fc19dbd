//! Laplacian spectra of k-token graphs.
//!
//! The k-token graph F_k(G) has the k-subsets of V(G) as vertices, two
//! subsets being adjacent when their symmetric difference is an edge of G.
//! This crate builds token graphs for the usual graph families, computes
//! Laplacian spectra with in-house eigensolvers, and implements the fast
//! routes for F_2(C_n): regular partitions with exact quotient matrices,
//! cyclic voltage-graph lifts whose base matrices split the problem into n
//! tridiagonal eigensolves, the even-n over-lift assembly, eigenvector
//! reconstruction, Gershgorin bounds, and asymptotic closed forms.
//!
//! Everything is deterministic and pure: graphs, matrices, and spectra are
//! immutable after construction, so values can be shared freely across
//! threads.

pub mod cyclift;
pub mod error;
pub mod graph;
pub mod linalg;
pub mod partitions;
pub mod report;
pub mod token;
pub mod verify;

pub use error::{Error, Result};
