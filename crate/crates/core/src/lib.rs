//! Exact Alon-Tarsi numbers of small graphs.
//!
//! Two independent routes compute the same quantity: capped expansion of the
//! graph polynomial `∏ (x_u - x_v)` ([`poly`]), and enumeration of
//! orientations with their Eulerian subdigraph census ([`orient`]). Around them
//! sit the graph constructions for line, subdivision and total graphs
//! ([`graph`]), brute-force coloring oracles ([`coloring`]), Erdős–Faber–Lovász
//! configurations ([`efl`]), and verification campaigns ([`verify`]).
//!
//! Searches are exact and guarded; a guard violation is an error, never a
//! truncated answer. With the default `parallel` feature the inner loops run on
//! rayon, and results are identical to the sequential path.

pub mod certificate;
pub mod coloring;
pub mod efl;
pub mod error;
pub mod exec;
pub mod graph;
pub mod orient;
pub mod poly;
pub mod verify;

pub use certificate::{AtnCertificate, Witness};
pub use error::{Error, Result};
pub use exec::{Exec, Limits};
pub use graph::Graph;
