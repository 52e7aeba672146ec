//! F2 simplicial cohomology, exact coboundary expansion and cocycle testers.
//!
//! Complexes always contain the empty face, so cohomology is reduced and
//! `B^0 = {0, 1}`. Cochains are bit vectors over the canonical face order of
//! each dimension.

pub mod applications;
pub mod cochain;
pub mod cohomology;
pub mod complex;
pub mod error;
pub mod expansion;
pub mod io;
pub mod linalg;
mod scan;
pub mod tester;

pub use applications::Graph;
pub use cochain::{boundary, coboundary, Cochain};
pub use complex::{Complex, Face, Vertex};
pub use error::{Error, Result};
pub use expansion::{epsilon, epsilon_graph_cheeger, mu, ExpansionResult, MuResult};
pub use linalg::{BitVector, Rational};
pub use tester::{TestMode, TesterReport};

/// Default cap on the size of any exhaustive enumeration.
pub const DEFAULT_BUDGET: u64 = 1 << 24;
