//! Exact graph-invariant laboratory for upper bounds on the chromatic number.
//!
//! * [`graph`]: bitset graphs, graph6 I/O, seeded G(n, p) and labeled enumeration.
//! * [`invariants`]: exact invariants, each with a checkable witness.
//! * [`bounds`]: exact evaluation of the chromatic upper bounds.
//! * [`harness`]: batch verification and scans over graph streams.

pub mod bounds;
pub mod error;
pub mod graph;
pub mod harness;
pub mod invariants;
pub mod rational;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
