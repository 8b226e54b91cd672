//! Graph-colouring workbench for acyclic, star and injective colourings on
//! H-free graph classes.
//!
//! The crate bundles colouring verifiers, an exact backtracking engine,
//! polynomial-time injective colouring algorithms for small forbidden
//! linear forests, hardness-reduction gadget generators whose forced-colour
//! claims are machine checked, and a complexity classifier for H-free
//! graphs.

pub mod classify;
pub mod colouring;
pub mod engine;
pub mod error;
pub mod graph;
pub mod injective;
pub mod random;
pub mod reductions;
pub mod recognize;
pub mod verify;

pub use error::{Error, Result};
pub use colouring::{Colouring, EdgeColouring, PropertyKind};
pub use graph::{Graph, Multigraph, NamedGraph};
pub use verify::{verify, verify_edge, Check, Violation, ViolationKind};
