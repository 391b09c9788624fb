//! Sierpiński graphs S(n,k) and covering codes on them: construction,
//! verification, explicit optimal codes and an exact branch-and-bound solver.
//!
//! ```
//! use sierpinski_codes::{constructions, verify, CodeKind, SierpinskiGraph};
//!
//! let g = SierpinskiGraph::new(3, 3).unwrap();
//! let code = constructions::identifying_code(&g).unwrap();
//! assert_eq!(code.len(), 18);
//! assert!(verify::verify(&g, code.members(), CodeKind::Identifying).valid);
//! ```

pub mod bitset;
pub mod code;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod solver;
pub mod verify;

pub use bitset::VertexSet;
pub use code::{Code, CodeKind};
pub use error::{Error, Result};
pub use graph::{Adjacency, ExportFormat, GraphConfig, SierpinskiGraph, SimpleGraph, VertexId, VertexLabel};
pub use solver::{SolveOptions, SolveResult, SolveStatus};
pub use verify::{VerificationReport, Witness};
