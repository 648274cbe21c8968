//! Dichromatic numbers and dicolourings of simple digraphs.
//!
//! - [`digraph`]: the graph type, neighbourhoods, condensation, joins, I/O.
//! - [`solver`]: exact χ⃗, χ, ω, α, and verification of dicolourings.
//! - [`patterns`]: named small digraphs, embedding search, hero recognition.
//! - [`constructions`]: shift graphs and the two shift-digraph families.
//! - [`decomposition`]: nice sets, closed tournaments and the broom-free colourer.

pub mod budget;
pub mod constructions;
pub mod decomposition;
pub mod digraph;
pub mod patterns;
pub mod solver;

pub use budget::Budget;
pub use digraph::{Digraph, GraphError, VertexSet};
