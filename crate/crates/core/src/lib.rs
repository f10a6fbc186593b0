//! Exact mutual-visibility analysis for graphs on at most 64 vertices.
//!
//! A set `S` of vertices is a mutual-visibility set when every two members
//! are joined by a shortest path whose interior avoids `S`. The crate counts
//! such sets by size (the visibility polynomial), computes the largest one
//! exactly, and evaluates the closed-form upper bounds available for
//! diameter-2 Moore graphs.

pub mod bounds;
pub mod error;
pub mod graph;
pub mod reproduce;
pub mod solver;
pub mod visibility;

pub use error::{Error, Result};
pub use graph::{Graph, GraphProfile, VertexSet};
