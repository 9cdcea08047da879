//! Enumeration of vertex separators between two terminals of an undirected
//! graph.
//!
//! * [`fpt::enumerate_small_minimal`] lists every minimal s,t-separator of
//!   size at most `k`, with delay polynomial in `n` times `4^k`.
//! * [`ranked::ranked_separators`] lists s,t-separators by non-decreasing
//!   size, and [`ranked::minimum_separators`] lists the minimum ones.
//! * [`important::enumerate_important`] lists the important separators of
//!   size at most `k`.
//! * [`oracle`] holds exhaustive reference implementations for testing.
//!
//! Enumerators stream into a [`SeparatorSink`] and are also available by
//! name through [`strategy::Registry`].

pub mod error;
pub mod fpt;
pub mod graph;
pub mod important;
pub mod mincut;
pub mod oracle;
pub mod ranked;
pub mod sink;
pub mod strategy;

pub use error::{Error, Result};
pub use graph::{Graph, Separator, Terminals, Vertex, VertexSet};
pub use sink::{Collect, Limit, SeparatorSink};
pub use strategy::{EnumParams, Registry, Strategy};
