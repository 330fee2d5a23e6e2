//! Exact domination, irredundance and `k`-isolation on small graphs.
//!
//! The crate computes the domination number γ, the irredundance number ir
//! and the `k`-isolation numbers ι_k exactly, builds the private-neighbour
//! partition induced by a maximal irredundant set, turns it into certified
//! `k`-isolating sets, and generates the known extremal constructions
//! together with their witness sets.

pub mod construct;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod partition;
pub mod props;
pub mod solve;
pub mod vset;

pub use error::{Error, Result};
pub use graph::{
    classify, closed_neighborhood, enumerate_k_cliques, remove_closed_neighborhood, CliqueList,
    Graph, GraphBuilder, GraphClass,
};
pub use graph6::{encode_graph6, parse_graph6};
pub use vset::{VertexSet, MAX_ORDER};
