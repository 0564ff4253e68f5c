//! Increasing trees and the connected subgraphs that map to them.
//!
//! Every connected graph `G` on a totally ordered vertex set is assigned an
//! increasing tree ([`tree_map::increasing_tree_of`]) by splitting off the
//! smallest vertex and recursing into the components of what remains. The
//! graphs sharing a tree form a product of nonempty power sets, which turns
//! several graph invariants into sums over increasing trees and forests:
//!
//! * [`invariants`]: the connected-subgraph polynomial, the chromatic
//!   polynomial, and the chromatic symmetric functions `X_G` and `Y_G` in the
//!   power-sum basis, each next to an independent subgraph-expansion route;
//! * [`broken_circuits`]: breaks of spanning trees and the bijection between
//!   increasing `G`-connected trees and broken-circuit-free spanning trees.
//!
//! Graphs live on vertices `1..=16`; the exhaustive routes are further bounded
//! by [`Limits`].

pub mod broken_circuits;
pub mod cli;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod json;
pub mod limits;
pub mod partition;
pub mod poly;
pub mod power_sum;
pub mod selfcheck;
pub mod subgraphs;
pub mod tree;
pub mod tree_map;

pub use error::{Error, Result};
pub use graph::{link, Edge, EdgeSet, Graph, Vertex, VertexSet};
pub use limits::Limits;
pub use partition::{IntegerPartition, SetPartition};
pub use poly::IntPolynomial;
pub use power_sum::{PExpansionX, PExpansionY};
pub use tree::{RootedForest, RootedTree};
pub use tree_map::increasing_tree_of;
