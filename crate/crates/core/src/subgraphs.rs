//! Exhaustive and sampled graph generation.

use rand::Rng;

use crate::error::Result;
use crate::graph::{complete_edges, EdgeSet, Graph, VertexSet};
use crate::limits::Limits;

/// Every subset of `edges`, starting from the empty set.
pub fn edge_subsets(edges: EdgeSet) -> impl Iterator<Item = EdgeSet> {
    let full = edges.bits();
    let mut next = Some(0u128);
    std::iter::from_fn(move || {
        let current = next?;
        next = if current == full {
            None
        } else {
            Some(current.wrapping_sub(full) & full)
        };
        Some(EdgeSet::from_bits(current))
    })
}

/// Every spanning subgraph of `graph`, refusing edge sets past the subset bound.
pub fn spanning_subgraphs(graph: &Graph, limits: &Limits) -> Result<impl Iterator<Item = Graph>> {
    limits.check_subset_edges(graph.edge_count())?;
    let graph = *graph;
    Ok(edge_subsets(graph.edges()).map(move |edges| {
        graph
            .spanning_subgraph(edges)
            .expect("subsets of a graph's edges are subgraphs")
    }))
}

/// Connected spanning subgraphs of `graph`.
pub fn connected_spanning_subgraphs(
    graph: &Graph,
    limits: &Limits,
) -> Result<impl Iterator<Item = Graph>> {
    Ok(spanning_subgraphs(graph, limits)?.filter(Graph::is_connected))
}

/// Every graph on `{1, ..., n}`, in order of the edge-set bit pattern.
pub fn all_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    spanning_subgraphs(&Graph::complete(n)?, &Limits::default())
}

pub fn connected_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    Ok(all_graphs(n)?.filter(Graph::is_connected))
}

/// Uniform random graph on `{1, ..., n}` conditioned on being connected.
pub fn random_connected_graph<R: Rng>(n: usize, rng: &mut R) -> Result<Graph> {
    let vertices = VertexSet::range(n)?;
    let all = complete_edges(vertices);
    loop {
        let edges: EdgeSet = all.iter().filter(|_| rng.random_bool(0.5)).collect();
        let g = Graph::new(vertices, edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
}
