//! Broken circuits, breaks, and the bijection between increasing
//! `G`-connected trees and broken-circuit-free spanning trees.
//!
//! Edges are ordered lexicographically. A broken circuit is a circuit of `G`
//! with its smallest edge removed. A break of a spanning tree `T ⊆ G` is an
//! edge `e ∈ G - T` that is the smallest edge of the circuit it closes in `T`;
//! breaks of `T` correspond one to one with the broken circuits inside `T`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeSet, Graph, Vertex, VertexSet, MAX_VERTICES};
use crate::tree::{RootedForest, RootedTree};
use crate::tree_map::increasing_tree_of;

/// Edges on the unique path between `from` and `to` in a forest, or `None`
/// when they lie in different components.
pub fn forest_path(forest: &Graph, from: Vertex, to: Vertex) -> Option<EdgeSet> {
    let adj = forest.adjacency();
    let mut came_from = [0u8; MAX_VERTICES + 1];
    let mut stack = vec![from];
    let mut seen = VertexSet::singleton(from);
    while let Some(u) = stack.pop() {
        if u == to {
            let mut path = EdgeSet::EMPTY;
            let mut at = to;
            while at != from {
                let prev = Vertex::new(came_from[at.index()] as usize).expect("recorded");
                path.insert(Edge::new(prev, at).expect("distinct"));
                at = prev;
            }
            return Some(path);
        }
        for w in VertexSet::from_bits(adj[u.index()]).difference(seen).iter() {
            seen.insert(w);
            came_from[w.index()] = u.index() as u8;
            stack.push(w);
        }
    }
    None
}

/// The unique circuit of `T ∪ {e}`, including `e`.
pub fn circuit_closed_by(tree: &Graph, e: Edge) -> Result<EdgeSet> {
    if tree.has_edge(e) {
        return Err(Error::EdgeInTree(e.lo().index(), e.hi().index()));
    }
    for v in [e.lo(), e.hi()] {
        if !tree.vertices().contains(v) {
            return Err(Error::UnknownVertex(v.index()));
        }
    }
    if !tree.is_tree() {
        return Err(Error::NotATree);
    }
    let mut circuit = forest_path(tree, e.lo(), e.hi()).expect("trees are connected");
    circuit.insert(e);
    Ok(circuit)
}

fn check_spanning_subtree(tree: &Graph, graph: &Graph) -> Result<()> {
    if !tree.is_subgraph_of(graph) {
        return Err(Error::NotSubgraph);
    }
    if !tree.is_tree() {
        return Err(Error::NotATree);
    }
    Ok(())
}

/// Breaks of the spanning tree `tree` in `graph`, straight from the definition.
pub fn breaks_direct(tree: &Graph, graph: &Graph) -> Result<EdgeSet> {
    check_spanning_subtree(tree, graph)?;
    let mut breaks = EdgeSet::EMPTY;
    for e in graph.edges().difference(tree.edges()).iter() {
        if circuit_closed_by(tree, e)?.min() == Some(e) {
            breaks.insert(e);
        }
    }
    Ok(breaks)
}

/// For a spanning tree `T`, the increasing tree `R` it maps to and, for each
/// non-root `v`, the single edge `e(v)` of `J(v, R) ∩ T`.
pub fn tree_edge_assignment(tree: &Graph) -> Result<(RootedTree, BTreeMap<Vertex, Edge>)> {
    if !tree.is_tree() {
        return Err(Error::NotATree);
    }
    let rooted = increasing_tree_of(tree)?;
    let mut assignment = BTreeMap::new();
    for v in rooted.non_root_vertices().iter() {
        let hits = rooted.j_set(v)?.intersection(tree.edges());
        if hits.len() != 1 {
            return Err(Error::NotATree);
        }
        assignment.insert(v, hits.min().expect("one element"));
    }
    Ok((rooted, assignment))
}

/// Breaks of `tree` computed through its increasing tree `R`: the union over
/// non-root `v` of the edges of `J(v, R) ∩ G` smaller than `e(v)`.
pub fn breaks_via_theorem(tree: &Graph, graph: &Graph) -> Result<EdgeSet> {
    check_spanning_subtree(tree, graph)?;
    let (rooted, assignment) = tree_edge_assignment(tree)?;
    let mut breaks = EdgeSet::EMPTY;
    for (v, chosen) in assignment {
        let candidates = rooted.j_set(v)?.intersection(graph.edges());
        breaks = breaks.union(candidates.below(chosen));
    }
    Ok(breaks)
}

/// Whether `sub ⊆ graph` contains no broken circuit of `graph`.
///
/// Checked as: `sub` is a forest, and no edge `e ∈ graph - sub` joining two
/// vertices of one component of `sub` is smaller than every edge of the
/// `sub`-path between its endpoints. Such an `e` would make that path a broken
/// circuit, and any broken circuit inside a forest is such a path.
pub fn is_broken_circuit_free(sub: &Graph, graph: &Graph) -> Result<bool> {
    if !sub.is_subgraph_of(graph) {
        return Err(Error::NotSubgraph);
    }
    if !sub.is_forest() {
        return Ok(false);
    }
    for e in graph.edges().difference(sub.edges()).iter() {
        if let Some(path) = forest_path(sub, e.lo(), e.hi()) {
            if path.min().is_some_and(|m| e < m) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `f(R) = ⋃ min(J(v, R) ∩ G)` over non-root `v`: a broken-circuit-free
/// spanning tree of `graph` whose increasing tree is `R`.
///
/// `None` when `tree` is not increasing or not `G`-connected.
pub fn bijection_f(tree: &RootedTree, graph: &Graph) -> Result<Option<Graph>> {
    match bijection_f_strict(tree, graph) {
        Err(Error::NotIncreasing | Error::NotGConnected(_)) => Ok(None),
        other => other.map(Some),
    }
}

pub fn bijection_f_strict(tree: &RootedTree, graph: &Graph) -> Result<Graph> {
    if graph.vertices() != tree.vertices() {
        return Err(Error::VertexSetMismatch);
    }
    if !tree.is_increasing() {
        return Err(Error::NotIncreasing);
    }
    let mut edges = EdgeSet::EMPTY;
    for v in tree.non_root_vertices().iter() {
        let smallest = tree
            .j_set(v)?
            .intersection(graph.edges())
            .min()
            .ok_or(Error::NotGConnected(v.index()))?;
        edges.insert(smallest);
    }
    graph.spanning_subgraph(edges)
}

/// The forest version of [`bijection_f`], applied component by component.
pub fn bijection_f_forest(forest: &RootedForest, graph: &Graph) -> Result<Option<Graph>> {
    if forest.ground() != graph.vertices() {
        return Err(Error::VertexSetMismatch);
    }
    let mut edges = EdgeSet::EMPTY;
    for component in forest.components() {
        match bijection_f(component, &graph.restrict(component.vertices()))? {
            Some(image) => edges = edges.union(image.edges()),
            None => return Ok(None),
        }
    }
    graph.spanning_subgraph(edges).map(Some)
}

/// Inverse of [`bijection_f_forest`]: the increasing tree of each component.
pub fn forest_preimage(sub: &Graph) -> Result<RootedForest> {
    let components = sub
        .component_sets()
        .into_iter()
        .map(|block| increasing_tree_of(&sub.restrict(block)))
        .collect::<Result<Vec<_>>>()?;
    RootedForest::new(components)
}

/// Broken-circuit-free spanning subforests of `graph`, optionally only those
/// with `q` components, in lexicographic order of their sorted edge lists.
///
/// Being broken circuit free passes to subsets, so the search extends edge
/// lists in increasing order and prunes as soon as a broken circuit appears.
pub fn enumerate_bcf_subforests(
    graph: &Graph,
    q: Option<usize>,
) -> Result<impl Iterator<Item = Graph>> {
    let mut found = Vec::new();
    let edges: Vec<Edge> = graph.edges().iter().collect();
    extend_bcf(graph, &edges, 0, EdgeSet::EMPTY, &mut found)?;
    let n = graph.vertex_count();
    Ok(found
        .into_iter()
        .filter(move |f| q.is_none_or(|q| n - f.edge_count() == q)))
}

fn extend_bcf(
    graph: &Graph,
    edges: &[Edge],
    start: usize,
    current: EdgeSet,
    found: &mut Vec<Graph>,
) -> Result<()> {
    let sub = graph.spanning_subgraph(current)?;
    if !is_broken_circuit_free(&sub, graph)? {
        return Ok(());
    }
    found.push(sub);
    for (i, &e) in edges.iter().enumerate().skip(start) {
        let mut next = current;
        next.insert(e);
        extend_bcf(graph, edges, i + 1, next, found)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, pairs: &[(usize, usize)]) -> Graph {
        Graph::from_pairs(n, pairs).unwrap()
    }

    fn es(pairs: &[(usize, usize)]) -> EdgeSet {
        EdgeSet::from_pairs(pairs).unwrap()
    }

    fn e(u: usize, v: usize) -> Edge {
        Edge::from_indices(u, v).unwrap()
    }

    fn tree(root: usize, links: &[(usize, usize)]) -> RootedTree {
        RootedTree::from_parent_pairs(root, links).unwrap()
    }

    #[test]
    fn circuit_examples() {
        assert_eq!(
            circuit_closed_by(&g(3, &[(1, 2), (2, 3)]), e(1, 3)).unwrap(),
            es(&[(1, 2), (2, 3), (1, 3)])
        );
        assert_eq!(
            circuit_closed_by(&Graph::path(4).unwrap(), e(1, 4)).unwrap(),
            es(&[(1, 2), (2, 3), (3, 4), (1, 4)])
        );
        assert_eq!(
            circuit_closed_by(&g(3, &[(1, 2), (1, 3)]), e(2, 3)).unwrap(),
            es(&[(1, 2), (1, 3), (2, 3)])
        );
        assert_eq!(
            circuit_closed_by(&g(3, &[(1, 2), (1, 3)]), e(1, 2)),
            Err(Error::EdgeInTree(1, 2))
        );
        assert_eq!(
            circuit_closed_by(&g(3, &[(1, 2)]), e(2, 3)),
            Err(Error::NotATree)
        );
    }

    #[test]
    fn breaks_examples() {
        let k3 = Graph::complete(3).unwrap();
        for (t, expected) in [
            (g(3, &[(1, 2), (2, 3)]), EdgeSet::EMPTY),
            (g(3, &[(1, 3), (2, 3)]), es(&[(1, 2)])),
            (g(3, &[(1, 2), (1, 3)]), EdgeSet::EMPTY),
        ] {
            assert_eq!(breaks_direct(&t, &k3).unwrap(), expected);
            assert_eq!(breaks_via_theorem(&t, &k3).unwrap(), expected);
        }
        assert_eq!(breaks_direct(&k3, &k3), Err(Error::NotATree));
        assert_eq!(
            breaks_direct(&g(3, &[(1, 3), (2, 3)]), &Graph::path(3).unwrap()),
            Err(Error::NotSubgraph)
        );
    }

    #[test]
    fn j_set_trace_on_triangle() {
        let t = g(3, &[(1, 3), (2, 3)]);
        let (rooted, assignment) = tree_edge_assignment(&t).unwrap();
        assert_eq!(rooted, tree(1, &[(2, 1), (3, 2)]));
        let v = |i| Vertex::new(i).unwrap();
        assert_eq!(assignment[&v(2)], e(1, 3));
        assert_eq!(assignment[&v(3)], e(2, 3));
    }

    #[test]
    fn bcf_examples() {
        let k3 = Graph::complete(3).unwrap();
        assert!(is_broken_circuit_free(&g(3, &[(1, 2), (1, 3)]), &k3).unwrap());
        assert!(!is_broken_circuit_free(&g(3, &[(1, 3), (2, 3)]), &k3).unwrap());
        assert!(is_broken_circuit_free(&Graph::empty(3).unwrap(), &k3).unwrap());
        assert!(!is_broken_circuit_free(&k3, &k3).unwrap());
        assert_eq!(
            is_broken_circuit_free(&k3, &Graph::path(3).unwrap()),
            Err(Error::NotSubgraph)
        );
    }

    #[test]
    fn bijection_examples() {
        let k3 = Graph::complete(3).unwrap();
        let path = tree(1, &[(2, 1), (3, 2)]);
        let star = tree(1, &[(2, 1), (3, 1)]);
        assert_eq!(
            bijection_f(&path, &k3).unwrap().unwrap().edges(),
            es(&[(1, 2), (2, 3)])
        );
        assert_eq!(
            bijection_f(&star, &k3).unwrap().unwrap().edges(),
            es(&[(1, 2), (1, 3)])
        );
        let p3 = Graph::path(3).unwrap();
        assert_eq!(bijection_f(&star, &p3).unwrap(), None);
        assert_eq!(bijection_f_strict(&star, &p3), Err(Error::NotGConnected(3)));
        assert_eq!(
            bijection_f(&star, &Graph::complete(4).unwrap()),
            Err(Error::VertexSetMismatch)
        );
    }

    #[test]
    fn bijection_images_on_complete_graphs_have_no_breaks() {
        for n in 1..=5 {
            let kn = Graph::complete(n).unwrap();
            for r in crate::tree::increasing_trees(kn.vertices()).unwrap() {
                let t = bijection_f(&r, &kn).unwrap().unwrap();
                assert!(breaks_direct(&t, &kn).unwrap().is_empty());
                assert_eq!(increasing_tree_of(&t).unwrap(), r);
            }
        }
    }

    #[test]
    fn bcf_enumeration_examples() {
        let k3 = Graph::complete(3).unwrap();
        let trees: Vec<EdgeSet> = enumerate_bcf_subforests(&k3, Some(1))
            .unwrap()
            .map(|t| t.edges())
            .collect();
        assert_eq!(trees, vec![es(&[(1, 2), (1, 3)]), es(&[(1, 2), (2, 3)])]);
        let empty: Vec<EdgeSet> = enumerate_bcf_subforests(&k3, Some(3))
            .unwrap()
            .map(|t| t.edges())
            .collect();
        assert_eq!(empty, vec![EdgeSet::EMPTY]);
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(enumerate_bcf_subforests(&k4, Some(1)).unwrap().count(), 6);
        let all: Vec<EdgeSet> = enumerate_bcf_subforests(&k4, None)
            .unwrap()
            .map(|t| t.edges())
            .collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        // |x^4 - 6x^3 + 11x^2 - 6x| coefficients sum to 24.
        assert_eq!(all.len(), 24);
    }

    #[test]
    fn forest_bijection_round_trip() {
        let g = g(4, &[(1, 2), (1, 3), (2, 3), (3, 4)]);
        for forest in crate::tree::increasing_g_connected_forests(&g, None).unwrap() {
            let image = bijection_f_forest(&forest, &g).unwrap().unwrap();
            assert!(is_broken_circuit_free(&image, &g).unwrap());
            assert_eq!(forest_preimage(&image).unwrap(), forest);
        }
    }
}
