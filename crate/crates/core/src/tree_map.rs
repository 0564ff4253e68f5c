//! The map from connected graphs to increasing trees and the structure of its fibers.
//!
//! [`increasing_tree_of`] repeatedly takes the smallest vertex `r` of the
//! current vertex set `S`, splits `S - {r}` into the components of `G|_{S-r}`
//! (the depth-first partition), hangs the smallest vertex of each block under
//! `r`, and recurses into every block with more than one vertex. The result is
//! always increasing and `G`-connected but need not be a subgraph of `G`.
//!
//! For an increasing tree `R` on `V(G)` with root `r`, the connected spanning
//! subgraphs `Q ⊆ G` with `increasing_tree_of(Q) == R` are exactly the unions
//! `⋃ E(v)` over non-root `v` of nonempty `E(v) ⊆ J(v, R) ∩ G`. The sets
//! `J(v, R)` are pairwise disjoint, so the fiber is a product of nonempty power
//! sets and has `∏ (2^|J(v,R) ∩ G| - 1)` members.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph, Vertex};
use crate::partition::SetPartition;
use crate::tree::RootedTree;

/// `s(G|_{V - {root}})` for a connected graph `G`.
pub fn depth_first_partition(graph: &Graph, root: Vertex) -> Result<SetPartition> {
    if !graph.vertices().contains(root) {
        return Err(Error::UnknownVertex(root.index()));
    }
    graph.require_connected()?;
    Ok(graph
        .restrict(graph.vertices().without(root))
        .components_partition())
}

/// The increasing `G`-connected tree assigned to a connected graph.
///
/// Works through an explicit stack of vertex subsets, so the depth of the
/// recursion never touches the call stack.
pub fn increasing_tree_of(graph: &Graph) -> Result<RootedTree> {
    graph.require_connected()?;
    let root = graph
        .vertices()
        .min()
        .expect("connected graphs are nonempty");
    let mut links = Vec::with_capacity(graph.vertex_count() - 1);
    let mut pending = vec![graph.vertices()];
    while let Some(set) = pending.pop() {
        let r = set.min().expect("pending sets are nonempty");
        for block in graph.restrict(set.without(r)).component_sets() {
            links.push((block.min().expect("components are nonempty"), r));
            if block.len() > 1 {
                pending.push(block);
            }
        }
    }
    RootedTree::new(root, &links)
}

/// `v ↦ J(v, R) ∩ G` for every non-root vertex `v`.
pub fn fiber_edge_sets(graph: &Graph, tree: &RootedTree) -> Result<BTreeMap<Vertex, EdgeSet>> {
    if graph.vertices() != tree.vertices() {
        return Err(Error::VertexSetMismatch);
    }
    tree.non_root_vertices()
        .iter()
        .map(|v| Ok((v, tree.j_set(v)?.intersection(graph.edges()))))
        .collect()
}

/// Why `tree` has an empty fiber over `graph`, if it does.
fn fiber_obstruction(tree: &RootedTree, sets: &BTreeMap<Vertex, EdgeSet>) -> Option<Error> {
    if !tree.is_increasing() {
        return Some(Error::NotIncreasing);
    }
    sets.iter()
        .find(|(_, e)| e.is_empty())
        .map(|(v, _)| Error::NotGConnected(v.index()))
}

/// Number of connected spanning subgraphs of `graph` that map to `tree`.
///
/// Zero when `tree` is not increasing or not `G`-connected; see
/// [`fiber_size_strict`] for the erroring variant.
pub fn fiber_size(graph: &Graph, tree: &RootedTree) -> Result<BigUint> {
    match fiber_size_strict(graph, tree) {
        Err(Error::NotIncreasing | Error::NotGConnected(_)) => Ok(BigUint::zero()),
        other => other,
    }
}

pub fn fiber_size_strict(graph: &Graph, tree: &RootedTree) -> Result<BigUint> {
    let sets = fiber_edge_sets(graph, tree)?;
    if let Some(err) = fiber_obstruction(tree, &sets) {
        return Err(err);
    }
    Ok(sets
        .values()
        .map(|e| (BigUint::one() << e.len()) - BigUint::one())
        .product())
}

/// Number of spanning trees of `graph` in the fiber of `tree`: one edge of
/// `J(v, R) ∩ G` per non-root `v`. Zero when the fiber is empty.
pub fn fiber_tree_count(graph: &Graph, tree: &RootedTree) -> Result<BigUint> {
    let sets = fiber_edge_sets(graph, tree)?;
    if fiber_obstruction(tree, &sets).is_some() {
        return Ok(BigUint::zero());
    }
    Ok(sets.values().map(|e| BigUint::from(e.len())).product())
}

/// Every `Q ⊆ G` with `increasing_tree_of(Q) == tree`, each exactly once.
///
/// Each non-root vertex contributes a nonempty subset of `J(v, R) ∩ G`, counted
/// in binary over those edges in lexicographic order (bit `i` is the `i`-th
/// smallest edge). Vertices are composed in increasing order with the
/// smallest vertex varying slowest. Yields nothing when the fiber is empty.
pub fn enumerate_fiber(graph: &Graph, tree: &RootedTree) -> Result<Fiber> {
    match enumerate_fiber_strict(graph, tree) {
        Err(Error::NotIncreasing | Error::NotGConnected(_)) => Ok(Fiber {
            graph: *graph,
            parts: Vec::new(),
            masks: Vec::new(),
            done: true,
        }),
        other => other,
    }
}

pub fn enumerate_fiber_strict(graph: &Graph, tree: &RootedTree) -> Result<Fiber> {
    let sets = fiber_edge_sets(graph, tree)?;
    if let Some(err) = fiber_obstruction(tree, &sets) {
        return Err(err);
    }
    let parts: Vec<EdgeSet> = sets.into_values().collect();
    Ok(Fiber {
        graph: *graph,
        masks: vec![1; parts.len()],
        parts,
        done: false,
    })
}

pub struct Fiber {
    graph: Graph,
    parts: Vec<EdgeSet>,
    masks: Vec<u64>,
    done: bool,
}

impl Iterator for Fiber {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.done {
            return None;
        }
        let edges = self
            .parts
            .iter()
            .zip(&self.masks)
            .fold(EdgeSet::EMPTY, |acc, (part, &mask)| {
                acc.union(part.select(mask))
            });
        self.done = true;
        for i in (0..self.parts.len()).rev() {
            let full = (1u64 << self.parts[i].len()) - 1;
            if self.masks[i] < full {
                self.masks[i] += 1;
                self.masks[i + 1..].fill(1);
                self.done = false;
                break;
            }
        }
        Some(
            self.graph
                .spanning_subgraph(edges)
                .expect("fiber members are subgraphs"),
        )
    }
}

/// For every vertex `v`, `G|_{des(v,R)}` is connected and, rooted at `v`, has
/// the same depth-first partition as `R|_{des(v,R)}`.
///
/// Returns `false` when the vertex sets differ or `tree` is not increasing.
/// For connected `graph` this agrees with `increasing_tree_of(graph) == tree`.
pub fn verify_characterization(graph: &Graph, tree: &RootedTree) -> bool {
    if graph.vertices() != tree.vertices() || !tree.is_increasing() {
        return false;
    }
    let tree_graph = tree.as_graph();
    tree.vertices().iter().all(|v| {
        let below = tree.descendants(v).expect("v is in the tree");
        let local = graph.restrict(below);
        if !local.is_connected() {
            return false;
        }
        let rest = below.without(v);
        local.restrict(rest).components_partition()
            == tree_graph.restrict(rest).components_partition()
    })
}

/// Every `J(v, R) ∩ G` is nonempty and together they cover every edge of `G`.
///
/// Returns `false` when the vertex sets differ or `tree` is not increasing.
pub fn has_fiber_cover(graph: &Graph, tree: &RootedTree) -> bool {
    if !tree.is_increasing() {
        return false;
    }
    let Ok(sets) = fiber_edge_sets(graph, tree) else {
        return false;
    };
    let covered = sets.values().fold(EdgeSet::EMPTY, |acc, &e| acc.union(e));
    sets.values().all(|e| !e.is_empty()) && covered == graph.edges()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;

    fn tree(root: usize, links: &[(usize, usize)]) -> RootedTree {
        RootedTree::from_parent_pairs(root, links).unwrap()
    }

    fn g(n: usize, pairs: &[(usize, usize)]) -> Graph {
        Graph::from_pairs(n, pairs).unwrap()
    }

    fn es(pairs: &[(usize, usize)]) -> EdgeSet {
        EdgeSet::from_pairs(pairs).unwrap()
    }

    fn v(i: usize) -> Vertex {
        Vertex::new(i).unwrap()
    }

    fn path3() -> RootedTree {
        tree(1, &[(2, 1), (3, 2)])
    }

    fn star3() -> RootedTree {
        tree(1, &[(2, 1), (3, 1)])
    }

    #[test]
    fn depth_first_partition_examples() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(
            depth_first_partition(&k4, v(1)).unwrap().to_string(),
            "{{2,3,4}}"
        );
        let p4 = Graph::path(4).unwrap();
        assert_eq!(
            depth_first_partition(&p4, v(1)).unwrap().to_string(),
            "{{2,3,4}}"
        );
        let star = g(4, &[(1, 2), (1, 3), (1, 4)]);
        assert_eq!(
            depth_first_partition(&star, v(1)).unwrap().to_string(),
            "{{2},{3},{4}}"
        );
        assert_eq!(
            depth_first_partition(&star, v(5)),
            Err(Error::UnknownVertex(5))
        );
        assert!(matches!(
            depth_first_partition(&Graph::empty(2).unwrap(), v(1)),
            Err(Error::Disconnected { .. })
        ));
    }

    #[test]
    fn k_examples() {
        assert_eq!(
            increasing_tree_of(&Graph::complete(3).unwrap()).unwrap(),
            path3()
        );
        assert_eq!(
            increasing_tree_of(&g(3, &[(1, 2), (1, 3)])).unwrap(),
            star3()
        );
        assert_eq!(
            increasing_tree_of(&Graph::empty(1).unwrap()).unwrap(),
            RootedTree::singleton(v(1))
        );
        assert!(matches!(
            increasing_tree_of(&g(3, &[(1, 2)])),
            Err(Error::Disconnected { .. })
        ));
        assert_eq!(
            increasing_tree_of(&Graph::empty(0).unwrap()),
            Err(Error::EmptyGraph)
        );
    }

    #[test]
    fn k_may_leave_the_graph() {
        // 1-3-2: the block {2,3} is rooted at 2, which hangs under 1.
        let g = g(3, &[(1, 3), (2, 3)]);
        let r = increasing_tree_of(&g).unwrap();
        assert_eq!(r, path3());
        assert!(!r.edges().is_subset(g.edges()));
    }

    #[test]
    fn fiber_edge_set_examples() {
        let k3 = Graph::complete(3).unwrap();
        let sets = fiber_edge_sets(&k3, &path3()).unwrap();
        assert_eq!(sets[&v(2)], es(&[(1, 2), (1, 3)]));
        assert_eq!(sets[&v(3)], es(&[(2, 3)]));
        let sets = fiber_edge_sets(&k3, &star3()).unwrap();
        assert_eq!(sets[&v(2)], es(&[(1, 2)]));
        assert_eq!(sets[&v(3)], es(&[(1, 3)]));
        let sets = fiber_edge_sets(&Graph::path(3).unwrap(), &star3()).unwrap();
        assert_eq!(sets[&v(2)], es(&[(1, 2)]));
        assert!(sets[&v(3)].is_empty());
    }

    #[test]
    fn fiber_size_examples() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(fiber_size(&k3, &path3()).unwrap(), BigUint::from(3u32));
        assert_eq!(fiber_size(&k3, &star3()).unwrap(), BigUint::from(1u32));
        let p3 = Graph::path(3).unwrap();
        assert_eq!(fiber_size(&p3, &star3()).unwrap(), BigUint::zero());
        assert_eq!(
            fiber_size_strict(&p3, &star3()),
            Err(Error::NotGConnected(3))
        );
        let down = tree(1, &[(3, 1), (2, 3)]);
        assert_eq!(fiber_size_strict(&k3, &down), Err(Error::NotIncreasing));
        assert_eq!(fiber_size(&k3, &down).unwrap(), BigUint::zero());
    }

    #[test]
    fn enumerate_fiber_examples() {
        let k3 = Graph::complete(3).unwrap();
        let members: Vec<EdgeSet> = enumerate_fiber(&k3, &path3())
            .unwrap()
            .map(|q| q.edges())
            .collect();
        assert_eq!(
            members,
            vec![
                es(&[(1, 2), (2, 3)]),
                es(&[(1, 3), (2, 3)]),
                es(&[(1, 2), (1, 3), (2, 3)])
            ]
        );
        let members: Vec<EdgeSet> = enumerate_fiber(&k3, &star3())
            .unwrap()
            .map(|q| q.edges())
            .collect();
        assert_eq!(members, vec![es(&[(1, 2), (1, 3)])]);
        let p3 = Graph::path(3).unwrap();
        assert_eq!(enumerate_fiber(&p3, &star3()).unwrap().count(), 0);
        assert!(enumerate_fiber_strict(&p3, &star3()).is_err());
    }

    #[test]
    fn single_vertex_fiber_is_the_graph_itself() {
        let g = Graph::empty(1).unwrap();
        let r = RootedTree::singleton(v(1));
        assert_eq!(fiber_size(&g, &r).unwrap(), BigUint::one());
        assert_eq!(
            enumerate_fiber(&g, &r).unwrap().collect::<Vec<_>>(),
            vec![g]
        );
    }

    #[test]
    fn characterization_examples() {
        let k3 = Graph::complete(3).unwrap();
        assert!(verify_characterization(&k3, &path3()));
        assert!(!verify_characterization(&k3, &star3()));
        assert!(verify_characterization(&g(3, &[(1, 2), (1, 3)]), &star3()));
        // R = 1 -> 3 -> 2 fits 13, 23 recursively but is not increasing.
        let down = tree(1, &[(3, 1), (2, 3)]);
        assert!(!verify_characterization(&g(3, &[(1, 3), (2, 3)]), &down));
        assert!(!verify_characterization(
            &Graph::complete(4).unwrap(),
            &path3()
        ));
    }

    #[test]
    fn fiber_cover_examples() {
        let k3 = Graph::complete(3).unwrap();
        assert!(has_fiber_cover(&k3, &path3()));
        assert!(!has_fiber_cover(&k3, &star3()));
        assert!(!has_fiber_cover(&Graph::path(3).unwrap(), &star3()));
    }

    #[test]
    fn k4_spanning_tree_counts_per_fiber() {
        let k4 = Graph::complete(4).unwrap();
        let mut counts: Vec<BigUint> = crate::tree::increasing_trees(VertexSet::range(4).unwrap())
            .unwrap()
            .map(|r| fiber_tree_count(&k4, &r).unwrap())
            .collect();
        counts.sort();
        let expected: Vec<BigUint> = [1u32, 2, 2, 2, 3, 6]
            .into_iter()
            .map(BigUint::from)
            .collect();
        assert_eq!(counts, expected);
    }
}
