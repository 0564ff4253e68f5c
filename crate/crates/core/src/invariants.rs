//! Graph invariants computed two ways: by walking subgraphs directly, and by
//! counting increasing `G`-connected trees and forests.
//!
//! The tree routes rest on the fiber structure in [`crate::tree_map`]:
//!
//! * `η^G(t)`, the connected spanning subgraphs counted by edges, is the sum
//!   over increasing `G`-connected trees `R` of `∏ [(1+t)^|J(v,R) ∩ G| - 1]`.
//! * Up to the sign `(-1)^(n-q)`, the coefficient of `x^q` in the chromatic
//!   polynomial counts increasing `G`-connected forests with `q` components.
//! * The same holds for `p_λ` in `X_G` (forests whose block sizes are `λ`) and
//!   for `p_π` in `Y_G` (forests whose blocks are `π`).

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::graph::{Edge, EdgeSet, Graph, Vertex, VertexSet, MAX_VERTICES};
use crate::limits::Limits;
use crate::partition::set_partitions;
use crate::poly::IntPolynomial;
use crate::power_sum::{PExpansionX, PExpansionY};
use crate::subgraphs::{edge_subsets, spanning_subgraphs};
use crate::tree::increasing_trees_with;
use crate::tree_map::fiber_edge_sets;

/// `η^G(t)` by walking every spanning subgraph.
pub fn eta_bruteforce(graph: &Graph) -> Result<IntPolynomial> {
    eta_bruteforce_with(graph, &Limits::default())
}

pub fn eta_bruteforce_with(graph: &Graph, limits: &Limits) -> Result<IntPolynomial> {
    graph.require_connected()?;
    let mut by_size = vec![0u64; graph.edge_count() + 1];
    for q in spanning_subgraphs(graph, limits)?.filter(Graph::is_connected) {
        by_size[q.edge_count()] += 1;
    }
    Ok(IntPolynomial::new(
        by_size.into_iter().map(BigInt::from).collect(),
    ))
}

/// `η^G(t)` as a sum over increasing `G`-connected trees.
pub fn eta_via_trees(graph: &Graph) -> Result<IntPolynomial> {
    eta_via_trees_with(graph, &Limits::default())
}

pub fn eta_via_trees_with(graph: &Graph, limits: &Limits) -> Result<IntPolynomial> {
    graph.require_connected()?;
    let one_plus_t = IntPolynomial::from_i64s(&[1, 1]);
    let mut total = IntPolynomial::zero();
    for tree in increasing_trees_with(graph.vertices(), limits)? {
        let sets = fiber_edge_sets(graph, &tree)?;
        if sets.values().any(|e| e.is_empty()) {
            continue;
        }
        let term: IntPolynomial = sets
            .values()
            .map(|e| &one_plus_t.pow(e.len() as u32) - &IntPolynomial::one())
            .product();
        total = &total + &term;
    }
    Ok(total)
}

/// Chromatic polynomial from the subgraph expansion `Σ_Q (-1)^|Q| x^c(Q)`.
pub fn chromatic_by_subgraph_expansion(graph: &Graph) -> Result<IntPolynomial> {
    chromatic_by_subgraph_expansion_with(graph, &Limits::default())
}

pub fn chromatic_by_subgraph_expansion_with(
    graph: &Graph,
    limits: &Limits,
) -> Result<IntPolynomial> {
    let mut by_components = vec![0i64; graph.vertex_count() + 1];
    for q in spanning_subgraphs(graph, limits)? {
        let sign = if q.edge_count() % 2 == 0 { 1 } else { -1 };
        by_components[q.component_count()] += sign;
    }
    Ok(IntPolynomial::new(
        by_components.into_iter().map(BigInt::from).collect(),
    ))
}

/// Chromatic polynomial by deletion–contraction, memoized on the graph.
///
/// Contraction merges the larger endpoint into the smaller one and drops the
/// parallel edges this creates.
pub fn chromatic_by_deletion_contraction(graph: &Graph) -> IntPolynomial {
    let mut memo = HashMap::new();
    deletion_contraction(*graph, &mut memo)
}

fn deletion_contraction(graph: Graph, memo: &mut HashMap<Graph, IntPolynomial>) -> IntPolynomial {
    let Some(e) = graph.edges().min() else {
        return IntPolynomial::monomial(BigInt::one(), graph.vertex_count());
    };
    if let Some(p) = memo.get(&graph) {
        return p.clone();
    }
    let mut rest = graph.edges();
    rest.remove(e);
    let deleted = Graph::new(graph.vertices(), rest).expect("subset of edges");
    let contracted = contract(&graph, e);
    let p = &deletion_contraction(deleted, memo) - &deletion_contraction(contracted, memo);
    memo.insert(graph, p.clone());
    p
}

fn contract(graph: &Graph, e: Edge) -> Graph {
    let (keep, gone) = (e.lo(), e.hi());
    let edges: EdgeSet = graph
        .edges()
        .iter()
        .filter(|&f| f != e)
        .map(|f| {
            let redirect = |v: Vertex| if v == gone { keep } else { v };
            (redirect(f.lo()), redirect(f.hi()))
        })
        .filter(|(a, b)| a != b)
        .map(|(a, b)| Edge::new(a, b).expect("a != b"))
        .collect();
    Graph::new(graph.vertices().without(gone), edges).expect("endpoints stay in the vertex set")
}

/// Memoized number of increasing `G|_S`-connected trees for vertex subsets `S`.
///
/// An increasing tree on `S` is its minimum `r` with subtrees hanging off it.
/// Those subtrees split `S - {r}` into blocks; each block's subtree is rooted
/// at the block minimum, must itself be an increasing `G|_B`-connected tree,
/// and the child's `J` set is `link(r, B)`, which meets `G` exactly when `G`
/// has an edge from `r` into `B`. So the count for `S` is a sum over set
/// partitions of `S - {r}` of products of per-block counts.
pub struct TreeCounts {
    adjacency: [u32; MAX_VERTICES + 1],
    trees: HashMap<u32, u128>,
    hanging: HashMap<(u8, u32), u128>,
}

impl TreeCounts {
    pub fn new(graph: &Graph) -> Self {
        TreeCounts {
            adjacency: graph.adjacency(),
            trees: HashMap::new(),
            hanging: HashMap::new(),
        }
    }

    /// Number of increasing `G|_S`-connected trees on `S`. One for `|S| <= 1`.
    pub fn trees_on(&mut self, set: VertexSet) -> u128 {
        if set.len() <= 1 {
            return 1;
        }
        if let Some(&c) = self.trees.get(&set.bits()) {
            return c;
        }
        let root = set.min().expect("nonempty");
        let count = self.hang(root, set.without(root));
        self.trees.insert(set.bits(), count);
        count
    }

    /// Ways to split `rest` into blocks, each joined to `root` by an edge of
    /// `G` and carrying an increasing connected tree.
    fn hang(&mut self, root: Vertex, rest: VertexSet) -> u128 {
        if rest.is_empty() {
            return 1;
        }
        let key = (root.index() as u8, rest.bits());
        if let Some(&c) = self.hanging.get(&key) {
            return c;
        }
        let first = rest.min().expect("nonempty");
        let others = rest.without(first);
        let mut total = 0u128;
        for extra in others.subsets() {
            let block = extra.union(VertexSet::singleton(first));
            if self.adjacency[root.index()] & block.bits() == 0 {
                continue;
            }
            let inside = self.trees_on(block);
            if inside == 0 {
                continue;
            }
            total += inside * self.hang(root, rest.difference(block));
        }
        self.hanging.insert(key, total);
        total
    }
}

/// Number of increasing `G`-connected trees on `V(G)`.
pub fn count_increasing_g_connected_trees(graph: &Graph) -> u128 {
    TreeCounts::new(graph).trees_on(graph.vertices())
}

/// `F_q`: increasing `G`-connected forests with `q` components, for `q = 0..=n`.
pub fn forest_counts_by_components(graph: &Graph) -> Result<Vec<u128>> {
    Limits::default().check_vertices(graph.vertex_count())?;
    let mut counts = TreeCounts::new(graph);
    let mut memo: HashMap<u32, Vec<u128>> = HashMap::new();
    Ok(forests_by_components(
        graph.vertices(),
        &mut counts,
        &mut memo,
    ))
}

// Forests on `set` by component count: pick the block holding the minimum,
// then recurse on what is left.
fn forests_by_components(
    set: VertexSet,
    counts: &mut TreeCounts,
    memo: &mut HashMap<u32, Vec<u128>>,
) -> Vec<u128> {
    if set.is_empty() {
        return vec![1];
    }
    if let Some(v) = memo.get(&set.bits()) {
        return v.clone();
    }
    let first = set.min().expect("nonempty");
    let mut out = vec![0u128; set.len() + 1];
    for extra in set.without(first).subsets() {
        let block = extra.union(VertexSet::singleton(first));
        let trees = counts.trees_on(block);
        if trees == 0 {
            continue;
        }
        for (q, &rest) in forests_by_components(set.difference(block), counts, memo)
            .iter()
            .enumerate()
        {
            out[q + 1] += trees * rest;
        }
    }
    memo.insert(set.bits(), out.clone());
    out
}

fn signed(magnitude: u128, negative: bool) -> BigInt {
    let value = BigInt::from(magnitude);
    if negative {
        -value
    } else {
        value
    }
}

/// Chromatic polynomial with the coefficient of `x^q` set to
/// `(-1)^(n-q) F_q` from the increasing forest counts.
pub fn chromatic_coeffs_via_forests(graph: &Graph) -> Result<IntPolynomial> {
    let n = graph.vertex_count();
    let counts = forest_counts_by_components(graph)?;
    Ok(IntPolynomial::new(
        counts
            .into_iter()
            .enumerate()
            .map(|(q, f)| signed(f, (n - q) % 2 == 1))
            .collect(),
    ))
}

/// `Y_G` in the power-sum basis: the coefficient of `p_π` is
/// `(-1)^(n-ℓ(π))` times the number of increasing `G`-connected forests with
/// component partition `π`, which is the product of per-block tree counts.
pub fn csf_y_via_forests(graph: &Graph) -> Result<PExpansionY> {
    Limits::default().check_vertices(graph.vertex_count())?;
    let n = graph.vertex_count();
    let mut counts = TreeCounts::new(graph);
    let mut out = PExpansionY::new();
    for pi in set_partitions(graph.vertices()) {
        let mut product = 1u128;
        for &block in pi.blocks() {
            product *= counts.trees_on(block);
            if product == 0 {
                break;
            }
        }
        if product != 0 {
            let negative = (n - pi.len()) % 2 == 1;
            out.add_term(pi, signed(product, negative));
        }
    }
    Ok(out)
}

/// `Y_G = Σ_Q (-1)^|Q| p_{s(Q)}` by walking every spanning subgraph.
pub fn csf_y_oracle(graph: &Graph) -> Result<PExpansionY> {
    csf_y_oracle_with(graph, &Limits::default())
}

pub fn csf_y_oracle_with(graph: &Graph, limits: &Limits) -> Result<PExpansionY> {
    limits.check_subset_edges(graph.edge_count())?;
    let mut tally: HashMap<Vec<u32>, i64> = HashMap::new();
    for edges in edge_subsets(graph.edges()) {
        let q = Graph::new(graph.vertices(), edges).expect("subgraph");
        let key: Vec<u32> = q.component_sets().iter().map(|b| b.bits()).collect();
        *tally.entry(key).or_default() += if edges.len() % 2 == 0 { 1 } else { -1 };
    }
    let mut out = PExpansionY::new();
    for (key, c) in tally {
        let blocks = key.into_iter().map(VertexSet::from_bits).collect();
        let pi =
            crate::partition::SetPartition::new(blocks).expect("components partition the vertices");
        out.add_term(pi, BigInt::from(c));
    }
    Ok(out)
}

/// `X_G` in the power-sum basis, from [`csf_y_via_forests`] grouped by block sizes.
pub fn csf_x_via_forests(graph: &Graph) -> Result<PExpansionX> {
    Ok(csf_y_via_forests(graph)?.collapse_by_shape())
}

/// `X_G` from the subgraph expansion, grouped by block sizes.
pub fn csf_x_oracle(graph: &Graph) -> Result<PExpansionX> {
    Ok(csf_y_oracle(graph)?.collapse_by_shape())
}

/// `η^G(-1)`, which equals `(-1)^(n-1)` times the number of increasing
/// `G`-connected trees.
pub fn eta_at_minus_one(eta: &IntPolynomial) -> BigInt {
    eta.eval(&-BigInt::one())
}

/// `|coeff|`, a convenience for Whitney-style counts.
pub fn abs_coeff(poly: &IntPolynomial, degree: usize) -> BigInt {
    let c = poly.coeff(degree);
    if c < BigInt::zero() {
        -c
    } else {
        c
    }
}
