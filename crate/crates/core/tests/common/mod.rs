//! Slow, definition-level reference implementations.
//!
//! These work on plain `(n, edge list)` pairs with vertices `1..=n` and avoid
//! the library's bitsets so that agreement means something.

#![allow(dead_code)]

use std::collections::BTreeMap;

use incrtree::{Graph, RootedTree};

pub type Edges = Vec<(usize, usize)>;

/// Edge list in lexicographic order.
pub fn plain(g: &Graph) -> (usize, Edges) {
    let n = g.vertices().max().map_or(0, |v| v.index());
    let edges = g
        .edges()
        .iter()
        .map(|e| (e.lo().index(), e.hi().index()))
        .collect();
    (n, edges)
}

pub fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_pairs(n, edges).expect("valid graph")
}

/// Every simple graph on `1..=n`, given as edge lists.
pub fn every_graph(n: usize) -> Vec<Graph> {
    let all: Edges = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << all.len())
        .map(|mask| graph(n, &select(&all, mask)))
        .collect()
}

pub fn select(edges: &[(usize, usize)], mask: u64) -> Edges {
    edges
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &e)| e)
        .collect()
}

/// Connected components of the subgraph induced on `vertices`, by breadth-first search.
pub fn components(vertices: &[usize], edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut seen: Vec<usize> = Vec::new();
    let mut out = Vec::new();
    for &start in vertices {
        if seen.contains(&start) {
            continue;
        }
        let mut comp = vec![start];
        seen.push(start);
        let mut i = 0;
        while i < comp.len() {
            let v = comp[i];
            i += 1;
            for &(a, b) in edges {
                let w = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    continue;
                };
                if vertices.contains(&w) && !seen.contains(&w) {
                    seen.push(w);
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub fn is_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let vs: Vec<usize> = (1..=n).collect();
    n > 0 && components(&vs, edges).len() == 1
}

/// The increasing tree of a connected graph, as `child -> parent`.
pub fn k_oracle(n: usize, edges: &[(usize, usize)]) -> BTreeMap<usize, usize> {
    let mut parent = BTreeMap::new();
    let vs: Vec<usize> = (1..=n).collect();
    split(&vs, edges, &mut parent);
    parent
}

fn split(set: &[usize], edges: &[(usize, usize)], parent: &mut BTreeMap<usize, usize>) {
    let root = set[0];
    let rest: Vec<usize> = set[1..].to_vec();
    for block in components(&rest, edges) {
        parent.insert(block[0], root);
        split(&block, edges, parent);
    }
}

pub fn parent_map(t: &RootedTree) -> BTreeMap<usize, usize> {
    t.non_root_vertices()
        .iter()
        .map(|v| (v.index(), t.parent(v).expect("non-root").index()))
        .collect()
}

/// Each vertex smaller than everything below it, checked by walking up from
/// every vertex.
pub fn is_increasing_oracle(parent: &BTreeMap<usize, usize>) -> bool {
    parent.keys().all(|&v| {
        let mut a = v;
        while let Some(&p) = parent.get(&a) {
            if p > v {
                return false;
            }
            a = p;
        }
        true
    })
}

/// Number of proper colourings with `x` colours.
pub fn proper_colourings(n: usize, edges: &[(usize, usize)], x: usize) -> u64 {
    if n == 0 {
        return 1;
    }
    if x == 0 {
        return 0;
    }
    let mut colour = vec![0usize; n + 1];
    let mut count = 0;
    loop {
        if edges.iter().all(|&(u, v)| colour[u] != colour[v]) {
            count += 1;
        }
        let mut i = 1;
        while i <= n && colour[i] == x - 1 {
            colour[i] = 0;
            i += 1;
        }
        if i > n {
            return count;
        }
        colour[i] += 1;
    }
}

/// `counts[m]` = connected spanning subgraphs with `m` edges.
pub fn connected_subgraph_counts(n: usize, edges: &[(usize, usize)]) -> Vec<u64> {
    let mut counts = vec![0u64; edges.len() + 1];
    for mask in 0u64..1 << edges.len() {
        let sub = select(edges, mask);
        if is_connected(n, &sub) {
            counts[sub.len()] += 1;
        }
    }
    counts
}

/// Every circuit as a bit mask over `edges`: a nonempty edge set, connected,
/// with every touched vertex of degree two.
pub fn circuits(edges: &[(usize, usize)]) -> Vec<u64> {
    let mut out = Vec::new();
    for mask in 1u64..1 << edges.len() {
        let sub = select(edges, mask);
        let mut degree: BTreeMap<usize, usize> = BTreeMap::new();
        for &(u, v) in &sub {
            *degree.entry(u).or_default() += 1;
            *degree.entry(v).or_default() += 1;
        }
        if degree.values().all(|&d| d == 2) {
            let touched: Vec<usize> = degree.keys().copied().collect();
            if components(&touched, &sub).len() == 1 {
                out.push(mask);
            }
        }
    }
    out
}

/// Circuits with their lowest edge removed. `edges` must be in lexicographic order.
pub fn broken_circuits(edges: &[(usize, usize)]) -> Vec<u64> {
    circuits(edges).into_iter().map(|c| c & (c - 1)).collect()
}

pub fn is_bcf_oracle(sub_mask: u64, broken: &[u64]) -> bool {
    broken.iter().all(|&b| b & !sub_mask != 0)
}

/// Mask over `edges` of the edges of `sub`.
pub fn mask_of(edges: &[(usize, usize)], sub: &[(usize, usize)]) -> u64 {
    sub.iter()
        .map(|e| {
            1u64 << edges
                .iter()
                .position(|f| f == e)
                .expect("edge of the graph")
        })
        .fold(0, |a, b| a | b)
}

/// Edges `e` outside the tree that are the lowest edge of some circuit inside
/// `tree + e`.
pub fn breaks_oracle(edges: &[(usize, usize)], tree_mask: u64) -> u64 {
    let cs = circuits(edges);
    let mut out = 0;
    for i in 0..edges.len() {
        let e = 1u64 << i;
        if tree_mask & e != 0 {
            continue;
        }
        let allowed = tree_mask | e;
        if cs
            .iter()
            .any(|&c| c & !allowed == 0 && c & e != 0 && c.trailing_zeros() as usize == i)
        {
            out |= e;
        }
    }
    out
}
