//! Simple undirected graphs on a totally ordered vertex set.
//!
//! Vertices are the integers `1..=MAX_VERTICES`. A [`Graph`] carries its own
//! vertex set, so a restriction `G|_S` keeps the original vertex identities
//! and partitions or trees built over a subset can be compared across nested
//! restrictions.
//!
//! Vertex sets are `u32` bitsets and edge sets are `u128` bitsets over a fixed
//! enumeration of all `MAX_VERTICES * (MAX_VERTICES - 1) / 2` possible edges in
//! lexicographic order, so iterating an [`EdgeSet`] always yields edges in
//! increasing `(lo, hi)` order.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::SetPartition;

/// Largest vertex label a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 16;

/// Number of possible edges on `MAX_VERTICES` vertices.
pub const MAX_EDGES: usize = MAX_VERTICES * (MAX_VERTICES - 1) / 2;

/// First slot of the edges whose smaller endpoint is `lo`.
const SLOT_OFFSET: [usize; MAX_VERTICES + 1] = {
    let mut table = [0usize; MAX_VERTICES + 1];
    let mut lo = 1;
    while lo < MAX_VERTICES {
        table[lo + 1] = table[lo] + (MAX_VERTICES - lo);
        lo += 1;
    }
    table
};

const SLOT_ENDPOINTS: [(u8, u8); MAX_EDGES] = {
    let mut table = [(0u8, 0u8); MAX_EDGES];
    let mut slot = 0;
    let mut lo = 1;
    while lo <= MAX_VERTICES {
        let mut hi = lo + 1;
        while hi <= MAX_VERTICES {
            table[slot] = (lo as u8, hi as u8);
            slot += 1;
            hi += 1;
        }
        lo += 1;
    }
    table
};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Vertex(u8);

impl Vertex {
    pub fn new(index: usize) -> Result<Self> {
        if (1..=MAX_VERTICES).contains(&index) {
            Ok(Vertex(index as u8))
        } else {
            Err(Error::VertexOutOfRange(index))
        }
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    fn bit(self) -> u32 {
        1 << self.0
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An undirected edge, stored with `lo < hi`. Edges order lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Edge {
    lo: Vertex,
    hi: Vertex,
}

impl Edge {
    pub fn new(u: Vertex, v: Vertex) -> Result<Self> {
        match u.cmp(&v) {
            std::cmp::Ordering::Less => Ok(Edge { lo: u, hi: v }),
            std::cmp::Ordering::Greater => Ok(Edge { lo: v, hi: u }),
            std::cmp::Ordering::Equal => Err(Error::Loop(u.index())),
        }
    }

    pub fn from_indices(u: usize, v: usize) -> Result<Self> {
        Edge::new(Vertex::new(u)?, Vertex::new(v)?)
    }

    pub fn lo(self) -> Vertex {
        self.lo
    }

    pub fn hi(self) -> Vertex {
        self.hi
    }

    pub fn has_endpoint(self, v: Vertex) -> bool {
        self.lo == v || self.hi == v
    }

    fn slot(self) -> usize {
        SLOT_OFFSET[self.lo.index()] + (self.hi.index() - self.lo.index() - 1)
    }

    fn from_slot(slot: usize) -> Self {
        let (lo, hi) = SLOT_ENDPOINTS[slot];
        Edge {
            lo: Vertex(lo),
            hi: Vertex(hi),
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.lo, self.hi)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Debug)]
pub struct VertexSet(u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{1, ..., n}`.
    pub fn range(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::VertexOutOfRange(n));
        }
        Ok(VertexSet(((1u32 << (n + 1)) - 1) & !1))
    }

    pub fn singleton(v: Vertex) -> Self {
        VertexSet(v.bit())
    }

    pub fn from_indices(indices: &[usize]) -> Result<Self> {
        indices
            .iter()
            .map(|&i| Vertex::new(i))
            .collect::<Result<VertexSet>>()
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub(crate) fn from_bits(bits: u32) -> Self {
        debug_assert_eq!(bits & 1, 0);
        VertexSet(bits)
    }

    pub fn contains(self, v: Vertex) -> bool {
        self.0 & v.bit() != 0
    }

    pub fn insert(&mut self, v: Vertex) {
        self.0 |= v.bit();
    }

    pub fn remove(&mut self, v: Vertex) {
        self.0 &= !v.bit();
    }

    pub fn without(self, v: Vertex) -> Self {
        VertexSet(self.0 & !v.bit())
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn min(self) -> Option<Vertex> {
        (self.0 != 0).then(|| Vertex(self.0.trailing_zeros() as u8))
    }

    pub fn max(self) -> Option<Vertex> {
        (self.0 != 0).then(|| Vertex(31 - self.0.leading_zeros() as u8))
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Vertices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = Vertex> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let v = rest.trailing_zeros() as u8;
            rest &= rest - 1;
            Some(Vertex(v))
        })
    }

    /// All subsets of `self`, in increasing order of their bit patterns.
    pub fn subsets(self) -> impl Iterator<Item = VertexSet> {
        let full = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let current = next?;
            next = if current == full {
                None
            } else {
                Some(current.wrapping_sub(full) & full)
            };
            Some(VertexSet(current))
        })
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut set = VertexSet::EMPTY;
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order on the ascending element lists.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A set of edges, iterated in lexicographic edge order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Debug)]
pub struct EdgeSet(u128);

impl EdgeSet {
    pub const EMPTY: EdgeSet = EdgeSet(0);

    pub fn singleton(e: Edge) -> Self {
        EdgeSet(1 << e.slot())
    }

    pub(crate) fn bits(self) -> u128 {
        self.0
    }

    pub(crate) fn from_bits(bits: u128) -> Self {
        EdgeSet(bits)
    }

    pub fn from_pairs(pairs: &[(usize, usize)]) -> Result<Self> {
        let mut set = EdgeSet::EMPTY;
        for &(u, v) in pairs {
            let e = Edge::from_indices(u, v)?;
            if !set.insert(e) {
                return Err(Error::DuplicateEdge(e.lo.index(), e.hi.index()));
            }
        }
        Ok(set)
    }

    pub fn contains(self, e: Edge) -> bool {
        self.0 & (1 << e.slot()) != 0
    }

    /// Returns `false` if the edge was already present.
    pub fn insert(&mut self, e: Edge) -> bool {
        let bit = 1u128 << e.slot();
        let fresh = self.0 & bit == 0;
        self.0 |= bit;
        fresh
    }

    pub fn remove(&mut self, e: Edge) {
        self.0 &= !(1u128 << e.slot());
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn min(self) -> Option<Edge> {
        (self.0 != 0).then(|| Edge::from_slot(self.0.trailing_zeros() as usize))
    }

    pub fn union(self, other: Self) -> Self {
        EdgeSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        EdgeSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        EdgeSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Edges strictly smaller than `e`.
    pub fn below(self, e: Edge) -> Self {
        EdgeSet(self.0 & ((1u128 << e.slot()) - 1))
    }

    /// Edges in lexicographic order.
    pub fn iter(self) -> impl Iterator<Item = Edge> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let slot = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(Edge::from_slot(slot))
        })
    }

    /// Vertices touched by at least one edge.
    pub fn endpoints(self) -> VertexSet {
        self.iter().fold(VertexSet::EMPTY, |acc, e| {
            VertexSet(acc.0 | e.lo.bit() | e.hi.bit())
        })
    }

    /// The subset of `self` picked out by the low bits of `mask`, where bit `i`
    /// selects the `i`-th smallest edge.
    pub fn select(self, mask: u64) -> EdgeSet {
        let mut out = 0u128;
        for (i, e) in self.iter().enumerate() {
            if i >= 64 {
                break;
            }
            if mask & (1 << i) != 0 {
                out |= 1 << e.slot();
            }
        }
        EdgeSet(out)
    }
}

impl FromIterator<Edge> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = Edge>>(iter: I) -> Self {
        let mut set = EdgeSet::EMPTY;
        for e in iter {
            set.insert(e);
        }
        set
    }
}

impl PartialOrd for EdgeSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order on the sorted edge lists.
impl Ord for EdgeSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Display for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// All possible edges joining `v` to an element of `set` other than `v` itself.
pub fn link(v: Vertex, set: VertexSet) -> EdgeSet {
    set.without(v)
        .iter()
        .map(|w| Edge::new(v, w).expect("w != v"))
        .collect()
}

/// A finite simple graph: a vertex set and a set of edges between its members.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    vertices: VertexSet,
    edges: EdgeSet,
}

impl Graph {
    pub fn new(vertices: VertexSet, edges: EdgeSet) -> Result<Self> {
        let stray = edges.endpoints().difference(vertices);
        if let Some(v) = stray.min() {
            return Err(Error::UnknownVertex(v.index()));
        }
        Ok(Graph { vertices, edges })
    }

    /// Graph on `{1, ..., n}` with the given edges.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let vertices = VertexSet::range(n)?;
        for &(u, v) in pairs {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(Error::UnknownVertex(w));
                }
            }
        }
        Graph::new(vertices, EdgeSet::from_pairs(pairs)?)
    }

    pub fn empty(n: usize) -> Result<Self> {
        Ok(Graph {
            vertices: VertexSet::range(n)?,
            edges: EdgeSet::EMPTY,
        })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let vertices = VertexSet::range(n)?;
        Ok(Graph {
            vertices,
            edges: complete_edges(vertices),
        })
    }

    /// Path `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Result<Self> {
        let pairs: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Graph::from_pairs(n, &pairs)
    }

    pub fn vertices(&self) -> VertexSet {
        self.vertices
    }

    pub fn edges(&self) -> EdgeSet {
        self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        self.edges.contains(e)
    }

    /// Spanning subgraph with the given edges, which must all belong to `self`.
    pub fn spanning_subgraph(&self, edges: EdgeSet) -> Result<Graph> {
        if !edges.is_subset(self.edges) {
            return Err(Error::NotSubgraph);
        }
        Ok(Graph {
            vertices: self.vertices,
            edges,
        })
    }

    /// Same vertex set and `self`'s edges are a subset of `other`'s.
    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.vertices == other.vertices && self.edges.is_subset(other.edges)
    }

    /// `G|_S`: the graph on `S ∩ V(G)` with every edge of `G` having both ends there.
    pub fn restrict(&self, set: VertexSet) -> Graph {
        let vertices = self.vertices.intersection(set);
        let edges = self
            .edges
            .iter()
            .filter(|e| vertices.contains(e.lo) && vertices.contains(e.hi))
            .collect();
        Graph { vertices, edges }
    }

    pub(crate) fn adjacency(&self) -> [u32; MAX_VERTICES + 1] {
        let mut adj = [0u32; MAX_VERTICES + 1];
        for e in self.edges.iter() {
            adj[e.lo.index()] |= e.hi.bit();
            adj[e.hi.index()] |= e.lo.bit();
        }
        adj
    }

    pub fn neighbors(&self, v: Vertex) -> VertexSet {
        VertexSet(self.adjacency()[v.index()])
    }

    /// `s(G)`: the partition of the vertex set into connected components.
    pub fn components_partition(&self) -> SetPartition {
        SetPartition::from_canonical_blocks(self.component_sets())
    }

    /// Component vertex sets ordered by their minimum vertex.
    pub(crate) fn component_sets(&self) -> Vec<VertexSet> {
        let adj = self.adjacency();
        let mut rest = self.vertices.0;
        let mut out = Vec::new();
        while rest != 0 {
            let start = rest & rest.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = adj[v] & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            rest &= !comp;
            out.push(VertexSet(comp));
        }
        out
    }

    pub fn component_count(&self) -> usize {
        component_count(self.vertices, self.edges)
    }

    /// True iff the graph has exactly one component. The empty graph is not connected.
    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// No circuits.
    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.component_count() == self.vertex_count()
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.is_forest()
    }

    /// Fails with [`Error::Disconnected`] naming the components.
    pub fn require_connected(&self) -> Result<()> {
        if self.vertices.is_empty() {
            return Err(Error::EmptyGraph);
        }
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected {
                components: self.components_partition(),
            })
        }
    }

    /// The text format: `n <count>` followed by one `u v` line per edge.
    ///
    /// The vertex count written is the largest vertex label, so a graph whose
    /// vertex set is not `{1..n}` does not round-trip.
    pub fn to_text(&self) -> String {
        let n = self.vertices.max().map_or(0, Vertex::index);
        let mut out = format!("n {n}\n");
        for e in self.edges.iter() {
            out.push_str(&format!("{} {}\n", e.lo, e.hi));
        }
        out
    }
}

impl FromStr for Graph {
    type Err = Error;

    /// Parses the text graph format. `#` starts a comment; blank lines are
    /// ignored; the first remaining line is `n <count>` and every further line
    /// is an edge `u v` with `1 <= u < v <= n`.
    fn from_str(text: &str) -> Result<Self> {
        let parse_err = |line: usize, message: String| Error::Parse { line, message };
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());

        let (header_line, header) = lines
            .next()
            .ok_or_else(|| parse_err(1, "missing `n <count>` header".into()))?;
        let mut fields = header.split_whitespace();
        if fields.next() != Some("n") {
            return Err(parse_err(
                header_line,
                format!("expected `n <count>`, got `{header}`"),
            ));
        }
        let n: usize = fields.next().and_then(|f| f.parse().ok()).ok_or_else(|| {
            parse_err(
                header_line,
                "vertex count is not a non-negative integer".into(),
            )
        })?;
        if fields.next().is_some() {
            return Err(parse_err(
                header_line,
                "trailing fields after vertex count".into(),
            ));
        }
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                what: "vertex count",
                size: n,
                max: MAX_VERTICES,
            });
        }

        let vertices = VertexSet::range(n)?;
        let mut edges = EdgeSet::EMPTY;
        for (line, content) in lines {
            let nums: Vec<usize> = content
                .split_whitespace()
                .map(|f| f.parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| {
                    parse_err(
                        line,
                        format!("expected two vertex numbers, got `{content}`"),
                    )
                })?;
            let [u, v] = nums[..] else {
                return Err(parse_err(
                    line,
                    format!("expected two vertex numbers, got `{content}`"),
                ));
            };
            if !(1 <= u && u < v && v <= n) {
                return Err(parse_err(
                    line,
                    format!("edge `{u} {v}` must satisfy 1 <= u < v <= {n}"),
                ));
            }
            let e = Edge::from_indices(u, v)?;
            if !edges.insert(e) {
                return Err(parse_err(line, format!("duplicate edge `{u} {v}`")));
            }
        }
        Graph::new(vertices, edges)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V={} E={}", self.vertices, self.edges)
    }
}

/// All edges with both ends in `vertices`.
pub fn complete_edges(vertices: VertexSet) -> EdgeSet {
    let mut out = EdgeSet::EMPTY;
    for u in vertices.iter() {
        out = out.union(link(u, vertices.difference(VertexSet((u.bit() << 1) - 1))));
    }
    out
}

/// Number of components of the spanning graph `(vertices, edges)`.
pub(crate) fn component_count(vertices: VertexSet, edges: EdgeSet) -> usize {
    let mut root = [0u8; MAX_VERTICES + 1];
    for (i, slot) in root.iter_mut().enumerate() {
        *slot = i as u8;
    }
    fn find(root: &mut [u8; MAX_VERTICES + 1], mut x: u8) -> u8 {
        while root[x as usize] != x {
            root[x as usize] = root[root[x as usize] as usize];
            x = root[x as usize];
        }
        x
    }
    let mut count = vertices.len();
    for e in edges.iter() {
        let a = find(&mut root, e.lo.0);
        let b = find(&mut root, e.hi.0);
        if a != b {
            root[a as usize] = b;
            count -= 1;
        }
    }
    count
}

/// Maps arbitrary ordered labels onto `1..=n` by their sort order.
///
/// Returns the graph and the label table, where `table[i]` is the label of
/// vertex `i + 1`.
pub fn relabel<L: Ord + Clone>(
    labels: impl IntoIterator<Item = L>,
    edges: impl IntoIterator<Item = (L, L)>,
) -> Result<(Graph, Vec<L>)> {
    let mut index: BTreeMap<L, usize> = labels.into_iter().map(|l| (l, 0)).collect();
    if index.len() > MAX_VERTICES {
        return Err(Error::TooLarge {
            what: "vertex count",
            size: index.len(),
            max: MAX_VERTICES,
        });
    }
    for (i, slot) in index.values_mut().enumerate() {
        *slot = i + 1;
    }
    let mut set = EdgeSet::EMPTY;
    for (a, b) in edges {
        let (u, v) = match (index.get(&a), index.get(&b)) {
            (Some(&u), Some(&v)) => (u, v),
            _ => return Err(Error::UnknownVertex(0)),
        };
        let e = Edge::from_indices(u, v)?;
        if !set.insert(e) {
            return Err(Error::DuplicateEdge(e.lo.index(), e.hi.index()));
        }
    }
    let n = index.len();
    let table = index.into_keys().collect();
    Ok((Graph::new(VertexSet::range(n)?, set)?, table))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(ix: &[usize]) -> VertexSet {
        VertexSet::from_indices(ix).unwrap()
    }

    fn es(pairs: &[(usize, usize)]) -> EdgeSet {
        EdgeSet::from_pairs(pairs).unwrap()
    }

    fn v(i: usize) -> Vertex {
        Vertex::new(i).unwrap()
    }

    #[test]
    fn link_examples() {
        assert_eq!(link(v(1), vs(&[2, 3])), es(&[(1, 2), (1, 3)]));
        assert_eq!(link(v(2), vs(&[2])), EdgeSet::EMPTY);
        let l = link(v(1), vs(&[2, 3, 4]));
        assert_eq!(l, es(&[(1, 2), (1, 3), (1, 4)]));
        assert_eq!(l.len(), 3);
        assert!(link(v(5), VertexSet::EMPTY).is_empty());
    }

    #[test]
    fn edge_slots_follow_lexicographic_order() {
        let all: Vec<Edge> = (0..MAX_EDGES).map(Edge::from_slot).collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        for (slot, e) in all.iter().enumerate() {
            assert_eq!(e.slot(), slot);
        }
    }

    #[test]
    fn loops_rejected() {
        assert_eq!(Edge::from_indices(2, 2), Err(Error::Loop(2)));
        assert_eq!(
            Edge::from_indices(3, 1).unwrap(),
            Edge::from_indices(1, 3).unwrap()
        );
    }

    #[test]
    fn restrict_examples() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(k3.restrict(vs(&[2, 3])).edges(), es(&[(2, 3)]));
        assert_eq!(k3.restrict(vs(&[2, 3])).vertices(), vs(&[2, 3]));

        let p4 = Graph::path(4).unwrap();
        assert_eq!(p4.restrict(vs(&[2, 3, 4])).edges(), es(&[(2, 3), (3, 4)]));

        let empty = p4.restrict(VertexSet::EMPTY);
        assert_eq!(empty.vertex_count(), 0);
        assert_eq!(empty.edge_count(), 0);
    }

    #[test]
    fn components_examples() {
        assert_eq!(
            Graph::path(4).unwrap().components_partition().to_string(),
            "{{1,2,3,4}}"
        );
        let g = Graph::from_pairs(3, &[(1, 2)]).unwrap();
        assert_eq!(g.components_partition().to_string(), "{{1,2},{3}}");
        assert_eq!(
            Graph::empty(4).unwrap().components_partition().to_string(),
            "{{1},{2},{3},{4}}"
        );
    }

    #[test]
    fn connectivity_examples() {
        assert!(Graph::complete(3).unwrap().is_connected());
        assert!(!Graph::empty(2).unwrap().is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
        assert!(!Graph::empty(0).unwrap().is_connected());
    }

    #[test]
    fn require_connected_names_components() {
        let g = Graph::from_pairs(3, &[(1, 2)]).unwrap();
        let err = g.require_connected().unwrap_err();
        assert_eq!(
            err.to_string(),
            "graph is disconnected: components {{1,2},{3}}"
        );
    }

    #[test]
    fn parse_text_format() {
        let g: Graph = "# triangle\nn 3\n1 2 # first\n\n1 3\n2 3\n"
            .parse()
            .unwrap();
        assert_eq!(g, Graph::complete(3).unwrap());
        assert_eq!(g.to_text().parse::<Graph>().unwrap(), g);

        let single: Graph = "n 1\n".parse().unwrap();
        assert_eq!(single.vertex_count(), 1);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            "n 3\n1 2\n1 2\n".parse::<Graph>(),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            "n 3\n2 1\n".parse::<Graph>(),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            "n 3\n1 4\n".parse::<Graph>(),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            "n 3\n1\n".parse::<Graph>(),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            "3\n".parse::<Graph>(),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            "# nothing\n".parse::<Graph>(),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            "n 17\n".parse::<Graph>(),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn relabel_keeps_order() {
        let (g, table) = relabel(["c", "a", "b"], [("a", "c"), ("b", "c")]).unwrap();
        assert_eq!(table, vec!["a", "b", "c"]);
        assert_eq!(g.edges(), es(&[(1, 3), (2, 3)]));
    }

    #[test]
    fn subsets_enumerates_all() {
        let s = vs(&[2, 5, 7]);
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|x| x.is_subset(s)));
    }

    #[test]
    fn edge_set_select_and_below() {
        let k4 = Graph::complete(4).unwrap().edges();
        assert_eq!(k4.select(0b101), es(&[(1, 2), (1, 4)]));
        let e23 = Edge::from_indices(2, 3).unwrap();
        assert_eq!(k4.below(e23), es(&[(1, 2), (1, 3), (1, 4)]));
    }
}
