//! Rooted trees and forests over ordered vertex sets.
//!
//! A [`RootedTree`] is stored as a parent map. Trees compare by vertex set,
//! root, and then lexicographically by the parent of each vertex in
//! increasing vertex order, which is the order [`increasing_trees`] emits.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{link, Edge, EdgeSet, Graph, Vertex, VertexSet, MAX_VERTICES};
use crate::limits::Limits;
use crate::partition::{set_partitions, SetPartition, SetPartitions};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RootedTree {
    vertices: VertexSet,
    root: Vertex,
    // 0 marks "no parent": the root and every vertex outside the tree.
    parent: [u8; MAX_VERTICES + 1],
}

impl RootedTree {
    /// One-vertex tree.
    pub fn singleton(root: Vertex) -> Self {
        RootedTree {
            vertices: VertexSet::singleton(root),
            root,
            parent: [0; MAX_VERTICES + 1],
        }
    }

    /// Builds a tree from `(child, parent)` pairs. The vertex set is the root
    /// plus every vertex mentioned.
    pub fn new(root: Vertex, links: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut tree = RootedTree::singleton(root);
        for &(child, parent) in links {
            if child == root {
                return Err(Error::InvalidTree(format!("root {root} given a parent")));
            }
            if tree.parent[child.index()] != 0 {
                return Err(Error::InvalidTree(format!(
                    "vertex {child} has two parents"
                )));
            }
            tree.parent[child.index()] = parent.index() as u8;
            tree.vertices.insert(child);
            tree.vertices.insert(parent);
        }
        for v in tree.vertices.without(root).iter() {
            if tree.parent[v.index()] == 0 {
                return Err(Error::InvalidTree(format!("vertex {v} has no parent")));
            }
        }
        // Every vertex must reach the root in fewer than |V| steps.
        for v in tree.vertices.iter() {
            let mut at = v;
            let mut steps = 0;
            while at != root {
                at = tree.parent(at).expect("non-root has a parent");
                steps += 1;
                if steps > tree.vertices.len() {
                    return Err(Error::InvalidTree(format!("cycle through vertex {v}")));
                }
            }
        }
        Ok(tree)
    }

    /// Like [`RootedTree::new`] with plain integer labels.
    pub fn from_parent_pairs(root: usize, links: &[(usize, usize)]) -> Result<Self> {
        let links = links
            .iter()
            .map(|&(c, p)| Ok((Vertex::new(c)?, Vertex::new(p)?)))
            .collect::<Result<Vec<_>>>()?;
        RootedTree::new(Vertex::new(root)?, &links)
    }

    /// Orients the spanning tree `tree` away from `root`.
    pub fn from_graph(tree: &Graph, root: Vertex) -> Result<Self> {
        if !tree.vertices().contains(root) {
            return Err(Error::UnknownVertex(root.index()));
        }
        if !tree.is_tree() {
            return Err(Error::NotATree);
        }
        let mut out = RootedTree::singleton(root);
        out.vertices = tree.vertices();
        let adj = tree.adjacency();
        let mut reached = VertexSet::singleton(root);
        let mut frontier = vec![root];
        while let Some(u) = frontier.pop() {
            let fresh = VertexSet::from_bits(adj[u.index()]).difference(reached);
            for w in fresh.iter() {
                out.parent[w.index()] = u.index() as u8;
                reached.insert(w);
                frontier.push(w);
            }
        }
        Ok(out)
    }

    pub fn vertices(&self) -> VertexSet {
        self.vertices
    }

    pub fn root(&self) -> Vertex {
        self.root
    }

    /// Stored parent, `None` for the root and for vertices outside the tree.
    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        match self.parent[v.index()] {
            0 => None,
            p => Some(Vertex::new(p as usize).expect("stored parents are valid")),
        }
    }

    pub fn parent_of(&self, v: Vertex) -> Result<Vertex> {
        self.check_member(v)?;
        self.parent(v).ok_or(Error::IsRoot(v.index()))
    }

    pub fn children(&self, v: Vertex) -> VertexSet {
        self.vertices
            .iter()
            .filter(|&w| self.parent(w) == Some(v))
            .collect()
    }

    /// `des(v, R)`, including `v` itself.
    pub fn descendants(&self, v: Vertex) -> Result<VertexSet> {
        self.check_member(v)?;
        let mut out = VertexSet::singleton(v);
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            for w in self.children(u).iter() {
                out.insert(w);
                stack.push(w);
            }
        }
        Ok(out)
    }

    /// `v`, its parent, and so on up to the root.
    pub fn ancestors(&self, v: Vertex) -> Result<Vec<Vertex>> {
        self.check_member(v)?;
        let mut chain = vec![v];
        let mut at = v;
        while let Some(p) = self.parent(at) {
            chain.push(p);
            at = p;
        }
        Ok(chain)
    }

    /// Deepest common ancestor of `v` and `w`.
    pub fn join(&self, v: Vertex, w: Vertex) -> Result<Vertex> {
        let above_w: VertexSet = self.ancestors(w)?.into_iter().collect();
        Ok(self
            .ancestors(v)?
            .into_iter()
            .find(|&a| above_w.contains(a))
            .expect("the root is a common ancestor"))
    }

    /// Every vertex precedes all of its descendants. Checked edge by edge:
    /// each parent is smaller than its child.
    pub fn is_increasing(&self) -> bool {
        self.vertices
            .iter()
            .all(|v| self.parent(v).is_none_or(|p| p < v))
    }

    /// `J(v, R) = link(parent(v), des(v))`.
    pub fn j_set(&self, v: Vertex) -> Result<EdgeSet> {
        let p = self.parent_of(v)?;
        Ok(link(p, self.descendants(v)?))
    }

    /// `J(v, R)` meets `graph` for every non-root `v`.
    pub fn is_g_connected(&self, graph: &Graph) -> Result<bool> {
        if graph.vertices() != self.vertices {
            return Err(Error::VertexSetMismatch);
        }
        for v in self.non_root_vertices().iter() {
            if self.j_set(v)?.is_disjoint(graph.edges()) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn non_root_vertices(&self) -> VertexSet {
        self.vertices.without(self.root)
    }

    /// Undirected edge set `{v, parent(v)}`.
    pub fn edges(&self) -> EdgeSet {
        self.non_root_vertices()
            .iter()
            .map(|v| Edge::new(v, self.parent(v).expect("non-root")).expect("parent != v"))
            .collect()
    }

    pub fn as_graph(&self) -> Graph {
        Graph::new(self.vertices, self.edges()).expect("tree edges stay inside the vertex set")
    }

    fn check_member(&self, v: Vertex) -> Result<()> {
        if self.vertices.contains(v) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v.index()))
        }
    }
}

impl fmt::Display for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "root {}", self.root)?;
        for v in self.non_root_vertices().iter() {
            write!(f, ", {}->{}", self.parent(v).expect("non-root"), v)?;
        }
        Ok(())
    }
}

/// Rooted trees on disjoint vertex sets, ordered by minimum vertex.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RootedForest {
    components: Vec<RootedTree>,
}

impl RootedForest {
    pub fn new(mut components: Vec<RootedTree>) -> Result<Self> {
        let mut seen = VertexSet::EMPTY;
        for c in &components {
            if !c.vertices().is_disjoint(seen) {
                return Err(Error::InvalidTree("forest components overlap".into()));
            }
            seen = seen.union(c.vertices());
        }
        components.sort_by_key(|c| c.vertices().min());
        Ok(RootedForest { components })
    }

    pub fn components(&self) -> &[RootedTree] {
        &self.components
    }

    pub fn ground(&self) -> VertexSet {
        self.components
            .iter()
            .fold(VertexSet::EMPTY, |acc, c| acc.union(c.vertices()))
    }

    /// `s(R)`.
    pub fn partition(&self) -> SetPartition {
        SetPartition::new(self.components.iter().map(|c| c.vertices()).collect())
            .expect("components are disjoint and nonempty")
    }

    pub fn edges(&self) -> EdgeSet {
        self.components
            .iter()
            .fold(EdgeSet::EMPTY, |acc, c| acc.union(c.edges()))
    }

    pub fn is_increasing(&self) -> bool {
        self.components.iter().all(RootedTree::is_increasing)
    }

    /// Each component is a `G|_B`-connected tree on its block `B`.
    pub fn is_g_connected(&self, graph: &Graph) -> Result<bool> {
        if graph.vertices() != self.ground() {
            return Err(Error::VertexSetMismatch);
        }
        for c in &self.components {
            if !c.is_g_connected(&graph.restrict(c.vertices()))? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl PartialOrd for RootedForest {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RootedForest {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.partition()
            .cmp(&other.partition())
            .then_with(|| self.components.cmp(&other.components))
    }
}

/// Every increasing tree on `vertices`, each exactly once.
///
/// Trees are generated from parent maps: every non-minimum vertex picks any
/// smaller vertex as its parent, which gives `(|V| - 1)!` trees. The stream is
/// lexicographic in the vector of parent choices read in increasing vertex
/// order, so it starts with the star at the minimum vertex.
pub fn increasing_trees(vertices: VertexSet) -> Result<IncreasingTrees> {
    increasing_trees_with(vertices, &Limits::default())
}

pub fn increasing_trees_with(vertices: VertexSet, limits: &Limits) -> Result<IncreasingTrees> {
    if vertices.is_empty() {
        return Err(Error::EmptyGraph);
    }
    limits.check_vertices(vertices.len())?;
    let order: Vec<Vertex> = vertices.iter().collect();
    Ok(IncreasingTrees {
        choices: vec![0; order.len()],
        order,
        done: false,
    })
}

pub struct IncreasingTrees {
    order: Vec<Vertex>,
    // choices[i] indexes into order[..i]; choices[0] is unused.
    choices: Vec<usize>,
    done: bool,
}

impl Iterator for IncreasingTrees {
    type Item = RootedTree;

    fn next(&mut self) -> Option<RootedTree> {
        if self.done {
            return None;
        }
        let mut tree = RootedTree::singleton(self.order[0]);
        for (i, &v) in self.order.iter().enumerate().skip(1) {
            tree.parent[v.index()] = self.order[self.choices[i]].index() as u8;
            tree.vertices.insert(v);
        }
        self.done = true;
        for i in (1..self.order.len()).rev() {
            if self.choices[i] + 1 < i {
                self.choices[i] += 1;
                self.choices[i + 1..].fill(0);
                self.done = false;
                break;
            }
        }
        Some(tree)
    }
}

/// Increasing `G`-connected trees on `V(G)`.
pub fn increasing_g_connected_trees(graph: &Graph) -> Result<Vec<RootedTree>> {
    let graph = *graph;
    Ok(increasing_trees(graph.vertices())?
        .filter(|t| t.is_g_connected(&graph).expect("same vertex set"))
        .collect())
}

/// Increasing `G`-connected forests, optionally only those with `q` components.
///
/// Forests come out grouped by their component partition (in canonical
/// partition order), and within a partition in the product order of the
/// per-block tree streams, first block slowest.
pub fn increasing_g_connected_forests(
    graph: &Graph,
    q: Option<usize>,
) -> Result<GConnectedForests> {
    Limits::default().check_vertices(graph.vertex_count())?;
    Ok(GConnectedForests {
        graph: *graph,
        q,
        partitions: set_partitions(graph.vertices()),
        memo: HashMap::new(),
        current: None,
    })
}

pub struct GConnectedForests {
    graph: Graph,
    q: Option<usize>,
    partitions: SetPartitions,
    memo: HashMap<VertexSet, Vec<RootedTree>>,
    current: Option<(Vec<VertexSet>, Vec<usize>)>,
}

impl GConnectedForests {
    fn trees_on(&mut self, block: VertexSet) -> &[RootedTree] {
        let graph = self.graph;
        self.memo.entry(block).or_insert_with(|| {
            increasing_g_connected_trees(&graph.restrict(block)).expect("block within limits")
        })
    }
}

impl Iterator for GConnectedForests {
    type Item = RootedForest;

    fn next(&mut self) -> Option<RootedForest> {
        loop {
            if let Some((blocks, picks)) = self.current.take() {
                let components = blocks
                    .iter()
                    .zip(&picks)
                    .map(|(b, &i)| self.memo[b][i])
                    .collect();
                let mut picks = picks;
                let mut advanced = false;
                for i in (0..picks.len()).rev() {
                    if picks[i] + 1 < self.memo[&blocks[i]].len() {
                        picks[i] += 1;
                        picks[i + 1..].fill(0);
                        advanced = true;
                        break;
                    }
                }
                if advanced {
                    self.current = Some((blocks, picks));
                }
                return Some(RootedForest { components });
            }

            let partition = self.partitions.next()?;
            if self.q.is_some_and(|q| q != partition.len()) {
                continue;
            }
            let blocks = partition.blocks().to_vec();
            if blocks.iter().all(|&b| !self.trees_on(b).is_empty()) {
                let picks = vec![0; blocks.len()];
                self.current = Some((blocks, picks));
            }
        }
    }
}
