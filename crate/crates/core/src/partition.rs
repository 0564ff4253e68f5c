//! Set partitions of vertex sets and integer partitions.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Vertex, VertexSet};

/// A partition of a vertex set into disjoint nonempty blocks.
///
/// Always held in canonical form: blocks ordered by their minimum element.
/// Two partitions with the same ground set compare by their restricted
/// growth strings, which is also the order [`set_partitions`] yields them in.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SetPartition {
    blocks: Vec<VertexSet>,
}

impl SetPartition {
    pub fn new(mut blocks: Vec<VertexSet>) -> Result<Self> {
        let mut seen = VertexSet::EMPTY;
        for &b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            if !b.is_disjoint(seen) {
                return Err(Error::InvalidPartition(format!(
                    "blocks overlap in {}",
                    b.intersection(seen)
                )));
            }
            seen = seen.union(b);
        }
        blocks.sort_by_key(|b| VertexSet::min(*b));
        Ok(SetPartition { blocks })
    }

    /// Blocks already known to be disjoint, nonempty, and sorted by minimum.
    pub(crate) fn from_canonical_blocks(blocks: Vec<VertexSet>) -> Self {
        debug_assert!(blocks.windows(2).all(|w| w[0].min() < w[1].min()));
        SetPartition { blocks }
    }

    /// Every vertex in its own block.
    pub fn finest(ground: VertexSet) -> Self {
        SetPartition {
            blocks: ground.iter().map(VertexSet::singleton).collect(),
        }
    }

    /// A single block (or no blocks, for an empty ground set).
    pub fn coarsest(ground: VertexSet) -> Self {
        SetPartition {
            blocks: if ground.is_empty() {
                vec![]
            } else {
                vec![ground]
            },
        }
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn ground(&self) -> VertexSet {
        self.blocks
            .iter()
            .fold(VertexSet::EMPTY, |acc, &b| acc.union(b))
    }

    /// Number of blocks.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_of(&self, v: Vertex) -> Option<VertexSet> {
        self.blocks.iter().copied().find(|b| b.contains(v))
    }

    /// Whether every block of `self` lies inside some block of `coarser`.
    pub fn refines(&self, coarser: &SetPartition) -> Result<bool> {
        if self.ground() != coarser.ground() {
            return Err(Error::GroundMismatch);
        }
        Ok(self
            .blocks
            .iter()
            .all(|b| coarser.blocks.iter().any(|c| b.is_subset(*c))))
    }

    /// Block sizes, weakly decreasing.
    pub fn shape(&self) -> IntegerPartition {
        IntegerPartition::new(self.blocks.iter().map(|b| b.len()).collect())
            .expect("blocks are nonempty")
    }

    /// Block index of each ground element, in increasing vertex order.
    pub fn restricted_growth_string(&self) -> Vec<u8> {
        self.ground()
            .iter()
            .map(|v| {
                self.blocks
                    .iter()
                    .position(|b| b.contains(v))
                    .expect("v in ground") as u8
            })
            .collect()
    }
}

impl PartialOrd for SetPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SetPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ground().cmp(&other.ground()).then_with(|| {
            self.restricted_growth_string()
                .cmp(&other.restricted_growth_string())
        })
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, "}}")
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    /// Parses the `Display` form, e.g. `{{1,3},{2}}`. Whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidPartition(format!("{msg} in `{s}`"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = compact
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| bad("missing outer braces"))?;
        let mut blocks = Vec::new();
        let mut rest = inner;
        while !rest.is_empty() {
            let body = rest.strip_prefix('{').ok_or_else(|| bad("expected `{`"))?;
            let close = body.find('}').ok_or_else(|| bad("unclosed block"))?;
            let mut block = VertexSet::EMPTY;
            for item in body[..close].split(',') {
                let v: usize = item.parse().map_err(|_| bad("bad vertex"))?;
                let v = Vertex::new(v)?;
                if block.contains(v) {
                    return Err(bad("repeated vertex"));
                }
                block.insert(v);
            }
            blocks.push(block);
            rest = &body[close + 1..];
            if let Some(r) = rest.strip_prefix(',') {
                if r.is_empty() {
                    return Err(bad("trailing comma"));
                }
                rest = r;
            }
        }
        SetPartition::new(blocks)
    }
}

/// All set partitions of `ground`, in restricted-growth-string order.
///
/// The empty ground set has exactly one (empty) partition.
pub fn set_partitions(ground: VertexSet) -> SetPartitions {
    let elements: Vec<Vertex> = ground.iter().collect();
    let m = elements.len();
    SetPartitions {
        elements,
        growth: vec![0; m],
        done: false,
    }
}

pub struct SetPartitions {
    elements: Vec<Vertex>,
    growth: Vec<u8>,
    done: bool,
}

impl SetPartitions {
    fn current(&self) -> SetPartition {
        let count = self.growth.iter().max().map_or(0, |&m| m as usize + 1);
        let mut blocks = vec![VertexSet::EMPTY; count];
        for (&v, &b) in self.elements.iter().zip(&self.growth) {
            blocks[b as usize].insert(v);
        }
        SetPartition::from_canonical_blocks(blocks)
    }

    fn advance(&mut self) -> bool {
        let m = self.growth.len();
        for i in (1..m).rev() {
            let prefix_max = *self.growth[..i].iter().max().expect("i >= 1");
            if self.growth[i] <= prefix_max {
                self.growth[i] += 1;
                for g in &mut self.growth[i + 1..] {
                    *g = 0;
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for SetPartitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        let out = self.current();
        self.done = !self.advance();
        Some(out)
    }
}

/// Parts sorted weakly decreasing, all positive.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct IntegerPartition(Vec<usize>);

impl IntegerPartition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("zero part".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(IntegerPartition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for IntegerPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}
