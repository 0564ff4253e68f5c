use crate::error::{Error, Result};
use crate::graph::MAX_VERTICES;

/// Bounds on the exhaustive routes. Operations that would enumerate past
/// these refuse with [`Error::TooLarge`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest vertex set that tree, forest, and partition enumerations accept.
    pub max_vertices: usize,
    /// Largest edge count whose full power set the subgraph oracles will walk.
    pub max_subset_edges: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_vertices: MAX_VERTICES,
            max_subset_edges: 24,
        }
    }
}

impl Limits {
    pub fn check_vertices(&self, n: usize) -> Result<()> {
        if n > self.max_vertices {
            return Err(Error::TooLarge {
                what: "vertex set",
                size: n,
                max: self.max_vertices,
            });
        }
        Ok(())
    }

    pub fn check_subset_edges(&self, m: usize) -> Result<()> {
        if m > self.max_subset_edges {
            return Err(Error::TooLarge {
                what: "edge set",
                size: m,
                max: self.max_subset_edges,
            });
        }
        Ok(())
    }
}
