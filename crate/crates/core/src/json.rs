//! JSON renderings used by the command-line tool.
//!
//! Key order is fixed and integers that can outgrow 64 bits are strings, so
//! output is byte-stable for a given input.

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::graph::{EdgeSet, Graph, VertexSet};
use crate::partition::SetPartition;
use crate::poly::IntPolynomial;
use crate::power_sum::{PExpansionX, PExpansionY};
use crate::tree::{RootedForest, RootedTree};

/// `{"root": r, "parent": {"v": p, ...}}` with children in increasing order.
pub fn tree(t: &RootedTree) -> Value {
    let mut parent = Map::new();
    for v in t.non_root_vertices().iter() {
        let p = t.parent(v).expect("non-root");
        parent.insert(v.to_string(), json!(p.index()));
    }
    json!({ "root": t.root().index(), "parent": parent })
}

/// Components in canonical order.
pub fn forest(f: &RootedForest) -> Value {
    Value::Array(f.components().iter().map(tree).collect())
}

/// `[[u, v], ...]` in lexicographic order.
pub fn edges(e: EdgeSet) -> Value {
    Value::Array(
        e.iter()
            .map(|e| json!([e.lo().index(), e.hi().index()]))
            .collect(),
    )
}

pub fn vertex_set(s: VertexSet) -> Value {
    Value::Array(s.iter().map(|v| json!(v.index())).collect())
}

pub fn partition(pi: &SetPartition) -> Value {
    Value::Array(pi.blocks().iter().map(|&b| vertex_set(b)).collect())
}

pub fn graph(g: &Graph) -> Value {
    json!({ "vertices": vertex_set(g.vertices()), "edges": edges(g.edges()) })
}

pub fn integer(i: &BigInt) -> Value {
    Value::String(i.to_string())
}

/// Coefficients lowest degree first.
pub fn polynomial(p: &IntPolynomial) -> Value {
    Value::Array(p.coefficients().iter().map(integer).collect())
}

pub fn pexpansion_x(x: &PExpansionX) -> Value {
    Value::Array(
        x.iter()
            .map(|(lambda, c)| json!({ "lambda": lambda.parts(), "coeff": integer(c) }))
            .collect(),
    )
}

pub fn pexpansion_y(y: &PExpansionY) -> Value {
    Value::Array(
        y.iter()
            .map(|(pi, c)| json!({ "blocks": partition(pi), "coeff": integer(c) }))
            .collect(),
    )
}
