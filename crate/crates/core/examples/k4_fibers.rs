// The complete graph on four vertices: six increasing trees, sixteen
// spanning trees, thirty-eight connected spanning subgraphs.

use std::collections::BTreeMap;

use incrtree::limits::Limits;
use incrtree::subgraphs::connected_spanning_subgraphs;
use incrtree::tree::increasing_trees;
use incrtree::{increasing_tree_of, Graph, RootedTree, VertexSet};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let k4 = Graph::complete(4)?;
    let trees: Vec<RootedTree> = increasing_trees(VertexSet::range(4)?)?.collect();
    println!("{} increasing trees on 4 vertices", trees.len());

    let mut spanning: BTreeMap<RootedTree, usize> = BTreeMap::new();
    let mut others = 0;
    for q in connected_spanning_subgraphs(&k4, &Limits::default())? {
        if q.is_tree() {
            *spanning.entry(increasing_tree_of(&q)?).or_default() += 1;
        } else {
            others += 1;
        }
    }
    for (tree, n) in &spanning {
        println!("  {tree}: {n} spanning trees");
    }
    let total: usize = spanning.values().sum();
    println!("{total} spanning trees, plus {others} connected subgraphs with a cycle");

    let mut sizes: Vec<usize> = spanning.values().copied().collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    assert_eq!(trees.len(), 6);
    assert_eq!(sizes, [6, 3, 2, 2, 2, 1]);
    assert_eq!(others, 22);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
