// Parse a graph, find its increasing tree, and walk the fiber above it.

use incrtree::tree_map::{enumerate_fiber, fiber_edge_sets, fiber_size};
use incrtree::{increasing_tree_of, Graph};

const HOUSE: &str = "\
# a square 1-2-4-3 with a roof on 3-4
n 5
1 2
1 3
2 4
3 4
3 5
4 5
";

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g: Graph = HOUSE.parse()?;
    let tree = increasing_tree_of(&g)?;
    println!("graph   {}", g.edges());
    println!("k(G)    {tree}");
    println!("json    {}", incrtree::json::tree(&tree));

    for (v, choices) in fiber_edge_sets(&g, &tree)? {
        println!("  vertex {v}: attach through any nonempty subset of {choices}");
    }
    let size = fiber_size(&g, &tree)?;
    println!("{size} connected spanning subgraphs share this tree");

    let mut count = 0u32;
    for q in enumerate_fiber(&g, &tree)? {
        assert_eq!(increasing_tree_of(&q)?, tree);
        count += 1;
    }
    assert_eq!(size, count.into());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
