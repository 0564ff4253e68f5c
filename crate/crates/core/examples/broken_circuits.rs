// Breaks of spanning trees and the matching between increasing trees and
// broken-circuit-free spanning trees.

use incrtree::broken_circuits::{
    bijection_f_strict, breaks_direct, breaks_via_theorem, enumerate_bcf_subforests,
};
use incrtree::limits::Limits;
use incrtree::subgraphs::connected_spanning_subgraphs;
use incrtree::tree::increasing_g_connected_trees;
use incrtree::{increasing_tree_of, Graph};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g = Graph::from_pairs(4, &[(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)])?;

    println!("spanning trees of {} and their breaks:", g.edges());
    for t in connected_spanning_subgraphs(&g, &Limits::default())?.filter(Graph::is_tree) {
        let breaks = breaks_direct(&t, &g)?;
        assert_eq!(breaks, breaks_via_theorem(&t, &g)?);
        println!("  {} breaks {}", t.edges(), breaks);
    }

    println!("increasing trees and their broken-circuit-free partners:");
    for r in increasing_g_connected_trees(&g)? {
        let sub = bijection_f_strict(&r, &g)?;
        assert_eq!(increasing_tree_of(&sub)?, r);
        println!("  {r}  ->  {}", sub.edges());
    }
    let bcf = enumerate_bcf_subforests(&g, Some(1))?.count();
    println!("{bcf} broken-circuit-free spanning trees");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
