// Count connected spanning subgraphs by edge count, once by brute force and
// once as a sum over increasing trees.

use incrtree::invariants::{eta_at_minus_one, eta_bruteforce, eta_via_trees};
use incrtree::Graph;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let graphs = [
        ("triangle", Graph::complete(3)?),
        ("K4", Graph::complete(4)?),
        (
            "5-cycle",
            Graph::from_pairs(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])?,
        ),
        ("K5", Graph::complete(5)?),
    ];
    for (name, g) in &graphs {
        let fast = eta_via_trees(g)?;
        let slow = eta_bruteforce(g)?;
        assert_eq!(fast, slow);
        println!(
            "{name:>8}: {fast}    value at -1: {}",
            eta_at_minus_one(&fast)
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
