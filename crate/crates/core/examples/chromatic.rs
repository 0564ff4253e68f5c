// Chromatic polynomials from increasing forests, checked against two
// classical routes.

use incrtree::invariants::{
    chromatic_by_deletion_contraction, chromatic_by_subgraph_expansion,
    chromatic_coeffs_via_forests, forest_counts_by_components,
};
use incrtree::Graph;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let petal = Graph::from_pairs(5, &[(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)])?;
    for g in [Graph::complete(4)?, Graph::path(5)?, petal] {
        let chi = chromatic_coeffs_via_forests(&g)?;
        assert_eq!(chi, chromatic_by_subgraph_expansion(&g)?);
        assert_eq!(chi, chromatic_by_deletion_contraction(&g));
        println!("{}", g.edges());
        println!("  chi(x) = {chi}");
        println!(
            "  increasing G-connected forests by component count: {:?}",
            forest_counts_by_components(&g)?
        );
        println!("  proper 3-colourings: {}", chi.eval(&3.into()));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
