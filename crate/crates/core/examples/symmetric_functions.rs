// Power-sum expansions of the chromatic symmetric functions X and Y.

use incrtree::invariants::{csf_x_oracle, csf_x_via_forests, csf_y_oracle, csf_y_via_forests};
use incrtree::Graph;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let claw = Graph::from_pairs(4, &[(1, 2), (1, 3), (1, 4)])?;
    let path = Graph::path(4)?;
    for (name, g) in [("claw", claw), ("path", path)] {
        let y = csf_y_via_forests(&g)?;
        assert_eq!(y, csf_y_oracle(&g)?);
        let x = csf_x_via_forests(&g)?;
        assert_eq!(x, csf_x_oracle(&g)?);
        assert_eq!(x, y.collapse_by_shape());
        println!("{name}:");
        println!("  Y = {y}");
        println!("  X = {x}");
        println!("  chromatic polynomial = {}", x.specialize());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
