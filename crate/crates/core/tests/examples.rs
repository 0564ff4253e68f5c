mod increasing_trees {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/increasing_trees.rs"
    ));
}

#[test]
fn increasing_trees_example_runs() {
    increasing_trees::run_example().expect("increasing_trees example should run");
}

mod k4_fibers {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/k4_fibers.rs"
    ));
}

#[test]
fn k4_fibers_example_runs() {
    k4_fibers::run_example().expect("k4_fibers example should run");
}

mod connected_subgraphs {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/connected_subgraphs.rs"
    ));
}

#[test]
fn connected_subgraphs_example_runs() {
    connected_subgraphs::run_example().expect("connected_subgraphs example should run");
}

mod chromatic {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/chromatic.rs"
    ));
}

#[test]
fn chromatic_example_runs() {
    chromatic::run_example().expect("chromatic example should run");
}

mod symmetric_functions {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/symmetric_functions.rs"
    ));
}

#[test]
fn symmetric_functions_example_runs() {
    symmetric_functions::run_example().expect("symmetric_functions example should run");
}

mod broken_circuits {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/broken_circuits.rs"
    ));
}

#[test]
fn broken_circuits_example_runs() {
    broken_circuits::run_example().expect("broken_circuits example should run");
}
