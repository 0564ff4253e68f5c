//! Runs every structural identity over all small graphs plus a seeded sample
//! of larger connected ones.
//!
//! Graphs on up to five vertices are checked exhaustively, disconnected ones
//! included; larger sizes draw `samples` uniform random connected graphs per
//! vertex count. Graphs are visited in increasing size, so the first failure
//! recorded for a check is a smallest counterexample.

use std::collections::{BTreeMap, HashSet};

use num_bigint::{BigInt, BigUint};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::broken_circuits::{
    bijection_f, breaks_direct, breaks_via_theorem, enumerate_bcf_subforests,
    is_broken_circuit_free,
};
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph};
use crate::invariants::{
    abs_coeff, chromatic_by_deletion_contraction, chromatic_by_subgraph_expansion,
    chromatic_coeffs_via_forests, csf_x_via_forests, csf_y_oracle, csf_y_via_forests,
    eta_bruteforce, eta_via_trees, forest_counts_by_components,
};
use crate::limits::Limits;
use crate::partition::SetPartition;
use crate::subgraphs::{all_graphs, connected_spanning_subgraphs, random_connected_graph};
use crate::tree::{increasing_g_connected_forests, increasing_trees, RootedTree};
use crate::tree_map::{fiber_size, has_fiber_cover, increasing_tree_of, verify_characterization};

/// Largest vertex count `selfcheck` accepts.
pub const SELFCHECK_MAX_N: usize = 7;

/// Largest vertex count checked exhaustively.
pub const EXHAUSTIVE_N: usize = 5;

pub const DEFAULT_SEED: u64 = 0x5eed;

pub const DEFAULT_SAMPLES: usize = 100;

#[derive(Clone, Copy, Debug)]
pub struct SelfcheckOptions {
    pub max_n: usize,
    pub seed: u64,
    pub samples: usize,
}

impl Default for SelfcheckOptions {
    fn default() -> Self {
        SelfcheckOptions {
            max_n: EXHAUSTIVE_N,
            seed: DEFAULT_SEED,
            samples: DEFAULT_SAMPLES,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
    pub counterexample: Option<(Graph, String)>,
}

type Check = fn(&Graph) -> std::result::Result<(), String>;

const CHECKS: &[(&str, bool, Check)] = &[
    ("partition-refinement", false, check_partitions),
    ("k-increasing-g-connected", true, check_k_output),
    ("j-sets-disjoint", true, check_j_sets_disjoint),
    ("characterization-equivalence", true, check_characterization),
    ("fiber-partition", true, check_fibers),
    ("eta-two-routes", true, check_eta),
    ("eta-at-minus-one", true, check_eta_minus_one),
    ("chromatic-three-routes", false, check_chromatic),
    ("forest-enumeration", false, check_forest_enumeration),
    ("csf-y-two-routes", false, check_csf),
    ("breaks-two-routes", true, check_breaks),
    ("bijection", true, check_bijection),
    ("whitney-forest-counts", true, check_whitney),
    ("bcf-are-forests", false, check_bcf_forests),
];

/// The graphs the suite visits, in order.
pub fn graphs_to_check(opts: &SelfcheckOptions) -> Result<Vec<Graph>> {
    if opts.max_n > SELFCHECK_MAX_N {
        return Err(Error::TooLarge {
            what: "selfcheck vertex count",
            size: opts.max_n,
            max: SELFCHECK_MAX_N,
        });
    }
    let mut graphs = Vec::new();
    for n in 1..=opts.max_n.min(EXHAUSTIVE_N) {
        graphs.extend(all_graphs(n)?);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for n in EXHAUSTIVE_N + 1..=opts.max_n {
        for _ in 0..opts.samples {
            graphs.push(random_connected_graph(n, &mut rng)?);
        }
    }
    Ok(graphs)
}

pub fn run_selfcheck(opts: &SelfcheckOptions) -> Result<Vec<CheckOutcome>> {
    let graphs = graphs_to_check(opts)?;
    let mut outcomes: Vec<CheckOutcome> = CHECKS
        .iter()
        .map(|&(name, _, _)| CheckOutcome {
            name,
            passed: 0,
            failed: 0,
            counterexample: None,
        })
        .collect();
    for graph in &graphs {
        let connected = graph.is_connected();
        for (outcome, &(_, needs_connected, check)) in outcomes.iter_mut().zip(CHECKS) {
            if needs_connected && !connected {
                continue;
            }
            match check(graph) {
                Ok(()) => outcome.passed += 1,
                Err(why) => {
                    outcome.failed += 1;
                    if outcome.counterexample.is_none() {
                        outcome.counterexample = Some((*graph, why));
                    }
                }
            }
        }
    }
    Ok(outcomes)
}

fn fail<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn check_partitions(g: &Graph) -> std::result::Result<(), String> {
    let s = g.components_partition();
    let finest = SetPartition::finest(g.vertices());
    let coarsest = SetPartition::coarsest(g.vertices());
    ensure(finest.refines(&s).map_err(fail)?, || {
        "finest does not refine s(G)".into()
    })?;
    ensure(s.refines(&coarsest).map_err(fail)?, || {
        "s(G) does not refine coarsest".into()
    })?;
    for &block in s.blocks() {
        ensure(g.restrict(block).is_connected(), || {
            format!("block {block} not connected")
        })?;
    }
    let reparsed: SetPartition = s.to_string().parse().map_err(fail)?;
    ensure(reparsed == s, || format!("{s} does not round-trip"))
}

fn check_k_output(g: &Graph) -> std::result::Result<(), String> {
    let r = increasing_tree_of(g).map_err(fail)?;
    ensure(r.is_increasing(), || {
        format!("k(G) = {r} is not increasing")
    })?;
    ensure(r.is_g_connected(g).map_err(fail)?, || {
        format!("k(G) = {r} is not G-connected")
    })
}

fn check_j_sets_disjoint(g: &Graph) -> std::result::Result<(), String> {
    for r in increasing_trees(g.vertices()).map_err(fail)? {
        let mut seen = EdgeSet::EMPTY;
        for v in r.non_root_vertices().iter() {
            let j = r.j_set(v).map_err(fail)?;
            ensure(j.is_disjoint(seen), || format!("J sets overlap in {r}"))?;
            seen = seen.union(j);
        }
    }
    Ok(())
}

fn check_characterization(g: &Graph) -> std::result::Result<(), String> {
    let k = increasing_tree_of(g).map_err(fail)?;
    for r in increasing_trees(g.vertices()).map_err(fail)? {
        let first = k == r;
        let second = verify_characterization(g, &r);
        let third = has_fiber_cover(g, &r);
        ensure(first == second && second == third, || {
            format!("R = {r}: k(G)=R {first}, recursive {second}, cover {third}")
        })?;
    }
    Ok(())
}

fn check_fibers(g: &Graph) -> std::result::Result<(), String> {
    let limits = Limits::default();
    let mut observed: BTreeMap<RootedTree, u64> = BTreeMap::new();
    let mut total = 0u64;
    for q in connected_spanning_subgraphs(g, &limits).map_err(fail)? {
        *observed
            .entry(increasing_tree_of(&q).map_err(fail)?)
            .or_default() += 1;
        total += 1;
    }
    let mut predicted_total = BigUint::default();
    for r in increasing_trees(g.vertices()).map_err(fail)? {
        let size = fiber_size(g, &r).map_err(fail)?;
        let seen = observed.get(&r).copied().unwrap_or(0);
        ensure(size == BigUint::from(seen), || {
            format!("R = {r}: fiber_size {size}, brute force {seen}")
        })?;
        predicted_total += size;
    }
    ensure(predicted_total == BigUint::from(total), || {
        format!("fiber sizes sum to {predicted_total}, {total} connected subgraphs")
    })
}

fn check_eta(g: &Graph) -> std::result::Result<(), String> {
    let trees = eta_via_trees(g).map_err(fail)?;
    let brute = eta_bruteforce(g).map_err(fail)?;
    ensure(trees == brute, || {
        format!("trees {trees} vs brute force {brute}")
    })
}

fn check_eta_minus_one(g: &Graph) -> std::result::Result<(), String> {
    let eta = eta_via_trees(g).map_err(fail)?;
    let trees = increasing_trees(g.vertices())
        .map_err(fail)?
        .filter(|r| r.is_g_connected(g).unwrap_or(false))
        .count();
    let sign = if (g.vertex_count() - 1).is_multiple_of(2) {
        1
    } else {
        -1
    };
    let expected = BigInt::from(sign * trees as i64);
    let at = crate::invariants::eta_at_minus_one(&eta);
    ensure(at == expected, || {
        format!("eta(-1) = {at}, expected {expected}")
    })
}

fn check_chromatic(g: &Graph) -> std::result::Result<(), String> {
    let forests = chromatic_coeffs_via_forests(g).map_err(fail)?;
    let expansion = chromatic_by_subgraph_expansion(g).map_err(fail)?;
    let dc = chromatic_by_deletion_contraction(g);
    ensure(forests == expansion && expansion == dc, || {
        format!("forests {forests}, subgraph expansion {expansion}, deletion-contraction {dc}")
    })?;
    let n = g.vertex_count();
    for (q, c) in forests.coefficients().iter().enumerate() {
        let expected_negative = (n - q) % 2 == 1;
        ensure(
            *c == BigInt::default() || (*c < BigInt::default()) == expected_negative,
            || format!("coefficient of x^{q} has the wrong sign"),
        )?;
    }
    Ok(())
}

fn check_forest_enumeration(g: &Graph) -> std::result::Result<(), String> {
    let counts = forest_counts_by_components(g).map_err(fail)?;
    let mut listed = vec![0u128; g.vertex_count() + 1];
    let mut previous = None;
    for forest in increasing_g_connected_forests(g, None).map_err(fail)? {
        ensure(
            forest.is_increasing() && forest.is_g_connected(g).map_err(fail)?,
            || "enumerated forest fails the definition".into(),
        )?;
        if let Some(prev) = &previous {
            ensure(*prev < forest, || "forest stream out of order".into())?;
        }
        listed[forest.components().len()] += 1;
        previous = Some(forest);
    }
    ensure(counts == listed, || {
        format!("counts {counts:?}, enumeration {listed:?}")
    })?;
    for (q, &expected) in counts.iter().enumerate() {
        let filtered = increasing_g_connected_forests(g, Some(q))
            .map_err(fail)?
            .count() as u128;
        ensure(filtered == expected, || {
            format!("q = {q}: {filtered} vs {expected}")
        })?;
    }
    Ok(())
}

fn check_csf(g: &Graph) -> std::result::Result<(), String> {
    let forests = csf_y_via_forests(g).map_err(fail)?;
    let oracle = csf_y_oracle(g).map_err(fail)?;
    ensure(forests == oracle, || "Y_G routes differ".into())?;
    ensure(
        csf_x_via_forests(g).map_err(fail)? == oracle.collapse_by_shape(),
        || "X_G differs from the collapsed oracle".into(),
    )?;
    ensure(
        forests.specialize() == chromatic_coeffs_via_forests(g).map_err(fail)?,
        || "Y_G does not specialize to the chromatic polynomial".into(),
    )
}

fn spanning_trees(g: &Graph) -> std::result::Result<Vec<Graph>, String> {
    Ok(connected_spanning_subgraphs(g, &Limits::default())
        .map_err(fail)?
        .filter(|q| q.edge_count() + 1 == g.vertex_count())
        .collect())
}

fn check_breaks(g: &Graph) -> std::result::Result<(), String> {
    for t in spanning_trees(g)? {
        let direct = breaks_direct(&t, g).map_err(fail)?;
        let via_j = breaks_via_theorem(&t, g).map_err(fail)?;
        ensure(direct == via_j, || {
            format!("T = {}: direct {direct}, via J-sets {via_j}", t.edges())
        })?;
    }
    Ok(())
}

fn check_bijection(g: &Graph) -> std::result::Result<(), String> {
    let bcf: Vec<Graph> = enumerate_bcf_subforests(g, Some(1))
        .map_err(fail)?
        .collect();
    let mut images = HashSet::new();
    let mut domain = 0usize;
    for r in increasing_trees(g.vertices()).map_err(fail)? {
        let Some(t) = bijection_f(&r, g).map_err(fail)? else {
            continue;
        };
        domain += 1;
        ensure(
            t.is_tree() && is_broken_circuit_free(&t, g).map_err(fail)?,
            || format!("f({r}) = {} is not a BCF subtree", t.edges()),
        )?;
        ensure(increasing_tree_of(&t).map_err(fail)? == r, || {
            format!("k(f({r})) != R")
        })?;
        ensure(images.insert(t.edges()), || {
            format!("f is not injective at {r}")
        })?;
    }
    for t in &bcf {
        let r = increasing_tree_of(t).map_err(fail)?;
        let back = bijection_f(&r, g).map_err(fail)?;
        ensure(back.as_ref() == Some(t), || {
            format!("f(k(T)) != T for T = {}", t.edges())
        })?;
    }
    let whitney = abs_coeff(&chromatic_by_subgraph_expansion(g).map_err(fail)?, 1);
    ensure(
        domain == bcf.len() && BigInt::from(domain) == whitney,
        || {
            format!(
                "{domain} trees, {} BCF subtrees, |[x]chi| = {whitney}",
                bcf.len()
            )
        },
    )
}

fn check_whitney(g: &Graph) -> std::result::Result<(), String> {
    let chi = chromatic_by_subgraph_expansion(g).map_err(fail)?;
    let counts = forest_counts_by_components(g).map_err(fail)?;
    for (q, &count) in counts.iter().enumerate() {
        let bcf = enumerate_bcf_subforests(g, Some(q)).map_err(fail)?.count();
        let expected = abs_coeff(&chi, q);
        ensure(
            BigInt::from(bcf) == expected && BigInt::from(count) == expected,
            || {
                format!(
                    "q = {q}: {bcf} BCF forests, {count} increasing forests, |coeff| {expected}"
                )
            },
        )?;
    }
    Ok(())
}

fn check_bcf_forests(g: &Graph) -> std::result::Result<(), String> {
    for q in crate::subgraphs::spanning_subgraphs(g, &Limits::default()).map_err(fail)? {
        if is_broken_circuit_free(&q, g).map_err(fail)? {
            ensure(q.is_forest(), || {
                format!("BCF subgraph {} has a circuit", q.edges())
            })?;
        }
    }
    Ok(())
}
