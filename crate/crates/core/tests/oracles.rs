//! The library against the reference implementations in `common`, over every
//! graph on up to five vertices.

mod common;

use common::*;
use incrtree::broken_circuits::{
    breaks_direct, breaks_via_theorem, enumerate_bcf_subforests, is_broken_circuit_free,
};
use incrtree::invariants::{chromatic_coeffs_via_forests, csf_y_via_forests, eta_via_trees};
use incrtree::limits::Limits;
use incrtree::subgraphs::spanning_subgraphs;
use incrtree::tree::increasing_trees;
use incrtree::tree_map::fiber_size;
use incrtree::{increasing_tree_of, VertexSet};
use num_bigint::BigInt;

#[test]
fn k_matches_recursive_definition() {
    for n in 1..=5 {
        for g in every_graph(n) {
            let (_, edges) = plain(&g);
            if !is_connected(n, &edges) {
                assert!(increasing_tree_of(&g).is_err());
                continue;
            }
            let t = increasing_tree_of(&g).unwrap();
            assert_eq!(parent_map(&t), k_oracle(n, &edges), "{g}");
        }
    }
}

#[test]
fn fibers_match_grouping_by_k() {
    for n in 1..=5 {
        for g in every_graph(n) {
            let (_, edges) = plain(&g);
            if !is_connected(n, &edges) {
                continue;
            }
            let mut groups = std::collections::BTreeMap::new();
            for mask in 0u64..1 << edges.len() {
                let sub = select(&edges, mask);
                if is_connected(n, &sub) {
                    *groups.entry(k_oracle(n, &sub)).or_insert(0u64) += 1;
                }
            }
            for r in increasing_trees(VertexSet::range(n).unwrap()).unwrap() {
                let expected = groups.get(&parent_map(&r)).copied().unwrap_or(0);
                assert_eq!(fiber_size(&g, &r).unwrap(), expected.into(), "{g} / {r}");
            }
        }
    }
}

#[test]
fn is_increasing_matches_ancestor_walk() {
    // Trees of every rooting: spanning trees of K4 rooted at each vertex.
    let k4 = graph(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
    let mut seen = 0;
    for t in spanning_subgraphs(&k4, &Limits::default())
        .unwrap()
        .filter(|q| q.is_tree())
    {
        for root in t.vertices().iter() {
            let r = incrtree::RootedTree::from_graph(&t, root).unwrap();
            assert_eq!(r.is_increasing(), is_increasing_oracle(&parent_map(&r)));
            seen += usize::from(r.is_increasing());
        }
    }
    assert_eq!(seen, 6);
}

#[test]
fn chromatic_matches_colouring_counts() {
    for n in 1..=5 {
        for g in every_graph(n) {
            let (_, edges) = plain(&g);
            let chi = chromatic_coeffs_via_forests(&g).unwrap();
            let y = csf_y_via_forests(&g).unwrap().specialize();
            for x in 0..=n {
                let count = BigInt::from(proper_colourings(n, &edges, x));
                assert_eq!(chi.eval(&BigInt::from(x)), count, "{g} at {x}");
                assert_eq!(y.eval(&BigInt::from(x)), count, "{g} at {x}");
            }
        }
    }
}

#[test]
fn eta_matches_connectivity_counts() {
    for n in 1..=5 {
        for g in every_graph(n) {
            let (_, edges) = plain(&g);
            if !is_connected(n, &edges) {
                continue;
            }
            let eta = eta_via_trees(&g).unwrap();
            let counts = connected_subgraph_counts(n, &edges);
            for (m, &c) in counts.iter().enumerate() {
                assert_eq!(eta.coeff(m), BigInt::from(c), "{g} degree {m}");
            }
        }
    }
}

#[test]
fn broken_circuit_freeness_matches_circuit_enumeration() {
    for n in 1..=5 {
        for g in every_graph(n) {
            let (_, edges) = plain(&g);
            let broken = broken_circuits(&edges);
            let mut expected = Vec::new();
            for mask in 0u64..1 << edges.len() {
                let sub = graph(n, &select(&edges, mask));
                let free = is_bcf_oracle(mask, &broken);
                assert_eq!(
                    is_broken_circuit_free(&sub, &g).unwrap(),
                    free,
                    "{sub} in {g}"
                );
                if free {
                    expected.push(plain(&sub).1);
                }
            }
            let mut listed: Vec<Edges> = enumerate_bcf_subforests(&g, None)
                .unwrap()
                .map(|s| plain(&s).1)
                .collect();
            expected.sort();
            listed.sort();
            assert_eq!(listed, expected, "{g}");
        }
    }
}

#[test]
fn breaks_match_circuit_enumeration() {
    for n in 2..=5 {
        for g in every_graph(n) {
            let (_, edges) = plain(&g);
            if !is_connected(n, &edges) {
                continue;
            }
            for mask in 0u64..1 << edges.len() {
                let sub = select(&edges, mask);
                if sub.len() + 1 != n || !is_connected(n, &sub) {
                    continue;
                }
                let t = graph(n, &sub);
                let expected = breaks_oracle(&edges, mask);
                let direct = breaks_direct(&t, &g).unwrap();
                let pairs: Edges = direct
                    .iter()
                    .map(|e| (e.lo().index(), e.hi().index()))
                    .collect();
                assert_eq!(mask_of(&edges, &pairs), expected, "{t} in {g}");
                assert_eq!(breaks_via_theorem(&t, &g).unwrap(), direct);
            }
        }
    }
}
