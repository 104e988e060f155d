use std::collections::BTreeSet;

use locdirac_core::Graph;
use locdirac_harness::canon::{are_isomorphic, canonical_form, classes_up_to};
use locdirac_harness::suite::random_instances;
use locdirac_harness::theorems::witness_graph;
use locdirac_harness::{
    default_catalog, random_search, run_suite, verify_theorem, CheckOptions, Filter, HypothesisMode, Property,
    SearchConfig, Status, SuiteConfig, SuiteKind, TheoremId,
};
use proptest::prelude::*;
use rayon::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (Just(n), proptest::collection::vec(any::<bool>(), pairs))
    })
    .prop_map(|(n, bits)| {
        let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
    })
}

fn arb_relabelled(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let perm = Just((0..g.n()).collect::<Vec<_>>()).prop_shuffle();
        (Just(g), perm)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn canonical_form_ignores_labels((g, perm) in arb_relabelled(9)) {
        let h = g.relabelled(&perm).unwrap();
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert!(are_isomorphic(&g, &h));
        prop_assert!(are_isomorphic(&canonical_form(&g).to_graph(), &g));
    }

    #[test]
    fn canonical_form_separates_edge_counts(g in arb_graph(7), h in arb_graph(7)) {
        if g.n() != h.n() || g.edge_count() != h.edge_count() {
            prop_assert_ne!(canonical_form(&g), canonical_form(&h));
        }
    }
}

#[test]
fn labelled_enumeration_matches_class_counts() {
    let classes = classes_up_to(6);
    for n in 1..=6 {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let forms: BTreeSet<_> = (0u32..1 << pairs.len())
            .into_par_iter()
            .map(|bits| {
                let edges = pairs.iter().enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, &e)| e);
                canonical_form(&Graph::from_edges(n, edges).unwrap())
            })
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        let expected: BTreeSet<_> = classes[n].iter().cloned().collect();
        assert_eq!(forms, expected, "n={n}");
    }
}

#[test]
fn literal_mode_witnesses_reverify() {
    let affected = [TheoremId::T1_5, TheoremId::C1_6, TheoremId::C1_7, TheoremId::T2_4, TheoremId::R2_5];
    let literal = CheckOptions { mode: HypothesisMode::Literal, ..CheckOptions::default() };
    let graphs: Vec<Graph> = classes_up_to(8).into_iter().flatten().map(|c| c.to_graph()).collect();
    let fails: Vec<(TheoremId, Graph)> = graphs
        .par_iter()
        .flat_map_iter(|g| {
            affected.iter().filter_map(move |&id| {
                let v = verify_theorem(id, g, &literal);
                assert_ne!(v.status, Status::SkippedBudget, "{id} on {g:?}");
                if v.status != Status::Fail {
                    return None;
                }
                let w = witness_graph(v.witness.as_ref().expect("fail carries a witness")).expect("witness is a graph");
                assert!(!w.is_connected(), "{id}: connected witness {w:?}");
                Some((id, w))
            })
        })
        .collect();
    // every witness fails again on its own, and is harmless under the default mode
    for (id, w) in &fails {
        assert_eq!(verify_theorem(*id, w, &literal).status, Status::Fail, "{id}");
        assert_ne!(verify_theorem(*id, w, &CheckOptions::default()).status, Status::Fail, "{id}");
    }
    for id in [TheoremId::T1_5, TheoremId::T2_4, TheoremId::R2_5] {
        assert!(fails.iter().any(|(f, _)| *f == id), "{id} has no disconnected counterexample on n <= 8");
    }
}

#[test]
fn catalog_suite_passes_everywhere() {
    let reports = run_suite(&SuiteConfig { kind: SuiteKind::Catalog, ..SuiteConfig::default() });
    assert_eq!(reports.len(), default_catalog().len() * TheoremId::ALL.len());
    let bad: Vec<_> = reports.iter().filter(|r| r.status != Status::Pass && r.status != Status::Skipped).collect();
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn random_suite_is_seeded() {
    let a = random_instances(5, 40, 10);
    let b = random_instances(5, 40, 10);
    let c = random_instances(6, 40, 10);
    let labels = |v: &[locdirac_harness::Instance]| v.iter().map(|i| i.label.clone()).collect::<Vec<_>>();
    assert_eq!(labels(&a), labels(&b));
    assert_ne!(labels(&a), labels(&c));
    assert!(a.iter().all(|i| (4..=10).contains(&i.graph.n()) && i.label.starts_with("sha256:")));
}

#[test]
fn random_search_is_deterministic_and_respects_the_filter() {
    let config = SearchConfig {
        filter: Filter::LocallyOre,
        property: Property::Hamiltonian,
        min_n: 3,
        max_n: 11,
        samples: 500,
        seed: 9,
        bases: default_catalog(),
        ..SearchConfig::default()
    };
    let a = random_search(&config);
    let b = random_search(&config);
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    assert!(a.counterexample.is_none());
    assert!(a.total_tested() > 0);
    assert_eq!(a.total_visited(), 500);
}
