mod common;

use std::ops::ControlFlow;

use common::{all_graphs, graphs};
use locdirac_core::cycles::*;
use locdirac_core::families::*;
use locdirac_core::invariants::girth;
use locdirac_core::predicates::{is_closed_locally_ore, is_locally_dirac, satisfies_dirac};
use locdirac_core::{Distance, Graph};
use proptest::prelude::*;

fn all_cycles(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_cycle(g, &Budget::default(), |c| {
        out.push(c.to_vec());
        ControlFlow::Continue(())
    })
    .unwrap();
    out
}

fn check_moves_against_exhaustive(g: &Graph) -> Result<(), TestCaseError> {
    let b = Budget::default();
    for seq in all_cycles(g) {
        if seq.len() == g.n() {
            continue;
        }
        let c = validate_cycle(g, &seq).unwrap();
        let by_moves = find_extension_by_moves(g, &c).unwrap();
        let exhaustive = find_extension_exhaustive(g, &c, &b).unwrap();
        if let Some(m) = &by_moves {
            prop_assert!(exhaustive.is_some(), "move {:?} but no exhaustive extension", m);
            let after = &m.cycle_after;
            prop_assert_eq!(validate_cycle(g, after.vertices()).unwrap(), after.clone());
            prop_assert_eq!(after.len(), c.len() + 1);
            prop_assert!(c.vertices().iter().all(|&v| after.contains(v)));
            prop_assert!(after.contains(m.x) && !c.contains(m.x));
        }
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn moves_are_sound_and_contained(g in graphs(8)) {
        check_moves_against_exhaustive(&g)?;
    }

    #[test]
    fn hamiltonicity_agrees_with_spectrum(g in graphs(9)) {
        let b = Budget::default();
        let spectrum = cycle_length_spectrum(&g, &b).unwrap();
        prop_assert_eq!(is_hamiltonian(&g, &b).unwrap(), spectrum.contains(&g.n()));
        prop_assert_eq!(spectrum.first().copied().map_or(Distance::Infinite, Distance::Finite), girth(&g));
        let lengths: std::collections::BTreeSet<usize> = all_cycles(&g).iter().map(|c| c.len()).collect();
        prop_assert_eq!(&lengths, &spectrum);
    }

    #[test]
    fn extendability_methods_agree(g in graphs(8)) {
        let b = Budget::default();
        let a = is_cycle_extendable_graph(&g, ExtendabilityMethod::Enumerate, &b).unwrap();
        let v = is_cycle_extendable_graph(&g, ExtendabilityMethod::VertexSets, &b).unwrap();
        prop_assert_eq!(a.extendable, v.extendable);
        for w in [a.witness, v.witness].into_iter().flatten() {
            prop_assert!(w.len() < g.n());
            prop_assert_eq!(find_extension_exhaustive(&g, &w, &b).unwrap(), None);
        }
    }

    #[test]
    fn twelve_extension_contains_the_cycle(g in graphs(8)) {
        let b = Budget::default();
        for seq in all_cycles(&g).into_iter().filter(|s| s.len() < g.n()).take(20) {
            let c = validate_cycle(&g, &seq).unwrap();
            if let Some(longer) = find_12_extension(&g, &c, &b).unwrap() {
                prop_assert!((1..=2).contains(&(longer.len() - c.len())));
                prop_assert!(c.vertices().iter().all(|&v| longer.contains(v)));
                validate_cycle(&g, longer.vertices()).unwrap();
            }
        }
    }
}

#[test]
fn moves_contained_in_exhaustive_on_all_small_graphs() {
    for n in 3..=6 {
        for g in all_graphs(n) {
            check_moves_against_exhaustive(&g).unwrap();
        }
    }
}

#[test]
fn hamiltonicity_examples() {
    let b = Budget::default();
    assert!(!is_hamiltonian(&petersen(), &b).unwrap());
    for g in [complete(6), complete_bipartite(4, 4), complete_multipartite(3, 2).unwrap(), cycle_power_3k(3).unwrap()] {
        assert!(satisfies_dirac(&g));
        assert!(is_hamiltonian(&g, &b).unwrap());
    }
    for m in 3..=6 {
        let g = path_strong_k2(m).unwrap();
        assert!(is_closed_locally_ore(&g));
        assert!(is_hamiltonian(&g, &b).unwrap());
    }
}

#[test]
fn growth_on_locally_dirac_products() {
    let b = Budget::default();
    let mut catalog = Vec::new();
    for m in 2..=4 {
        catalog.push(path_strong_k3(m).unwrap());
    }
    catalog.push(cycle_strong_k3(4).unwrap());
    catalog.push(join_with_clique(&cycle(5)).unwrap());
    catalog.push(join_with_clique(&path(7)).unwrap());
    for g in catalog {
        assert!(is_locally_dirac(&g));
        let trace = hamilton_by_extension(&g, &b).unwrap().expect("hamiltonian");
        assert!(trace.verify(&g));
        if trace.single_steps() {
            assert_eq!(trace.moves.len(), g.n() - 3);
        }
        let spectrum = cycle_length_spectrum(&g, &b).unwrap();
        assert!(*spectrum.last().unwrap() >= trace.cycle.len());
    }
}

#[test]
fn full_extendability_examples() {
    let b = Budget::default();
    for method in [ExtendabilityMethod::Enumerate, ExtendabilityMethod::VertexSets] {
        assert!(is_fully_cycle_extendable(&path_strong_k3(3).unwrap(), method, &b).unwrap());
        assert!(is_fully_cycle_extendable(&complete(5), method, &b).unwrap());
        assert!(!is_fully_cycle_extendable(&cycle(6), method, &b).unwrap());
    }
}

#[test]
fn move_trace_serialises() {
    let g = complete(5);
    let c = validate_cycle(&g, &[0, 1, 2, 3]).unwrap();
    let m = find_extension_by_moves(&g, &c).unwrap().unwrap();
    let json = serde_json::to_string(&m).unwrap();
    assert_eq!(json, r#"{"move":"Insert","x":4,"indices":[0],"cycle_after":[0,3,2,1,4]}"#);
}

#[test]
fn petersen_five_cycles_do_not_extend() {
    // every 5-cycle of the Petersen graph misses a 6-cycle superset
    let g = petersen();
    let b = Budget::default();
    let fives: Vec<_> = all_cycles(&g).into_iter().filter(|c| c.len() == 5).collect();
    assert_eq!(fives.len(), 12);
    for seq in fives {
        let c = validate_cycle(&g, &seq).unwrap();
        assert_eq!(find_extension_exhaustive(&g, &c, &b).unwrap(), None);
    }
}
