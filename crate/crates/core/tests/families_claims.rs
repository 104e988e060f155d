use locdirac_core::families::*;
use locdirac_core::invariants::{diameter, edge_connectivity, is_planar, vertex_connectivity};
use locdirac_core::predicates::*;
use locdirac_core::{Distance, Graph, VertexSet};

#[test]
fn strong_products_with_k3() {
    for m in 2..=20 {
        let g = path_strong_k3(m).unwrap();
        assert_eq!(g.n(), 3 * m);
        assert!(is_locally_dirac(&g), "P_{m} x K_3");
        assert_eq!(diameter(&g), Distance::Finite(m - 1));
        // (i, a) -> 3i + a: the end layers have degree 5
        assert_eq!(g.degree(0), 5);
        assert_eq!(g.degree(3 * m - 1), 5);
    }
    for m in 3..=20 {
        let g = cycle_strong_k3(m).unwrap();
        assert_eq!(g.n(), 3 * m);
        assert!(is_locally_dirac(&g), "C_{m} x K_3");
        assert_eq!(diameter(&g), Distance::Finite(m / 2));
    }
    let g = path_strong_k3(4).unwrap();
    assert_eq!(vertex_connectivity(&g).value, 3);
    assert_eq!(edge_connectivity(&g).value, 5);
    assert_eq!(g.min_degree(), 5);
}

#[test]
fn strong_products_with_k2() {
    for m in 3..=30 {
        let g = path_strong_k2(m).unwrap();
        assert_eq!(g.n(), 2 * m);
        assert!(is_planar(&g));
        assert!(is_closed_locally_dirac(&g));
        assert!(is_closed_locally_ore(&g));
    }
    assert!(!is_locally_dirac(&path_strong_k2(4).unwrap()));
}

#[test]
fn joins_with_cliques() {
    let bases: Vec<Graph> =
        (3..=15).flat_map(|n| [path(n), cycle(n), star(n - 1), complete(n), petersen()]).collect();
    for base in bases {
        let n = base.n();
        let g = join_with_clique(&base).unwrap();
        assert!(is_locally_dirac(&g));
        let first = VertexSet::from_members(2 * n, 0..n).unwrap();
        assert_eq!(g.induced_subgraph(&first).unwrap().0, base);
    }
}

#[test]
fn lambda_gap() {
    for k in 3..=4 {
        let g = lambda_gap_family(k).unwrap();
        assert!(is_locally_ore(&g));
        assert_eq!(g.min_degree(), k * k + 1);
        assert_eq!(edge_connectivity(&g).value, k * k);
    }
    let g = lambda_gap_family(3).unwrap();
    assert_eq!(g.n(), 22);
    // both cliques are joined through k vertices on each side
    assert_eq!(vertex_connectivity(&g).value, 3);
}

#[test]
fn ore_with_minimum_degree_three() {
    for m in 3..=19 {
        let g = ore_min_degree3(m).unwrap();
        assert_eq!(g.n(), 3 * m + 1);
        assert!(is_locally_ore(&g));
        assert_eq!(g.min_degree(), 3);
        assert!(!is_locally_dirac(&g));
        assert!(vertex_connectivity(&g).value >= 3);
    }
    assert_eq!(vertex_connectivity(&ore_min_degree3(3).unwrap()).value, 3);
}

#[test]
fn diameter_extremal_family() {
    for n in 9..=40 {
        let g = ore_diameter_extremal(n).unwrap();
        assert_eq!(g.n(), n);
        assert!(is_locally_ore(&g), "n = {n}");
        assert_eq!(diameter(&g), Distance::Finite((n + 1) / 3), "n = {n}");
    }
}

#[test]
fn dirac_families() {
    for half in 2..=10 {
        let g = balanced_complete_bipartite(half).unwrap();
        assert!(satisfies_dirac(&g));
        assert!(!is_locally_dirac(&g));
        assert!(is_balanced_complete_bipartite(&g));
    }
    for k in 3..=6 {
        for p in 1..=5 {
            let g = complete_multipartite(k, p).unwrap();
            assert_eq!(g.n(), k * p);
            assert!(g.degrees().iter().all(|&d| d == (k - 1) * p));
            assert!(satisfies_dirac(&g), "k={k} p={p}");
            assert!(is_locally_dirac(&g), "k={k} p={p}");
        }
    }
    for k in 1..=12 {
        let g = cycle_power_3k(k).unwrap();
        assert_eq!(g.n(), 3 * k);
        assert!(g.degrees().iter().all(|&d| d == (2 * k).min(3 * k - 1)));
        assert!(satisfies_dirac(&g));
        assert!(is_locally_dirac(&g));
    }
}

#[test]
fn every_family_id_round_trips() {
    for family in Family::ALL {
        let text = family.to_string();
        assert_eq!(text.parse::<Family>().unwrap(), family);
        assert_eq!(text.replace('-', "_").parse::<Family>().unwrap(), family);
    }
}
