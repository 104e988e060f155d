mod common;

use common::{all_graphs, graphs};
use locdirac_core::cycles::Budget;
use locdirac_core::families::*;
use locdirac_core::predicates::*;
use locdirac_core::Graph;
use num_rational::Ratio;
use proptest::prelude::*;

/// ⟨X⟩ as an adjacency matrix plus the list X.
fn local(g: &Graph, x: &[usize]) -> Vec<Vec<bool>> {
    x.iter().map(|&a| x.iter().map(|&b| g.adjacent(a, b)).collect()).collect()
}

fn nbrs(g: &Graph, v: usize) -> Vec<usize> {
    (0..g.n()).filter(|&u| g.adjacent(u, v)).collect()
}

fn deg_in(m: &[Vec<bool>], i: usize) -> usize {
    m[i].iter().filter(|&&b| b).count()
}

fn naive_dirac(g: &Graph) -> bool {
    let n = g.n();
    n >= 3 && (0..n).all(|v| 2 * nbrs(g, v).len() >= n)
}

fn naive_ore(g: &Graph) -> bool {
    let n = g.n();
    n >= 3
        && (0..n).all(|u| {
            (0..n).all(|v| u == v || g.adjacent(u, v) || nbrs(g, u).len() + nbrs(g, v).len() >= n)
        })
}

fn naive_locally_dirac(g: &Graph) -> bool {
    (0..g.n()).all(|v| {
        let x = nbrs(g, v);
        let m = local(g, &x);
        (0..x.len()).all(|i| 2 * deg_in(&m, i) >= x.len())
    })
}

fn naive_locally_ore(g: &Graph, closed: bool) -> bool {
    (0..g.n()).all(|v| {
        let mut x = nbrs(g, v);
        if x.is_empty() {
            return true;
        }
        let need = if closed {
            x.push(v);
            x.len()
        } else {
            x.len()
        };
        let m = local(g, &x);
        (0..x.len()).all(|i| (0..x.len()).all(|j| i == j || m[i][j] || deg_in(&m, i) + deg_in(&m, j) >= need))
    })
}

fn naive_connected(m: &[Vec<bool>]) -> bool {
    let k = m.len();
    if k == 0 {
        return false;
    }
    let mut seen = vec![false; k];
    seen[0] = true;
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..k {
            for j in 0..k {
                if seen[i] && m[i][j] && !seen[j] {
                    seen[j] = true;
                    changed = true;
                }
            }
        }
    }
    seen.iter().all(|&s| s)
}

fn naive_locally_connected(g: &Graph) -> bool {
    (0..g.n()).all(|v| {
        let x = nbrs(g, v);
        x.is_empty() || naive_connected(&local(g, &x))
    })
}

fn naive_claw_free(g: &Graph) -> bool {
    let n = g.n();
    for v in 0..n {
        let x = nbrs(g, v);
        for a in 0..x.len() {
            for b in a + 1..x.len() {
                for c in b + 1..x.len() {
                    if !g.adjacent(x[a], x[b]) && !g.adjacent(x[a], x[c]) && !g.adjacent(x[b], x[c]) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn naive_locally_isometric(g: &Graph) -> bool {
    let whole = common::floyd(g);
    (0..g.n()).all(|v| {
        let x = nbrs(g, v);
        let sub = Graph::from_edges(
            x.len(),
            (0..x.len()).flat_map(|i| (i + 1..x.len()).map(move |j| (i, j))).filter(|&(i, j)| g.adjacent(x[i], x[j])),
        )
        .unwrap();
        let inner = common::floyd(&sub);
        (0..x.len()).all(|i| (0..x.len()).all(|j| inner[i][j] == whole[x[i]][x[j]]))
    })
}

fn naive_clustering(g: &Graph, v: usize) -> Option<Ratio<u64>> {
    let x = nbrs(g, v);
    let d = x.len() as u64;
    if d < 2 {
        return None;
    }
    let mut e = 0;
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            if g.adjacent(x[i], x[j]) {
                e += 1;
            }
        }
    }
    Some(Ratio::new(e, d * (d - 1) / 2))
}

fn check_all(g: &Graph) -> Result<(), TestCaseError> {
    prop_assert_eq!(satisfies_dirac(g), naive_dirac(g));
    prop_assert_eq!(satisfies_ore(g), naive_ore(g));
    prop_assert_eq!(is_locally_dirac(g), naive_locally_dirac(g));
    prop_assert_eq!(is_locally_ore(g), naive_locally_ore(g, false));
    prop_assert_eq!(is_closed_locally_ore(g), naive_locally_ore(g, true));
    prop_assert_eq!(is_locally_connected(g), naive_locally_connected(g));
    prop_assert_eq!(is_claw_free(g), naive_claw_free(g));
    prop_assert_eq!(is_locally_isometric(g), naive_locally_isometric(g));
    for v in 0..g.n() {
        prop_assert_eq!(clustering_coefficient(g, v).ok(), naive_clustering(g, v));
    }
    Ok(())
}

fn check_implications(g: &Graph) -> Result<(), TestCaseError> {
    if is_locally_dirac(g) {
        prop_assert!(is_locally_ore(g));
        prop_assert!(is_locally_connected(g));
        prop_assert!(is_locally_isometric(g));
        if g.min_degree() >= 2 {
            prop_assert!(min_clustering_coefficient(g).unwrap() >= Ratio::new(1, 2));
        }
    }
    if is_locally_ore(g) {
        prop_assert!(is_closed_locally_ore(g));
    }
    if satisfies_dirac(g) {
        prop_assert!(satisfies_ore(g));
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn predicates_match_naive_references(g in graphs(7)) {
        check_all(&g)?;
        check_implications(&g)?;
    }

    #[test]
    fn witnesses_point_at_real_violations(g in graphs(7)) {
        if let Some(w) = locally_dirac_violation(&g, LocalConvention::Literal) {
            prop_assert_eq!(w.degree, g.degree(w.vertex));
            for d in &w.detail {
                prop_assert!(g.adjacent(w.vertex, d.vertex));
                prop_assert_eq!(d.local_degree, g.local_degree(w.vertex, d.vertex));
                prop_assert!(2 * d.local_degree < w.degree);
            }
        }
        if let Some(w) = locally_ore_violation(&g) {
            let [a, b] = [&w.detail[0], &w.detail[1]];
            prop_assert!(!g.adjacent(a.vertex, b.vertex));
            prop_assert!(a.local_degree + b.local_degree < w.degree);
        }
    }
}

#[test]
fn exhaustive_agreement_up_to_six_vertices() {
    for n in 1..=6 {
        for g in all_graphs(n) {
            check_all(&g).unwrap();
            check_implications(&g).unwrap();
        }
    }
}

#[test]
fn documented_examples() {
    assert!(satisfies_dirac(&complete(4)));
    assert!(satisfies_dirac(&cycle(4)));
    assert!(!satisfies_dirac(&cycle(5)));
    assert!(satisfies_ore(&complete(5)));
    assert!(satisfies_ore(&complete_bipartite(3, 3)));
    assert!(!satisfies_ore(&petersen()));

    let p3k3 = path_strong_k3(3).unwrap();
    assert!(is_locally_dirac(&p3k3));
    assert!(!is_locally_dirac(&balanced_complete_bipartite(4).unwrap()));
    assert!(is_locally_dirac(&complete(5).without_edge(0, 1).unwrap()));

    assert!(is_locally_ore(&lambda_gap_family(3).unwrap()));
    assert!(!is_locally_ore(&cycle(6)));
    assert!(is_closed_locally_ore(&path_strong_k2(4).unwrap()));
    assert!(!is_closed_locally_ore(&cycle(5)));

    assert!(!is_locally_connected(&cycle(5)));
    assert!(is_locally_connected(&complete(4)));
    assert!(is_locally_connected(&p3k3));
    assert!(!is_claw_free(&star(3)));
    assert!(is_claw_free(&cycle_strong_k3(6).unwrap()));
    assert!(!is_claw_free(&balanced_complete_bipartite(4).unwrap()));
    assert!(is_locally_isometric(&complete(6)));
    assert!(!is_locally_isometric(&cycle(6)));
    assert!(is_locally_isometric(&p3k3));

    assert_eq!(clustering_coefficient(&complete(3), 0).unwrap(), Ratio::new(1, 1));
    assert_eq!(clustering_coefficient(&star(3), 0).unwrap(), Ratio::new(0, 1));
    assert_eq!(clustering_coefficient(&p3k3, 0).unwrap(), Ratio::new(1, 1));
    assert_eq!(clustering_coefficient(&p3k3, 4).unwrap(), Ratio::new(19, 28));
    assert!(clustering_coefficient(&path(3), 0).is_err());
    assert_eq!(min_clustering_coefficient(&complete(5)).unwrap(), Ratio::new(1, 1));
    assert_eq!(min_clustering_coefficient(&cycle(4)).unwrap(), Ratio::new(0, 1));

    let b = Budget::default();
    assert!(is_locally_hamiltonian(&complete(4), &b).unwrap());
    assert!(!is_locally_hamiltonian(&cycle(5), &b).unwrap());
    for m in 3..=6 {
        assert!(is_locally_hamiltonian(&path_strong_k3(m).unwrap(), &b).unwrap());
    }
}

#[test]
fn conventions_differ_only_on_small_neighbourhoods() {
    // a pendant path: literal reading fails, the order-three reading does not
    let p = path(4);
    assert!(!is_locally_dirac_with(&p, LocalConvention::Literal));
    assert!(is_locally_dirac_with(&p, LocalConvention::OrderAtLeastThree));
    for n in 1..=6 {
        for g in all_graphs(n) {
            if is_locally_dirac_with(&g, LocalConvention::Literal) {
                assert!(is_locally_dirac_with(&g, LocalConvention::OrderAtLeastThree));
            }
            if g.min_degree() >= 3 {
                assert_eq!(
                    is_locally_dirac_with(&g, LocalConvention::Literal),
                    is_locally_dirac_with(&g, LocalConvention::OrderAtLeastThree)
                );
            }
        }
    }
}
