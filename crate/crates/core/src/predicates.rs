//! Degree conditions and local properties.
//!
//! A graph is *locally P* when ⟨N(v)⟩ has P for every vertex v, and *closed
//! locally P* when ⟨N[v]⟩ does. All half-degree comparisons are done in
//! integers (`2·deg ≥ d`).
//!
//! Vertices of degree 0 impose no local constraint. Otherwise the defining
//! inequality is applied literally, so a vertex of degree 1 makes a graph
//! fail to be locally Dirac (its neighbour has local degree 0). The
//! alternative reading, which exempts neighbourhoods of order below 3, is
//! available through [`LocalConvention`].

use num_rational::Ratio;
use serde::Serialize;

use crate::cycles::{hamilton_cycle, Budget};
use crate::error::PredicateError;
use crate::graph::Graph;

/// A neighbour `vertex` of the witness centre and its degree inside the
/// centre's (open or closed) neighbourhood.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LocalDegree {
    pub vertex: usize,
    pub local_degree: usize,
}

/// The first vertex whose neighbourhood violates a local condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalWitness {
    pub vertex: usize,
    pub degree: usize,
    /// One violating neighbour (Dirac) or a violating non-adjacent pair (Ore).
    pub detail: Vec<LocalDegree>,
}

/// How to treat neighbourhoods too small for Dirac's condition to be
/// meaningful.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LocalConvention {
    /// Apply `2·deg_⟨N(v)⟩(u) ≥ deg(v)` to every neighbourhood.
    #[default]
    Literal,
    /// Only neighbourhoods of order at least 3 are constrained.
    OrderAtLeastThree,
}

/// δ(G) ≥ n/2 with n ≥ 3.
pub fn satisfies_dirac(g: &Graph) -> bool {
    g.n() >= 3 && 2 * g.min_degree() >= g.n()
}

/// deg(u) + deg(v) ≥ n for every non-adjacent pair, with n ≥ 3.
pub fn satisfies_ore(g: &Graph) -> bool {
    let n = g.n();
    n >= 3
        && (0..n).all(|u| (u + 1..n).all(|v| g.adjacent(u, v) || g.degree(u) + g.degree(v) >= n))
}

pub fn locally_dirac_violation(g: &Graph, convention: LocalConvention) -> Option<LocalWitness> {
    for v in 0..g.n() {
        let d = g.degree(v);
        if d == 0 || (convention == LocalConvention::OrderAtLeastThree && d < 3) {
            continue;
        }
        for u in g.neighbours(v).iter() {
            let ld = g.local_degree(v, u);
            if 2 * ld < d {
                return Some(LocalWitness {
                    vertex: v,
                    degree: d,
                    detail: vec![LocalDegree { vertex: u, local_degree: ld }],
                });
            }
        }
    }
    None
}

pub fn is_locally_dirac(g: &Graph) -> bool {
    locally_dirac_violation(g, LocalConvention::Literal).is_none()
}

pub fn is_locally_dirac_with(g: &Graph, convention: LocalConvention) -> bool {
    locally_dirac_violation(g, convention).is_none()
}

/// Non-adjacent pairs u < w in N(v) with `ld(u) + ld(w) + extra < bound`.
fn local_ore_scan(g: &Graph, extra: usize, bound: impl Fn(usize) -> usize) -> Option<LocalWitness> {
    for v in 0..g.n() {
        let d = g.degree(v);
        if d == 0 {
            continue;
        }
        let nbrs: Vec<usize> = g.neighbours(v).to_vec();
        let local: Vec<usize> = nbrs.iter().map(|&u| g.local_degree(v, u)).collect();
        for (a, &u) in nbrs.iter().enumerate() {
            for (b, &w) in nbrs.iter().enumerate().skip(a + 1) {
                if g.adjacent(u, w) {
                    continue;
                }
                if local[a] + local[b] + extra < bound(d) {
                    return Some(LocalWitness {
                        vertex: v,
                        degree: d,
                        detail: vec![
                            LocalDegree { vertex: u, local_degree: local[a] + extra / 2 },
                            LocalDegree { vertex: w, local_degree: local[b] + extra / 2 },
                        ],
                    });
                }
            }
        }
    }
    None
}

pub fn locally_ore_violation(g: &Graph) -> Option<LocalWitness> {
    local_ore_scan(g, 0, |d| d)
}

pub fn is_locally_ore(g: &Graph) -> bool {
    locally_ore_violation(g).is_none()
}

/// ⟨N[v]⟩ satisfies Ore's condition for every v. The centre is adjacent to
/// everything in N[v], so only pairs inside N(v) can be non-adjacent; each
/// gains one from the centre. Reported local degrees are closed ones.
pub fn closed_locally_ore_violation(g: &Graph) -> Option<LocalWitness> {
    local_ore_scan(g, 2, |d| d + 1)
}

pub fn is_closed_locally_ore(g: &Graph) -> bool {
    closed_locally_ore_violation(g).is_none()
}

/// ⟨N[v]⟩ satisfies Dirac's condition for every v of positive degree.
pub fn is_closed_locally_dirac(g: &Graph) -> bool {
    (0..g.n()).all(|v| {
        let d = g.degree(v);
        d == 0 || g.neighbours(v).iter().all(|u| 2 * (g.local_degree(v, u) + 1) > d)
    })
}

/// ⟨N(v)⟩ is connected for every v of positive degree.
pub fn is_locally_connected(g: &Graph) -> bool {
    (0..g.n()).all(|v| {
        let nbhd = g.neighbours(v);
        nbhd.is_empty() || g.induced_subgraph(nbhd).map(|(h, _)| h.is_connected()).unwrap_or(false)
    })
}

/// No induced K_{1,3}: every α(⟨N(v)⟩) ≤ 2.
pub fn is_claw_free(g: &Graph) -> bool {
    (0..g.n()).all(|v| {
        let nbrs = g.neighbours(v).to_vec();
        nbrs.iter().enumerate().all(|(i, &a)| {
            nbrs[i + 1..].iter().enumerate().all(|(j, &b)| {
                g.adjacent(a, b) || nbrs[i + 1 + j + 1..].iter().all(|&c| g.adjacent(a, c) || g.adjacent(b, c))
            })
        })
    })
}

/// ⟨N(v)⟩ is an isometric subgraph of G for every v.
pub fn is_locally_isometric(g: &Graph) -> bool {
    (0..g.n()).all(|v| {
        let nbhd = g.neighbours(v);
        if nbhd.len() < 2 {
            return true;
        }
        let (h, map) = g.induced_subgraph(nbhd).expect("neighbourhood in range");
        (0..h.n()).all(|i| {
            let in_h = h.bfs_from(i);
            let in_g = g.bfs_from(map[i]);
            (0..h.n()).all(|j| in_h[j] == in_g[map[j]])
        })
    })
}

/// Fraction of neighbour pairs of `v` that are adjacent, as an exact ratio.
pub fn clustering_coefficient(g: &Graph, v: usize) -> Result<Ratio<u64>, PredicateError> {
    let nbhd = g.open_neighbourhood(v)?;
    let d = nbhd.len();
    if d < 2 {
        return Err(PredicateError::DegreeTooSmall { vertex: v, degree: d });
    }
    let twice_edges: usize = nbhd.iter().map(|u| g.local_degree(v, u)).sum();
    let pairs = d * (d - 1) / 2;
    Ok(Ratio::new((twice_edges / 2) as u64, pairs as u64))
}

/// Smallest clustering coefficient over all vertices.
pub fn min_clustering_coefficient(g: &Graph) -> Result<Ratio<u64>, PredicateError> {
    let mut best: Option<Ratio<u64>> = None;
    for v in 0..g.n() {
        let c = clustering_coefficient(g, v)?;
        best = Some(best.map_or(c, |b| b.min(c)));
    }
    best.ok_or(PredicateError::DegreeTooSmall { vertex: 0, degree: 0 })
}

/// ⟨N(v)⟩ is hamiltonian for every v of positive degree.
pub fn is_locally_hamiltonian(g: &Graph, budget: &Budget) -> Result<bool, PredicateError> {
    for v in 0..g.n() {
        let nbhd = g.neighbours(v);
        if nbhd.is_empty() {
            continue;
        }
        let (h, _) = g.induced_subgraph(nbhd)?;
        if hamilton_cycle(&h, budget)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_bipartite(g: &Graph) -> bool {
    let mut side = vec![None; g.n()];
    for s in 0..g.n() {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            let sv = side[v].unwrap();
            for w in g.neighbours(v).iter() {
                match side[w] {
                    None => {
                        side[w] = Some(!sv);
                        stack.push(w);
                    }
                    Some(sw) if sw == sv => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

/// True when G is K_{n/2,n/2} (under any labelling).
pub fn is_balanced_complete_bipartite(g: &Graph) -> bool {
    let n = g.n();
    if n < 2 || n % 2 == 1 || !g.is_connected() || !is_bipartite(g) {
        return false;
    }
    g.edge_count() == (n / 2) * (n / 2) && g.degrees().iter().all(|&d| d == n / 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    #[test]
    fn dirac_and_ore_conditions() {
        assert!(satisfies_dirac(&complete(4)));
        assert!(satisfies_dirac(&cycle(4)));
        assert!(!satisfies_dirac(&cycle(5)));
        assert!(!satisfies_dirac(&complete(2)));
        assert!(satisfies_ore(&complete(5)));
        assert!(satisfies_ore(&complete_bipartite(3, 3)));
        assert!(!satisfies_ore(&petersen()));
    }

    #[test]
    fn locally_dirac_examples() {
        assert!(is_locally_dirac(&path_strong_k3(3).unwrap()));
        assert!(!is_locally_dirac(&complete_bipartite(4, 4)));
        let k5e = complete(5).without_edge(0, 1).unwrap();
        assert!(is_locally_dirac(&k5e));
    }

    #[test]
    fn witness_is_lexicographically_first() {
        let w = locally_dirac_violation(&complete_bipartite(4, 4), LocalConvention::Literal).unwrap();
        assert_eq!(w.vertex, 0);
        assert_eq!(w.degree, 4);
        assert_eq!(w.detail, vec![LocalDegree { vertex: 4, local_degree: 0 }]);

        let w = locally_ore_violation(&cycle(6)).unwrap();
        assert_eq!(w.vertex, 0);
        assert_eq!(
            w.detail,
            vec![LocalDegree { vertex: 1, local_degree: 0 }, LocalDegree { vertex: 5, local_degree: 0 }]
        );
    }

    #[test]
    fn degree_one_conventions() {
        // a pendant edge on a triangle: the literal reading rejects it
        let g = complete(3).extended(1, [(2, 3)]).unwrap();
        assert!(!is_locally_dirac(&g));
        let p2 = path(2);
        assert!(!is_locally_dirac(&p2));
        assert!(is_locally_dirac_with(&p2, LocalConvention::OrderAtLeastThree));
        assert!(is_locally_dirac(&Graph::empty(3)));
    }

    #[test]
    fn locally_ore_examples() {
        assert!(is_locally_ore(&lambda_gap_family(3).unwrap()));
        assert!(!is_locally_ore(&cycle(6)));
        assert!(is_locally_ore(&path_strong_k3(4).unwrap()));
    }

    #[test]
    fn closed_locally_ore_examples() {
        assert!(is_closed_locally_ore(&path_strong_k2(4).unwrap()));
        assert!(!is_closed_locally_ore(&cycle(5)));
        let w = closed_locally_ore_violation(&cycle(5)).unwrap();
        assert_eq!(w.detail.iter().map(|d| d.local_degree).collect::<Vec<_>>(), vec![1, 1]);
    }

    #[test]
    fn local_connectivity_and_claws() {
        assert!(!is_locally_connected(&cycle(5)));
        assert!(is_locally_connected(&complete(4)));
        assert!(is_locally_connected(&path_strong_k3(3).unwrap()));
        assert!(!is_claw_free(&star(3)));
        assert!(!is_claw_free(&complete_bipartite(4, 4)));
        assert!(is_claw_free(&cycle_strong_k3(6).unwrap()));
    }

    #[test]
    fn local_isometry() {
        assert!(is_locally_isometric(&complete(6)));
        assert!(!is_locally_isometric(&cycle(6)));
        assert!(is_locally_isometric(&path_strong_k3(3).unwrap()));
    }

    #[test]
    fn clustering() {
        assert_eq!(clustering_coefficient(&complete(3), 0).unwrap(), Ratio::new(1, 1));
        assert_eq!(clustering_coefficient(&star(3), 0).unwrap(), Ratio::new(0, 1));
        let p = path_strong_k3(3).unwrap();
        // end layer: all five neighbours are pairwise adjacent
        assert_eq!(clustering_coefficient(&p, 0).unwrap(), Ratio::new(1, 1));
        // middle layer: the two outer layers are not adjacent, 9 of 28 pairs missing
        assert_eq!(clustering_coefficient(&p, 4).unwrap(), Ratio::new(19, 28));
        assert!(matches!(
            clustering_coefficient(&star(3), 1),
            Err(PredicateError::DegreeTooSmall { vertex: 1, degree: 1 })
        ));
        assert_eq!(min_clustering_coefficient(&complete(5)).unwrap(), Ratio::new(1, 1));
        assert_eq!(min_clustering_coefficient(&cycle(4)).unwrap(), Ratio::new(0, 1));
        assert!(min_clustering_coefficient(&path(4)).is_err());
    }

    #[test]
    fn local_hamiltonicity() {
        let b = Budget::default();
        assert!(is_locally_hamiltonian(&complete(4), &b).unwrap());
        assert!(!is_locally_hamiltonian(&cycle(5), &b).unwrap());
        assert!(is_locally_hamiltonian(&path_strong_k3(4).unwrap(), &b).unwrap());
    }

    #[test]
    fn bipartite_recognition() {
        assert!(is_balanced_complete_bipartite(&complete_bipartite(3, 3)));
        assert!(!is_balanced_complete_bipartite(&complete_bipartite(2, 3)));
        assert!(!is_balanced_complete_bipartite(&cycle(6)));
        assert!(is_bipartite(&cycle(6)));
        assert!(!is_bipartite(&cycle(5)));
    }
}
