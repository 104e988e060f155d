//! Global structural invariants.

mod connectivity;
pub mod oracle;
mod planarity;

pub use connectivity::{
    edge_connectivity, separates_edges, separates_vertices, vertex_connectivity, ConnectivityCertificate, EdgeCut,
    VertexCut,
};
pub use planarity::{is_planar, planarity, KuratowskiKind, KuratowskiWitness, PlanarityCertificate};

use crate::graph::{Distance, Graph};

/// Largest eccentricity; `Infinite` when disconnected, 0 for n ≤ 1.
pub fn diameter(g: &Graph) -> Distance {
    let mut best = 0;
    for v in 0..g.n() {
        for d in g.bfs_from(v) {
            match d {
                Distance::Finite(d) => best = best.max(d),
                Distance::Infinite => return Distance::Infinite,
            }
        }
    }
    Distance::Finite(best)
}

pub fn eccentricity(g: &Graph, v: usize) -> Distance {
    g.bfs_from(v).into_iter().max().unwrap_or(Distance::Finite(0))
}

/// Length of a shortest cycle, `Infinite` for forests.
pub fn girth(g: &Graph) -> Distance {
    let n = g.n();
    let mut best = usize::MAX;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            if 2 * dist[v] + 1 >= best {
                break;
            }
            for w in g.neighbours(v).iter() {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if parent[v] != w {
                    best = best.min(dist[v] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Distance::Infinite
    } else {
        Distance::Finite(best)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    #[test]
    fn diameters() {
        assert_eq!(diameter(&path_strong_k3(5).unwrap()), Distance::Finite(4));
        assert_eq!(diameter(&cycle_strong_k3(10).unwrap()), Distance::Finite(5));
        assert_eq!(diameter(&complete(6)), Distance::Finite(1));
        assert_eq!(diameter(&Graph::empty(1)), Distance::Finite(0));
        assert_eq!(diameter(&Graph::empty(0)), Distance::Finite(0));
        assert_eq!(diameter(&Graph::empty(2)), Distance::Infinite);
        assert_eq!(eccentricity(&path(5), 0), Distance::Finite(4));
    }

    #[test]
    fn girths() {
        assert_eq!(girth(&cycle(7)), Distance::Finite(7));
        assert_eq!(girth(&path(7)), Distance::Infinite);
        assert_eq!(girth(&star(5)), Distance::Infinite);
        assert_eq!(girth(&petersen()), Distance::Finite(5));
        assert_eq!(girth(&complete_bipartite(3, 3)), Distance::Finite(4));
        assert_eq!(girth(&path_strong_k3(4).unwrap()), Distance::Finite(3));
        assert_eq!(girth(&cycle(4).disjoint_union(&cycle(6))), Distance::Finite(4));
    }
}
