//! Canonical labelling and isomorphism classes of small graphs.
//!
//! The labelling refines the ordered partition by neighbour counts, then
//! individualizes vertices of the first non-singleton cell and keeps the
//! lexicographically largest adjacency code over all leaves. Twins in the
//! target cell are interchangeable, so only one of each twin class is
//! branched on.

use std::collections::BTreeSet;

use locdirac_core::{to_edge_list, Graph, VertexSet};
use rayon::prelude::*;
use sha2::{Digest, Sha256};

/// Upper-triangle adjacency bits of the canonically relabelled graph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: usize,
    code: Vec<u64>,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn to_graph(&self) -> Graph {
        let mut edges = Vec::new();
        let mut bit = 0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.code[bit / 64] >> (bit % 64) & 1 == 1 {
                    edges.push((i, j));
                }
                bit += 1;
            }
        }
        Graph::from_edges(self.n, edges).expect("pairs in range")
    }
}

fn code_of(g: &Graph, order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let mut code = vec![0u64; (n * n.saturating_sub(1) / 2).div_ceil(64)];
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if g.adjacent(order[i], order[j]) {
                code[bit / 64] |= 1 << (bit % 64);
            }
            bit += 1;
        }
    }
    code
}

/// Splits cells by neighbour counts until the partition is equitable.
fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    let n = g.n();
    'again: loop {
        for s in 0..cells.len() {
            let splitter = VertexSet::from_members(n, cells[s].iter().copied()).expect("in range");
            for c in 0..cells.len() {
                if cells[c].len() == 1 {
                    continue;
                }
                let mut keyed: Vec<(usize, usize)> =
                    cells[c].iter().map(|&v| (g.neighbours(v).intersection_len(&splitter), v)).collect();
                if keyed.iter().all(|&(k, _)| k == keyed[0].0) {
                    continue;
                }
                keyed.sort_by_key(|&(k, _)| k);
                let mut parts: Vec<Vec<usize>> = Vec::new();
                for (i, &(k, v)) in keyed.iter().enumerate() {
                    if i == 0 || keyed[i - 1].0 != k {
                        parts.push(Vec::new());
                    }
                    parts.last_mut().unwrap().push(v);
                }
                cells.splice(c..=c, parts);
                continue 'again;
            }
        }
        return;
    }
}

fn twins(g: &Graph, u: usize, v: usize) -> bool {
    let mut a = g.neighbours(u).clone();
    let mut b = g.neighbours(v).clone();
    a.remove(v);
    b.remove(u);
    a == b
}

struct Best {
    code: Vec<u64>,
    order: Vec<usize>,
}

fn search(g: &Graph, mut cells: Vec<Vec<usize>>, best: &mut Option<Best>) {
    refine(g, &mut cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let code = code_of(g, &order);
        if best.as_ref().is_none_or(|b| code > b.code) {
            *best = Some(Best { code, order });
        }
        return;
    };
    let cell = cells[target].clone();
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cell {
        if tried.iter().any(|&u| twins(g, u, v)) {
            continue;
        }
        tried.push(v);
        let mut next = cells.clone();
        let rest: Vec<usize> = cell.iter().copied().filter(|&u| u != v).collect();
        next.splice(target..=target, [vec![v], rest]);
        search(g, next, best);
    }
}

/// `order[i]` is the vertex placed at position i by the canonical labelling.
pub fn canonical_order(g: &Graph) -> Vec<usize> {
    if g.n() == 0 {
        return Vec::new();
    }
    let mut best = None;
    search(g, vec![(0..g.n()).collect()], &mut best);
    best.expect("at least one leaf").order
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    CanonicalForm { n: g.n(), code: code_of(g, &canonical_order(g)) }
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg = g.degrees().to_vec();
    let mut dh = h.degrees().to_vec();
    dg.sort_unstable();
    dh.sort_unstable();
    dg == dh && canonical_form(g) == canonical_form(h)
}

/// Representatives of the classes on `n` vertices, from those on n − 1.
pub fn extend_classes(smaller: &[CanonicalForm]) -> Vec<CanonicalForm> {
    let found: BTreeSet<CanonicalForm> = smaller
        .par_iter()
        .flat_map_iter(|form| {
            let g = form.to_graph();
            let k = g.n();
            (0u64..1 << k).map(move |mask| {
                let h = g
                    .extended(1, (0..k).filter(|&v| mask >> v & 1 == 1).map(|v| (v, k)))
                    .expect("in range");
                canonical_form(&h)
            })
        })
        .collect();
    found.into_iter().collect()
}

/// Isomorphism classes for every order 0..=max_n, each sorted by canonical
/// form.
pub fn classes_up_to(max_n: usize) -> Vec<Vec<CanonicalForm>> {
    let mut levels = vec![vec![canonical_form(&Graph::empty(0))]];
    for _ in 0..max_n {
        let next = extend_classes(levels.last().unwrap());
        levels.push(next);
    }
    levels
}

/// Short content hash of the labelled edge list, e.g. `sha256:1f0c…`.
pub fn graph_hash(g: &Graph) -> String {
    let digest = Sha256::digest(to_edge_list(g).as_bytes());
    format!("sha256:{}", hex::encode(&digest[..8]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use locdirac_core::families::*;

    #[test]
    fn relabelling_preserves_the_form() {
        let g = petersen();
        let perm = [3, 7, 1, 9, 0, 2, 8, 4, 6, 5];
        assert_eq!(canonical_form(&g), canonical_form(&g.relabelled(&perm).unwrap()));
        let round = canonical_form(&g).to_graph();
        assert_eq!(canonical_form(&round), canonical_form(&g));
        assert_eq!(round.edge_count(), 15);
    }

    #[test]
    fn distinguishes_cospectral_style_pairs() {
        // C_6 and 2K_3 are both 2-regular on six vertices
        let two = complete(3).disjoint_union(&complete(3));
        assert!(!are_isomorphic(&cycle(6), &two));
        assert!(are_isomorphic(&complete_bipartite(2, 3), &complete_bipartite(3, 2)));
    }

    #[test]
    fn small_class_counts() {
        let counts: Vec<usize> = classes_up_to(5).iter().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34]);
    }

    #[test]
    fn hash_is_labelled() {
        assert_eq!(graph_hash(&path(3)), graph_hash(&path(3)));
        assert_ne!(graph_hash(&path(3)), graph_hash(&path(3).relabelled(&[1, 0, 2]).unwrap()));
        assert!(graph_hash(&path(3)).starts_with("sha256:"));
    }
}
