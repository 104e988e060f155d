#![allow(dead_code)]

use locdirac_core::Graph;
use proptest::prelude::*;

/// Graphs on 1..=max_n vertices with each pair present independently.
pub fn graphs(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| from_bits(n, &bits))
    })
}

pub fn from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[k] {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Every labelled graph on n vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = n * (n - 1) / 2;
    (0u64..1 << pairs).map(move |mask| {
        let bits: Vec<bool> = (0..pairs).map(|k| mask >> k & 1 == 1).collect();
        from_bits(n, &bits)
    })
}

/// All-pairs distances by Floyd–Warshall; `None` is unreachable.
pub fn floyd(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.n();
    let mut d = vec![vec![None; n]; n];
    for u in 0..n {
        d[u][u] = Some(0);
        for v in 0..n {
            if g.adjacent(u, v) {
                d[u][v] = Some(1);
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}
