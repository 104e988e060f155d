//! Vertex and edge connectivity via unit-capacity max-flow.

use std::collections::VecDeque;

use serde::Serialize;

use crate::graph::{Graph, VertexSet};

/// κ or λ together with a separator of that size.
///
/// `separator` is `None` only for complete graphs under κ, which have no
/// vertex cut.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectivityCertificate<T> {
    pub value: usize,
    pub separator: Option<Vec<T>>,
}

pub type VertexCut = ConnectivityCertificate<usize>;
pub type EdgeCut = ConnectivityCertificate<(usize, usize)>;

const INF: u32 = u32::MAX / 4;

struct FlowNetwork {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u32>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        FlowNetwork {
            head: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    fn arc(&mut self, a: usize, b: usize, c: u32) {
        self.head[a].push(self.to.len());
        self.to.push(b);
        self.cap.push(c);
        self.head[b].push(self.to.len());
        self.to.push(a);
        self.cap.push(0);
    }

    /// Augments until the flow reaches `limit` or no path remains.
    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let mut flow = 0;
        let mut pred = vec![usize::MAX; self.head.len()];
        while flow < limit {
            pred.iter_mut().for_each(|p| *p = usize::MAX);
            let mut queue = VecDeque::from([s]);
            let mut reached = false;
            'bfs: while let Some(a) = queue.pop_front() {
                for &e in &self.head[a] {
                    let b = self.to[e];
                    if self.cap[e] > 0 && b != s && pred[b] == usize::MAX {
                        pred[b] = e;
                        if b == t {
                            reached = true;
                            break 'bfs;
                        }
                        queue.push_back(b);
                    }
                }
            }
            if !reached {
                break;
            }
            let mut b = t;
            while b != s {
                let e = pred[b];
                self.cap[e] -= 1;
                self.cap[e ^ 1] += 1;
                b = self.to[e ^ 1];
            }
            flow += 1;
        }
        flow
    }

    fn residual_reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.head.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(a) = stack.pop() {
            for &e in &self.head[a] {
                let b = self.to[e];
                if self.cap[e] > 0 && !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
        seen
    }
}

/// Minimum s–t vertex separator for non-adjacent s, t (vertex splitting).
fn local_vertex_cut(g: &Graph, s: usize, t: usize, limit: usize) -> (usize, Vec<usize>) {
    let n = g.n();
    let (vin, vout) = (|v: usize| 2 * v, |v: usize| 2 * v + 1);
    let mut net = FlowNetwork::new(2 * n);
    for v in 0..n {
        let c = if v == s || v == t { INF } else { 1 };
        net.arc(vin(v), vout(v), c);
    }
    for (u, v) in g.edges() {
        net.arc(vout(u), vin(v), INF);
        net.arc(vout(v), vin(u), INF);
    }
    let value = net.max_flow(vout(s), vin(t), limit);
    if value >= limit {
        return (value, Vec::new());
    }
    let seen = net.residual_reachable(vout(s));
    let cut = (0..n).filter(|&v| seen[vin(v)] && !seen[vout(v)]).collect();
    (value, cut)
}

/// κ(G) with a minimum vertex cut. κ(K_n) = n − 1 with no separator; a
/// disconnected graph has κ = 0 and the empty separator.
pub fn vertex_connectivity(g: &Graph) -> VertexCut {
    let n = g.n();
    if n == 0 || g.is_complete() {
        return VertexCut { value: n.saturating_sub(1), separator: None };
    }
    if !g.is_connected() {
        return VertexCut { value: 0, separator: Some(Vec::new()) };
    }
    let mut best = n - 1;
    let mut best_cut = None;
    // Some vertex among the first κ + 1 lies outside a minimum separator.
    let mut i = 0;
    while i <= best && i < n {
        for j in i + 1..n {
            if g.adjacent(i, j) {
                continue;
            }
            let (value, cut) = local_vertex_cut(g, i, j, best);
            if value < best {
                best = value;
                best_cut = Some(cut);
            }
        }
        i += 1;
    }
    VertexCut { value: best, separator: best_cut }
}

/// λ(G) with a minimum edge cut. λ = 0 for n ≤ 1 and for disconnected graphs.
pub fn edge_connectivity(g: &Graph) -> EdgeCut {
    let n = g.n();
    if n <= 1 || !g.is_connected() {
        return EdgeCut { value: 0, separator: Some(Vec::new()) };
    }
    let mut best = g.min_degree();
    let mut best_cut: Vec<(usize, usize)> = {
        let v = (0..n).min_by_key(|&v| g.degree(v)).unwrap();
        let mut cut: Vec<_> = g.neighbours(v).iter().map(|w| (v.min(w), v.max(w))).collect();
        cut.sort_unstable();
        cut
    };
    for t in 1..n {
        let mut net = FlowNetwork::new(n);
        for (u, v) in g.edges() {
            net.arc(u, v, 1);
            net.arc(v, u, 1);
        }
        let value = net.max_flow(0, t, best);
        if value < best {
            let seen = net.residual_reachable(0);
            let mut cut: Vec<_> = g.edges().filter(|&(u, v)| seen[u] != seen[v]).collect();
            cut.sort_unstable();
            best = value;
            best_cut = cut;
        }
    }
    EdgeCut { value: best, separator: Some(best_cut) }
}

/// True when deleting `sep` leaves at least two components.
pub fn separates_vertices(g: &Graph, sep: &[usize]) -> bool {
    match VertexSet::from_members(g.n(), sep.iter().copied()) {
        Ok(removed) => removed.len() < g.n() && g.component_count_without(&removed) >= 2,
        Err(_) => false,
    }
}

/// True when deleting the edges in `cut` leaves at least two components.
pub fn separates_edges(g: &Graph, cut: &[(usize, usize)]) -> bool {
    let mut h = g.clone();
    for &(u, v) in cut {
        if !g.adjacent(u, v) {
            return false;
        }
        h = h.without_edge(u, v).expect("edge of g");
    }
    h.n() >= 2 && !h.is_connected()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    #[test]
    fn kappa_examples() {
        let c = vertex_connectivity(&path_strong_k3(4).unwrap());
        assert_eq!(c.value, 3);
        let sep = c.separator.unwrap();
        assert_eq!(sep.len(), 3);
        assert!(separates_vertices(&path_strong_k3(4).unwrap(), &sep));

        assert_eq!(vertex_connectivity(&complete(5)), VertexCut { value: 4, separator: None });
        let two = complete(3).disjoint_union(&complete(2));
        assert_eq!(vertex_connectivity(&two), VertexCut { value: 0, separator: Some(vec![]) });
        assert_eq!(vertex_connectivity(&complete(1)).value, 0);
        assert_eq!(vertex_connectivity(&cycle(7)).value, 2);
        assert_eq!(vertex_connectivity(&petersen()).value, 3);
    }

    #[test]
    fn lambda_examples() {
        let g = lambda_gap_family(3).unwrap();
        let c = edge_connectivity(&g);
        assert_eq!(c.value, 9);
        assert!(separates_edges(&g, c.separator.as_ref().unwrap()));

        let p = path_strong_k3(3).unwrap();
        assert_eq!(edge_connectivity(&p).value, 5);
        assert_eq!(edge_connectivity(&star(4)).value, 1);
        assert_eq!(edge_connectivity(&path(6)).value, 1);
        assert_eq!(edge_connectivity(&complete(1)).value, 0);
        assert_eq!(edge_connectivity(&Graph::empty(3)).value, 0);
        let e = edge_connectivity(&complete(5));
        assert_eq!(e.value, 4);
        assert!(separates_edges(&complete(5), e.separator.as_ref().unwrap()));
    }
}
