//! Exhaustive reference implementations for small graphs.
//!
//! These are deliberately naive and exist to cross-check the flow and
//! planarity routines.

use crate::graph::{Graph, VertexSet};

use super::planarity::{KuratowskiKind, KuratowskiWitness};

fn subsets_of_size(n: usize, k: usize, mut visit: impl FnMut(&[usize]) -> bool) -> bool {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == k {
            return visit(cur);
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            if rec(v + 1, n, k, cur, visit) {
                return true;
            }
            cur.pop();
        }
        false
    }
    rec(0, n, k, &mut Vec::with_capacity(k), &mut visit)
}

/// κ by trying every vertex subset in order of size.
pub fn vertex_connectivity_by_deletion(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    for k in 0..n.saturating_sub(1) {
        let found = subsets_of_size(n, k, |s| {
            let removed = VertexSet::from_members(n, s.iter().copied()).expect("in range");
            g.component_count_without(&removed) >= 2
        });
        if found {
            return k;
        }
    }
    n - 1
}

fn connected_without(n: usize, edges: &[(usize, usize)], skip: &[usize]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut comps = n;
    let mut s = 0;
    for (idx, &(u, v)) in edges.iter().enumerate() {
        if s < skip.len() && skip[s] == idx {
            s += 1;
            continue;
        }
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            comps -= 1;
        }
    }
    comps == 1
}

/// λ by trying every edge subset in order of size.
pub fn edge_connectivity_by_deletion(g: &Graph) -> usize {
    let n = g.n();
    if n <= 1 {
        return 0;
    }
    let edges: Vec<_> = g.edges().collect();
    for k in 0..=edges.len() {
        if subsets_of_size(edges.len(), k, |s| !connected_without(n, &edges, s)) {
            return k;
        }
    }
    unreachable!("deleting every edge disconnects a graph on two or more vertices")
}

/// Searches directly for a subdivision of K_5 or K_{3,3}.
///
/// Branch sets are tried in lexicographic order and paths are routed
/// through non-branch vertices by backtracking. Exponential; meant for
/// n ≤ 12.
pub fn find_kuratowski_subdivision(g: &Graph) -> Option<KuratowskiWitness> {
    let n = g.n();
    let heavy4: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= 4).collect();
    let mut result = None;
    subsets_of_size(heavy4.len(), 5, |idx| {
        let branch: Vec<usize> = idx.iter().map(|&i| heavy4[i]).collect();
        let mut pairs = Vec::new();
        for a in 0..5 {
            for b in a + 1..5 {
                pairs.push((branch[a], branch[b]));
            }
        }
        if let Some(paths) = route_all(g, &branch, &pairs) {
            result = Some(KuratowskiWitness { kind: KuratowskiKind::K5, branch_vertices: branch, paths });
            return true;
        }
        false
    });
    if result.is_some() {
        return result;
    }
    let heavy3: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= 3).collect();
    subsets_of_size(heavy3.len(), 6, |idx| {
        let six: Vec<usize> = idx.iter().map(|&i| heavy3[i]).collect();
        // sides: six[0] plus two others on the left
        let mut found = false;
        subsets_of_size(5, 2, |pick| {
            let left = [six[0], six[1 + pick[0]], six[1 + pick[1]]];
            let right: Vec<usize> = six.iter().copied().filter(|v| !left.contains(v)).collect();
            let pairs: Vec<_> = left.iter().flat_map(|&a| right.iter().map(move |&b| (a, b))).collect();
            if let Some(paths) = route_all(g, &six, &pairs) {
                result = Some(KuratowskiWitness { kind: KuratowskiKind::K33, branch_vertices: six.clone(), paths });
                found = true;
            }
            found
        });
        found
    });
    result
}

fn route_all(g: &Graph, branch: &[usize], pairs: &[(usize, usize)]) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    let mut used = VertexSet::from_members(n, branch.iter().copied()).ok()?;
    // direct edges never hurt, so take them first
    let mut paths = Vec::new();
    let mut pending = Vec::new();
    for &(a, b) in pairs {
        if g.adjacent(a, b) {
            paths.push(vec![a, b]);
        } else {
            pending.push((a, b));
        }
    }
    if route(g, &pending, &mut used, &mut paths) {
        Some(paths)
    } else {
        None
    }
}

fn route(g: &Graph, pending: &[(usize, usize)], used: &mut VertexSet, paths: &mut Vec<Vec<usize>>) -> bool {
    let Some((&(a, b), rest)) = pending.split_first() else {
        return true;
    };
    let mut path = vec![a];
    extend_path(g, b, rest, used, &mut path, paths)
}

fn extend_path(
    g: &Graph,
    target: usize,
    rest: &[(usize, usize)],
    used: &mut VertexSet,
    path: &mut Vec<usize>,
    paths: &mut Vec<Vec<usize>>,
) -> bool {
    let last = *path.last().expect("non-empty");
    if path.len() > 1 && g.adjacent(last, target) {
        let mut done = path.clone();
        done.push(target);
        paths.push(done);
        if route(g, rest, used, paths) {
            return true;
        }
        paths.pop();
    }
    for w in g.neighbours(last).iter() {
        if used.contains(w) {
            continue;
        }
        used.insert(w);
        path.push(w);
        let ok = extend_path(g, target, rest, used, path, paths);
        path.pop();
        used.remove(w);
        if ok {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    #[test]
    fn deletion_values() {
        assert_eq!(vertex_connectivity_by_deletion(&petersen()), 3);
        assert_eq!(vertex_connectivity_by_deletion(&complete(5)), 4);
        assert_eq!(vertex_connectivity_by_deletion(&path(4)), 1);
        assert_eq!(edge_connectivity_by_deletion(&cycle(6)), 2);
        assert_eq!(edge_connectivity_by_deletion(&complete(5)), 4);
        assert_eq!(edge_connectivity_by_deletion(&Graph::empty(3)), 0);
    }

    #[test]
    fn subdivision_search() {
        let w = find_kuratowski_subdivision(&complete(5)).unwrap();
        assert_eq!(w.kind, KuratowskiKind::K5);
        assert!(w.verify(&complete(5)));
        let p = petersen();
        let w = find_kuratowski_subdivision(&p).unwrap();
        assert!(w.verify(&p));
        assert!(find_kuratowski_subdivision(&complete(4)).is_none());
        assert!(find_kuratowski_subdivision(&path_strong_k2(5).unwrap()).is_none());
    }
}
