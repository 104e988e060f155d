//! Planarity testing by path addition over biconnected blocks, with
//! Kuratowski subgraph extraction for non-planar inputs.
//!
//! Each block is embedded incrementally: start from a cycle, then keep
//! adding a path of some fragment (a component of the remainder, or a single
//! chord) into a face that contains all of the fragment's attachment
//! vertices. A fragment with no such face proves non-planarity; fragments
//! with exactly one admissible face are placed first.

use std::collections::VecDeque;

use serde::Serialize;

use crate::graph::{Graph, VertexSet};

/// Outcome of a planarity test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum PlanarityCertificate {
    /// Face boundaries of an embedding of every biconnected block with at
    /// least three vertices.
    Planar { block_faces: Vec<Vec<Vec<usize>>> },
    /// A Kuratowski subdivision, when extraction was attempted.
    NonPlanar { witness: Option<KuratowskiWitness> },
}

impl PlanarityCertificate {
    pub fn is_planar(&self) -> bool {
        matches!(self, PlanarityCertificate::Planar { .. })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// A subdivision of K_5 or K_{3,3}: branch vertices plus one path per
/// branch pair (each path lists its endpoints).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    pub branch_vertices: Vec<usize>,
    pub paths: Vec<Vec<usize>>,
}

impl KuratowskiWitness {
    /// Checks that this really is a K_5 / K_{3,3} subdivision inside `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        let branch = &self.branch_vertices;
        let expected_branch = match self.kind {
            KuratowskiKind::K5 => 5,
            KuratowskiKind::K33 => 6,
        };
        let mut bset = VertexSet::new(g.n());
        for &b in branch {
            if b >= g.n() || !bset.insert(b) {
                return false;
            }
        }
        if branch.len() != expected_branch {
            return false;
        }
        let mut interior = VertexSet::new(g.n());
        let mut pairs = Vec::new();
        for p in &self.paths {
            if p.len() < 2 {
                return false;
            }
            if !p.windows(2).all(|w| g.adjacent(w[0], w[1])) {
                return false;
            }
            let (a, b) = (p[0], p[p.len() - 1]);
            if !bset.contains(a) || !bset.contains(b) || a == b {
                return false;
            }
            for &v in &p[1..p.len() - 1] {
                if v >= g.n() || bset.contains(v) || !interior.insert(v) {
                    return false;
                }
            }
            pairs.push((a.min(b), a.max(b)));
        }
        pairs.sort_unstable();
        if pairs.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
        match self.kind {
            KuratowskiKind::K5 => pairs.len() == 10,
            KuratowskiKind::K33 => {
                if pairs.len() != 9 {
                    return false;
                }
                // 2-colour the branch vertices along the pairs
                let mut side = std::collections::HashMap::new();
                side.insert(branch[0], false);
                for _ in 0..6 {
                    for &(a, b) in &pairs {
                        match (side.get(&a).copied(), side.get(&b).copied()) {
                            (Some(x), None) => {
                                side.insert(b, !x);
                            }
                            (None, Some(y)) => {
                                side.insert(a, !y);
                            }
                            (Some(x), Some(y)) if x == y => return false,
                            _ => {}
                        }
                    }
                }
                side.len() == 6 && side.values().filter(|&&s| s).count() == 3
            }
        }
    }
}

/// Planarity verdict only.
pub fn is_planar(g: &Graph) -> bool {
    planar_test(g, false).is_planar()
}

/// Planarity verdict with a certificate: block faces when planar, a
/// Kuratowski subdivision (found by edge-deletion minimisation) when not.
pub fn planarity(g: &Graph) -> PlanarityCertificate {
    planar_test(g, true)
}

fn planar_test(g: &Graph, want_witness: bool) -> PlanarityCertificate {
    let n = g.n();
    let quick_reject = n >= 3 && g.edge_count() > 3 * n - 6;
    if !quick_reject {
        if let Some(block_faces) = embed_blocks(g) {
            return PlanarityCertificate::Planar { block_faces };
        }
    }
    let witness = want_witness.then(|| extract_kuratowski(g)).flatten();
    PlanarityCertificate::NonPlanar { witness }
}

fn embed_blocks(g: &Graph) -> Option<Vec<Vec<Vec<usize>>>> {
    let mut out = Vec::new();
    for block in biconnected_blocks(g) {
        let vertices: VertexSet = {
            let mut s = VertexSet::new(g.n());
            for &(u, v) in &block {
                s.insert(u);
                s.insert(v);
            }
            s
        };
        if vertices.len() < 3 {
            continue;
        }
        let (h, _) = g.induced_subgraph(&vertices).ok()?;
        // a block's edge set is exactly the induced edge set
        debug_assert_eq!(h.edge_count(), block.len());
        out.push(embed_biconnected(&h)?);
    }
    Some(out)
}

/// Edge lists of the biconnected blocks (Hopcroft–Tarjan).
pub(crate) fn biconnected_blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks = Vec::new();
    let nbrs: Vec<Vec<usize>> = (0..n).map(|v| g.neighbours(v).to_vec()).collect();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        // (vertex, parent, next neighbour index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
            if *idx < nbrs[v].len() {
                let w = nbrs[v][*idx];
                *idx += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push((e.0.min(e.1), e.0.max(e.1)));
                            if e == (p, v) {
                                break;
                            }
                        }
                        block.sort_unstable();
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks
}

fn find_cycle(h: &Graph) -> Option<Vec<usize>> {
    // the first edge at vertex 0 plus a shortest detour around it
    let a = h.neighbours(0).first()?;
    let n = h.n();
    let mut pred = vec![usize::MAX; n];
    pred[a] = a;
    let mut queue = VecDeque::from([a]);
    while let Some(v) = queue.pop_front() {
        for w in h.neighbours(v).iter() {
            if v == a && w == 0 {
                continue;
            }
            if pred[w] == usize::MAX {
                pred[w] = v;
                if w == 0 {
                    let mut cycle = vec![0];
                    let mut x = v;
                    while x != a {
                        cycle.push(x);
                        x = pred[x];
                    }
                    cycle.push(a);
                    return Some(cycle);
                }
                queue.push_back(w);
            }
        }
    }
    None
}

/// Embeds a biconnected graph on ≥ 3 vertices; returns its faces.
fn embed_biconnected(h: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = h.n();
    let cycle = find_cycle(h)?;
    let mut in_h = VertexSet::new(n);
    let mut embedded: Vec<VertexSet> = vec![VertexSet::new(n); n];
    let mut embedded_edges = 0;
    for (i, &v) in cycle.iter().enumerate() {
        in_h.insert(v);
        let w = cycle[(i + 1) % cycle.len()];
        embedded[v].insert(w);
        embedded[w].insert(v);
        embedded_edges += 1;
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle.iter().rev().copied().collect()];

    while embedded_edges < h.edge_count() {
        let fragments = fragments(h, &in_h, &embedded);
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, face)| frag.attachments.iter().all(|a| face.contains(a)))
                .map(|(i, _)| i)
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = choice?;
        let path = fragments[fi].path(h, &in_h);
        let face = faces.swap_remove(face_idx);
        let (a, b) = (path[0], path[path.len() - 1]);
        let pa = face.iter().position(|&x| x == a)?;
        let pb = face.iter().position(|&x| x == b)?;
        let k = face.len();
        let interior = &path[1..path.len() - 1];
        // face walk a → b, then back to a through the path interior reversed
        let mut f1: Vec<usize> = (0..).map(|s| face[(pa + s) % k]).take((pb + k - pa) % k + 1).collect();
        f1.extend(interior.iter().rev());
        let mut f2: Vec<usize> = (0..).map(|s| face[(pb + s) % k]).take((pa + k - pb) % k + 1).collect();
        f2.extend(interior.iter());
        faces.push(f1);
        faces.push(f2);
        for w in path.windows(2) {
            embedded[w[0]].insert(w[1]);
            embedded[w[1]].insert(w[0]);
            embedded_edges += 1;
        }
        for &v in interior {
            in_h.insert(v);
        }
    }
    Some(faces)
}

struct Fragment {
    attachments: Vec<usize>,
    /// Empty for a chord fragment.
    component: VertexSet,
}

impl Fragment {
    /// A path through the fragment joining two distinct attachments.
    fn path(&self, h: &Graph, in_h: &VertexSet) -> Vec<usize> {
        let a = self.attachments[0];
        let b = self.attachments[1];
        if self.component.is_empty() {
            return vec![a, b];
        }
        // BFS from a through the component until another attachment is hit
        let n = h.n();
        let mut pred = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for w in h.neighbours(a).iter().filter(|&w| self.component.contains(w)) {
            pred[w] = a;
            queue.push_back(w);
        }
        while let Some(v) = queue.pop_front() {
            for w in h.neighbours(v).iter() {
                if in_h.contains(w) && w != a && self.attachments.contains(&w) {
                    let mut path = vec![w, v];
                    let mut x = v;
                    while pred[x] != a {
                        x = pred[x];
                        path.push(x);
                    }
                    path.push(a);
                    path.reverse();
                    return path;
                }
                if self.component.contains(w) && pred[w] == usize::MAX {
                    pred[w] = v;
                    queue.push_back(w);
                }
            }
        }
        unreachable!("fragment of a biconnected graph has two attachments")
    }
}

fn fragments(h: &Graph, in_h: &VertexSet, embedded: &[VertexSet]) -> Vec<Fragment> {
    let n = h.n();
    let mut out = Vec::new();
    for (u, v) in h.edges() {
        if in_h.contains(u) && in_h.contains(v) && !embedded[u].contains(v) {
            out.push(Fragment { attachments: vec![u, v], component: VertexSet::new(n) });
        }
    }
    let mut seen = in_h.clone();
    for s in 0..n {
        if seen.contains(s) {
            continue;
        }
        let mut comp = VertexSet::new(n);
        let mut attach = VertexSet::new(n);
        let mut stack = vec![s];
        seen.insert(s);
        comp.insert(s);
        while let Some(v) = stack.pop() {
            for w in h.neighbours(v).iter() {
                if in_h.contains(w) {
                    attach.insert(w);
                } else if seen.insert(w) {
                    comp.insert(w);
                    stack.push(w);
                }
            }
        }
        out.push(Fragment { attachments: attach.to_vec(), component: comp });
    }
    out
}

/// Deletes edges while the graph stays non-planar, then reads off the
/// branch vertices and paths of the remaining Kuratowski subgraph.
fn extract_kuratowski(g: &Graph) -> Option<KuratowskiWitness> {
    let mut h = g.clone();
    let edges: Vec<_> = g.edges().collect();
    for (u, v) in edges {
        let candidate = h.without_edge(u, v).ok()?;
        if !is_planar(&candidate) {
            h = candidate;
        }
    }
    let branch: Vec<usize> = (0..h.n()).filter(|&v| h.degree(v) >= 3).collect();
    let kind = match (branch.len(), branch.iter().all(|&v| h.degree(v) == 4)) {
        (5, true) => KuratowskiKind::K5,
        (6, _) if branch.iter().all(|&v| h.degree(v) == 3) => KuratowskiKind::K33,
        _ => return None,
    };
    let mut paths = Vec::new();
    for &b in &branch {
        for first in h.neighbours(b).iter() {
            let mut path = vec![b, first];
            let (mut prev, mut cur) = (b, first);
            while h.degree(cur) == 2 {
                let next = h.neighbours(cur).iter().find(|&w| w != prev)?;
                path.push(next);
                prev = cur;
                cur = next;
            }
            if b < cur {
                paths.push(path);
            }
        }
    }
    paths.sort();
    let witness = KuratowskiWitness { kind, branch_vertices: branch, paths };
    witness.verify(g).then_some(witness)
}
