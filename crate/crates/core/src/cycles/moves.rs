//! The catalogue of explicit extension moves.
//!
//! Each move is a template that rearranges the cycle v_0 … v_{t−1} and one
//! off-cycle vertex into a cycle of length t + 1. Templates are written
//! with index arithmetic mod t; a candidate sequence is kept only if it
//! re-validates as a cycle on V(C) ∪ {x}, so degenerate index choices are
//! skipped rather than special-cased.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::CycleError;
use crate::graph::Graph;

use super::{validate_cycle, Cycle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    Insert,
    ChordSwapForward,
    ChordSwapForwardMirrored,
    TriangleBypass,
    TriangleBypassMirrored,
    NeighbourPairHop,
    L32_4a,
    L32_4b,
    L32_5i,
    L32_5ii,
    L32_6i,
    L32_6ii,
    L32_6iii,
    L32_6iv,
    /// Found by searching ⟨V(C) ∪ {x}⟩ for a Hamilton cycle.
    Exhaustive,
    /// A two-vertex step; `indices` holds the second new vertex.
    PlusTwo,
}

impl MoveKind {
    pub fn as_str(self) -> &'static str {
        match self {
            MoveKind::Insert => "Insert",
            MoveKind::ChordSwapForward => "ChordSwapForward",
            MoveKind::ChordSwapForwardMirrored => "ChordSwapForward-mirrored",
            MoveKind::TriangleBypass => "TriangleBypass",
            MoveKind::TriangleBypassMirrored => "TriangleBypass-mirrored",
            MoveKind::NeighbourPairHop => "NeighbourPairHop",
            MoveKind::L32_4a => "L32-4a",
            MoveKind::L32_4b => "L32-4b",
            MoveKind::L32_5i => "L32-5i",
            MoveKind::L32_5ii => "L32-5ii",
            MoveKind::L32_6i => "L32-6i",
            MoveKind::L32_6ii => "L32-6ii",
            MoveKind::L32_6iii => "L32-6iii",
            MoveKind::L32_6iv => "L32-6iv",
            MoveKind::Exhaustive => "Exhaustive",
            MoveKind::PlusTwo => "PlusTwo",
        }
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for MoveKind {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// One applied move. Indices refer to positions in the cycle the move was
/// applied to, in the order it was stored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtensionMove {
    #[serde(rename = "move")]
    pub kind: MoveKind,
    pub x: usize,
    pub indices: Vec<usize>,
    pub cycle_after: Cycle,
}

/// The cycle as a ring of vertices with mod-t arc helpers.
struct Ring<'a> {
    v: &'a [usize],
}

impl Ring<'_> {
    fn t(&self) -> usize {
        self.v.len()
    }

    fn at(&self, i: isize) -> usize {
        let t = self.t() as isize;
        self.v[i.rem_euclid(t) as usize]
    }

    /// v_a, v_{a+1}, …, v_b.
    fn fwd(&self, a: isize, b: isize, out: &mut Vec<usize>) {
        let t = self.t() as isize;
        let steps = (b - a).rem_euclid(t);
        for s in 0..=steps {
            out.push(self.at(a + s));
        }
    }

    /// v_a, v_{a−1}, …, v_b.
    fn bwd(&self, a: isize, b: isize, out: &mut Vec<usize>) {
        let t = self.t() as isize;
        let steps = (a - b).rem_euclid(t);
        for s in 0..=steps {
            out.push(self.at(a - s));
        }
    }
}

enum Part {
    V(isize),
    X,
    Fwd(isize, isize),
    Bwd(isize, isize),
}

fn build(ring: &Ring<'_>, x: usize, parts: &[Part]) -> Vec<usize> {
    let mut out = Vec::with_capacity(ring.t() + 1);
    for p in parts {
        match *p {
            Part::V(i) => out.push(ring.at(i)),
            Part::X => out.push(x),
            Part::Fwd(a, b) => ring.fwd(a, b, &mut out),
            Part::Bwd(a, b) => ring.bwd(a, b, &mut out),
        }
    }
    out
}

struct Scan<'a> {
    g: &'a Graph,
    seq: Vec<usize>,
    on_cycle: Vec<bool>,
}

impl Scan<'_> {
    fn accept(&self, candidate: &[usize], x: usize) -> Option<Cycle> {
        let t = self.seq.len();
        if candidate.len() != t + 1 {
            return None;
        }
        let mut seen = vec![false; self.g.n()];
        for &v in candidate {
            if seen[v] || (v != x && !self.on_cycle[v]) {
                return None;
            }
            seen[v] = true;
        }
        validate_cycle(self.g, candidate).ok()
    }
}

type Template = fn(isize, isize, isize, isize) -> Vec<Part>;

struct Family {
    kind: MoveKind,
    mirrored: Option<MoveKind>,
    /// How many cycle indices the template takes after x.
    arity: usize,
    /// Positions (among the indices) that must be neighbours of x.
    x_anchors: &'static [usize],
    template: Template,
}

fn families() -> [Family; 12] {
    use Part::*;
    [
        Family {
            kind: MoveKind::Insert,
            mirrored: None,
            arity: 1,
            x_anchors: &[0],
            template: |i, _, _, _| vec![X, Fwd(i + 1, i)],
        },
        Family {
            kind: MoveKind::ChordSwapForward,
            mirrored: Some(MoveKind::ChordSwapForwardMirrored),
            arity: 2,
            x_anchors: &[0, 1],
            template: |i, j, _, _| vec![Fwd(j + 1, i), X, Bwd(j, i + 1)],
        },
        Family {
            kind: MoveKind::TriangleBypass,
            mirrored: Some(MoveKind::TriangleBypassMirrored),
            arity: 2,
            x_anchors: &[0, 1],
            template: |i, j, _, _| vec![V(i), X, Fwd(j, i - 1), Fwd(i + 1, j - 1)],
        },
        Family {
            kind: MoveKind::NeighbourPairHop,
            mirrored: None,
            arity: 2,
            x_anchors: &[0],
            template: |i, k, _, _| vec![V(i + 1), Fwd(k + 1, i), X, Fwd(i + 2, k)],
        },
        Family {
            kind: MoveKind::L32_4a,
            mirrored: None,
            arity: 2,
            x_anchors: &[0],
            template: |i, j, _, _| vec![Fwd(j + 1, i - 1), V(j), V(i + 1), V(i), X, Fwd(i + 2, j - 1)],
        },
        Family {
            kind: MoveKind::L32_4b,
            mirrored: None,
            arity: 2,
            x_anchors: &[0],
            template: |i, j, _, _| vec![Fwd(j + 1, i), X, V(i + 2), V(i + 1), V(j), Fwd(i + 3, j - 1)],
        },
        Family {
            kind: MoveKind::L32_5i,
            mirrored: Some(MoveKind::L32_5ii),
            arity: 3,
            x_anchors: &[0, 1],
            template: |i, j, l, _| vec![X, Fwd(j, l - 1), Bwd(j - 1, i + 1), Fwd(l, i)],
        },
        Family {
            kind: MoveKind::L32_5i,
            mirrored: Some(MoveKind::L32_5ii),
            arity: 3,
            x_anchors: &[0, 1],
            template: |i, j, l, _| vec![X, Fwd(j, l - 1), Fwd(i + 1, j - 1), Fwd(l, i)],
        },
        Family {
            kind: MoveKind::L32_6i,
            mirrored: None,
            arity: 3,
            x_anchors: &[0, 1],
            template: |i, j, k, _| vec![V(i), X, Bwd(j, i + 1), Bwd(k - 1, j + 1), Bwd(i - 1, k)],
        },
        Family {
            kind: MoveKind::L32_6ii,
            mirrored: None,
            arity: 3,
            x_anchors: &[0, 2],
            template: |i, j, k, _| vec![V(i), X, Fwd(k, i - 1), Fwd(j + 1, k - 1), Fwd(i + 1, j)],
        },
        Family {
            kind: MoveKind::L32_6iii,
            mirrored: None,
            arity: 3,
            x_anchors: &[0, 1],
            template: |i, j, k, _| vec![V(j), X, Fwd(i, j - 1), Fwd(k + 1, i - 1), Fwd(j + 1, k)],
        },
        Family {
            kind: MoveKind::L32_6iv,
            mirrored: None,
            arity: 3,
            x_anchors: &[0, 2],
            template: |i, j, k, _| vec![V(k), X, Bwd(i, k + 1), Bwd(j - 1, i + 1), Bwd(k - 1, j)],
        },
    ]
}

/// The first catalogue move that extends `c`, scanning templates in
/// catalogue order and parameters lexicographically in (x, i, j, k).
pub fn find_extension_by_moves(g: &Graph, c: &Cycle) -> Result<Option<ExtensionMove>, CycleError> {
    find_in_sequence(g, c.vertices())
}

pub(crate) fn find_in_sequence(g: &Graph, seq: &[usize]) -> Result<Option<ExtensionMove>, CycleError> {
    validate_cycle(g, seq)?;
    let t = seq.len();
    if t >= g.n() {
        return Err(CycleError::AlreadyHamiltonian);
    }
    let mut on_cycle = vec![false; g.n()];
    for &v in seq {
        on_cycle[v] = true;
    }
    let reversed: Vec<usize> = seq.iter().rev().copied().collect();
    let scan = Scan { g, seq: seq.to_vec(), on_cycle };
    let off: Vec<usize> = (0..g.n()).filter(|&v| !scan.on_cycle[v]).collect();

    for fam in families() {
        let orientations: &[(bool, MoveKind)] = match fam.mirrored {
            Some(m) => &[(false, fam.kind), (true, m)],
            None => &[(false, fam.kind)],
        };
        for &(mirror, kind) in orientations {
            let ring = Ring { v: if mirror { &reversed } else { seq } };
            for &x in &off {
                let anchored: Vec<bool> = (0..t).map(|i| g.adjacent(x, ring.v[i])).collect();
                if !anchored.iter().any(|&a| a) {
                    continue;
                }
                let mut idx = vec![0usize; fam.arity];
                if let Some(found) = scan_indices(&scan, &ring, &fam, x, &anchored, &mut idx, 0) {
                    let indices = if mirror { found.0.iter().map(|&r| t - 1 - r).collect() } else { found.0 };
                    return Ok(Some(ExtensionMove { kind, x, indices, cycle_after: found.1 }));
                }
            }
        }
    }
    Ok(None)
}

fn scan_indices(
    scan: &Scan<'_>,
    ring: &Ring<'_>,
    fam: &Family,
    x: usize,
    anchored: &[bool],
    idx: &mut Vec<usize>,
    depth: usize,
) -> Option<(Vec<usize>, Cycle)> {
    let t = ring.t();
    if depth == fam.arity {
        let p = |d: usize| idx.get(d).map_or(0, |&i| i as isize);
        let parts = (fam.template)(p(0), p(1), p(2), p(3));
        let candidate = build(ring, x, &parts);
        return scan.accept(&candidate, x).map(|c| (idx.clone(), c));
    }
    for i in 0..t {
        if fam.x_anchors.contains(&depth) && !anchored[i] {
            continue;
        }
        idx[depth] = i;
        if let Some(hit) = scan_indices(scan, ring, fam, x, anchored, idx, depth + 1) {
            return Some(hit);
        }
    }
    None
}
