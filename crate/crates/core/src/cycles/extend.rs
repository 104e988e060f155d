//! Exhaustive one- and two-vertex extension, and growing a Hamilton cycle
//! from a triangle.

use serde::Serialize;

use crate::error::CycleError;
use crate::graph::Graph;

use super::hamilton::hamilton_cycle;
use super::moves::{find_in_sequence, ExtensionMove, MoveKind};
use super::{triangles, validate_cycle, Budget, Cycle};

fn cycle_through(g: &Graph, base: &Cycle, extra: &[usize], budget: &Budget) -> Result<Option<Cycle>, CycleError> {
    let mut set = base.vertex_set(g.n());
    for &x in extra {
        set.insert(x);
    }
    let (h, map) = g.induced_subgraph(&set)?;
    Ok(hamilton_cycle(&h, budget)?.map(|c| {
        let seq: Vec<usize> = c.vertices().iter().map(|&i| map[i]).collect();
        Cycle::canonical(&seq)
    }))
}

fn off_cycle_attached(g: &Graph, c: &Cycle) -> Vec<usize> {
    let set = c.vertex_set(g.n());
    (0..g.n()).filter(|&x| !set.contains(x) && g.neighbours(x).intersection_len(&set) >= 2).collect()
}

fn require_proper(g: &Graph, c: &Cycle) -> Result<(), CycleError> {
    validate_cycle(g, c.vertices())?;
    if c.len() >= g.n() {
        return Err(CycleError::AlreadyHamiltonian);
    }
    Ok(())
}

/// A cycle on V(C) ∪ {x} for the first off-cycle x admitting one.
pub fn find_extension_exhaustive(g: &Graph, c: &Cycle, budget: &Budget) -> Result<Option<(usize, Cycle)>, CycleError> {
    require_proper(g, c)?;
    for x in off_cycle_attached(g, c) {
        if let Some(found) = cycle_through(g, c, &[x], budget)? {
            return Ok(Some((x, found)));
        }
    }
    Ok(None)
}

/// A cycle of length t + 1 or t + 2 whose vertex set contains V(C),
/// preferring t + 1.
pub fn find_12_extension(g: &Graph, c: &Cycle, budget: &Budget) -> Result<Option<Cycle>, CycleError> {
    if let Some((_, found)) = find_extension_exhaustive(g, c, budget)? {
        return Ok(Some(found));
    }
    let set = c.vertex_set(g.n());
    let off: Vec<usize> = (0..g.n()).filter(|&x| !set.contains(x)).collect();
    for (a, &x) in off.iter().enumerate() {
        for &y in &off[a + 1..] {
            let touches = |v: usize| g.neighbours(v).intersection_len(&set);
            // both new vertices need two neighbours on the new cycle
            if touches(x) + usize::from(g.adjacent(x, y)) < 2 || touches(y) + usize::from(g.adjacent(x, y)) < 2 {
                continue;
            }
            if let Some(found) = cycle_through(g, c, &[x, y], budget)? {
                return Ok(Some(found));
            }
        }
    }
    Ok(None)
}

/// A Hamilton cycle together with the moves that built it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HamiltonTrace {
    pub seed: [usize; 3],
    pub cycle: Cycle,
    pub moves: Vec<ExtensionMove>,
}

impl HamiltonTrace {
    /// Replays the trace against `g`: every step must be a valid cycle
    /// containing its predecessor, and the last must be Hamiltonian.
    pub fn verify(&self, g: &Graph) -> bool {
        let Ok(mut current) = validate_cycle(g, &self.seed) else {
            return false;
        };
        for m in &self.moves {
            let Ok(next) = validate_cycle(g, m.cycle_after.vertices()) else {
                return false;
            };
            let grown = next.len() - current.len();
            if !(1..=2).contains(&grown) || !current.vertices().iter().all(|&v| next.contains(v)) || !next.contains(m.x) {
                return false;
            }
            current = next;
        }
        current == self.cycle && current.len() == g.n()
    }

    /// True when every step added exactly one vertex.
    pub fn single_steps(&self) -> bool {
        self.moves.iter().all(|m| m.kind != MoveKind::PlusTwo)
    }
}

const EXTRA_SEEDS: usize = 10;

/// Grows a Hamilton cycle from the lexicographically first triangle,
/// preferring catalogue moves, then exhaustive one-vertex extension, then
/// a two-vertex step. A stalled run restarts from later triangles.
pub fn hamilton_by_extension(g: &Graph, budget: &Budget) -> Result<Option<HamiltonTrace>, CycleError> {
    let seeds: Vec<[usize; 3]> = triangles(g).take(EXTRA_SEEDS + 1).collect();
    if seeds.is_empty() {
        return Err(CycleError::NoTriangle);
    }
    if !g.is_connected() {
        return Ok(None);
    }
    for seed in seeds {
        if let Some(trace) = grow(g, seed, budget)? {
            return Ok(Some(trace));
        }
    }
    Ok(None)
}

fn grow(g: &Graph, seed: [usize; 3], budget: &Budget) -> Result<Option<HamiltonTrace>, CycleError> {
    let mut current = validate_cycle(g, &seed)?;
    let mut moves = Vec::new();
    while current.len() < g.n() {
        let step = if let Some(m) = find_in_sequence(g, current.vertices())? {
            m
        } else if let Some((x, c)) = find_extension_exhaustive(g, &current, budget)? {
            ExtensionMove { kind: MoveKind::Exhaustive, x, indices: Vec::new(), cycle_after: c }
        } else if let Some(c) = find_12_extension(g, &current, budget)? {
            let mut new: Vec<usize> = c.vertices().iter().copied().filter(|&v| !current.contains(v)).collect();
            new.sort_unstable();
            ExtensionMove { kind: MoveKind::PlusTwo, x: new[0], indices: new[1..].to_vec(), cycle_after: c }
        } else {
            return Ok(None);
        };
        current = step.cycle_after.clone();
        moves.push(step);
    }
    Ok(Some(HamiltonTrace { seed, cycle: current, moves }))
}
