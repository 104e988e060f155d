//! Cycles, extension moves, and cycle-structure predicates.

mod audit;
mod enumerate;
mod extend;
mod hamilton;
mod moves;
mod subsets;

pub use audit::{audit_attachment_bounds, audit_pair_rules, AuditFinding, ExtensionContext};
pub use enumerate::{
    cycle_length_spectrum, for_each_cycle, for_each_non_extendable_cycle, is_12_extendable, is_cycle_extendable_graph, is_fully_cycle_extendable, is_pancyclic,
    is_weakly_pancyclic, Extendability, ExtendabilityMethod,
};
pub use extend::{find_12_extension, find_extension_exhaustive, hamilton_by_extension, HamiltonTrace};
pub use hamilton::{hamilton_cycle, is_hamiltonian};
pub use moves::{find_extension_by_moves, ExtensionMove, MoveKind};
pub use subsets::{HamiltonianSubsets, MAX_SUBSET_ORDER};

use serde::Serialize;

use crate::error::{BudgetExceeded, CycleError};
use crate::graph::{Graph, VertexSet};

/// Search allowances shared by the exponential routines in this module.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Cap on the number of cycles an enumeration may visit.
    pub max_cycles: u64,
    /// Cap on backtracking steps for a single search.
    pub max_steps: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_cycles: 10_000_000, max_steps: 200_000_000 }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { max_cycles: u64::MAX, max_steps: u64::MAX }
    }
}

pub(crate) struct Meter {
    what: &'static str,
    limit: u64,
    used: u64,
}

impl Meter {
    pub(crate) fn new(what: &'static str, limit: u64) -> Self {
        Meter { what, limit, used: 0 }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<(), BudgetExceeded> {
        self.used += 1;
        if self.used > self.limit {
            Err(BudgetExceeded { what: self.what, limit: self.limit, progress: self.used - 1 })
        } else {
            Ok(())
        }
    }

    pub(crate) fn used(&self) -> u64 {
        self.used
    }
}

/// A cycle stored in canonical form: the smallest vertex first, then the
/// direction whose second vertex is smaller.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Cycle {
    vertices: Vec<usize>,
}

impl Cycle {
    pub(crate) fn canonical(seq: &[usize]) -> Cycle {
        let t = seq.len();
        let start = (0..t).min_by_key(|&i| seq[i]).expect("non-empty cycle");
        let next = seq[(start + 1) % t];
        let prev = seq[(start + t - 1) % t];
        let vertices = if next <= prev {
            (0..t).map(|k| seq[(start + k) % t]).collect()
        } else {
            (0..t).map(|k| seq[(start + t - k) % t]).collect()
        };
        Cycle { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    pub fn vertex_set(&self, n: usize) -> VertexSet {
        let mut s = VertexSet::new(n);
        for &v in &self.vertices {
            s.insert(v);
        }
        s
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let t = self.vertices.len();
        (0..t).map(move |i| {
            let (a, b) = (self.vertices[i], self.vertices[(i + 1) % t]);
            (a.min(b), a.max(b))
        })
    }
}

/// Checks that `seq` is a cycle of `g` and returns its canonical form.
pub fn validate_cycle(g: &Graph, seq: &[usize]) -> Result<Cycle, CycleError> {
    if seq.len() < 3 {
        return Err(CycleError::TooShort { len: seq.len() });
    }
    let mut seen = VertexSet::new(g.n());
    for &v in seq {
        if v >= g.n() {
            return Err(crate::error::GraphError::VertexOutOfRange { vertex: v, n: g.n() }.into());
        }
        if !seen.insert(v) {
            return Err(CycleError::RepeatedVertex { vertex: v });
        }
    }
    for i in 0..seq.len() {
        let (u, v) = (seq[i], seq[(i + 1) % seq.len()]);
        if !g.adjacent(u, v) {
            return Err(CycleError::NotAdjacent { u, v });
        }
    }
    Ok(Cycle::canonical(seq))
}

/// Triangles in lexicographic order.
pub fn triangles(g: &Graph) -> impl Iterator<Item = [usize; 3]> + '_ {
    (0..g.n()).flat_map(move |a| {
        g.neighbours(a).iter().filter(move |&b| b > a).flat_map(move |b| {
            g.neighbours(a)
                .intersection(g.neighbours(b))
                .to_vec()
                .into_iter()
                .filter(move |&c| c > b)
                .map(move |c| [a, b, c])
        })
    })
}

/// True when every vertex lies on a triangle.
pub fn every_vertex_on_triangle(g: &Graph) -> bool {
    (0..g.n()).all(|v| {
        let nb = g.neighbours(v);
        nb.iter().any(|u| g.neighbours(u).intersection_len(nb) > 0)
    })
}
