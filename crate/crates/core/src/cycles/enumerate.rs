//! Cycle enumeration and the predicates built on it.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use serde::Serialize;

use crate::error::CycleError;
use crate::graph::{Graph, VertexSet};
use crate::predicates::is_bipartite;

use super::subsets::{mask_of, HamiltonianSubsets, MAX_SUBSET_ORDER};
use super::{every_vertex_on_triangle, Budget, Cycle, Meter};

/// Calls `visit` once per cycle of `g`, each given in canonical form.
/// Returns the number of cycles visited.
pub fn for_each_cycle<F>(g: &Graph, budget: &Budget, mut visit: F) -> Result<u64, CycleError>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let n = g.n();
    let mut meter = Meter::new("cycles", budget.max_cycles);
    let mut steps = Meter::new("cycle enumeration steps", budget.max_steps);
    let mut path = Vec::with_capacity(n);
    let mut on_path = VertexSet::new(n);
    for root in 0..n {
        path.clear();
        path.push(root);
        on_path.insert(root);
        let flow = walk(g, root, &mut path, &mut on_path, &mut meter, &mut steps, &mut visit)?;
        on_path.remove(root);
        if flow.is_break() {
            break;
        }
    }
    Ok(meter.used())
}

fn walk<F>(
    g: &Graph,
    root: usize,
    path: &mut Vec<usize>,
    on_path: &mut VertexSet,
    meter: &mut Meter,
    steps: &mut Meter,
    visit: &mut F,
) -> Result<ControlFlow<()>, CycleError>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    steps.tick()?;
    let last = *path.last().expect("non-empty path");
    if path.len() >= 3 && g.adjacent(last, root) && path[1] < last {
        meter.tick()?;
        if visit(path).is_break() {
            return Ok(ControlFlow::Break(()));
        }
    }
    for w in g.neighbours(last).iter() {
        if w <= root || on_path.contains(w) {
            continue;
        }
        path.push(w);
        on_path.insert(w);
        let flow = walk(g, root, path, on_path, meter, steps, visit)?;
        on_path.remove(w);
        path.pop();
        if flow.is_break() {
            return Ok(flow);
        }
    }
    Ok(ControlFlow::Continue(()))
}

/// Whether some cycle has length exactly `len`.
///
/// Paths start at their least vertex `root`. A partial path is abandoned
/// when the unused vertices reachable from its end are too few to fill
/// the cycle, or `root` is too far away to close it in time.
fn has_cycle_of_length(g: &Graph, len: usize, steps: &mut Meter) -> Result<bool, CycleError> {
    struct Search<'a> {
        g: &'a Graph,
        root: usize,
        len: usize,
        path: Vec<usize>,
        free: VertexSet,
    }

    impl Search<'_> {
        // needs `missing` new vertices, then an edge back to root
        fn feasible(&self, last: usize, missing: usize) -> bool {
            let mut seen = VertexSet::new(self.g.n());
            seen.insert(last);
            let mut frontier = seen.clone();
            let mut depth = 0;
            let mut reached = 0;
            let mut root_at = None;
            while !frontier.is_empty() {
                if root_at.is_none() && frontier.iter().any(|v| self.g.adjacent(v, self.root)) {
                    root_at = Some(depth + 1);
                }
                let mut next = VertexSet::new(self.g.n());
                for v in frontier.iter() {
                    next = next.union(&self.g.neighbours(v).intersection(&self.free));
                }
                next = next.difference(&seen);
                reached += next.len();
                seen = seen.union(&next);
                frontier = next;
                depth += 1;
            }
            reached >= missing && root_at.is_some_and(|d| d <= missing + 1)
        }

        fn rec(&mut self, steps: &mut Meter) -> Result<bool, CycleError> {
            steps.tick()?;
            let last = *self.path.last().expect("non-empty path");
            if self.path.len() == self.len {
                return Ok(self.g.adjacent(last, self.root));
            }
            if !self.feasible(last, self.len - self.path.len()) {
                return Ok(false);
            }
            let next = self.g.neighbours(last).intersection(&self.free);
            for w in next.iter() {
                self.path.push(w);
                self.free.remove(w);
                let found = self.rec(steps)?;
                self.free.insert(w);
                self.path.pop();
                if found {
                    return Ok(true);
                }
            }
            Ok(false)
        }
    }

    let n = g.n();
    for root in 0..n.saturating_sub(len - 1) {
        let free = VertexSet::from_members(n, root + 1..n)?;
        let mut search = Search { g, root, len, path: vec![root], free };
        if search.rec(steps)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// The set of cycle lengths of `g`.
pub fn cycle_length_spectrum(g: &Graph, budget: &Budget) -> Result<BTreeSet<usize>, CycleError> {
    let n = g.n();
    if n <= MAX_SUBSET_ORDER {
        let h = HamiltonianSubsets::new(g)?;
        return Ok(h.cycle_sets().map(|u| u.count_ones() as usize).collect());
    }
    let bipartite = is_bipartite(g);
    let mut steps = Meter::new("cycle spectrum steps", budget.max_steps);
    let mut out = BTreeSet::new();
    for len in 3..=n {
        if bipartite && len % 2 == 1 {
            continue;
        }
        if has_cycle_of_length(g, len, &mut steps)? {
            out.insert(len);
        }
    }
    Ok(out)
}

pub fn is_pancyclic(g: &Graph, budget: &Budget) -> Result<bool, CycleError> {
    let n = g.n();
    Ok(n >= 3 && cycle_length_spectrum(g, budget)?.len() == n - 2)
}

/// Cycles of every length between girth and circumference. Forests count
/// as weakly pancyclic.
pub fn is_weakly_pancyclic(g: &Graph, budget: &Budget) -> Result<bool, CycleError> {
    let spectrum = cycle_length_spectrum(g, budget)?;
    Ok(match (spectrum.first(), spectrum.last()) {
        (Some(&lo), Some(&hi)) => spectrum.len() == hi - lo + 1,
        _ => true,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExtendabilityMethod {
    /// Visit every cycle and test each for a one-vertex extension.
    #[default]
    Enumerate,
    /// Work over vertex sets: a cycle's extendability depends only on its
    /// vertex set, so it suffices to test every set that carries a cycle.
    VertexSets,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Extendability {
    pub extendable: bool,
    /// A non-Hamiltonian cycle with no one-vertex extension.
    pub witness: Option<Cycle>,
    /// Cycles (or cycle-carrying vertex sets) examined.
    pub examined: u64,
}

/// Whether every non-Hamiltonian cycle of `g` extends by exactly one
/// vertex.
pub fn is_cycle_extendable_graph(
    g: &Graph,
    method: ExtendabilityMethod,
    budget: &Budget,
) -> Result<Extendability, CycleError> {
    let n = g.n();
    match method {
        ExtendabilityMethod::VertexSets => {
            let h = HamiltonianSubsets::new(g)?;
            let mut examined = 0;
            for u in h.cycle_sets() {
                examined += 1;
                if (u.count_ones() as usize) < n && h.one_vertex_extension(u).is_none() {
                    let seq = h.cycle_on(g, u).expect("set carries a cycle");
                    return Ok(Extendability { extendable: false, witness: Some(Cycle::canonical(&seq)), examined });
                }
            }
            Ok(Extendability { extendable: true, witness: None, examined })
        }
        ExtendabilityMethod::Enumerate => {
            // with a subset table each cycle is checked in O(n); otherwise
            // every cycle needs its own Hamiltonicity searches
            let table = if n <= MAX_SUBSET_ORDER { Some(HamiltonianSubsets::new(g)?) } else { None };
            let mut witness = None;
            let mut failure = None;
            let examined = for_each_cycle(g, budget, |seq| {
                if seq.len() == n {
                    return ControlFlow::Continue(());
                }
                let extends = match &table {
                    Some(h) => Ok(h.one_vertex_extension(mask_of(seq)).is_some()),
                    None => super::find_extension_exhaustive(g, &Cycle::canonical(seq), budget).map(|r| r.is_some()),
                };
                match extends {
                    Ok(true) => ControlFlow::Continue(()),
                    Ok(false) => {
                        witness = Some(Cycle::canonical(seq));
                        ControlFlow::Break(())
                    }
                    Err(e) => {
                        failure = Some(e);
                        ControlFlow::Break(())
                    }
                }
            })?;
            if let Some(e) = failure {
                return Err(e);
            }
            Ok(Extendability { extendable: witness.is_none(), witness, examined })
        }
    }
}

/// Cycle extendable, and every vertex lies on a triangle.
pub fn is_fully_cycle_extendable(
    g: &Graph,
    method: ExtendabilityMethod,
    budget: &Budget,
) -> Result<bool, CycleError> {
    if !every_vertex_on_triangle(g) {
        return Ok(false);
    }
    Ok(is_cycle_extendable_graph(g, method, budget)?.extendable)
}

/// Whether every non-Hamiltonian cycle's vertex set lies inside a cycle
/// one or two vertices longer.
pub fn is_12_extendable(g: &Graph, budget: &Budget) -> Result<Extendability, CycleError> {
    let n = g.n();
    if n <= MAX_SUBSET_ORDER {
        let h = HamiltonianSubsets::new(g)?;
        let mut examined = 0;
        for u in h.cycle_sets() {
            examined += 1;
            if (u.count_ones() as usize) < n && h.one_vertex_extension(u).is_none() && h.two_vertex_extension(u).is_none()
            {
                let seq = h.cycle_on(g, u).expect("set carries a cycle");
                return Ok(Extendability { extendable: false, witness: Some(Cycle::canonical(&seq)), examined });
            }
        }
        return Ok(Extendability { extendable: true, witness: None, examined });
    }
    let mut witness = None;
    let mut failure = None;
    let examined = for_each_cycle(g, budget, |seq| {
        if seq.len() == n {
            return ControlFlow::Continue(());
        }
        let c = Cycle::canonical(seq);
        match super::find_12_extension(g, &c, budget) {
            Ok(Some(_)) => ControlFlow::Continue(()),
            Ok(None) => {
                witness = Some(c);
                ControlFlow::Break(())
            }
            Err(e) => {
                failure = Some(e);
                ControlFlow::Break(())
            }
        }
    })?;
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(Extendability { extendable: witness.is_none(), witness, examined })
}

/// Calls `visit` on every non-Hamiltonian cycle of `g` that has no
/// one-vertex extension. Returns the number of such cycles.
///
/// Non-extendable vertex sets are located first, so only cycles on those
/// sets are ever enumerated.
pub fn for_each_non_extendable_cycle<F>(g: &Graph, budget: &Budget, mut visit: F) -> Result<u64, CycleError>
where
    F: FnMut(&Cycle),
{
    let n = g.n();
    let h = HamiltonianSubsets::new(g)?;
    let mut count = 0;
    for u in h.cycle_sets() {
        if u.count_ones() as usize == n || h.one_vertex_extension(u).is_some() {
            continue;
        }
        let members = VertexSet::from_members(n, (0..n).filter(|&v| u >> v & 1 == 1))?;
        let (sub, map) = g.induced_subgraph(&members)?;
        let k = sub.n();
        for_each_cycle(&sub, budget, |seq| {
            if seq.len() == k {
                let mapped: Vec<usize> = seq.iter().map(|&i| map[i]).collect();
                visit(&Cycle::canonical(&mapped));
                count += 1;
            }
            ControlFlow::Continue(())
        })?;
    }
    Ok(count)
}
