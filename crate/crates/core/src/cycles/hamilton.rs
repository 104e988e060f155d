//! Hamilton cycle search by pruned backtracking.

use crate::error::CycleError;
use crate::graph::{Graph, VertexSet};

use super::{Budget, Cycle, Meter};

/// A Hamilton cycle of `g`, if one exists.
///
/// The path grows from a minimum-degree vertex, trying the neighbour with
/// the fewest free neighbours first. A branch is cut when some unvisited
/// vertex has fewer than two usable neighbours or the unvisited vertices
/// stop being reachable from the path's end.
pub fn hamilton_cycle(g: &Graph, budget: &Budget) -> Result<Option<Cycle>, CycleError> {
    let n = g.n();
    if n < 3 || g.min_degree() < 2 || !g.is_connected() {
        return Ok(None);
    }
    if g.is_complete() {
        return Ok(Some(Cycle::canonical(&(0..n).collect::<Vec<_>>())));
    }
    let start = (0..n).min_by_key(|&v| g.degree(v)).expect("n >= 3");
    let mut search = Search {
        g,
        start,
        free: VertexSet::full(n),
        path: Vec::with_capacity(n),
        meter: Meter::new("hamilton steps", budget.max_steps),
    };
    search.free.remove(start);
    search.path.push(start);
    if search.extend()? {
        Ok(Some(Cycle::canonical(&search.path)))
    } else {
        Ok(None)
    }
}

pub fn is_hamiltonian(g: &Graph, budget: &Budget) -> Result<bool, CycleError> {
    Ok(hamilton_cycle(g, budget)?.is_some())
}

struct Search<'a> {
    g: &'a Graph,
    start: usize,
    free: VertexSet,
    path: Vec<usize>,
    meter: Meter,
}

impl Search<'_> {
    fn extend(&mut self) -> Result<bool, CycleError> {
        self.meter.tick()?;
        let g = self.g;
        let end = *self.path.last().expect("non-empty path");
        if self.free.is_empty() {
            return Ok(g.adjacent(end, self.start));
        }
        if !self.feasible(end) {
            return Ok(false);
        }
        let mut options: Vec<(usize, usize)> = g
            .neighbours(end)
            .intersection(&self.free)
            .iter()
            .map(|w| (g.neighbours(w).intersection_len(&self.free), w))
            .collect();
        options.sort_unstable();
        for (_, w) in options {
            self.free.remove(w);
            self.path.push(w);
            if self.extend()? {
                return Ok(true);
            }
            self.path.pop();
            self.free.insert(w);
        }
        Ok(false)
    }

    fn feasible(&self, end: usize) -> bool {
        let g = self.g;
        // the start must still be reachable at the end
        if g.neighbours(self.start).intersection_len(&self.free) == 0 {
            return false;
        }
        let mut forced = 0;
        for v in self.free.iter() {
            let nb = g.neighbours(v);
            let usable = nb.intersection_len(&self.free)
                + usize::from(nb.contains(end))
                + usize::from(nb.contains(self.start) && end != self.start);
            if usable < 2 {
                return false;
            }
            if usable == 2 && nb.contains(end) {
                forced += 1;
            }
        }
        // only the start may take two forced neighbours
        if forced > 1 + usize::from(end == self.start) {
            return false;
        }
        // free vertices must be connected through themselves and `end`
        let mut seen = VertexSet::new(g.n());
        let mut stack: Vec<usize> = g.neighbours(end).intersection(&self.free).iter().collect();
        for &v in &stack {
            seen.insert(v);
        }
        while let Some(v) = stack.pop() {
            for w in g.neighbours(v).intersection(&self.free).iter() {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.len() == self.free.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::validate_cycle;
    use crate::families::*;

    fn check(g: &Graph) -> bool {
        match hamilton_cycle(g, &Budget::default()).unwrap() {
            Some(c) => {
                assert_eq!(c.len(), g.n());
                validate_cycle(g, c.vertices()).unwrap();
                true
            }
            None => false,
        }
    }

    #[test]
    fn known_cases() {
        assert!(!check(&petersen()));
        assert!(check(&complete(5)));
        assert!(check(&cycle(7)));
        assert!(!check(&path(5)));
        assert!(check(&complete_bipartite(3, 3)));
        assert!(!check(&complete_bipartite(3, 4)));
        assert!(check(&path_strong_k3(6).unwrap()));
        assert!(check(&path_strong_k2(7).unwrap()));
        assert!(!check(&complete(3).disjoint_union(&complete(3))));
        assert!(!check(&complete(2)));
        assert!(check(&lambda_gap_family(3).unwrap()));
    }

    #[test]
    fn budget_is_reported() {
        let tiny = Budget { max_cycles: 1, max_steps: 3 };
        assert!(matches!(hamilton_cycle(&petersen(), &tiny), Err(CycleError::Budget(_))));
    }
}
