//! Dynamic programming over vertex subsets.
//!
//! For every subset U, `reach[U]` holds the vertices v such that some path
//! starting at min(U) covers exactly U and ends at v. A subset carries a
//! cycle through all its vertices exactly when it has at least three
//! vertices and some such endpoint is adjacent to min(U).

use crate::error::CycleError;
use crate::graph::Graph;

/// Largest order accepted; the table has 2^n entries.
pub const MAX_SUBSET_ORDER: usize = 22;

pub struct HamiltonianSubsets {
    n: usize,
    reach: Vec<u32>,
}

impl HamiltonianSubsets {
    pub fn new(g: &Graph) -> Result<Self, CycleError> {
        let n = g.n();
        if n > MAX_SUBSET_ORDER {
            return Err(CycleError::TooLarge { n, max: MAX_SUBSET_ORDER });
        }
        let adj: Vec<u32> = (0..n).map(|v| g.neighbours(v).iter().fold(0u32, |m, w| m | 1 << w)).collect();
        let mut reach = vec![0u32; 1usize << n];
        for v in 0..n {
            reach[1 << v] = 1 << v;
        }
        for u in 1usize..1 << n {
            let ends = reach[u];
            if ends == 0 {
                continue;
            }
            let low = u.trailing_zeros();
            // only vertices above min(U) may join
            let above = !((2u32 << low) - 1);
            let mut e = ends;
            while e != 0 {
                let v = e.trailing_zeros() as usize;
                e &= e - 1;
                let mut cand = adj[v] & above & !(u as u32);
                while cand != 0 {
                    let w = cand.trailing_zeros();
                    cand &= cand - 1;
                    reach[u | 1 << w] |= 1 << w;
                }
            }
        }
        Ok(HamiltonianSubsets { n, reach: Self::close(reach, &adj) })
    }

    // replace each entry by a flag word: bit 31 set when U carries a cycle
    fn close(mut reach: Vec<u32>, adj: &[u32]) -> Vec<u32> {
        for (u, r) in reach.iter_mut().enumerate() {
            if u.count_ones() >= 3 {
                let low = u.trailing_zeros() as usize;
                if *r & adj[low] != 0 {
                    *r |= 1 << 31;
                }
            }
        }
        reach
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// True when ⟨U⟩ has a Hamilton cycle (U given as a bitmask).
    #[inline]
    pub fn has_cycle(&self, u: u32) -> bool {
        self.reach[u as usize] >> 31 == 1
    }

    /// Bitmasks of all subsets carrying a cycle.
    pub fn cycle_sets(&self) -> impl Iterator<Item = u32> + '_ {
        (0..self.reach.len() as u32).filter(move |&u| self.has_cycle(u))
    }

    /// Some x outside U with U ∪ {x} carrying a cycle.
    pub fn one_vertex_extension(&self, u: u32) -> Option<usize> {
        (0..self.n).find(|&x| u >> x & 1 == 0 && self.has_cycle(u | 1 << x))
    }

    /// Some x < y outside U with U ∪ {x, y} carrying a cycle.
    pub fn two_vertex_extension(&self, u: u32) -> Option<(usize, usize)> {
        for x in 0..self.n {
            if u >> x & 1 == 1 {
                continue;
            }
            for y in x + 1..self.n {
                if u >> y & 1 == 0 && self.has_cycle(u | 1 << x | 1 << y) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    /// Recovers a cycle through exactly the vertices of U.
    pub fn cycle_on(&self, g: &Graph, u: u32) -> Option<Vec<usize>> {
        if !self.has_cycle(u) {
            return None;
        }
        let low = u.trailing_zeros() as usize;
        let last = (0..self.n).find(|&v| self.reach[u as usize] >> v & 1 == 1 && g.adjacent(v, low) && v != low)?;
        let mut seq = vec![last];
        let (mut set, mut v) = (u, last);
        while v != low {
            set &= !(1 << v);
            let prev = (0..self.n).find(|&w| {
                self.reach[set as usize] >> w & 1 == 1 && g.adjacent(w, v) && (w == low || set.count_ones() > 1)
            })?;
            seq.push(prev);
            v = prev;
        }
        seq.reverse();
        Some(seq)
    }
}

pub(crate) fn mask_of(vertices: &[usize]) -> u32 {
    vertices.iter().fold(0u32, |m, &v| m | 1 << v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::validate_cycle;
    use crate::families::*;

    #[test]
    fn counts_on_small_graphs() {
        let k4 = HamiltonianSubsets::new(&complete(4)).unwrap();
        assert_eq!(k4.cycle_sets().count(), 5);
        let c6 = HamiltonianSubsets::new(&cycle(6)).unwrap();
        assert_eq!(c6.cycle_sets().collect::<Vec<_>>(), vec![0b111111]);
        let k33 = HamiltonianSubsets::new(&complete_bipartite(3, 3)).unwrap();
        assert!(k33.cycle_sets().all(|u| u.count_ones() % 2 == 0));
    }

    #[test]
    fn recovered_cycles_validate() {
        let g = path_strong_k3(4).unwrap();
        let h = HamiltonianSubsets::new(&g).unwrap();
        let mut count = 0;
        for u in h.cycle_sets() {
            let seq = h.cycle_on(&g, u).unwrap();
            assert_eq!(mask_of(&seq), u);
            validate_cycle(&g, &seq).unwrap();
            count += 1;
        }
        assert!(count > 100);
        assert!(HamiltonianSubsets::new(&complete(23)).is_err());
    }
}
