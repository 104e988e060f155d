//! Simple undirected graphs on the vertex set `0..n`.
//!
//! Adjacency is stored as one bitset row per vertex together with a degree
//! cache. Graph values are immutable once built; every constructor returns a
//! fresh graph.

use std::collections::VecDeque;
use std::fmt;

use crate::error::GraphError;

const WORD: usize = 64;

/// A set of vertices drawn from a fixed universe `0..universe`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    words: Vec<u64>,
    universe: usize,
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        VertexSet {
            words: vec![0; universe.div_ceil(WORD)],
            universe,
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::new(universe);
        for v in 0..universe {
            s.insert(v);
        }
        s
    }

    /// Builds a set from members, rejecting anything outside the universe.
    pub fn from_members<I>(universe: usize, members: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut s = Self::new(universe);
        for v in members {
            if v >= universe {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: universe });
            }
            s.insert(v);
        }
        Ok(s)
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / WORD] >> (v % WORD) & 1 == 1
    }

    /// Inserts `v`; returns `true` if it was not already present.
    ///
    /// Panics if `v` is outside the universe.
    #[inline]
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.universe, "vertex {v} outside universe {}", self.universe);
        let w = &mut self.words[v / WORD];
        let bit = 1u64 << (v % WORD);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, v: usize) -> bool {
        if v >= self.universe {
            return false;
        }
        let w = &mut self.words[v / WORD];
        let bit = 1u64 << (v % WORD);
        let present = *w & bit != 0;
        *w &= !bit;
        present
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    /// Number of common members.
    #[inline]
    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
        out
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
        out
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
        out
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i * WORD + b)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Shortest-path distance; `Infinite` marks unreachable pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<VertexSet>,
    degrees: Vec<usize>,
    edge_count: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            rows: vec![VertexSet::new(n); n],
            degrees: vec![0; n],
            edge_count: 0,
        }
    }

    /// Builds a graph from unordered pairs. Duplicate pairs collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.check_pair(u, v)?;
            g.link(u, v);
        }
        Ok(g)
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::EdgeOutOfRange { u, v, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop { vertex: u });
        }
        Ok(())
    }

    // Callers guarantee u != v and both in range.
    fn link(&mut self, u: usize, v: usize) {
        if self.rows[u].insert(v) {
            self.rows[v].insert(u);
            self.degrees[u] += 1;
            self.degrees[v] += 1;
            self.edge_count += 1;
        }
    }

    fn unlink(&mut self, u: usize, v: usize) {
        if self.rows[u].remove(v) {
            self.rows[v].remove(u);
            self.degrees[u] -= 1;
            self.degrees[v] -= 1;
            self.edge_count -= 1;
        }
    }

    /// Copy of this graph with the edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        self.check_pair(u, v)?;
        let mut g = self.clone();
        g.link(u, v);
        Ok(g)
    }

    /// Copy of this graph with the edge `uv` removed (no-op if absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        self.check_pair(u, v)?;
        let mut g = self.clone();
        g.unlink(u, v);
        Ok(g)
    }

    /// Copy of this graph with `extra` isolated vertices appended and the
    /// given edges added.
    pub fn extended<I>(&self, extra: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = self.n + extra;
        let mut g = Graph::empty(n);
        for (u, v) in self.edges() {
            g.link(u, v);
        }
        for (u, v) in edges {
            g.check_pair(u, v)?;
            g.link(u, v);
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// δ(G); zero for the null graph.
    pub fn min_degree(&self) -> usize {
        self.degrees.iter().copied().min().unwrap_or(0)
    }

    /// Δ(G); zero for the null graph.
    pub fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u < self.n && self.rows[u].contains(v)
    }

    /// Borrowed neighbour row. Panics if `v` is out of range.
    #[inline]
    pub fn neighbours(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    /// N(v).
    pub fn open_neighbourhood(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(self.rows[v].clone())
    }

    /// N[v] = N(v) ∪ {v}.
    pub fn closed_neighbourhood(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        let mut s = self.rows[v].clone();
        s.insert(v);
        Ok(s)
    }

    /// Degree of `u` inside ⟨N(v)⟩, i.e. |N(u) ∩ N(v)|.
    #[inline]
    pub fn local_degree(&self, v: usize, u: usize) -> usize {
        self.rows[u].intersection_len(&self.rows[v])
    }

    /// Edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.rows[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// The induced subgraph ⟨X⟩ together with the map new index → old vertex.
    ///
    /// New indices follow the increasing order of the members of `X`.
    pub fn induced_subgraph(&self, x: &VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        if let Some(bad) = x.iter().find(|&v| v >= self.n) {
            return Err(GraphError::VertexOutOfRange { vertex: bad, n: self.n });
        }
        let map: Vec<usize> = x.iter().collect();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let mut h = Graph::empty(map.len());
        for (i, &v) in map.iter().enumerate() {
            for w in self.rows[v].iter() {
                let j = index[w];
                if j != usize::MAX && j > i {
                    h.link(i, j);
                }
            }
        }
        Ok((h, map))
    }

    /// Strong product G ⊠ H with `(u, v) ↦ u·n(H) + v`.
    pub fn strong_product(&self, other: &Graph) -> Graph {
        let m = other.n;
        let mut p = Graph::empty(self.n * m);
        let id = |u: usize, v: usize| u * m + v;
        for u in 0..self.n {
            for v in 0..m {
                for x in 0..self.n {
                    for y in 0..m {
                        let a = id(u, v);
                        let b = id(x, y);
                        if a >= b {
                            continue;
                        }
                        let same_g = u == x;
                        let same_h = v == y;
                        let adj_g = self.adjacent(u, x);
                        let adj_h = other.adjacent(v, y);
                        if (same_g && adj_h) || (same_h && adj_g) || (adj_g && adj_h) {
                            p.link(a, b);
                        }
                    }
                }
            }
        }
        p
    }

    /// Join G + H: the vertices of H are shifted by n(G).
    pub fn join(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut j = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            j.link(u, v);
        }
        for (u, v) in other.edges() {
            j.link(u + shift, v + shift);
        }
        for u in 0..self.n {
            for v in 0..other.n {
                j.link(u, v + shift);
            }
        }
        j
    }

    /// Disjoint union with the vertices of `other` shifted by n(G).
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut j = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            j.link(u, v);
        }
        for (u, v) in other.edges() {
            j.link(u + shift, v + shift);
        }
        j
    }

    /// The k-th power: u ∼ v iff 1 ≤ d(u, v) ≤ k.
    pub fn power(&self, k: usize) -> Result<Graph, GraphError> {
        if k == 0 {
            return Err(GraphError::InvalidParameter("graph power requires k >= 1".into()));
        }
        let mut p = Graph::empty(self.n);
        for u in 0..self.n {
            let dist = self.bfs_from(u);
            for (v, d) in dist.into_iter().enumerate() {
                if let Distance::Finite(d) = d {
                    if v > u && d >= 1 && d <= k {
                        p.link(u, v);
                    }
                }
            }
        }
        Ok(p)
    }

    /// Single-source shortest-path distances.
    pub fn bfs_distances(&self, source: usize) -> Result<Vec<Distance>, GraphError> {
        self.check_vertex(source)?;
        Ok(self.bfs_from(source))
    }

    pub(crate) fn bfs_from(&self, source: usize) -> Vec<Distance> {
        let mut dist = vec![Distance::Infinite; self.n];
        let mut queue = VecDeque::new();
        dist[source] = Distance::Finite(0);
        queue.push_back((source, 0usize));
        while let Some((v, d)) = queue.pop_front() {
            for w in self.rows[v].iter() {
                if dist[w] == Distance::Infinite {
                    dist[w] = Distance::Finite(d + 1);
                    queue.push_back((w, d + 1));
                }
            }
        }
        dist
    }

    /// Connected components as vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for w in self.rows[v].iter() {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True for graphs with exactly one component. The null graph is not
    /// connected.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    /// Connectivity of G − `removed`. Returns the component count.
    pub(crate) fn component_count_without(&self, removed: &VertexSet) -> usize {
        let mut seen = removed.clone();
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..self.n {
            if seen.contains(s) {
                continue;
            }
            count += 1;
            seen.insert(s);
            stack.push(s);
            while let Some(v) = stack.pop() {
                for w in self.rows[v].iter() {
                    if seen.insert(w) {
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count == self.n * self.n.saturating_sub(1) / 2
    }

    /// Graph with vertex `v` of `self` sent to `perm[v]`.
    pub fn relabelled(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        if perm.len() != self.n {
            return Err(GraphError::InvalidParameter(format!(
                "permutation has length {}, expected {}",
                perm.len(),
                self.n
            )));
        }
        let mut seen = VertexSet::new(self.n);
        for &p in perm {
            if p >= self.n || !seen.insert(p) {
                return Err(GraphError::InvalidParameter("not a permutation".into()));
            }
        }
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.link(perm[u], perm[v]);
        }
        Ok(g)
    }
}
