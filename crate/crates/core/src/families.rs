//! Parametric graph families.
//!
//! Labelling is fixed per family so tests can address specific vertices:
//!
//! * strong products `P ⊠ K_r` / `C ⊠ K_r` send `(i, a)` to `r·i + a`;
//! * joins place the left operand first (`0..n(G)`), then the right one;
//! * constructions that add vertices to a product append them after the
//!   product's vertices, in the order documented on each function.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::GraphError;
use crate::graph::Graph;

fn invalid(msg: impl Into<String>) -> GraphError {
    GraphError::InvalidParameter(msg.into())
}

pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, edges).expect("valid complete graph")
}

/// The path `0 - 1 - … - (n-1)`.
pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("valid path")
}

/// The cycle `0 - 1 - … - (n-1) - 0`; for `n < 3` this is the path.
pub fn cycle(n: usize) -> Graph {
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    if n >= 3 {
        edges.push((0, n - 1));
    }
    Graph::from_edges(n, edges).expect("valid cycle")
}

/// K_{a,b} with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::empty(a).join(&Graph::empty(b))
}

/// Star K_{1,leaves}, centre 0.
pub fn star(leaves: usize) -> Graph {
    complete_bipartite(1, leaves)
}

/// Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, edges).expect("valid Petersen graph")
}

/// P_m ⊠ K_3, `(i, a) ↦ 3i + a`.
pub fn path_strong_k3(m: usize) -> Result<Graph, GraphError> {
    if m < 2 {
        return Err(invalid(format!("path-strong-k3 needs m >= 2, got {m}")));
    }
    Ok(path(m).strong_product(&complete(3)))
}

/// C_m ⊠ K_3, built from the raw product even when m ∈ {3, 4}.
pub fn cycle_strong_k3(m: usize) -> Result<Graph, GraphError> {
    if m < 3 {
        return Err(invalid(format!("cycle-strong-k3 needs m >= 3, got {m}")));
    }
    Ok(cycle(m).strong_product(&complete(3)))
}

/// P_m ⊠ K_2, `(i, a) ↦ 2i + a`. Planar and closed locally Dirac.
pub fn path_strong_k2(m: usize) -> Result<Graph, GraphError> {
    if m < 3 {
        return Err(invalid(format!("path-strong-k2 needs m >= 3, got {m}")));
    }
    Ok(path(m).strong_product(&complete(2)))
}

/// G + K_n for a connected G of order n ≥ 3; G occupies `0..n`.
pub fn join_with_clique(g: &Graph) -> Result<Graph, GraphError> {
    if g.n() < 3 {
        return Err(invalid(format!("join-with-clique needs order >= 3, got {}", g.n())));
    }
    if !g.is_connected() {
        return Err(invalid("join-with-clique needs a connected graph"));
    }
    Ok(g.join(&complete(g.n())))
}

/// G_k: two cliques K_{k²+2} on `0..k²+2` and `k²+2..2(k²+2)`, with the
/// first k vertices of each clique completely joined to each other.
pub fn lambda_gap_family(k: usize) -> Result<Graph, GraphError> {
    if k < 3 {
        return Err(invalid(format!("lambda-gap needs k >= 3, got {k}")));
    }
    let side = k * k + 2;
    let two = complete(side).disjoint_union(&complete(side));
    let bridge = (0..k).flat_map(|i| (0..k).map(move |j| (i, side + j)));
    two.extended(0, bridge)
}

/// P_m ⊠ K_3 plus vertex `3m` joined to the first layer `{0, 1, 2}`.
pub fn ore_min_degree3(m: usize) -> Result<Graph, GraphError> {
    if m < 3 {
        return Err(invalid(format!("ore-min-degree3 needs m >= 3, got {m}")));
    }
    let base = path_strong_k3(m)?;
    let x = base.n();
    base.extended(1, (0..3).map(|a| (a, x)))
}

/// Locally Ore graph of order n with diameter ⌊(n+1)/3⌋.
///
/// With n = 3k + r, the base is P_{k-1} ⊠ K_3 (r ∈ {0, 1}) or P_k ⊠ K_3
/// (r = 2); `S_1` is its first layer and `S_2` its last. Appended vertices:
///
/// * r = 0: one vertex on `S_1`, then a K_2 on `S_2`;
/// * r = 1: a K_2 on `S_1`, then a K_2 on `S_2`;
/// * r = 2: one vertex on `S_1`, then one vertex on `S_2`.
pub fn ore_diameter_extremal(n: usize) -> Result<Graph, GraphError> {
    if n < 9 {
        return Err(invalid(format!("ore-diameter-extremal needs n >= 9, got {n}")));
    }
    let k = n / 3;
    let (layers, first_pad, second_pad) = match n % 3 {
        0 => (k - 1, 1, 2),
        1 => (k - 1, 2, 2),
        _ => (k, 1, 1),
    };
    let base = path_strong_k3(layers)?;
    let s1 = [0, 1, 2];
    let last = 3 * (layers - 1);
    let s2 = [last, last + 1, last + 2];
    let mut edges = Vec::new();
    let mut next = base.n();
    for (pad, layer) in [(first_pad, s1), (second_pad, s2)] {
        let added: Vec<usize> = (next..next + pad).collect();
        next += pad;
        for &a in &added {
            edges.extend(layer.iter().map(|&s| (s, a)));
        }
        if let [a, b] = added[..] {
            edges.push((a, b));
        }
    }
    base.extended(next - base.n(), edges)
}

/// K_{half,half}.
pub fn balanced_complete_bipartite(half: usize) -> Result<Graph, GraphError> {
    if half < 2 {
        return Err(invalid(format!("balanced-complete-bipartite needs half >= 2, got {half}")));
    }
    Ok(complete_bipartite(half, half))
}

/// Complete k-partite graph with parts of size p; part i is `i·p..(i+1)·p`.
pub fn complete_multipartite(k: usize, p: usize) -> Result<Graph, GraphError> {
    if k < 3 || p < 1 {
        return Err(invalid(format!("complete-multipartite needs k >= 3 and p >= 1, got k={k} p={p}")));
    }
    let n = k * p;
    let edges = (0..n).flat_map(|u| (u + 1..n).filter(move |v| u / p != v / p).map(move |v| (u, v)));
    Graph::from_edges(n, edges)
}

/// C_{3k} raised to the k-th power.
pub fn cycle_power_3k(k: usize) -> Result<Graph, GraphError> {
    if k < 1 {
        return Err(invalid("cycle-power-3k needs k >= 1"));
    }
    cycle(3 * k).power(k)
}

/// Named family identifiers accepted in text form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    PathStrongK3,
    CycleStrongK3,
    PathStrongK2,
    JoinWithClique,
    LambdaGap,
    OreMinDegree3,
    OreDiameterExtremal,
    BalancedCompleteBipartite,
    CompleteMultipartite,
    CyclePower3k,
    Complete,
    Path,
    Cycle,
    CompleteBipartite,
    Star,
    Petersen,
}

impl Family {
    pub const ALL: [Family; 16] = [
        Family::PathStrongK3,
        Family::CycleStrongK3,
        Family::PathStrongK2,
        Family::JoinWithClique,
        Family::LambdaGap,
        Family::OreMinDegree3,
        Family::OreDiameterExtremal,
        Family::BalancedCompleteBipartite,
        Family::CompleteMultipartite,
        Family::CyclePower3k,
        Family::Complete,
        Family::Path,
        Family::Cycle,
        Family::CompleteBipartite,
        Family::Star,
        Family::Petersen,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Family::PathStrongK3 => "path-strong-k3",
            Family::CycleStrongK3 => "cycle-strong-k3",
            Family::PathStrongK2 => "path-strong-k2",
            Family::JoinWithClique => "join-with-clique",
            Family::LambdaGap => "lambda-gap",
            Family::OreMinDegree3 => "ore-min-degree3",
            Family::OreDiameterExtremal => "ore-diameter-extremal",
            Family::BalancedCompleteBipartite => "balanced-complete-bipartite",
            Family::CompleteMultipartite => "complete-multipartite",
            Family::CyclePower3k => "cycle-power-3k",
            Family::Complete => "complete",
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::CompleteBipartite => "complete-bipartite",
            Family::Star => "star",
            Family::Petersen => "petersen",
        }
    }

    /// Parameter names, in canonical order.
    pub fn params(self) -> &'static [&'static str] {
        match self {
            Family::PathStrongK3 | Family::CycleStrongK3 | Family::PathStrongK2 | Family::OreMinDegree3 => &["m"],
            // base graph of the join: one of the classic families, by order n
            Family::JoinWithClique => &["base", "n"],
            Family::LambdaGap | Family::CyclePower3k => &["k"],
            Family::OreDiameterExtremal | Family::Complete | Family::Path | Family::Cycle => &["n"],
            Family::BalancedCompleteBipartite => &["half"],
            Family::CompleteMultipartite => &["k", "p"],
            Family::CompleteBipartite => &["a", "b"],
            Family::Star => &["leaves"],
            Family::Petersen => &[],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Family {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.replace('_', "-");
        Family::ALL
            .into_iter()
            .find(|f| f.id() == norm)
            .ok_or_else(|| invalid(format!("unknown family `{s}`")))
    }
}

/// Bases accepted by `join-with-clique`.
const JOIN_BASES: [&str; 4] = ["path", "cycle", "complete", "star"];

/// A family id with its integer parameters, e.g. `path-strong-k3 m=5`.
///
/// For `join-with-clique` the `base` parameter selects the connected graph
/// being joined: 0 = path, 1 = cycle, 2 = complete, 3 = star (also accepted
/// by name in text form).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FamilySpec {
    pub family: Family,
    pub params: BTreeMap<String, usize>,
}

impl FamilySpec {
    pub fn new(family: Family, params: &[(&str, usize)]) -> Self {
        FamilySpec {
            family,
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
        }
    }

    fn get(&self, key: &str) -> Result<usize, GraphError> {
        self.params
            .get(key)
            .copied()
            .ok_or_else(|| invalid(format!("{} requires parameter `{key}`", self.family)))
    }

    /// Builds the graph this spec names.
    pub fn build(&self) -> Result<Graph, GraphError> {
        for key in self.params.keys() {
            if !self.family.params().contains(&key.as_str()) {
                return Err(invalid(format!("{} has no parameter `{key}`", self.family)));
            }
        }
        match self.family {
            Family::PathStrongK3 => path_strong_k3(self.get("m")?),
            Family::CycleStrongK3 => cycle_strong_k3(self.get("m")?),
            Family::PathStrongK2 => path_strong_k2(self.get("m")?),
            Family::JoinWithClique => {
                let n = self.get("n")?;
                let base = match self.get("base")? {
                    0 => path(n),
                    1 => cycle(n),
                    2 => complete(n),
                    3 if n >= 1 => star(n - 1),
                    b => return Err(invalid(format!("unknown join-with-clique base {b}"))),
                };
                join_with_clique(&base)
            }
            Family::LambdaGap => lambda_gap_family(self.get("k")?),
            Family::OreMinDegree3 => ore_min_degree3(self.get("m")?),
            Family::OreDiameterExtremal => ore_diameter_extremal(self.get("n")?),
            Family::BalancedCompleteBipartite => balanced_complete_bipartite(self.get("half")?),
            Family::CompleteMultipartite => complete_multipartite(self.get("k")?, self.get("p")?),
            Family::CyclePower3k => cycle_power_3k(self.get("k")?),
            Family::Complete => Ok(complete(self.get("n")?)),
            Family::Path => Ok(path(self.get("n")?)),
            Family::Cycle => Ok(cycle(self.get("n")?)),
            Family::CompleteBipartite => Ok(complete_bipartite(self.get("a")?, self.get("b")?)),
            Family::Star => Ok(star(self.get("leaves")?)),
            Family::Petersen => Ok(petersen()),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.family.id())?;
        for key in self.family.params() {
            if let Some(v) = self.params.get(*key) {
                if self.family == Family::JoinWithClique && *key == "base" {
                    match JOIN_BASES.get(*v) {
                        Some(name) => write!(f, " base={name}")?,
                        None => write!(f, " base={v}")?,
                    }
                } else {
                    write!(f, " {key}={v}")?;
                }
            }
        }
        Ok(())
    }
}

impl FromStr for FamilySpec {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut tokens = s.split_whitespace();
        let family: Family = tokens.next().ok_or_else(|| invalid("empty family spec"))?.parse()?;
        let mut params = BTreeMap::new();
        for tok in tokens {
            let (key, value) = tok
                .split_once('=')
                .ok_or_else(|| invalid(format!("expected key=value, got `{tok}`")))?;
            if !family.params().contains(&key) {
                return Err(invalid(format!("{family} has no parameter `{key}`")));
            }
            let parsed = if family == Family::JoinWithClique && key == "base" {
                match JOIN_BASES.iter().position(|b| *b == value) {
                    Some(i) => i,
                    None => value.parse().map_err(|_| invalid(format!("bad base `{value}`")))?,
                }
            } else {
                value
                    .parse()
                    .map_err(|_| invalid(format!("parameter `{key}` needs a non-negative integer, got `{value}`")))?
            };
            if params.insert(key.to_string(), parsed).is_some() {
                return Err(invalid(format!("parameter `{key}` given twice")));
            }
        }
        Ok(FamilySpec { family, params })
    }
}
