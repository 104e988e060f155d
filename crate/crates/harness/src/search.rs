//! Counterexample search over isomorphism classes or seeded samples.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use locdirac_core::cycles::{
    hamilton_cycle, is_cycle_extendable_graph, is_weakly_pancyclic, every_vertex_on_triangle, ExtendabilityMethod,
};
use locdirac_core::invariants::{edge_connectivity, is_planar, vertex_connectivity};
use locdirac_core::predicates::{
    is_closed_locally_ore, is_locally_connected, is_locally_dirac, is_locally_ore, satisfies_dirac, satisfies_ore,
};
use locdirac_core::{CycleError, Graph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::canon::{classes_up_to, extend_classes, CanonicalForm};
use crate::catalog::Instance;
use crate::error::HarnessError;
use crate::report::Status;
use crate::theorems::{check_hypotheses, graph_json, verify_theorem, CheckOptions, TheoremId};

/// Largest order accepted by [`exhaustive_search`].
pub const EXHAUSTIVE_CAP: usize = 9;

/// Which graphs are tested. All local filters also require connectivity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Filter {
    #[default]
    True,
    Connected,
    LocallyConnected,
    LocallyOre,
    LocallyDirac,
    ClosedLocallyOre,
    Dirac,
    Ore,
}

impl Filter {
    pub const ALL: [Filter; 8] = [
        Filter::True,
        Filter::Connected,
        Filter::LocallyConnected,
        Filter::LocallyOre,
        Filter::LocallyDirac,
        Filter::ClosedLocallyOre,
        Filter::Dirac,
        Filter::Ore,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Filter::True => "true",
            Filter::Connected => "connected",
            Filter::LocallyConnected => "locally-connected",
            Filter::LocallyOre => "locally-ore",
            Filter::LocallyDirac => "locally-dirac",
            Filter::ClosedLocallyOre => "closed-locally-ore",
            Filter::Dirac => "dirac",
            Filter::Ore => "ore",
        }
    }

    pub fn accepts(self, g: &Graph) -> bool {
        let connected = || g.n() > 0 && g.is_connected();
        match self {
            Filter::True => true,
            Filter::Connected => connected(),
            Filter::LocallyConnected => connected() && is_locally_connected(g),
            Filter::LocallyOre => connected() && is_locally_ore(g),
            Filter::LocallyDirac => connected() && is_locally_dirac(g),
            Filter::ClosedLocallyOre => connected() && is_closed_locally_ore(g),
            Filter::Dirac => satisfies_dirac(g),
            Filter::Ore => satisfies_ore(g),
        }
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Filter {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Filter::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| HarnessError::UnknownId { kind: "filter", value: s.to_string() })
    }
}

/// What is tested on graphs passing the filter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Property {
    #[default]
    True,
    WeaklyPancyclic,
    Hamiltonian,
    KappaAtLeast3,
    MinDegreeAtLeast5,
    NonPlanar,
    LambdaEqualsDelta,
    FullyCycleExtendable,
    /// The conclusion of a theorem, on graphs meeting its hypotheses.
    Theorem(TheoremId),
}

const PLAIN_PROPERTIES: [Property; 8] = [
    Property::True,
    Property::WeaklyPancyclic,
    Property::Hamiltonian,
    Property::KappaAtLeast3,
    Property::MinDegreeAtLeast5,
    Property::NonPlanar,
    Property::LambdaEqualsDelta,
    Property::FullyCycleExtendable,
];

/// Result of testing one graph.
#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    Holds,
    Violated(String),
    NotApplicable,
    OverBudget,
}

impl Property {
    pub fn id(self) -> String {
        match self {
            Property::True => "true".into(),
            Property::WeaklyPancyclic => "weakly-pancyclic".into(),
            Property::Hamiltonian => "hamiltonian".into(),
            Property::KappaAtLeast3 => "kappa-ge-3".into(),
            Property::MinDegreeAtLeast5 => "min-degree-ge-5".into(),
            Property::NonPlanar => "non-planar".into(),
            Property::LambdaEqualsDelta => "lambda-eq-delta".into(),
            Property::FullyCycleExtendable => "fully-cycle-extendable".into(),
            Property::Theorem(id) => id.as_str().into(),
        }
    }

    /// Extra restriction a perturbation must keep, beyond the filter.
    fn applies(self, g: &Graph, opts: &CheckOptions) -> bool {
        match self {
            Property::Theorem(id) => check_hypotheses(id, g, opts.mode).is_ok(),
            _ => true,
        }
    }

    pub fn test(self, g: &Graph, opts: &CheckOptions) -> Outcome {
        let budgeted = |r: Result<bool, CycleError>, what: &str| match r {
            Ok(true) => Outcome::Holds,
            Ok(false) => Outcome::Violated(format!("not {what}")),
            Err(CycleError::Budget(_)) => Outcome::OverBudget,
            Err(e) => Outcome::Violated(e.to_string()),
        };
        match self {
            Property::True => Outcome::Holds,
            Property::WeaklyPancyclic => budgeted(is_weakly_pancyclic(g, &opts.budget), "weakly pancyclic"),
            Property::Hamiltonian => {
                budgeted(hamilton_cycle(g, &opts.budget).map(|c| c.is_some()), "hamiltonian")
            }
            Property::KappaAtLeast3 => {
                let k = vertex_connectivity(g).value;
                if k >= 3 {
                    Outcome::Holds
                } else {
                    Outcome::Violated(format!("kappa={k}"))
                }
            }
            Property::MinDegreeAtLeast5 => {
                if g.min_degree() >= 5 {
                    Outcome::Holds
                } else {
                    Outcome::Violated(format!("delta={}", g.min_degree()))
                }
            }
            Property::NonPlanar => {
                if is_planar(g) {
                    Outcome::Violated("planar".into())
                } else {
                    Outcome::Holds
                }
            }
            Property::LambdaEqualsDelta => {
                let lambda = edge_connectivity(g).value;
                if lambda == g.min_degree() {
                    Outcome::Holds
                } else {
                    Outcome::Violated(format!("lambda={lambda} delta={}", g.min_degree()))
                }
            }
            Property::FullyCycleExtendable => budgeted(
                if every_vertex_on_triangle(g) {
                    is_cycle_extendable_graph(g, ExtendabilityMethod::VertexSets, &opts.budget).map(|r| r.extendable)
                } else {
                    Ok(false)
                },
                "fully cycle extendable",
            ),
            Property::Theorem(id) => {
                let v = verify_theorem(id, g, opts);
                match v.status {
                    Status::Pass => Outcome::Holds,
                    Status::Fail => Outcome::Violated(v.detail),
                    Status::Skipped => Outcome::NotApplicable,
                    Status::SkippedBudget => Outcome::OverBudget,
                }
            }
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}

impl FromStr for Property {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some(p) = PLAIN_PROPERTIES.into_iter().find(|p| p.id() == s) {
            return Ok(p);
        }
        let id = s.strip_prefix("theorem:").unwrap_or(s);
        id.parse::<TheoremId>()
            .map(Property::Theorem)
            .map_err(|_| HarnessError::UnknownId { kind: "property", value: s.to_string() })
    }
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub filter: Filter,
    pub property: Property,
    pub min_n: usize,
    /// Largest order: the exhaustive order, or the sampling range's top.
    pub max_n: usize,
    pub samples: u64,
    pub seed: u64,
    pub options: CheckOptions,
    /// Catalog graphs available for perturbation.
    pub bases: Vec<Instance>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            filter: Filter::True,
            property: Property::True,
            min_n: 1,
            max_n: 7,
            samples: 10_000,
            seed: 0,
            options: CheckOptions::default(),
            bases: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub graph: Value,
    pub origin: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchOutcome {
    pub mode: &'static str,
    pub filter: String,
    pub property: String,
    pub seed: Option<u64>,
    /// Graphs generated (isomorphism classes or samples), by order.
    pub visited: BTreeMap<usize, u64>,
    /// Graphs that passed the filter and on which the property was tested.
    pub tested: BTreeMap<usize, u64>,
    pub over_budget: u64,
    pub counterexample: Option<Counterexample>,
}

impl SearchOutcome {
    pub fn total_visited(&self) -> u64 {
        self.visited.values().sum()
    }

    pub fn total_tested(&self) -> u64 {
        self.tested.values().sum()
    }
}

struct Tally {
    outcome: SearchOutcome,
}

impl Tally {
    fn new(mode: &'static str, config: &SearchConfig, seed: Option<u64>) -> Self {
        Tally {
            outcome: SearchOutcome {
                mode,
                filter: config.filter.to_string(),
                property: config.property.to_string(),
                seed,
                visited: BTreeMap::new(),
                tested: BTreeMap::new(),
                over_budget: 0,
                counterexample: None,
            },
        }
    }

    fn record(&mut self, g: &Graph, origin: impl FnOnce() -> String, result: Option<Outcome>) {
        *self.outcome.visited.entry(g.n()).or_default() += 1;
        match result {
            None | Some(Outcome::NotApplicable) => {}
            Some(Outcome::OverBudget) => self.outcome.over_budget += 1,
            Some(Outcome::Holds) => *self.outcome.tested.entry(g.n()).or_default() += 1,
            Some(Outcome::Violated(detail)) => {
                *self.outcome.tested.entry(g.n()).or_default() += 1;
                if self.outcome.counterexample.is_none() {
                    self.outcome.counterexample = Some(Counterexample { graph: graph_json(g), origin: origin(), detail });
                }
            }
        }
    }
}

fn evaluate(config: &SearchConfig, g: &Graph) -> Option<Outcome> {
    (g.n() >= config.min_n && config.filter.accepts(g)).then(|| config.property.test(g, &config.options))
}

/// Tests every isomorphism class of order `min_n..=max_n`, stopping after
/// the first order that yields a counterexample.
pub fn exhaustive_search(config: &SearchConfig) -> Result<SearchOutcome, HarnessError> {
    if config.max_n > EXHAUSTIVE_CAP {
        return Err(HarnessError::CapExceeded { requested: config.max_n, cap: EXHAUSTIVE_CAP });
    }
    let mut tally = Tally::new("exhaustive", config, None);
    let start = config.min_n.max(1);
    if start > config.max_n {
        return Ok(tally.outcome);
    }
    let mut level: Vec<CanonicalForm> = classes_up_to(start).pop().expect("nonempty");
    for n in start..=config.max_n {
        if n > start {
            level = extend_classes(&level);
        }
        let results: Vec<(Graph, Option<Outcome>)> = level
            .par_iter()
            .map(|form| {
                let g = form.to_graph();
                let r = evaluate(config, &g);
                (g, r)
            })
            .collect();
        for (g, r) in results {
            tally.record(&g, || format!("class of order {n}"), r);
        }
        if tally.outcome.counterexample.is_some() {
            break;
        }
    }
    Ok(tally.outcome)
}

/// Seeded sampler: even indices draw G(n, p) with p swept over 0.3 … 0.9;
/// odd indices relabel a base graph and add random edges that keep a
/// predicate. Sample i depends only on (seed, i).
pub struct Sampler<'a> {
    pub seed: u64,
    pub min_n: usize,
    pub max_n: usize,
    pub bases: &'a [Instance],
}

impl Sampler<'_> {
    pub fn sample<K: Fn(&Graph) -> bool>(&self, index: u64, keep: K) -> (Graph, String) {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index);
        if index % 2 == 1 && !self.bases.is_empty() {
            let base = &self.bases[rng.random_range(0..self.bases.len())];
            let n = base.graph.n();
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let mut g = base.graph.relabelled(&perm).expect("permutation");
            let mut added = 0;
            for _ in 0..rng.random_range(1..=n.max(1)) {
                let (u, v) = (rng.random_range(0..n), rng.random_range(0..n));
                if u == v || g.adjacent(u, v) {
                    continue;
                }
                let h = g.with_edge(u, v).expect("in range");
                if keep(&h) {
                    g = h;
                    added += 1;
                }
            }
            return (g, format!("{} +{added} edges", base.label));
        }
        let lo = self.min_n.max(1);
        let n = rng.random_range(lo..=self.max_n.max(lo));
        let step = (index / 2) % 7;
        let p = 0.3 + 0.1 * step as f64;
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        (Graph::from_edges(n, edges).expect("in range"), format!("gnp n={n} p=0.{}", 3 + step))
    }
}

/// Tests `samples` seeded graphs. Perturbations start from the bases that
/// pass the filter (and the theorem's hypotheses) and keep passing them.
pub fn random_search(config: &SearchConfig) -> SearchOutcome {
    let keep = |g: &Graph| config.filter.accepts(g) && config.property.applies(g, &config.options);
    let bases: Vec<Instance> = config
        .bases
        .iter()
        .filter(|b| (config.min_n..=config.max_n).contains(&b.graph.n()) && keep(&b.graph))
        .cloned()
        .collect();
    let sampler = Sampler { seed: config.seed, min_n: config.min_n, max_n: config.max_n, bases: &bases };
    let results: Vec<(Graph, String, Option<Outcome>)> = (0..config.samples)
        .into_par_iter()
        .map(|i| {
            let (g, origin) = sampler.sample(i, keep);
            let r = evaluate(config, &g);
            (g, format!("sample {i}: {origin}"), r)
        })
        .collect();
    let mut tally = Tally::new("random", config, Some(config.seed));
    for (g, origin, r) in results {
        tally.record(&g, || origin, r);
    }
    tally.outcome
}
