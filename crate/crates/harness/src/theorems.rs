//! Single-theorem checks: hypotheses re-checked, conclusion evaluated.

use std::fmt;
use std::str::FromStr;

use locdirac_core::cycles::{
    audit_attachment_bounds, audit_pair_rules, cycle_length_spectrum, every_vertex_on_triangle,
    for_each_non_extendable_cycle, hamilton_by_extension, hamilton_cycle, is_12_extendable, is_cycle_extendable_graph,
    is_pancyclic, AuditFinding, Budget, Cycle, ExtendabilityMethod,
};
use locdirac_core::families::{join_with_clique, lambda_gap_family};
use locdirac_core::invariants::{diameter, edge_connectivity, is_planar, vertex_connectivity};
use locdirac_core::predicates::{
    is_balanced_complete_bipartite, is_closed_locally_ore, is_locally_connected, is_locally_dirac, is_locally_ore,
    satisfies_dirac, satisfies_ore,
};
use locdirac_core::{CycleError, Graph, VertexSet};
use serde::Serialize;
use serde_json::{json, Value};

use crate::canon::are_isomorphic;
use crate::error::HarnessError;
use crate::report::Status;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    T1_1,
    T1_2,
    T1_3,
    T1_5,
    C1_6,
    C1_7,
    P2_1,
    T2_2,
    T2_3,
    T2_4,
    T2_5,
    R2_5,
    T2_6,
    P2_7,
    T3_3,
    L3_1Audit,
    L3_2Audit,
    ConjRyjacek,
}

impl TheoremId {
    pub const ALL: [TheoremId; 18] = [
        TheoremId::T1_1,
        TheoremId::T1_2,
        TheoremId::T1_3,
        TheoremId::T1_5,
        TheoremId::C1_6,
        TheoremId::C1_7,
        TheoremId::P2_1,
        TheoremId::T2_2,
        TheoremId::T2_3,
        TheoremId::T2_4,
        TheoremId::T2_5,
        TheoremId::R2_5,
        TheoremId::T2_6,
        TheoremId::P2_7,
        TheoremId::T3_3,
        TheoremId::L3_1Audit,
        TheoremId::L3_2Audit,
        TheoremId::ConjRyjacek,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::T1_1 => "T1.1",
            TheoremId::T1_2 => "T1.2",
            TheoremId::T1_3 => "T1.3",
            TheoremId::T1_5 => "T1.5",
            TheoremId::C1_6 => "C1.6",
            TheoremId::C1_7 => "C1.7",
            TheoremId::P2_1 => "P2.1",
            TheoremId::T2_2 => "T2.2",
            TheoremId::T2_3 => "T2.3",
            TheoremId::T2_4 => "T2.4",
            TheoremId::T2_5 => "T2.5",
            TheoremId::R2_5 => "R2.5",
            TheoremId::T2_6 => "T2.6",
            TheoremId::P2_7 => "P2.7",
            TheoremId::T3_3 => "T3.3",
            TheoremId::L3_1Audit => "L3.1-audit",
            TheoremId::L3_2Audit => "L3.2-audit",
            TheoremId::ConjRyjacek => "CONJ-ryjacek",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| HarnessError::UnknownId { kind: "theorem", value: s.to_string() })
    }
}

impl Serialize for TheoremId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Whether connectedness is required where the statements leave it
/// implicit (T1.5, C1.6, C1.7, T2.4, R2.5).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum HypothesisMode {
    #[default]
    Connected,
    /// Hypotheses exactly as worded, so disconnected graphs qualify.
    Literal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckOptions {
    pub budget: Budget,
    pub mode: HypothesisMode,
    /// Largest order for the extendability conclusions (T3.3, C1.6, C1.7).
    /// Cycles are enumerated up to order 12, vertex sets beyond.
    pub extend_cap: usize,
    /// Largest order for the non-extendable cycle audits.
    pub audit_cap: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { budget: Budget::default(), mode: HypothesisMode::Connected, extend_cap: 15, audit_cap: 12 }
    }
}

/// Largest order at which extendability is decided by visiting cycles.
pub const ENUMERATION_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub status: Status,
    pub witness: Option<Value>,
    pub detail: String,
}

impl Verdict {
    fn pass(detail: impl Into<String>) -> Self {
        Verdict { status: Status::Pass, witness: None, detail: detail.into() }
    }

    fn skipped(detail: impl Into<String>) -> Self {
        Verdict { status: Status::Skipped, witness: None, detail: detail.into() }
    }

    fn fail(g: &Graph, evidence: Value, detail: impl Into<String>) -> Self {
        let mut witness = json!({ "graph": graph_json(g) });
        if let (Value::Object(w), Value::Object(e)) = (&mut witness, evidence) {
            w.extend(e);
        }
        Verdict { status: Status::Fail, witness: Some(witness), detail: detail.into() }
    }

    fn from_error(e: CycleError) -> Self {
        match e {
            CycleError::Budget(b) => Verdict { status: Status::SkippedBudget, witness: None, detail: b.to_string() },
            other => Verdict::skipped(other.to_string()),
        }
    }
}

pub fn graph_json(g: &Graph) -> Value {
    json!({ "n": g.n(), "edges": g.edges().map(|(u, v)| [u, v]).collect::<Vec<_>>() })
}

/// The graph stored under `"graph"` in a fail witness.
pub fn witness_graph(witness: &Value) -> Option<Graph> {
    let g = witness.get("graph")?;
    let n = g.get("n")?.as_u64()? as usize;
    let mut edges = Vec::new();
    for e in g.get("edges")?.as_array()? {
        let pair = e.as_array()?;
        if pair.len() != 2 {
            return None;
        }
        edges.push((pair[0].as_u64()? as usize, pair[1].as_u64()? as usize));
    }
    Graph::from_edges(n, edges).ok()
}

struct Hypothesis<'a> {
    g: &'a Graph,
    mode: HypothesisMode,
}

impl Hypothesis<'_> {
    fn order_at_least(&self, k: usize) -> Result<(), String> {
        if self.g.n() >= k {
            Ok(())
        } else {
            Err(format!("order {} < {k}", self.g.n()))
        }
    }

    fn connected(&self) -> Result<(), String> {
        if self.g.is_connected() {
            Ok(())
        } else {
            Err("not connected".into())
        }
    }

    fn implicit_connected(&self) -> Result<(), String> {
        match self.mode {
            HypothesisMode::Connected => self.connected(),
            HypothesisMode::Literal => Ok(()),
        }
    }

    fn holds(&self, ok: bool, what: &str) -> Result<(), String> {
        if ok {
            Ok(())
        } else {
            Err(format!("not {what}"))
        }
    }

    fn locally_dirac(&self) -> Result<(), String> {
        self.holds(is_locally_dirac(self.g), "locally Dirac")
    }

    fn locally_ore(&self) -> Result<(), String> {
        self.holds(is_locally_ore(self.g), "locally Ore")
    }
}

/// The hypotheses of `id` as checked on `g`; `Err` carries the reason for
/// skipping.
pub fn check_hypotheses(id: TheoremId, g: &Graph, mode: HypothesisMode) -> Result<(), String> {
    let h = Hypothesis { g, mode };
    match id {
        TheoremId::T1_1 | TheoremId::T1_2 => {
            h.order_at_least(3)?;
            h.holds(satisfies_dirac(g), "a Dirac graph")
        }
        TheoremId::T1_3 => {
            h.order_at_least(3)?;
            h.holds(satisfies_ore(g), "an Ore graph")
        }
        TheoremId::T1_5 => {
            h.order_at_least(3)?;
            h.implicit_connected()?;
            h.holds(is_closed_locally_ore(g), "closed locally Ore")
        }
        TheoremId::C1_6 => {
            h.order_at_least(3)?;
            h.implicit_connected()?;
            h.locally_ore()
        }
        TheoremId::C1_7 => {
            h.order_at_least(3)?;
            h.implicit_connected()?;
            h.locally_dirac()
        }
        TheoremId::P2_1 => {
            h.order_at_least(3)?;
            h.connected()
        }
        TheoremId::T2_2 => {
            h.order_at_least(4)?;
            h.connected()?;
            h.locally_ore()
        }
        TheoremId::T2_3 => {
            h.order_at_least(8)?;
            h.connected()?;
            h.locally_dirac()
        }
        TheoremId::T2_4 => {
            h.order_at_least(8)?;
            h.implicit_connected()?;
            h.locally_dirac()
        }
        TheoremId::T2_5 => {
            h.order_at_least(9)?;
            h.connected()?;
            h.locally_dirac()
        }
        TheoremId::R2_5 => {
            h.implicit_connected()?;
            h.locally_ore()
        }
        TheoremId::T2_6 => {
            h.order_at_least(3)?;
            h.connected()?;
            h.locally_dirac()
        }
        TheoremId::P2_7 => lambda_gap_parameter(g).map(|_| ()).ok_or_else(|| "not a G_k instance".into()),
        TheoremId::T3_3 => {
            h.order_at_least(3)?;
            h.connected()?;
            h.locally_dirac()?;
            h.holds(g.max_degree() <= 11, "of maximum degree at most 11")
        }
        TheoremId::L3_1Audit => Ok(()),
        TheoremId::L3_2Audit => {
            h.connected()?;
            h.locally_dirac()
        }
        TheoremId::ConjRyjacek => h.holds(is_locally_connected(g), "locally connected"),
    }
}

/// k when `g` is isomorphic to G_k.
fn lambda_gap_parameter(g: &Graph) -> Option<usize> {
    let k = (3..).take_while(|k| 2 * (k * k + 2) <= g.n()).find(|k| 2 * (k * k + 2) == g.n())?;
    let gk = lambda_gap_family(k).ok()?;
    are_isomorphic(g, &gk).then_some(k)
}

fn hamiltonicity(g: &Graph, budget: &Budget) -> Result<Option<Cycle>, CycleError> {
    hamilton_cycle(g, budget)
}

fn not_hamiltonian(g: &Graph) -> Verdict {
    Verdict::fail(g, json!({ "property": "hamiltonian" }), "no hamilton cycle")
}

fn twelve_extendability(g: &Graph, opts: &CheckOptions) -> Result<Option<Verdict>, CycleError> {
    if g.n() > opts.extend_cap {
        return Ok(None);
    }
    let r = is_12_extendable(g, &opts.budget)?;
    Ok(r.witness.map(|c| {
        Verdict::fail(
            g,
            json!({ "property": "{1,2}-extendable", "cycle": c }),
            format!("cycle {:?} has no extension by one or two vertices", c.vertices()),
        )
    }))
}

fn audit(g: &Graph, opts: &CheckOptions, rules: fn(&Graph, &Cycle) -> Vec<AuditFinding>) -> Result<Verdict, CycleError> {
    if g.n() > opts.audit_cap {
        return Ok(Verdict::skipped(format!("order {} above the audit cap {}", g.n(), opts.audit_cap)));
    }
    let mut first: Option<AuditFinding> = None;
    let examined = for_each_non_extendable_cycle(g, &opts.budget, |c| {
        if first.is_none() {
            first = rules(g, c).into_iter().next();
        }
    })?;
    Ok(match first {
        Some(f) => Verdict::fail(
            g,
            json!({ "rule": f.rule, "cycle": f.cycle, "detail": f.detail }),
            format!("rule {} violated on {:?}", f.rule, f.cycle),
        ),
        None => Verdict::pass(format!("{examined} non-extendable cycles audited")),
    })
}

/// Checks theorem `id` on `g`.
pub fn verify_theorem(id: TheoremId, g: &Graph, opts: &CheckOptions) -> Verdict {
    if let Err(reason) = check_hypotheses(id, g, opts.mode) {
        return Verdict::skipped(reason);
    }
    conclude(id, g, opts).unwrap_or_else(Verdict::from_error)
}

fn conclude(id: TheoremId, g: &Graph, opts: &CheckOptions) -> Result<Verdict, CycleError> {
    let n = g.n();
    let budget = &opts.budget;
    Ok(match id {
        TheoremId::T1_1 | TheoremId::T1_3 | TheoremId::T1_5 => match hamiltonicity(g, budget)? {
            Some(_) => Verdict::pass("hamiltonian"),
            None => not_hamiltonian(g),
        },
        TheoremId::T1_2 => {
            if is_balanced_complete_bipartite(g) {
                Verdict::pass("balanced complete bipartite")
            } else if is_pancyclic(g, budget)? {
                Verdict::pass("pancyclic")
            } else {
                let spectrum = cycle_length_spectrum(g, budget)?;
                Verdict::fail(g, json!({ "property": "pancyclic", "spectrum": spectrum }), "not pancyclic")
            }
        }
        TheoremId::C1_6 | TheoremId::C1_7 => {
            let mut detail = String::from("hamiltonian");
            let traced = if id == TheoremId::C1_7 && g.max_degree() <= 11 {
                match hamilton_by_extension(g, budget) {
                    Ok(Some(t)) if t.verify(g) => {
                        detail = format!("hamiltonian by {} extension moves", t.moves.len());
                        true
                    }
                    Ok(_) | Err(CycleError::NoTriangle) => false,
                    Err(e) => return Err(e),
                }
            } else {
                false
            };
            if !traced && hamiltonicity(g, budget)?.is_none() {
                return Ok(not_hamiltonian(g));
            }
            if let Some(fail) = twelve_extendability(g, opts)? {
                return Ok(fail);
            }
            if n <= opts.extend_cap {
                detail.push_str(", {1,2}-extendable");
            }
            Verdict::pass(detail)
        }
        TheoremId::P2_1 => {
            let h = join_with_clique(g).expect("connected and of order at least 3");
            let base = VertexSet::from_members(h.n(), 0..n).expect("in range");
            let (induced, _) = h.induced_subgraph(&base).expect("in range");
            if !is_locally_dirac(&h) {
                Verdict::fail(g, json!({ "property": "join is locally Dirac" }), "G + K_n is not locally Dirac")
            } else if induced != *g {
                Verdict::fail(g, json!({ "property": "induced copy" }), "G is not induced in G + K_n")
            } else {
                Verdict::pass(format!("G + K_{n} is locally Dirac of order {}", h.n()))
            }
        }
        TheoremId::T2_2 => {
            let kappa = vertex_connectivity(g);
            if kappa.value >= 3 {
                Verdict::pass(format!("kappa={}", kappa.value))
            } else {
                Verdict::fail(
                    g,
                    json!({ "kappa": kappa.value, "separator": kappa.separator }),
                    format!("kappa={}", kappa.value),
                )
            }
        }
        TheoremId::T2_3 => {
            let delta = g.min_degree();
            if delta >= 5 {
                Verdict::pass(format!("delta={delta}"))
            } else {
                let v = (0..n).find(|&v| g.degree(v) == delta).expect("n >= 8");
                Verdict::fail(g, json!({ "delta": delta, "vertex": v }), format!("delta={delta}"))
            }
        }
        TheoremId::T2_4 => {
            if is_planar(g) {
                Verdict::fail(g, json!({ "property": "non-planar" }), "planar")
            } else {
                Verdict::pass("non-planar")
            }
        }
        TheoremId::T2_5 | TheoremId::R2_5 => {
            let bound = if id == TheoremId::T2_5 { n / 3 - 1 } else { (n + 1) / 3 };
            match diameter(g).finite() {
                Some(d) if d <= bound => Verdict::pass(format!("diameter={d} bound={bound}")),
                d => Verdict::fail(
                    g,
                    json!({ "diameter": d, "bound": bound }),
                    format!("diameter={} bound={bound}", d.map_or("inf".to_string(), |d| d.to_string())),
                ),
            }
        }
        TheoremId::T2_6 => {
            let lambda = edge_connectivity(g);
            let delta = g.min_degree();
            if lambda.value == delta {
                Verdict::pass(format!("lambda=delta={delta}"))
            } else {
                Verdict::fail(
                    g,
                    json!({ "lambda": lambda.value, "delta": delta, "cut": lambda.separator }),
                    format!("lambda={} delta={delta}", lambda.value),
                )
            }
        }
        TheoremId::P2_7 => {
            let k = lambda_gap_parameter(g).expect("hypothesis checked");
            let lambda = edge_connectivity(g).value;
            let delta = g.min_degree();
            if is_locally_ore(g) && delta == k * k + 1 && lambda == k * k {
                Verdict::pass(format!("k={k} lambda={lambda} < delta={delta}"))
            } else {
                Verdict::fail(
                    g,
                    json!({ "k": k, "lambda": lambda, "delta": delta, "locally_ore": is_locally_ore(g) }),
                    format!("k={k} lambda={lambda} delta={delta}"),
                )
            }
        }
        TheoremId::T3_3 => {
            if n > opts.extend_cap {
                return Ok(Verdict::skipped(format!("order {n} above the extendability cap {}", opts.extend_cap)));
            }
            if !every_vertex_on_triangle(g) {
                return Ok(Verdict::fail(g, json!({ "property": "every vertex on a triangle" }), "a vertex lies on no triangle"));
            }
            // cycle counts explode in dense graphs; the vertex-set method
            // decides the same question
            let mut method =
                if n <= ENUMERATION_CAP { ExtendabilityMethod::Enumerate } else { ExtendabilityMethod::VertexSets };
            let r = match is_cycle_extendable_graph(g, method, budget) {
                Err(CycleError::Budget(_)) if method == ExtendabilityMethod::Enumerate => {
                    method = ExtendabilityMethod::VertexSets;
                    is_cycle_extendable_graph(g, method, budget)?
                }
                r => r?,
            };
            match r.witness {
                Some(c) => Verdict::fail(
                    g,
                    json!({ "property": "cycle extendable", "cycle": c }),
                    format!("cycle {:?} does not extend", c.vertices()),
                ),
                None => {
                    let unit = if method == ExtendabilityMethod::Enumerate { "cycles" } else { "cycle vertex sets" };
                    Verdict::pass(format!("fully cycle extendable, {} {unit} checked", r.examined))
                }
            }
        }
        TheoremId::L3_1Audit => audit(g, opts, audit_pair_rules)?,
        TheoremId::L3_2Audit => audit(g, opts, audit_attachment_bounds)?,
        TheoremId::ConjRyjacek => {
            let spectrum = cycle_length_spectrum(g, budget)?;
            let gapless = match (spectrum.first(), spectrum.last()) {
                (Some(&lo), Some(&hi)) => spectrum.len() == hi - lo + 1,
                _ => true,
            };
            let range = match (spectrum.first(), spectrum.last()) {
                (Some(lo), Some(hi)) => format!("cycle lengths {lo}..{hi}"),
                _ => "acyclic".to_string(),
            };
            if gapless {
                Verdict::pass(format!("weakly pancyclic, {range}"))
            } else {
                Verdict::fail(g, json!({ "property": "weakly pancyclic", "spectrum": spectrum }), format!("gap in {range}"))
            }
        }
    })
}
