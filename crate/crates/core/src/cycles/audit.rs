//! Necessary conditions on non-extendable cycles, checked directly.
//!
//! These audits take a cycle that is already known not to extend and test
//! the structural consequences that must then hold. Any finding means
//! either the cycle does extend or the graph falls outside the conditions'
//! hypotheses.

use serde::Serialize;

use crate::graph::{Graph, VertexSet};

use super::Cycle;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditFinding {
    pub rule: &'static str,
    pub cycle: Vec<usize>,
    pub detail: String,
}

/// Bookkeeping around a maximum-degree attachment vertex.
///
/// `order` is the cycle rotated so that `order[0]` is the attachment vertex
/// v_0; `cycle_neighbours` excludes v_1 and v_{t−1}; `t_set` is
/// {x, v_1, v_{t−1}}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtensionContext {
    pub cycle: Cycle,
    pub order: Vec<usize>,
    pub x: usize,
    pub v0: usize,
    pub d: usize,
    pub s: usize,
    pub cycle_neighbours: Vec<usize>,
    pub t_set: [usize; 3],
}

impl ExtensionContext {
    /// Contexts for every attachment vertex of maximum degree and every
    /// off-cycle neighbour of it.
    pub fn all(g: &Graph, c: &Cycle) -> Vec<ExtensionContext> {
        let seq = c.vertices();
        let t = seq.len();
        let on = c.vertex_set(g.n());
        let attachments: Vec<usize> =
            (0..t).filter(|&i| !g.neighbours(seq[i]).difference(&on).is_empty()).collect();
        let Some(d) = attachments.iter().map(|&i| g.degree(seq[i])).max() else {
            return Vec::new();
        };
        let mut out = Vec::new();
        for &i in attachments.iter().filter(|&&i| g.degree(seq[i]) == d) {
            let order: Vec<usize> = (0..t).map(|k| seq[(i + k) % t]).collect();
            let v0 = order[0];
            let off = g.neighbours(v0).difference(&on);
            let cycle_neighbours: Vec<usize> = g
                .neighbours(v0)
                .intersection(&on)
                .iter()
                .filter(|&u| u != order[1] && u != order[t - 1])
                .collect();
            for x in off.iter() {
                out.push(ExtensionContext {
                    cycle: c.clone(),
                    order: order.clone(),
                    x,
                    v0,
                    d,
                    s: off.len(),
                    cycle_neighbours: cycle_neighbours.clone(),
                    t_set: [x, order[1], order[t - 1]],
                });
            }
        }
        out
    }

    /// The first context in [`ExtensionContext::all`] order.
    pub fn select(g: &Graph, c: &Cycle) -> Option<ExtensionContext> {
        Self::all(g, c).into_iter().next()
    }
}

/// Rules about two attachment vertices v_i, v_j sharing an off-cycle
/// neighbour x. For a non-extendable cycle:
/// 1. v_i and v_j are not consecutive;
/// 2. v_{i+1} ≁ v_{j+1} and v_{i−1} ≁ v_{j−1};
/// 3. if v_{i−1} ∼ v_{i+1} then v_i ≁ v_{j−1} and v_i ≁ v_{j+1};
/// 4. if j = i + 2, v_{i+1} has no two consecutive neighbours on v_{i+2} … v_i.
pub fn audit_pair_rules(g: &Graph, c: &Cycle) -> Vec<AuditFinding> {
    let seq = c.vertices();
    let t = seq.len() as isize;
    let v = |i: isize| seq[i.rem_euclid(t) as usize];
    let on = c.vertex_set(g.n());
    let mut found = Vec::new();
    let mut report = |rule: &'static str, x: usize, i: isize, j: isize| {
        found.push(AuditFinding { rule, cycle: seq.to_vec(), detail: format!("x={x} i={i} j={j}") });
    };
    for x in (0..g.n()).filter(|&x| !on.contains(x)) {
        let anchors: Vec<isize> = (0..t).filter(|&i| g.adjacent(x, v(i))).collect();
        for &i in &anchors {
            for &j in &anchors {
                if i == j {
                    continue;
                }
                if (j - i).rem_euclid(t) == 1 {
                    report("consecutive-attachments", x, i, j);
                }
                if g.adjacent(v(i + 1), v(j + 1)) || g.adjacent(v(i - 1), v(j - 1)) {
                    report("parallel-chord", x, i, j);
                }
                if g.adjacent(v(i - 1), v(i + 1)) && (g.adjacent(v(j - 1), v(i)) || g.adjacent(v(j + 1), v(i))) {
                    report("bypass-chord", x, i, j);
                }
                if (j - i).rem_euclid(t) == 2 {
                    // k runs over i+2 .. i-1 so that v_k, v_{k+1} lie on v_{i+2} .. v_i
                    for k in i + 2..i + t {
                        if g.adjacent(v(i + 1), v(k)) && g.adjacent(v(i + 1), v(k + 1)) {
                            report("neighbour-pair", x, i, j);
                            break;
                        }
                    }
                }
            }
        }
    }
    found
}

/// Bounds around a maximum-degree attachment vertex v_0 with s off-cycle
/// neighbours, valid in connected locally Dirac graphs:
/// - d ≥ 6, with 2s ≤ d − 4 when v_1 ≁ v_{t−1} and 2s ≤ d − 2 otherwise;
/// - every neighbour u of any vertex v misses at most ⌊deg(v)/2⌋ − 1
///   vertices of N(v), and at most ⌊d/2⌋ − 1 when v is an attachment vertex;
/// - if some v_j with 2 < j < t − 2 is adjacent to x, v_0 and one of v_1,
///   v_{t−1}, then d ≥ 8.
pub fn audit_attachment_bounds(g: &Graph, c: &Cycle) -> Vec<AuditFinding> {
    let mut found = Vec::new();
    let contexts = ExtensionContext::all(g, c);
    let seq = c.vertices();
    let on = c.vertex_set(g.n());
    let mut push = |rule, detail: String| found.push(AuditFinding { rule, cycle: seq.to_vec(), detail });
    let mut seen_v0 = VertexSet::new(g.n());
    for ctx in &contexts {
        let t = ctx.order.len();
        let (d, s) = (ctx.d, ctx.s);
        if seen_v0.insert(ctx.v0) {
            let ends_adjacent = g.adjacent(ctx.order[1], ctx.order[t - 1]);
            let slack = if ends_adjacent { 2 } else { 4 };
            if d < 6 || 2 * s + slack > d {
                push("attachment-degree", format!("v0={} d={d} s={s} ends_adjacent={ends_adjacent}", ctx.v0));
            }
        }
        for j in 3..t.saturating_sub(2) {
            let vj = ctx.order[j];
            if g.adjacent(vj, ctx.x)
                && g.adjacent(vj, ctx.v0)
                && (g.adjacent(vj, ctx.order[1]) || g.adjacent(vj, ctx.order[t - 1]))
                && d < 8
            {
                push("common-neighbour-degree", format!("v0={} x={} j={j} d={d}", ctx.v0, ctx.x));
                break;
            }
        }
    }
    if let Some(d) = contexts.first().map(|c| c.d) {
        for v in 0..g.n() {
            let nb = g.neighbours(v);
            let attachment = on.contains(v) && !nb.difference(&on).is_empty();
            let cap = if attachment { (d / 2).min(g.degree(v) / 2) } else { g.degree(v) / 2 };
            for u in nb.iter() {
                let missing = g.degree(v) - 1 - g.neighbours(u).intersection_len(nb);
                if missing + 1 > cap {
                    push("local-non-neighbours", format!("v={v} u={u} missing={missing}"));
                }
            }
        }
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::validate_cycle;
    use crate::families::*;

    #[test]
    fn context_fields() {
        // C_4 = 0 1 2 3 with a pendant-free extra vertex 4 ~ 0, 2
        let g = cycle(4).extended(1, [(4, 0), (4, 2)]).unwrap();
        let c = validate_cycle(&g, &[0, 1, 2, 3]).unwrap();
        let ctx = ExtensionContext::select(&g, &c).unwrap();
        assert_eq!(ctx.v0, 0);
        assert_eq!(ctx.order, vec![0, 1, 2, 3]);
        assert_eq!((ctx.x, ctx.d, ctx.s), (4, 3, 1));
        assert!(ctx.cycle_neighbours.is_empty());
        assert_eq!(ctx.t_set, [4, 1, 3]);
        assert_eq!(ExtensionContext::all(&g, &c).len(), 2);
    }

    #[test]
    fn pair_rules_hold_on_a_non_extendable_cycle() {
        let g = complete_bipartite(3, 3);
        let c = validate_cycle(&g, &[0, 3, 1, 4]).unwrap();
        assert!(audit_pair_rules(&g, &c).is_empty());
    }

    #[test]
    fn pair_rules_flag_an_extendable_cycle() {
        let g = complete(4);
        let c = validate_cycle(&g, &[0, 1, 2]).unwrap();
        let f = audit_pair_rules(&g, &c);
        assert!(f.iter().any(|a| a.rule == "consecutive-attachments"));
    }
}
