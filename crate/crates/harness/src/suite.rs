//! Theorem suites over the catalog and seeded samples.

use std::time::Instant;

use rayon::prelude::*;

use crate::canon::graph_hash;
use crate::catalog::{default_catalog, Instance};
use crate::report::CheckReport;
use crate::search::{Filter, Sampler};
use crate::theorems::{verify_theorem, CheckOptions, TheoremId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SuiteKind {
    #[default]
    All,
    Catalog,
    Random,
    /// Only the user-supplied instances.
    None,
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub kind: SuiteKind,
    pub theorems: Vec<TheoremId>,
    /// Run after the built-in instances, in the given order.
    pub extra: Vec<Instance>,
    pub seed: u64,
    pub random_samples: u64,
    pub random_max_n: usize,
    pub options: CheckOptions,
    /// Record wall-clock time per check; off keeps reports reproducible.
    pub timings: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            kind: SuiteKind::All,
            theorems: TheoremId::ALL.to_vec(),
            extra: Vec::new(),
            seed: 0,
            random_samples: 200,
            random_max_n: 12,
            options: CheckOptions::default(),
            timings: false,
        }
    }
}

const MIN_ORDER: usize = 4;

/// Seeded graphs for the random suite: G(n, p) draws and perturbations of
/// catalog graphs that stay connected and locally Ore.
pub fn random_instances(seed: u64, samples: u64, max_n: usize) -> Vec<Instance> {
    let bases: Vec<Instance> = default_catalog()
        .into_iter()
        .filter(|b| (MIN_ORDER..=max_n).contains(&b.graph.n()) && Filter::LocallyOre.accepts(&b.graph))
        .collect();
    let sampler = Sampler { seed, min_n: MIN_ORDER, max_n, bases: &bases };
    (0..samples)
        .into_par_iter()
        .map(|i| {
            let (graph, origin) = sampler.sample(i, |g| Filter::LocallyOre.accepts(g));
            Instance { label: format!("{} [{origin}]", graph_hash(&graph)), graph }
        })
        .collect()
}

/// Every selected theorem on every instance, in instance-major order.
pub fn run_suite(config: &SuiteConfig) -> Vec<CheckReport> {
    let mut instances = Vec::new();
    if matches!(config.kind, SuiteKind::All | SuiteKind::Catalog) {
        instances.extend(default_catalog());
    }
    if matches!(config.kind, SuiteKind::All | SuiteKind::Random) {
        instances.extend(random_instances(config.seed, config.random_samples, config.random_max_n));
    }
    instances.extend(config.extra.iter().cloned());
    let jobs: Vec<(&Instance, TheoremId)> =
        instances.iter().flat_map(|inst| config.theorems.iter().map(move |&id| (inst, id))).collect();
    jobs.par_iter()
        .map(|&(inst, id)| {
            let start = Instant::now();
            let v = verify_theorem(id, &inst.graph, &config.options);
            CheckReport {
                theorem: id.to_string(),
                instance: inst.label.clone(),
                status: v.status,
                witness: v.witness,
                millis: if config.timings { start.elapsed().as_millis() as u64 } else { 0 },
                seed: Some(config.seed),
                detail: v.detail,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::{exit_code, Status};
    use locdirac_core::families::path_strong_k3;

    #[test]
    fn empty_catalog_gives_empty_report() {
        let config = SuiteConfig { kind: SuiteKind::None, ..SuiteConfig::default() };
        let reports = run_suite(&config);
        assert!(reports.is_empty());
        assert_eq!(exit_code(&reports), 0);
    }

    #[test]
    fn corrupted_product_is_caught() {
        let g = path_strong_k3(4).unwrap().without_edge(0, 1).unwrap();
        let config = SuiteConfig {
            kind: SuiteKind::None,
            extra: vec![Instance { label: "corrupted".into(), graph: g }],
            ..SuiteConfig::default()
        };
        let reports = run_suite(&config);
        assert_eq!(reports.len(), TheoremId::ALL.len());
        let t25 = reports.iter().find(|r| r.theorem == "T2.5").unwrap();
        assert_eq!((t25.status, t25.detail.as_str()), (Status::Skipped, "not locally Dirac"));
        assert!(reports.iter().all(|r| r.status != Status::Fail || r.witness.is_some()));
    }

    #[test]
    fn random_instances_are_reproducible() {
        assert_eq!(random_instances(3, 20, 10), random_instances(3, 20, 10));
        assert_ne!(random_instances(3, 20, 10), random_instances(4, 20, 10));
    }
}
