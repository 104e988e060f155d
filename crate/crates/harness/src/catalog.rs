//! The default instance catalog.

use locdirac_core::{Family, FamilySpec, Graph, GraphError};

/// A named graph: a family spec, a file, or a sampled graph's hash.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub label: String,
    pub graph: Graph,
}

impl Instance {
    pub fn from_spec(spec: &FamilySpec) -> Result<Self, GraphError> {
        Ok(Instance { label: spec.to_string(), graph: spec.build()? })
    }
}

/// Family specs of the default catalog, in run order.
pub fn default_specs() -> Vec<FamilySpec> {
    let mut specs = Vec::new();
    let mut push = |family: Family, params: &[(&str, usize)]| specs.push(FamilySpec::new(family, params));
    for m in 3..=10 {
        push(Family::PathStrongK3, &[("m", m)]);
    }
    for m in 3..=10 {
        push(Family::CycleStrongK3, &[("m", m)]);
    }
    for m in 3..=10 {
        push(Family::PathStrongK2, &[("m", m)]);
    }
    for m in 3..=10 {
        push(Family::OreMinDegree3, &[("m", m)]);
    }
    for k in [3, 4] {
        push(Family::LambdaGap, &[("k", k)]);
    }
    for n in 9..=24 {
        push(Family::OreDiameterExtremal, &[("n", n)]);
    }
    for base in 0..4 {
        for n in 3..=6 {
            push(Family::JoinWithClique, &[("base", base), ("n", n)]);
        }
    }
    for half in 2..=5 {
        push(Family::BalancedCompleteBipartite, &[("half", half)]);
    }
    for (k, p) in [(3, 1), (3, 2), (3, 3), (4, 2), (5, 2)] {
        push(Family::CompleteMultipartite, &[("k", k), ("p", p)]);
    }
    for k in 1..=4 {
        push(Family::CyclePower3k, &[("k", k)]);
    }
    for n in 3..=8 {
        push(Family::Complete, &[("n", n)]);
    }
    for n in 3..=8 {
        push(Family::Cycle, &[("n", n)]);
    }
    for n in 3..=6 {
        push(Family::Path, &[("n", n)]);
    }
    for (a, b) in [(2, 3), (2, 4), (3, 4)] {
        push(Family::CompleteBipartite, &[("a", a), ("b", b)]);
    }
    for leaves in 3..=5 {
        push(Family::Star, &[("leaves", leaves)]);
    }
    push(Family::Petersen, &[]);
    specs
}

pub fn default_catalog() -> Vec<Instance> {
    default_specs().iter().map(|s| Instance::from_spec(s).expect("catalog parameters are valid")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_family_is_represented() {
        let specs = default_specs();
        for family in Family::ALL {
            assert!(specs.iter().any(|s| s.family == family), "{family} missing");
        }
        let catalog = default_catalog();
        assert_eq!(catalog.len(), specs.len());
        for inst in &catalog {
            assert_eq!(inst.label.parse::<FamilySpec>().unwrap().build().unwrap(), inst.graph);
        }
    }
}
