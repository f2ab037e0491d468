use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::check::check_all;
use super::compare::tightest;
use super::exec::Execution;
use super::sample::{disk_from, generic_from, instance_rng, random_coefficients};
use super::FuzzConfig;
use crate::report::{BoundId, Status};

/// Which sampler produced an instance: even indices are unconstrained, odd
/// indices disk-constrained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sampler {
    Generic,
    Disk,
}

impl Sampler {
    pub fn for_index(index: u64) -> Self {
        if index.is_multiple_of(2) {
            Sampler::Generic
        } else {
            Sampler::Disk
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub bound_id: BoundId,
    /// Instance index; with the master seed it identifies the random stream.
    pub instance_seed: u64,
    pub sampler: Sampler,
    pub slack: f64,
    pub lhs: f64,
    pub rhs: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FuzzSummary {
    pub config: FuzzConfig,
    /// Applicable evaluations per bound.
    pub checked: BTreeMap<BoundId, u64>,
    /// Evaluations with `|slack|` inside the tolerance.
    pub tight: BTreeMap<BoundId, u64>,
    pub violations: Vec<Violation>,
    pub min_slack: BTreeMap<BoundId, f64>,
    /// Instances on which the bound gave the smallest upper bound for the Bessel sum.
    pub tightness_wins: BTreeMap<BoundId, u64>,
}

impl FuzzSummary {
    fn empty(config: &FuzzConfig) -> Self {
        FuzzSummary {
            config: config.clone(),
            checked: BTreeMap::new(),
            tight: BTreeMap::new(),
            violations: Vec::new(),
            min_slack: BTreeMap::new(),
            tightness_wins: BTreeMap::new(),
        }
    }

    fn merge(mut self, other: FuzzSummary) -> Self {
        for (id, c) in other.checked {
            *self.checked.entry(id).or_default() += c;
        }
        for (id, c) in other.tight {
            *self.tight.entry(id).or_default() += c;
        }
        for (id, c) in other.tightness_wins {
            *self.tightness_wins.entry(id).or_default() += c;
        }
        for (id, s) in other.min_slack {
            let e = self.min_slack.entry(id).or_insert(s);
            *e = e.min(s);
        }
        self.violations.extend(other.violations);
        self
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    fn record(&mut self, index: u64) {
        let cfg = &self.config;
        let tol = cfg.tol();
        let mut rng = instance_rng(cfg.master_seed, index);
        let sampler = Sampler::for_index(index);
        let (family, disk) = match sampler {
            Sampler::Generic => (generic_from(&mut rng, cfg), None),
            Sampler::Disk => {
                let inst = disk_from(&mut rng, cfg);
                (inst.family, Some(inst.disk))
            }
        };
        let coeffs = random_coefficients(&mut rng, family.n(), family.field());
        let reports = check_all(&family, disk.as_ref(), Some(&coeffs), &cfg.p_values, &tol);

        for r in &reports {
            if !r.preconditions_met {
                continue;
            }
            *self.checked.entry(r.bound_id).or_default() += 1;
            let e = self.min_slack.entry(r.bound_id).or_insert(r.slack);
            *e = e.min(r.slack);
            match r.status(&tol) {
                Status::Tight => *self.tight.entry(r.bound_id).or_default() += 1,
                Status::Violated => self.violations.push(Violation {
                    bound_id: r.bound_id,
                    instance_seed: index,
                    sampler,
                    slack: r.slack,
                    lhs: r.lhs,
                    rhs: r.rhs,
                    p: r.p,
                }),
                _ => {}
            }
        }
        if let Some(id) = tightest(&reports, &tol) {
            *self.tightness_wins.entry(id).or_default() += 1;
        }
    }
}

/// Runs [`check_all`] over `cfg.instances` seeded instances on the rayon pool.
pub fn fuzz(cfg: &FuzzConfig) -> FuzzSummary {
    fuzz_with(cfg, Execution::Parallel)
}

/// The summary is a pure function of `cfg`: counts and minima merge
/// commutatively and violations are sorted before returning.
pub fn fuzz_with(cfg: &FuzzConfig, exec: Execution) -> FuzzSummary {
    let mut summary = exec.fold(
        cfg.instances,
        || FuzzSummary::empty(cfg),
        |acc, i| acc.record(i),
        FuzzSummary::merge,
    );
    summary.violations.sort_by(|a, b| {
        (a.instance_seed, a.bound_id)
            .cmp(&(b.instance_seed, b.bound_id))
            .then(a.p.unwrap_or(0.0).total_cmp(&b.p.unwrap_or(0.0)))
            .then(a.slack.total_cmp(&b.slack))
    });
    summary
}
