use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::check::sharp_reports;
use super::exec::Execution;
use super::sample::{disk_from, generic_from, instance_rng, orthonormal_from};
use super::FuzzConfig;
use crate::classical::Moments;
use crate::report::{BoundId, BoundReport};
use crate::tolerance::Tolerance;

/// Family distribution for a tightness comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Ensemble {
    Generic,
    Disk,
    Orthonormal,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompareRow {
    pub bound_id: BoundId,
    pub wins: u64,
    /// Mean of `bessel_sum / rhs` over instances where the bound applied.
    pub mean_ratio: f64,
    pub evaluated: u64,
}

/// Upper bounds on the Bessel sum found in `reports`, as `(id, bessel_sum, rhs)`.
///
/// The root disk bound is squared so that every candidate bounds the same
/// quantity. Candidates come out in [`BoundId`] order, classical first.
pub fn bessel_sum_bounds(reports: &[BoundReport]) -> Vec<(BoundId, f64, f64)> {
    let mut out: Vec<(BoundId, f64, f64)> = reports
        .iter()
        .filter(|r| r.preconditions_met)
        .filter_map(|r| match r.bound_id {
            BoundId::BoasBellman | BoundId::Bombieri | BoundId::MaxOffDiagonal | BoundId::DiskSquare => {
                Some((r.bound_id, r.lhs, r.rhs))
            }
            BoundId::DiskRoot => Some((r.bound_id, r.lhs * r.lhs, r.rhs * r.rhs)),
            _ => None,
        })
        .collect();
    out.sort_by_key(|c| c.0);
    out.dedup_by_key(|c| c.0);
    out
}

/// Bound with the smallest right-hand side; a later candidate must beat the
/// current best by more than the tolerance to take over.
pub fn tightest(reports: &[BoundReport], tol: &Tolerance) -> Option<BoundId> {
    let mut best: Option<(BoundId, f64)> = None;
    for (id, _, rhs) in bessel_sum_bounds(reports) {
        match best {
            Some((_, b)) if rhs >= b - tol.at(b.max(1.0)) => {}
            _ => best = Some((id, rhs)),
        }
    }
    best.map(|b| b.0)
}

fn candidate_reports(cfg: &FuzzConfig, ensemble: Ensemble, index: u64) -> Vec<BoundReport> {
    let tol = cfg.tol();
    let mut rng = instance_rng(cfg.master_seed, index);
    let (family, disk) = match ensemble {
        Ensemble::Generic => (generic_from(&mut rng, cfg), None),
        Ensemble::Disk => {
            let inst = disk_from(&mut rng, cfg);
            (inst.family, Some(inst.disk))
        }
        Ensemble::Orthonormal => {
            let inst = orthonormal_from(&mut rng, cfg);
            (inst.family, Some(inst.disk))
        }
    };
    let m = Moments::of(&family);
    let mut reports = vec![m.boas_bellman(), m.bombieri(), m.max_off_diagonal()];
    if let Some(d) = disk {
        reports.extend(sharp_reports(&family, &m, &d, &tol));
    }
    reports
}

pub fn tightness_compare(cfg: &FuzzConfig, ensemble: Ensemble) -> Vec<CompareRow> {
    tightness_compare_with(cfg, ensemble, Execution::Parallel)
}

/// Per-instance ratios are collected in index order and summed sequentially,
/// so the means do not depend on the execution strategy.
pub fn tightness_compare_with(cfg: &FuzzConfig, ensemble: Ensemble, exec: Execution) -> Vec<CompareRow> {
    let tol = cfg.tol();
    let per_instance = exec.map(cfg.instances, |i| {
        let reports = candidate_reports(cfg, ensemble, i);
        let ratios: Vec<(BoundId, f64)> = bessel_sum_bounds(&reports)
            .into_iter()
            .map(|(id, lhs, rhs)| (id, BoundReport::new(id, lhs, rhs).ratio))
            .collect();
        (ratios, tightest(&reports, &tol))
    });

    let mut acc: BTreeMap<BoundId, (u64, f64, u64)> = BTreeMap::new();
    for (ratios, winner) in per_instance {
        for (id, ratio) in ratios {
            let e = acc.entry(id).or_default();
            e.1 += ratio;
            e.2 += 1;
        }
        if let Some(id) = winner {
            acc.entry(id).or_default().0 += 1;
        }
    }
    acc.into_iter()
        .map(|(bound_id, (wins, sum, evaluated))| CompareRow {
            bound_id,
            wins,
            mean_ratio: sum / evaluated as f64,
            evaluated,
        })
        .collect()
}
