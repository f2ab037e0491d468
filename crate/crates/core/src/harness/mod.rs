//! Seeded random families, batch checking, fuzzing and tightness comparison.
//!
//! Every instance draws from its own ChaCha stream, selected by the instance
//! index under the master seed, so results do not depend on the order or
//! thread on which instances run.

mod check;
mod compare;
mod exec;
mod fuzz;
mod sample;

use serde::{Deserialize, Serialize};

use crate::error::{BoundError, Result};
use crate::tolerance::Tolerance;

pub use check::{check_all, sharp_reports};
pub use compare::{bessel_sum_bounds, tightest, tightness_compare, tightness_compare_with, CompareRow, Ensemble};
pub use exec::Execution;
pub use fuzz::{fuzz, fuzz_with, FuzzSummary, Sampler, Violation};
pub use sample::{
    instance_rng, random_coefficients, sample_disk_family, sample_family, sample_orthonormal_family,
    DiskInstance,
};

/// Inclusive integer interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntRange {
    pub min: usize,
    pub max: usize,
}

impl IntRange {
    pub const fn new(min: usize, max: usize) -> Self {
        IntRange { min, max }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldMode {
    Real,
    Complex,
    /// Real or complex, chosen per instance.
    Mixed,
}

/// How coefficients are placed for disk-constrained families.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiskSampler {
    /// Probability that a coefficient is put on the circle rather than inside.
    pub boundary_fraction: f64,
    /// Probability that a complex instance is an equality family of one of the
    /// sharp bounds (when one exists for the sampled disk).
    pub extremal_fraction: f64,
    /// Probability that the disk is drawn with `Re(high conj(low)) > 0`.
    pub positive_product_fraction: f64,
}

impl Default for DiskSampler {
    fn default() -> Self {
        DiskSampler { boundary_fraction: 0.25, extremal_fraction: 0.1, positive_product_fraction: 0.5 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FuzzConfig {
    pub master_seed: u64,
    pub instances: u64,
    pub n_range: IntRange,
    pub d_range: IntRange,
    pub field_mode: FieldMode,
    pub disk_sampler: DiskSampler,
    pub p_values: Vec<f64>,
    pub tolerance: f64,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            master_seed: 0,
            instances: 100_000,
            n_range: IntRange::new(1, 12),
            d_range: IntRange::new(1, 8),
            field_mode: FieldMode::Mixed,
            disk_sampler: DiskSampler::default(),
            p_values: vec![1.5, 2.0, 3.0],
            tolerance: 1e-9,
        }
    }
}

impl FuzzConfig {
    pub fn validate(&self) -> Result<()> {
        for (name, r) in [("n_range", self.n_range), ("d_range", self.d_range)] {
            if r.min == 0 || r.min > r.max {
                return Err(BoundError::Parameter(format!("{name} must satisfy 1 <= min <= max")));
            }
        }
        if !(self.tolerance.is_finite() && self.tolerance > 0.0) {
            return Err(BoundError::Parameter("tolerance must be positive".into()));
        }
        if let Some(p) = self.p_values.iter().find(|p| !(p.is_finite() && **p > 1.0)) {
            return Err(BoundError::Parameter(format!("p values must exceed 1, got {p}")));
        }
        let s = &self.disk_sampler;
        for (name, v) in [
            ("boundary_fraction", s.boundary_fraction),
            ("extremal_fraction", s.extremal_fraction),
            ("positive_product_fraction", s.positive_product_fraction),
        ] {
            if !(0.0..=1.0).contains(&v) {
                return Err(BoundError::Parameter(format!("{name} must lie in [0, 1]")));
            }
        }
        Ok(())
    }

    pub fn tol(&self) -> Tolerance {
        Tolerance::new(self.tolerance)
    }
}
