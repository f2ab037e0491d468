use serde::{Deserialize, Serialize};

/// Combined absolute/relative comparison threshold.
///
/// A quantity `v` with natural scale `s` is treated as zero when
/// `|v| <= max(abs, rel * |s|)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub rel: f64,
    pub abs: f64,
}

impl Tolerance {
    pub const DEFAULT: Tolerance = Tolerance { rel: 1e-9, abs: 1e-9 };

    /// Same value for the absolute and relative parts.
    pub fn new(tol: f64) -> Self {
        Tolerance { rel: tol, abs: tol }
    }

    /// Threshold for a quantity of magnitude `scale`.
    pub fn at(&self, scale: f64) -> f64 {
        self.abs.max(self.rel * scale.abs())
    }

    pub fn is_valid(&self) -> bool {
        self.rel.is_finite() && self.abs.is_finite() && self.rel > 0.0 && self.abs > 0.0
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance::DEFAULT
    }
}
