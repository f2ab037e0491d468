use std::fmt;

use serde::{Deserialize, Serialize};

use crate::tolerance::Tolerance;

/// Every inequality the toolkit can evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundId {
    /// Classical Bessel inequality, orthonormal families only.
    Bessel,
    BoasBellman,
    Bombieri,
    Selberg,
    /// Boas-Bellman variant with `(n-1) max |<y_i,y_j>|` off the diagonal.
    MaxOffDiagonal,
    /// Bombieri generalised to a Hölder pair `(p, q)`.
    HolderBombieri,
    Heilbronn,
    /// `|sum c_k <x,y_k>|^2` against the row-sum weighted bound.
    PecaricFirst,
    /// Row-sum weighted bound against its max-row relaxation.
    PecaricSecond,
    WeightedMax,
    WeightedHolder,
    WeightedL1,
    QuotientMax,
    QuotientHolder,
    QuotientL1,
    DiskRoot,
    DiskSquare,
    DiskSumLemma,
    TriangleReverseRoot,
    TriangleReverseSquare,
    OrthonormalRoot,
    OrthonormalSquare,
}

impl BoundId {
    pub const ALL: [BoundId; 22] = [
        BoundId::Bessel,
        BoundId::BoasBellman,
        BoundId::Bombieri,
        BoundId::Selberg,
        BoundId::MaxOffDiagonal,
        BoundId::HolderBombieri,
        BoundId::Heilbronn,
        BoundId::PecaricFirst,
        BoundId::PecaricSecond,
        BoundId::WeightedMax,
        BoundId::WeightedHolder,
        BoundId::WeightedL1,
        BoundId::QuotientMax,
        BoundId::QuotientHolder,
        BoundId::QuotientL1,
        BoundId::DiskRoot,
        BoundId::DiskSquare,
        BoundId::DiskSumLemma,
        BoundId::TriangleReverseRoot,
        BoundId::TriangleReverseSquare,
        BoundId::OrthonormalRoot,
        BoundId::OrthonormalSquare,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BoundId::Bessel => "bessel",
            BoundId::BoasBellman => "boas_bellman",
            BoundId::Bombieri => "bombieri",
            BoundId::Selberg => "selberg",
            BoundId::MaxOffDiagonal => "max_off_diagonal",
            BoundId::HolderBombieri => "holder_bombieri",
            BoundId::Heilbronn => "heilbronn",
            BoundId::PecaricFirst => "pecaric_first",
            BoundId::PecaricSecond => "pecaric_second",
            BoundId::WeightedMax => "weighted_max",
            BoundId::WeightedHolder => "weighted_holder",
            BoundId::WeightedL1 => "weighted_l1",
            BoundId::QuotientMax => "quotient_max",
            BoundId::QuotientHolder => "quotient_holder",
            BoundId::QuotientL1 => "quotient_l1",
            BoundId::DiskRoot => "disk_root",
            BoundId::DiskSquare => "disk_square",
            BoundId::DiskSumLemma => "disk_sum_lemma",
            BoundId::TriangleReverseRoot => "triangle_reverse_root",
            BoundId::TriangleReverseSquare => "triangle_reverse_square",
            BoundId::OrthonormalRoot => "orthonormal_root",
            BoundId::OrthonormalSquare => "orthonormal_square",
        }
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of comparing one report against a tolerance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Holds,
    /// `|rhs - lhs|` within tolerance: an equality case.
    Tight,
    Violated,
    Inapplicable,
}

/// One evaluated inequality `lhs <= rhs`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub bound_id: BoundId,
    pub lhs: f64,
    pub rhs: f64,
    /// `rhs - lhs`.
    pub slack: f64,
    /// `lhs / rhs`; 0 when both sides vanish.
    pub ratio: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<f64>,
    pub preconditions_met: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl BoundReport {
    pub fn new(bound_id: BoundId, lhs: f64, rhs: f64) -> Self {
        let ratio = if rhs > 0.0 {
            lhs / rhs
        } else if lhs == 0.0 {
            0.0
        } else {
            f64::INFINITY
        };
        BoundReport {
            bound_id,
            lhs,
            rhs,
            slack: rhs - lhs,
            ratio,
            p: None,
            preconditions_met: true,
            reason: None,
        }
    }

    /// A report for a bound whose hypotheses fail; no values are computed.
    pub fn inapplicable(bound_id: BoundId, reason: impl Into<String>) -> Self {
        BoundReport {
            bound_id,
            lhs: f64::NAN,
            rhs: f64::NAN,
            slack: f64::NAN,
            ratio: f64::NAN,
            p: None,
            preconditions_met: false,
            reason: Some(reason.into()),
        }
    }

    pub fn with_p(mut self, p: f64) -> Self {
        self.p = Some(p);
        self
    }

    /// Slack threshold: `tol * max(1, |rhs|)`.
    pub fn threshold(&self, tol: &Tolerance) -> f64 {
        tol.at(self.rhs.abs().max(1.0))
    }

    pub fn status(&self, tol: &Tolerance) -> Status {
        if !self.preconditions_met {
            return Status::Inapplicable;
        }
        let t = self.threshold(tol);
        if self.slack.is_nan() || self.slack < -t {
            Status::Violated
        } else if self.slack <= t {
            Status::Tight
        } else {
            Status::Holds
        }
    }

    pub fn is_violation(&self, tol: &Tolerance) -> bool {
        self.status(tol) == Status::Violated
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_conventions() {
        assert_eq!(BoundReport::new(BoundId::Bombieri, 0.0, 0.0).ratio, 0.0);
        assert_eq!(BoundReport::new(BoundId::Bombieri, 1.0, 4.0).ratio, 0.25);
        assert!(BoundReport::new(BoundId::Bombieri, 1.0, 0.0).ratio.is_infinite());
    }

    #[test]
    fn status_classification() {
        let tol = Tolerance::DEFAULT;
        assert_eq!(BoundReport::new(BoundId::Bombieri, 1.0, 2.0).status(&tol), Status::Holds);
        assert_eq!(BoundReport::new(BoundId::Bombieri, 2.0, 2.0).status(&tol), Status::Tight);
        assert_eq!(BoundReport::new(BoundId::Bombieri, 2.0 + 1e-12, 2.0).status(&tol), Status::Tight);
        assert_eq!(BoundReport::new(BoundId::Bombieri, 2.1, 2.0).status(&tol), Status::Violated);
        assert_eq!(BoundReport::new(BoundId::Bombieri, 1e-3, 0.0).status(&tol), Status::Violated);
        assert_eq!(BoundReport::inapplicable(BoundId::Selberg, "zero").status(&tol), Status::Inapplicable);
    }

    #[test]
    fn ids_serialize_as_their_names() {
        for id in BoundId::ALL {
            assert_eq!(serde_json::to_string(&id).unwrap(), format!("\"{}\"", id.as_str()));
        }
    }
}
