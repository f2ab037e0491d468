//! Families attaining equality in the sharp disk bounds.
//!
//! Every coefficient is placed on the circle, `z_j = center + radius e^{i theta_j}`,
//! and the phases are chosen so that `sum_j e^{i theta_j}` equals a target
//! fixed by the bound:
//!
//! * root bound: `-n radius center / (2 |center|^2)`
//! * square bound: `-n radius center / |center|^2`
//!
//! Both follow from requiring `sum |z_j|^2` and `sum z_j` to take the values
//! forced by the equality case; the constructed families are checked against
//! the residuals in [`crate::sharp`] by the test-suite.
//!
//! For the root bound the phase constraint alone (`radius <= 2 |center|`) is
//! not enough: the equality weight `8 |center|^2 - 4 radius^2` must also be
//! non-negative, otherwise the family meets the residual conditions while
//! the bound stays strict. Such disks are reported as infeasible.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{BoundError, Result};
use crate::numeric::{lift_gram_values, norm, norm_sq, project_out, Complex, Family, HVector};
use crate::sharp::Disk;
use crate::tolerance::Tolerance;

/// Relative slack when comparing `|phase_sum|` with its attainable range.
const PHASE_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    /// Equality in [`crate::sharp::disk_root_bound`].
    Root,
    /// Equality in [`crate::sharp::disk_square_bound`].
    Square,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExtremalSpec {
    pub target: Target,
    pub n: usize,
    pub disk: Disk,
    /// Required value of `sum_j e^{i theta_j}`.
    pub phase_sum: Complex,
    pub feasible: bool,
}

impl ExtremalSpec {
    /// Why the spec is infeasible, if it is.
    pub fn infeasibility(&self) -> Option<String> {
        if self.feasible {
            return None;
        }
        let s = self.phase_sum.norm();
        Some(if self.target == Target::Root && !root_weight_ok(&self.disk) {
            format!(
                "radius {} exceeds sqrt(2) |center| = {}: the equality weight is negative, so the mean \
                 condition cannot be met with a non-negative inner-product sum",
                self.disk.radius(),
                std::f64::consts::SQRT_2 * self.disk.center().norm()
            )
        } else if self.n == 1 {
            format!("a single unit phase cannot sum to modulus {s}")
        } else {
            let limit = match self.target {
                Target::Root => "radius <= 2 |center|",
                Target::Square => "radius <= |center|",
            };
            format!("|phase sum| = {s} exceeds n = {}; requires {limit}", self.n)
        })
    }
}

/// Root equality additionally needs `Re(conj(center) sum z_j) >= 0`, i.e. a
/// non-negative equality weight (`radius <= sqrt(2) |center|`).
fn root_weight_ok(d: &Disk) -> bool {
    d.equality_weight() >= -PHASE_SLACK * d.center().norm_sqr()
}

pub fn plan(target: Target, n: usize, d: &Disk) -> Result<ExtremalSpec> {
    if n == 0 {
        return Err(BoundError::Parameter("n must be at least 1".into()));
    }
    let c = d.center();
    match target {
        Target::Root if c == Complex::new(0.0, 0.0) => {
            return Err(BoundError::Parameter("high = -low: the disk is centered at 0".into()))
        }
        Target::Square if !(d.re_product() > 0.0) => {
            return Err(BoundError::Parameter(format!(
                "Re(high conj(low)) = {} must be positive",
                d.re_product()
            )))
        }
        _ => {}
    }
    let r = d.radius();
    let nf = n as f64;
    let phase_sum = if r == 0.0 {
        Complex::new(0.0, 0.0)
    } else {
        let scale = match target {
            Target::Root => 2.0,
            Target::Square => 1.0,
        };
        -c * (nf * r / (scale * c.norm_sqr()))
    };
    let s = phase_sum.norm();
    let weight_ok = target == Target::Square || root_weight_ok(d);
    let feasible = r == 0.0
        || weight_ok && if n == 1 { (s - 1.0).abs() <= PHASE_SLACK } else { s <= nf * (1.0 + PHASE_SLACK) };
    Ok(ExtremalSpec { target, n, disk: *d, phase_sum, feasible })
}

/// Phases `theta_1..theta_n` with `sum e^{i theta_j} = spec.phase_sum`.
///
/// Even `n`: equal numbers at `phi + alpha` and `phi - alpha`, `cos alpha = s / n`.
/// Odd `n`: one phase at `phi`, the rest paired at `phi +- beta` with
/// `cos beta = (s - 1) / (n - 1)`. Here `phi = arg(phase_sum)` (0 when the sum is
/// 0) and `s = |phase_sum|`. For a zero-radius disk the phases do not affect
/// the family and the sum constraint is not enforced when `n = 1`.
pub fn solve_phases(spec: &ExtremalSpec) -> Result<Vec<f64>> {
    if let Some(why) = spec.infeasibility() {
        return Err(BoundError::Infeasible(why));
    }
    let n = spec.n;
    let nf = n as f64;
    let s = spec.phase_sum.norm().min(nf);
    let phi = if s == 0.0 { 0.0 } else { spec.phase_sum.arg() };
    let mut phases = Vec::with_capacity(n);
    if n.is_multiple_of(2) {
        let alpha = (s / nf).clamp(-1.0, 1.0).acos();
        for _ in 0..n / 2 {
            phases.push(phi + alpha);
            phases.push(phi - alpha);
        }
    } else {
        phases.push(phi);
        if n > 1 {
            let beta = ((s - 1.0) / (nf - 1.0)).clamp(-1.0, 1.0).acos();
            for _ in 0..n / 2 {
                phases.push(phi + beta);
                phases.push(phi - beta);
            }
        }
    }
    Ok(phases.into_iter().map(wrap_angle).collect())
}

fn wrap_angle(t: f64) -> f64 {
    if t > PI {
        t - 2.0 * PI
    } else if t <= -PI {
        t + 2.0 * PI
    } else {
        t
    }
}

/// Coefficients on the circle realising the spec.
pub fn extremal_coefficients(spec: &ExtremalSpec) -> Result<Vec<Complex>> {
    let (c, r) = (spec.disk.center(), spec.disk.radius());
    Ok(solve_phases(spec)?.into_iter().map(|t| c + Complex::from_polar(r, t)).collect())
}

/// An equality family for `target` with reference vector `x`.
///
/// The optional `ws` add components orthogonal to `x`; after projection they
/// must sum to zero, otherwise the mean condition would break.
pub fn build(
    target: Target,
    x: &HVector,
    n: usize,
    d: &Disk,
    ws: Option<&[HVector]>,
    tol: &Tolerance,
) -> Result<Family> {
    if norm_sq(x) == 0.0 {
        return Err(BoundError::DegenerateReference);
    }
    let spec = plan(target, n, d)?;
    let zs = extremal_coefficients(&spec)?;
    let projected = match ws {
        None => None,
        Some(ws) => {
            if ws.len() != n {
                return Err(BoundError::LengthMismatch { expected: n, found: ws.len() });
            }
            let projected = ws.iter().map(|w| project_out(w, x)).collect::<Result<Vec<_>>>()?;
            let total = HVector::sum(&projected).expect("n >= 1");
            let scale: f64 = projected.iter().map(norm).sum();
            let drift = norm(&total);
            if drift > tol.at(scale.max(1.0)) {
                return Err(BoundError::Precondition(format!(
                    "orthogonal parts must sum to zero (|sum| = {drift:e})"
                )));
            }
            Some(projected)
        }
    };
    let ys = lift_gram_values(x, &zs, projected.as_deref())?;
    Family::new(x.clone(), ys)
}
