//! Classical generalisations of Bessel's inequality to arbitrary families.
//!
//! All bounds are evaluated from a [`Moments`] snapshot: the Fourier
//! coefficients `<x, y_j>`, the Gram matrix of the `y_j` and `|x|^2`.
//! Building it once lets a batch of bounds share the O(n^2 d) work.

use crate::error::{BoundError, Result};
use crate::numeric::{norm_sq, Complex, Family, GramMatrix};
use crate::report::{BoundId, BoundReport};
use crate::tolerance::Tolerance;

/// Quantities every classical bound is a function of.
#[derive(Debug, Clone)]
pub struct Moments {
    x_norm_sq: f64,
    coeffs: Vec<Complex>,
    gram: GramMatrix,
    row_abs_sums: Vec<f64>,
}

/// `|sum c_k <x,y_k>|^2` and its two successive upper bounds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PecaricValues {
    pub lhs: f64,
    pub rhs_first: f64,
    pub rhs_second: f64,
}

impl PecaricValues {
    /// `lhs <= rhs_first` and `rhs_first <= rhs_second` as two reports.
    pub fn reports(&self) -> [BoundReport; 2] {
        [
            BoundReport::new(BoundId::PecaricFirst, self.lhs, self.rhs_first),
            BoundReport::new(BoundId::PecaricSecond, self.rhs_first, self.rhs_second),
        ]
    }
}

/// `|sum c_k <x,y_k>|^2` against the three weighted right-hand sides.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightedValues {
    pub lhs: f64,
    pub max_branch: f64,
    /// `None` when `p <= 1`.
    pub holder_branch: Option<f64>,
    pub l1_branch: f64,
    pub p: f64,
}

impl WeightedValues {
    pub fn reports(&self) -> [BoundReport; 3] {
        let holder = match self.holder_branch {
            Some(rhs) => BoundReport::new(BoundId::WeightedHolder, self.lhs, rhs),
            None => BoundReport::inapplicable(BoundId::WeightedHolder, "requires p > 1"),
        };
        [
            BoundReport::new(BoundId::WeightedMax, self.lhs, self.max_branch),
            holder.with_p(self.p),
            BoundReport::new(BoundId::WeightedL1, self.lhs, self.l1_branch),
        ]
    }
}

/// Coefficient choices under which the Pečarić inequality specialises to
/// another classical bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecialChoice {
    /// `c_i = conj(<x,y_i>)`: second part gives Bombieri.
    Conjugate,
    /// `c_i = conj(<x,y_i>) / sum_j |<y_i,y_j>|`: first part gives Selberg.
    SelbergWeights,
    /// `c_i = conj(<x,y_i>) / |<x,y_i>|`: first part gives Heilbronn.
    UnitPhase,
}

impl SpecialChoice {
    pub const ALL: [SpecialChoice; 3] =
        [SpecialChoice::Conjugate, SpecialChoice::SelbergWeights, SpecialChoice::UnitPhase];
}

fn holder_conjugate(p: f64) -> Result<f64> {
    if !(p.is_finite() && p > 1.0) {
        return Err(BoundError::Parameter(format!("Hölder exponent must satisfy p > 1, got {p}")));
    }
    Ok(p / (p - 1.0))
}

fn power_sum(values: impl Iterator<Item = f64>, p: f64) -> f64 {
    values.map(|v| v.powf(p)).sum::<f64>().powf(1.0 / p)
}

impl Moments {
    pub fn of(family: &Family) -> Self {
        let gram = family.gram();
        let row_abs_sums = (0..gram.size())
            .map(|i| gram.row(i).iter().map(|g| g.norm()).sum())
            .collect();
        Moments {
            x_norm_sq: norm_sq(family.x()),
            coeffs: family.coefficients(),
            gram,
            row_abs_sums,
        }
    }

    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    pub fn x_norm_sq(&self) -> f64 {
        self.x_norm_sq
    }

    /// `<x, y_j>` for every `j`.
    pub fn coefficients(&self) -> &[Complex] {
        &self.coeffs
    }

    pub fn gram(&self) -> &GramMatrix {
        &self.gram
    }

    /// `sum_j |<y_i, y_j>|` for every `i`.
    pub fn row_abs_sums(&self) -> &[f64] {
        &self.row_abs_sums
    }

    /// Largest imaginary part among the Fourier coefficients and Gram entries.
    pub fn imaginary_defect(&self) -> f64 {
        let n = self.n();
        let gram_im = (0..n)
            .flat_map(|i| self.gram.row(i).iter().map(|g| g.im.abs()))
            .fold(0.0, f64::max);
        self.coeffs.iter().map(|z| z.im.abs()).fold(gram_im, f64::max)
    }

    /// `sum_j |<x, y_j>|^2`.
    pub fn bessel_sum(&self) -> f64 {
        self.coeffs.iter().map(|z| z.norm_sqr()).sum()
    }

    fn max_row_sum(&self) -> f64 {
        self.row_abs_sums.iter().copied().fold(0.0, f64::max)
    }

    fn max_norm_sq(&self) -> f64 {
        (0..self.n()).map(|i| self.gram.get(i, i).re).fold(0.0, f64::max)
    }

    fn all_coefficients_zero(&self) -> bool {
        self.coeffs.iter().all(|z| z.norm_sqr() == 0.0)
    }

    fn check_len(&self, c: &[Complex]) -> Result<()> {
        if c.len() != self.n() {
            return Err(BoundError::LengthMismatch { expected: self.n(), found: c.len() });
        }
        Ok(())
    }

    /// Bessel's inequality; requires the `y_j` to be orthonormal within `tol`.
    pub fn bessel(&self, tol: &Tolerance) -> Result<BoundReport> {
        let defect = self.gram.identity_defect();
        if defect > tol.at(1.0) {
            return Err(BoundError::Precondition(format!(
                "family is not orthonormal (Gram defect {defect:e})"
            )));
        }
        Ok(BoundReport::new(BoundId::Bessel, self.bessel_sum(), self.x_norm_sq))
    }

    pub fn boas_bellman(&self) -> BoundReport {
        let n = self.n();
        let mut off = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    off += self.gram.get(i, j).norm_sqr();
                }
            }
        }
        let rhs = self.x_norm_sq * (self.max_norm_sq() + off.sqrt());
        BoundReport::new(BoundId::BoasBellman, self.bessel_sum(), rhs)
    }

    pub fn bombieri(&self) -> BoundReport {
        BoundReport::new(BoundId::Bombieri, self.bessel_sum(), self.x_norm_sq * self.max_row_sum())
    }

    /// Requires every `y_i` to be non-zero.
    pub fn selberg(&self) -> Result<BoundReport> {
        if let Some(i) = (0..self.n()).find(|&i| self.gram.get(i, i).re == 0.0) {
            return Err(BoundError::Precondition(format!("y_{i} is the zero vector")));
        }
        let lhs = self
            .coeffs
            .iter()
            .zip(&self.row_abs_sums)
            .map(|(z, r)| z.norm_sqr() / r)
            .sum();
        Ok(BoundReport::new(BoundId::Selberg, lhs, self.x_norm_sq))
    }

    /// Off-diagonal maximum over an empty index set (n = 1) is 0.
    pub fn max_off_diagonal(&self) -> BoundReport {
        let n = self.n();
        let mut off_max = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    off_max = off_max.max(self.gram.get(i, j).norm());
                }
            }
        }
        let rhs = self.x_norm_sq * (self.max_norm_sq() + (n as f64 - 1.0) * off_max);
        BoundReport::new(BoundId::MaxOffDiagonal, self.bessel_sum(), rhs)
    }

    /// Bombieri with a Hölder pair: `S2^2 / (|z|_p |z|_q) <= |x|^2 max_i sum_j |G_ij|`.
    pub fn holder_bombieri(&self, p: f64) -> Result<BoundReport> {
        let q = holder_conjugate(p)?;
        if self.all_coefficients_zero() {
            return Err(BoundError::Precondition("all Fourier coefficients vanish".into()));
        }
        let s2 = self.bessel_sum();
        let abs = || self.coeffs.iter().map(|z| z.norm());
        let lhs = s2 * s2 / (power_sum(abs(), p) * power_sum(abs(), q));
        Ok(BoundReport::new(BoundId::HolderBombieri, lhs, self.x_norm_sq * self.max_row_sum()).with_p(p))
    }

    pub fn heilbronn(&self) -> BoundReport {
        let lhs = self.coeffs.iter().map(|z| z.norm()).sum();
        let total: f64 = self.row_abs_sums.iter().sum();
        BoundReport::new(BoundId::Heilbronn, lhs, self.x_norm_sq.sqrt() * total.sqrt())
    }

    fn weighted_lhs(&self, c: &[Complex]) -> f64 {
        c.iter().zip(&self.coeffs).map(|(c, z)| c * z).sum::<Complex>().norm_sqr()
    }

    pub fn pecaric(&self, c: &[Complex]) -> Result<PecaricValues> {
        self.check_len(c)?;
        let first: f64 = c.iter().zip(&self.row_abs_sums).map(|(c, r)| c.norm_sqr() * r).sum();
        let c_sq: f64 = c.iter().map(|c| c.norm_sqr()).sum();
        Ok(PecaricValues {
            lhs: self.weighted_lhs(c),
            rhs_first: self.x_norm_sq * first,
            rhs_second: self.x_norm_sq * c_sq * self.max_row_sum(),
        })
    }

    /// Three weighted bounds; the first uses `max_k |c_k|`.
    pub fn weighted(&self, c: &[Complex], p: f64) -> Result<WeightedValues> {
        self.check_len(c)?;
        let n = self.n();
        let abs: Vec<f64> = c.iter().map(|c| c.norm()).collect();
        let l1: f64 = abs.iter().sum();
        let c_max = abs.iter().copied().fold(0.0, f64::max);
        let holder_branch = holder_conjugate(p).ok().map(|q| {
            let row_max = (0..n)
                .map(|i| power_sum(self.gram.row(i).iter().map(|g| g.norm()), q))
                .fold(0.0, f64::max);
            self.x_norm_sq * l1 * power_sum(abs.iter().copied(), p) * row_max
        });
        let entry_max = (0..n)
            .flat_map(|i| self.gram.row(i).iter().map(|g| g.norm()))
            .fold(0.0, f64::max);
        Ok(WeightedValues {
            lhs: self.weighted_lhs(c),
            max_branch: self.x_norm_sq * c_max * l1 * self.max_row_sum(),
            holder_branch,
            l1_branch: self.x_norm_sq * l1 * l1 * entry_max,
            p,
        })
    }

    /// The weighted bounds at `c_k = conj(<x,y_k>)`, written as quotients.
    pub fn quotients(&self, p: f64) -> Result<[BoundReport; 3]> {
        if self.all_coefficients_zero() {
            return Err(BoundError::Precondition("all Fourier coefficients vanish".into()));
        }
        let n = self.n();
        let abs: Vec<f64> = self.coeffs.iter().map(|z| z.norm()).collect();
        let s2 = self.bessel_sum();
        let num = s2 * s2;
        let l1: f64 = abs.iter().sum();
        let z_max = abs.iter().copied().fold(0.0, f64::max);
        let entry_max = (0..n)
            .flat_map(|i| self.gram.row(i).iter().map(|g| g.norm()))
            .fold(0.0, f64::max);

        let max = BoundReport::new(BoundId::QuotientMax, num / (z_max * l1), self.x_norm_sq * self.max_row_sum());
        let holder = match holder_conjugate(p) {
            Ok(q) => {
                let row_max = (0..n)
                    .map(|i| power_sum(self.gram.row(i).iter().map(|g| g.norm()), q))
                    .fold(0.0, f64::max);
                let lhs = num / (l1 * power_sum(abs.iter().copied(), p));
                BoundReport::new(BoundId::QuotientHolder, lhs, self.x_norm_sq * row_max)
            }
            Err(e) => BoundReport::inapplicable(BoundId::QuotientHolder, e.to_string()),
        };
        let l1_report = BoundReport::new(BoundId::QuotientL1, num / (l1 * l1), self.x_norm_sq * entry_max);
        Ok([max, holder.with_p(p), l1_report])
    }

    /// Coefficients for one of the specialisation choices; `None` when the
    /// choice is undefined (Selberg weights with a zero `y_i`).
    pub fn special_coefficients(&self, choice: SpecialChoice) -> Option<Vec<Complex>> {
        match choice {
            SpecialChoice::Conjugate => Some(self.coeffs.iter().map(|z| z.conj()).collect()),
            SpecialChoice::SelbergWeights => {
                if self.row_abs_sums.contains(&0.0) {
                    return None;
                }
                Some(self.coeffs.iter().zip(&self.row_abs_sums).map(|(z, r)| z.conj() / r).collect())
            }
            SpecialChoice::UnitPhase => Some(
                self.coeffs
                    .iter()
                    .map(|z| {
                        let m = z.norm();
                        // any unit scalar works where the coefficient vanishes
                        if m == 0.0 { Complex::new(1.0, 0.0) } else { z.conj() / m }
                    })
                    .collect(),
            ),
        }
    }
}

pub fn bessel_sum(f: &Family) -> f64 {
    f.coefficients().iter().map(|z| z.norm_sqr()).sum()
}

pub fn bessel(f: &Family, tol: &Tolerance) -> Result<BoundReport> {
    Moments::of(f).bessel(tol)
}

pub fn boas_bellman(f: &Family) -> BoundReport {
    Moments::of(f).boas_bellman()
}

pub fn bombieri(f: &Family) -> BoundReport {
    Moments::of(f).bombieri()
}

pub fn selberg(f: &Family) -> Result<BoundReport> {
    Moments::of(f).selberg()
}

pub fn max_off_diagonal(f: &Family) -> BoundReport {
    Moments::of(f).max_off_diagonal()
}

pub fn holder_bombieri(f: &Family, p: f64) -> Result<BoundReport> {
    Moments::of(f).holder_bombieri(p)
}

pub fn heilbronn(f: &Family) -> BoundReport {
    Moments::of(f).heilbronn()
}

pub fn pecaric(f: &Family, c: &[Complex]) -> Result<PecaricValues> {
    Moments::of(f).pecaric(c)
}

pub fn weighted(f: &Family, c: &[Complex], p: f64) -> Result<WeightedValues> {
    Moments::of(f).weighted(c, p)
}

pub fn quotients(f: &Family, p: f64) -> Result<[BoundReport; 3]> {
    Moments::of(f).quotients(p)
}
