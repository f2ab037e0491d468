//! Sharp Bessel-type bounds for families whose Fourier coefficients lie in a
//! closed disk of the scalar field.
//!
//! The disk is given by two scalars `low` and `high` (a diameter): its
//! center is `(low + high) / 2` and its radius `|high - low| / 2`.

use serde::{Deserialize, Serialize};

use crate::classical::Moments;
use crate::error::{BoundError, Result};
use crate::numeric::{inner_unchecked, norm, norm_sq, Complex, Family, HVector};
use crate::report::{BoundId, BoundReport};
use crate::tolerance::Tolerance;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Disk {
    pub low: Complex,
    pub high: Complex,
}

impl Disk {
    pub fn new(low: Complex, high: Complex) -> Self {
        Disk { low, high }
    }

    /// Disk of radius `radius` about `center`, with the diameter along `angle`.
    pub fn from_center(center: Complex, radius: f64, angle: f64) -> Self {
        let offset = Complex::from_polar(radius, angle);
        Disk { low: center - offset, high: center + offset }
    }

    pub fn center(&self) -> Complex {
        (self.low + self.high) * 0.5
    }

    pub fn radius(&self) -> f64 {
        (self.high - self.low).norm() * 0.5
    }

    /// `Re(high * conj(low))`, which equals `|center|^2 - radius^2`.
    pub fn re_product(&self) -> f64 {
        (self.high * self.low.conj()).re
    }

    /// `|high|^2 + 6 Re(high conj(low)) + |low|^2`, the constant fixing the
    /// mean of an equality family of the root bound.
    pub fn equality_weight(&self) -> f64 {
        self.high.norm_sqr() + 6.0 * self.re_product() + self.low.norm_sqr()
    }

    /// `|high - low|^2 / (4 |high + low|)`, the additive term of the root
    /// bound per unit of `sqrt(n)`.
    fn root_excess(&self) -> f64 {
        (self.high - self.low).norm_sqr() / (4.0 * (self.high + self.low).norm())
    }

    /// `|high + low|^2 / (4 Re(high conj(low)))`; at least 1.
    fn square_factor(&self) -> f64 {
        (self.high + self.low).norm_sqr() / (4.0 * self.re_product())
    }

    /// Absolute boundary tolerance, scaled by `max(1, radius)`.
    pub fn boundary_tol(&self, tol: &Tolerance) -> f64 {
        tol.at(self.radius().max(1.0))
    }

    fn require_center(&self) -> Result<()> {
        if self.high + self.low == Complex::new(0.0, 0.0) {
            return Err(BoundError::Parameter("high = -low: the disk is centered at 0".into()));
        }
        Ok(())
    }

    fn require_positive_product(&self) -> Result<()> {
        let rp = self.re_product();
        if !(rp > 0.0) {
            return Err(BoundError::Parameter(format!("Re(high conj(low)) = {rp} must be positive")));
        }
        Ok(())
    }

    fn require_members(&self, zs: &[Complex], tol: &Tolerance) -> Result<()> {
        match zs.iter().position(|&z| !disk_condition_abs(z, self, tol)) {
            Some(index) => Err(BoundError::OutsideDisk { index, value: zs[index].to_string() }),
            None => Ok(()),
        }
    }
}

/// Real-part product form: `Re[(high - z)(conj z - conj low)] >= 0`.
///
/// The product equals `radius^2 - |z - center|^2`, so the threshold
/// `-t (2 radius + t)` accepts exactly the points with
/// `|z - center| <= radius + t`, matching [`disk_condition_abs`].
pub fn disk_condition_re(z: Complex, d: &Disk, tol: &Tolerance) -> bool {
    let product = (d.high.re - z.re) * (z.re - d.low.re) + (d.high.im - z.im) * (z.im - d.low.im);
    let t = d.boundary_tol(tol);
    product >= -t * (2.0 * d.radius() + t)
}

/// Modulus form: `|z - center| <= radius`.
pub fn disk_condition_abs(z: Complex, d: &Disk, tol: &Tolerance) -> bool {
    (z - d.center()).norm() <= d.radius() + d.boundary_tol(tol)
}

/// Coordinate box `low <= z <= high` in both real and imaginary parts.
///
/// Uses half the disk tolerance so that a box hit always implies
/// [`disk_condition_re`].
pub fn sufficient_condition_box(z: Complex, d: &Disk, tol: &Tolerance) -> bool {
    let t = 0.5 * d.boundary_tol(tol);
    d.high.re + t >= z.re && z.re >= d.low.re - t && d.high.im + t >= z.im && z.im >= d.low.im - t
}

/// Distances of the equality conditions of a sharp bound.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EqualityResiduals {
    /// `| |<x,y_j> - center| - radius |` per `j`.
    pub per_j_boundary: Vec<f64>,
    /// Distance between the mean of the `y_j` and the characterised multiple of `x`.
    pub mean_residual: f64,
    pub max_residual: f64,
}

/// `(sum |<x,y_j>|^2)^(1/2) <= |x| |sum y_j| / sqrt(n) + sqrt(n) |high - low|^2 / (4 |high + low|)`.
pub fn disk_root_bound(f: &Family, d: &Disk, tol: &Tolerance) -> Result<BoundReport> {
    d.require_center()?;
    let zs = f.coefficients();
    d.require_members(&zs, tol)?;
    let n = f.n() as f64;
    let lhs = zs.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let rhs = norm(f.x()) * norm(&f.sum_ys()) / n.sqrt() + n.sqrt() * d.root_excess();
    Ok(BoundReport::new(BoundId::DiskRoot, lhs, rhs))
}

/// `sum |<x,y_j>|^2 <= |high + low|^2 / (4 n Re(high conj(low))) |sum y_j|^2 |x|^2`.
pub fn disk_square_bound(f: &Family, d: &Disk, tol: &Tolerance) -> Result<BoundReport> {
    d.require_positive_product()?;
    let zs = f.coefficients();
    d.require_members(&zs, tol)?;
    let n = f.n() as f64;
    let lhs = zs.iter().map(|z| z.norm_sqr()).sum();
    let rhs = d.square_factor() * norm_sq(&f.sum_ys()) * norm_sq(f.x()) / n;
    Ok(BoundReport::new(BoundId::DiskSquare, lhs, rhs))
}

fn residuals(f: &Family, d: &Disk, mean_coefficient: Complex) -> Result<EqualityResiduals> {
    let x = f.x();
    let xx = norm_sq(x);
    if xx == 0.0 {
        return Err(BoundError::DegenerateReference);
    }
    let (c, r) = (d.center(), d.radius());
    let per_j_boundary: Vec<f64> = f.coefficients().iter().map(|z| ((z - c).norm() - r).abs()).collect();
    let mean = f.sum_ys().scaled(Complex::new(1.0 / f.n() as f64, 0.0));
    let mean_residual = norm(&mean.add_scaled(-mean_coefficient / xx, x));
    let max_residual = per_j_boundary.iter().copied().fold(mean_residual, f64::max);
    Ok(EqualityResiduals { per_j_boundary, mean_residual, max_residual })
}

/// Equality in [`disk_root_bound`] holds iff every coefficient is on the
/// circle and `mean(y) = M / (4 (high + low) |x|^2) x`, `M` the equality weight.
pub fn disk_root_residuals(f: &Family, d: &Disk, tol: &Tolerance) -> Result<EqualityResiduals> {
    d.require_center()?;
    d.require_members(&f.coefficients(), tol)?;
    residuals(f, d, Complex::new(d.equality_weight() / 4.0, 0.0) / (d.high + d.low))
}

/// Equality in [`disk_square_bound`] holds iff every coefficient is on the
/// circle and `mean(y) = 2 Re(high conj(low)) / ((high + low) |x|^2) x`.
pub fn disk_square_residuals(f: &Family, d: &Disk, tol: &Tolerance) -> Result<EqualityResiduals> {
    d.require_positive_product()?;
    d.require_members(&f.coefficients(), tol)?;
    residuals(f, d, Complex::new(2.0 * d.re_product(), 0.0) / (d.high + d.low))
}

/// Summed disk condition:
/// `sum |<x,y_j>|^2 + n |center|^2 <= n radius^2 + Re[conj(high + low) <x, sum y_j>]`,
/// with equality iff every coefficient lies on the circle.
pub fn disk_sum_lemma(f: &Family, d: &Disk, tol: &Tolerance) -> Result<BoundReport> {
    let zs = f.coefficients();
    d.require_members(&zs, tol)?;
    let n = f.n() as f64;
    let lhs = zs.iter().map(|z| z.norm_sqr()).sum::<f64>() + n * d.center().norm_sqr();
    let s = inner_unchecked(f.x(), &f.sum_ys());
    let rhs = n * d.radius().powi(2) + ((d.high + d.low).conj() * s).re;
    Ok(BoundReport::new(BoundId::DiskSumLemma, lhs, rhs))
}

/// The sharp bounds specialised to an orthonormal family.
#[derive(Debug, Clone, PartialEq)]
pub struct OrthonormalDiskBounds {
    pub root: BoundReport,
    pub square: BoundReport,
    /// Both applicable right-hand sides are at least Bessel's `|x|` / `|x|^2`.
    pub coarser_than_bessel: bool,
}

/// Root bound with `|sum e_j| = sqrt(n)`: `rhs = |x| + sqrt(n) |high - low|^2 / (4 |high + low|)`;
/// square bound: `rhs = |high + low|^2 / (4 Re(high conj(low))) |x|^2`.
pub fn orthonormal_disk_bounds(
    x: &HVector,
    es: &[HVector],
    d: &Disk,
    tol: &Tolerance,
) -> Result<OrthonormalDiskBounds> {
    let family = Family::new(x.clone(), es.to_vec())?;
    let moments = Moments::of(&family);
    let defect = moments.gram().identity_defect();
    if defect > tol.at(1.0) {
        return Err(BoundError::Precondition(format!("family is not orthonormal (Gram defect {defect:e})")));
    }
    d.require_members(moments.coefficients(), tol)?;

    let n = es.len() as f64;
    let s2 = moments.bessel_sum();
    let xx = moments.x_norm_sq();
    let x_norm = xx.sqrt();
    let root = match d.require_center() {
        Ok(()) => BoundReport::new(BoundId::OrthonormalRoot, s2.sqrt(), x_norm + n.sqrt() * d.root_excess()),
        Err(e) => BoundReport::inapplicable(BoundId::OrthonormalRoot, e.to_string()),
    };
    let square = match d.require_positive_product() {
        Ok(()) => BoundReport::new(BoundId::OrthonormalSquare, s2, d.square_factor() * xx),
        Err(e) => BoundReport::inapplicable(BoundId::OrthonormalSquare, e.to_string()),
    };
    if !root.preconditions_met && !square.preconditions_met {
        return Err(BoundError::Parameter("disk centered at 0 admits neither bound".into()));
    }
    let root_ok = !root.preconditions_met || root.rhs >= x_norm - tol.at(x_norm.max(1.0));
    let square_ok = !square.preconditions_met || square.rhs >= xx - tol.at(xx.max(1.0));
    Ok(OrthonormalDiskBounds { root, square, coarser_than_bessel: root_ok && square_ok })
}

/// The scalars `z_j` as the family `x = 1`, `y_j = conj(z_j)` in `C^1`.
pub fn scalar_family(zs: &[Complex]) -> Result<Family> {
    let x = HVector::new(vec![Complex::new(1.0, 0.0)])?;
    let ys = zs.iter().map(|z| HVector::new(vec![z.conj()])).collect::<Result<Vec<_>>>()?;
    Family::new(x, ys)
}

/// `(sum |z_j|^2)^(1/2) <= |sum z_j| / sqrt(n) + sqrt(n) |high - low|^2 / (4 |high + low|)`
/// for scalars in the disk.
pub fn triangle_reverse_root(zs: &[Complex], d: &Disk, tol: &Tolerance) -> Result<BoundReport> {
    let mut r = disk_root_bound(&scalar_family(zs)?, d, tol)?;
    r.bound_id = BoundId::TriangleReverseRoot;
    Ok(r)
}

/// `sum |z_j|^2 <= |high + low|^2 / (4 n Re(high conj(low))) |sum z_j|^2`.
pub fn triangle_reverse_square(zs: &[Complex], d: &Disk, tol: &Tolerance) -> Result<BoundReport> {
    let mut r = disk_square_bound(&scalar_family(zs)?, d, tol)?;
    r.bound_id = BoundId::TriangleReverseSquare;
    Ok(r)
}
