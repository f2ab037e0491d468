//! Complex coordinate vectors, the inner product and Gram matrices.
//!
//! The inner product is linear in its first argument and conjugate-linear in
//! its second: `inner(u, v) = sum_k u_k * conj(v_k)`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{BoundError, Result};

pub type Complex = Complex64;

/// Whether a family lives in a real or a complex inner product space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Real,
    Complex,
}

/// An element of `C^d` with finite coordinates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Complex>", into = "Vec<Complex>")]
pub struct HVector(Vec<Complex>);

impl HVector {
    pub fn new(coords: Vec<Complex>) -> Result<Self> {
        if coords.is_empty() {
            return Err(BoundError::ZeroDimension);
        }
        if let Some(k) = coords.iter().position(|z| !z.is_finite()) {
            return Err(BoundError::NonFinite(format!("coordinate {k}")));
        }
        Ok(HVector(coords))
    }

    pub fn from_real(coords: &[f64]) -> Result<Self> {
        Self::new(coords.iter().map(|&r| Complex::new(r, 0.0)).collect())
    }

    pub fn zeros(dim: usize) -> Self {
        assert!(dim > 0, "zero-dimensional vector");
        HVector(vec![Complex::new(0.0, 0.0); dim])
    }

    /// The `k`-th standard basis vector of `C^dim`.
    pub fn basis(dim: usize, k: usize) -> Self {
        assert!(k < dim, "basis index {k} out of range for dimension {dim}");
        let mut v = Self::zeros(dim);
        v.0[k] = Complex::new(1.0, 0.0);
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Complex] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Complex> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|z| z.re == 0.0 && z.im == 0.0)
    }

    pub fn is_real(&self) -> bool {
        self.0.iter().all(|z| z.im == 0.0)
    }

    pub fn scaled(&self, s: Complex) -> HVector {
        HVector(self.0.iter().map(|&z| z * s).collect())
    }

    /// `self + s * other`; dimensions must agree.
    pub fn add_scaled(&self, s: Complex, other: &HVector) -> HVector {
        debug_assert_eq!(self.dim(), other.dim());
        HVector(self.0.iter().zip(&other.0).map(|(&a, &b)| a + s * b).collect())
    }

    pub fn sub(&self, other: &HVector) -> HVector {
        self.add_scaled(Complex::new(-1.0, 0.0), other)
    }

    /// Coordinate-wise sum of a non-empty list of equal-dimension vectors.
    pub fn sum<'a, I>(vectors: I) -> Option<HVector>
    where
        I: IntoIterator<Item = &'a HVector>,
    {
        let mut it = vectors.into_iter();
        let mut acc = it.next()?.clone();
        for v in it {
            debug_assert_eq!(acc.dim(), v.dim());
            for (a, b) in acc.0.iter_mut().zip(&v.0) {
                *a += b;
            }
        }
        Some(acc)
    }
}

impl TryFrom<Vec<Complex>> for HVector {
    type Error = BoundError;

    fn try_from(coords: Vec<Complex>) -> Result<Self> {
        HVector::new(coords)
    }
}

impl From<HVector> for Vec<Complex> {
    fn from(v: HVector) -> Self {
        v.0
    }
}

fn check_dims(u: &HVector, v: &HVector) -> Result<()> {
    if u.dim() != v.dim() {
        return Err(BoundError::DimensionMismatch { expected: u.dim(), found: v.dim() });
    }
    Ok(())
}

pub(crate) fn inner_unchecked(u: &HVector, v: &HVector) -> Complex {
    u.0.iter().zip(&v.0).map(|(a, b)| a * b.conj()).sum()
}

/// `<u, v> = sum_k u_k conj(v_k)`.
pub fn inner(u: &HVector, v: &HVector) -> Result<Complex> {
    check_dims(u, v)?;
    Ok(inner_unchecked(u, v))
}

pub fn norm_sq(u: &HVector) -> f64 {
    u.0.iter().map(|z| z.norm_sqr()).sum()
}

pub fn norm(u: &HVector) -> f64 {
    norm_sq(u).sqrt()
}

/// Component of `w` orthogonal to `x`. `x` must be non-zero.
pub fn project_out(w: &HVector, x: &HVector) -> Result<HVector> {
    check_dims(x, w)?;
    let xx = norm_sq(x);
    if xx == 0.0 {
        return Err(BoundError::DegenerateReference);
    }
    let along = inner_unchecked(w, x) / xx;
    Ok(w.add_scaled(-along, x))
}

/// Hermitian matrix of pairwise inner products, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct GramMatrix {
    n: usize,
    entries: Vec<Complex>,
}

impl GramMatrix {
    pub fn size(&self) -> usize {
        self.n
    }

    /// `<y_i, y_j>`.
    pub fn get(&self, i: usize, j: usize) -> Complex {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[Complex] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    /// Largest deviation from conjugate symmetry, together with the largest
    /// imaginary part or negative real part on the diagonal.
    pub fn hermitian_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.n {
            let d = self.get(i, i);
            worst = worst.max(d.im.abs()).max((-d.re).max(0.0));
            for j in 0..i {
                worst = worst.max((self.get(j, i) - self.get(i, j).conj()).norm());
            }
        }
        worst
    }

    /// Maximum entrywise distance to the identity.
    pub fn identity_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.n {
            for j in 0..self.n {
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((self.get(i, j) - target).norm());
            }
        }
        worst
    }
}

/// Gram matrix of `ys`; the diagonal is computed as a squared norm so it is
/// exactly real.
pub fn gram(ys: &[HVector]) -> Result<GramMatrix> {
    let first = ys.first().ok_or(BoundError::EmptyFamily)?;
    for y in ys {
        check_dims(first, y)?;
    }
    let n = ys.len();
    let mut entries = vec![Complex::new(0.0, 0.0); n * n];
    for i in 0..n {
        entries[i * n + i] = Complex::new(norm_sq(&ys[i]), 0.0);
        for j in 0..i {
            let g = inner_unchecked(&ys[i], &ys[j]);
            entries[i * n + j] = g;
            entries[j * n + i] = g.conj();
        }
    }
    Ok(GramMatrix { n, entries })
}

/// Vectors `y_j` with `<x, y_j> = zs[j]`.
///
/// `y_j = conj(z_j) / |x|^2 * x + P(w_j)` where `P` removes the component
/// along `x`. Without `ws` every `y_j` is a multiple of `x`.
pub fn lift_gram_values(
    x: &HVector,
    zs: &[Complex],
    ws: Option<&[HVector]>,
) -> Result<Vec<HVector>> {
    let xx = norm_sq(x);
    if xx == 0.0 {
        return Err(BoundError::DegenerateReference);
    }
    if let Some(ws) = ws {
        if ws.len() != zs.len() {
            return Err(BoundError::LengthMismatch { expected: zs.len(), found: ws.len() });
        }
    }
    zs.iter()
        .enumerate()
        .map(|(j, z)| {
            let along = x.scaled(z.conj() / xx);
            match ws {
                Some(ws) => Ok(along.add_scaled(Complex::new(1.0, 0.0), &project_out(&ws[j], x)?)),
                None => Ok(along),
            }
        })
        .collect()
}

/// A reference vector `x` with test vectors `y_1..y_n` of the same dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct Family {
    x: HVector,
    ys: Vec<HVector>,
    field: Field,
}

impl Family {
    pub fn new(x: HVector, ys: Vec<HVector>) -> Result<Self> {
        if ys.is_empty() {
            return Err(BoundError::EmptyFamily);
        }
        for y in &ys {
            check_dims(&x, y)?;
        }
        Ok(Family { x, ys, field: Field::Complex })
    }

    /// A family flagged as living in a real space; every imaginary part must be 0.
    pub fn real(x: HVector, ys: Vec<HVector>) -> Result<Self> {
        if !x.is_real() {
            return Err(BoundError::NotReal("x".into()));
        }
        if let Some(j) = ys.iter().position(|y| !y.is_real()) {
            return Err(BoundError::NotReal(format!("ys[{j}]")));
        }
        let mut f = Self::new(x, ys)?;
        f.field = Field::Real;
        Ok(f)
    }

    pub fn with_field(x: HVector, ys: Vec<HVector>, field: Field) -> Result<Self> {
        match field {
            Field::Real => Self::real(x, ys),
            Field::Complex => Self::new(x, ys),
        }
    }

    pub fn x(&self) -> &HVector {
        &self.x
    }

    pub fn ys(&self) -> &[HVector] {
        &self.ys
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn n(&self) -> usize {
        self.ys.len()
    }

    pub fn dim(&self) -> usize {
        self.x.dim()
    }

    /// Fourier coefficients `<x, y_j>`.
    pub fn coefficients(&self) -> Vec<Complex> {
        self.ys.iter().map(|y| inner_unchecked(&self.x, y)).collect()
    }

    pub fn sum_ys(&self) -> HVector {
        HVector::sum(&self.ys).expect("family is non-empty")
    }

    /// Same test vectors with `x` replaced by `s * x`.
    pub fn with_scaled_x(&self, s: Complex) -> Family {
        Family { x: self.x.scaled(s), ys: self.ys.clone(), field: self.field }
    }

    pub fn gram(&self) -> GramMatrix {
        gram(&self.ys).expect("family dimensions are validated on construction")
    }
}
