use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::{FieldMode, FuzzConfig, IntRange};
use crate::extremal::{self, Target};
use crate::numeric::{inner_unchecked, lift_gram_values, norm, Complex, Family, Field, HVector};
use crate::sharp::Disk;

/// Random stream for instance `index` under `master_seed`.
pub fn instance_rng(master_seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
    rng.set_stream(index);
    rng
}

/// A family whose Fourier coefficients lie in `disk` by construction.
#[derive(Debug, Clone)]
pub struct DiskInstance {
    pub family: Family,
    pub disk: Disk,
    /// Every coefficient was placed on the circle.
    pub boundary_only: bool,
    /// Set when the family was built to attain equality in a sharp bound.
    pub extremal: Option<Target>,
}

fn pick_field<R: Rng>(rng: &mut R, mode: FieldMode) -> Field {
    match mode {
        FieldMode::Real => Field::Real,
        FieldMode::Complex => Field::Complex,
        FieldMode::Mixed => {
            if rng.random_bool(0.5) {
                Field::Real
            } else {
                Field::Complex
            }
        }
    }
}

fn pick<R: Rng>(rng: &mut R, range: IntRange) -> usize {
    rng.random_range(range.min..=range.max)
}

fn scalar<R: Rng>(rng: &mut R, field: Field) -> Complex {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = match field {
        Field::Real => 0.0,
        Field::Complex => rng.sample(StandardNormal),
    };
    Complex::new(re, im)
}

fn vector<R: Rng>(rng: &mut R, dim: usize, field: Field) -> HVector {
    HVector::new((0..dim).map(|_| scalar(rng, field)).collect()).expect("finite samples")
}

fn nonzero_vector<R: Rng>(rng: &mut R, dim: usize, field: Field) -> HVector {
    loop {
        let v = vector(rng, dim, field);
        if norm(&v) > 1e-3 {
            return v;
        }
    }
}

/// `n` coefficients from the coordinate distribution.
pub fn random_coefficients<R: Rng>(rng: &mut R, n: usize, field: Field) -> Vec<Complex> {
    (0..n).map(|_| scalar(rng, field)).collect()
}

pub(crate) fn generic_from<R: Rng>(rng: &mut R, cfg: &FuzzConfig) -> Family {
    let field = pick_field(rng, cfg.field_mode);
    let n = pick(rng, cfg.n_range);
    let d = pick(rng, cfg.d_range);
    let x = vector(rng, d, field);
    let ys = (0..n).map(|_| vector(rng, d, field)).collect();
    Family::with_field(x, ys, field).expect("sampled dimensions agree")
}

/// Unconstrained family for instance `index`: standard normal coordinates.
pub fn sample_family(cfg: &FuzzConfig, index: u64) -> Family {
    generic_from(&mut instance_rng(cfg.master_seed, index), cfg)
}

/// Center modulus in [0.25, 2]; radius at least 5% of it. In real mode the
/// disk is symmetric about the real axis.
fn random_disk<R: Rng>(rng: &mut R, field: Field, positive_fraction: f64) -> Disk {
    let rho = rng.random_range(0.25..=2.0);
    let center = match field {
        Field::Real => Complex::new(if rng.random_bool(0.5) { rho } else { -rho }, 0.0),
        Field::Complex => Complex::from_polar(rho, rng.random_range(-PI..PI)),
    };
    let positive = rng.random_bool(positive_fraction);
    let radius = rho * if positive { rng.random_range(0.05..0.95) } else { rng.random_range(0.05..3.0) };
    let angle = match field {
        Field::Real => 0.0,
        Field::Complex => rng.random_range(-PI..PI),
    };
    Disk::from_center(center, radius, angle)
}

/// A point of the disk: on the circle, or strictly inside (at most 99.9% of
/// the radius from the center).
fn disk_point<R: Rng>(rng: &mut R, d: &Disk, field: Field, on_boundary: bool) -> Complex {
    let (c, r) = (d.center(), d.radius());
    match field {
        Field::Real => {
            let t = if on_boundary {
                if rng.random_bool(0.5) { 1.0 } else { -1.0 }
            } else {
                rng.random_range(-0.999..0.999)
            };
            Complex::new(c.re + r * t, 0.0)
        }
        Field::Complex => {
            let theta = rng.random_range(-PI..PI);
            let rho = if on_boundary { r } else { 0.999 * r * rng.random::<f64>().sqrt() };
            c + Complex::from_polar(rho, theta)
        }
    }
}

pub(crate) fn disk_from<R: Rng>(rng: &mut R, cfg: &FuzzConfig) -> DiskInstance {
    let sampler = cfg.disk_sampler;
    let field = pick_field(rng, cfg.field_mode);
    let n = pick(rng, cfg.n_range);
    let dim = pick(rng, cfg.d_range);
    let disk = random_disk(rng, field, sampler.positive_product_fraction);
    let x = nonzero_vector(rng, dim, field);
    let mut ws: Vec<HVector> = (0..n).map(|_| vector(rng, dim, field)).collect();

    let want_extremal = field == Field::Complex && n >= 2 && rng.random_bool(sampler.extremal_fraction);
    let target = if disk.re_product() > 0.0 && rng.random_bool(0.5) { Target::Square } else { Target::Root };
    if want_extremal {
        let feasible = extremal::plan(target, n, &disk).map(|s| s.feasible).unwrap_or(false);
        if feasible {
            let head = HVector::sum(&ws[..n - 1]).expect("n >= 2");
            ws[n - 1] = head.scaled(Complex::new(-1.0, 0.0));
            let family = extremal::build(target, &x, n, &disk, Some(&ws), &cfg.tol())
                .expect("feasible extremal plan builds");
            return DiskInstance { family, disk, boundary_only: true, extremal: Some(target) };
        }
    }

    let mut boundary_only = true;
    let zs: Vec<Complex> = (0..n)
        .map(|_| {
            let on = rng.random_bool(sampler.boundary_fraction);
            boundary_only &= on;
            disk_point(rng, &disk, field, on)
        })
        .collect();
    let ys = lift_gram_values(&x, &zs, Some(&ws)).expect("x is non-zero");
    let family = Family::with_field(x, ys, field).expect("sampled dimensions agree");
    DiskInstance { family, disk, boundary_only, extremal: None }
}

/// Disk-constrained family for instance `index`.
pub fn sample_disk_family(cfg: &FuzzConfig, index: u64) -> DiskInstance {
    disk_from(&mut instance_rng(cfg.master_seed, index), cfg)
}

/// Gram-Schmidt with one re-orthogonalisation pass.
fn orthonormal_set<R: Rng>(rng: &mut R, n: usize, dim: usize, field: Field) -> Vec<HVector> {
    let mut es: Vec<HVector> = Vec::with_capacity(n);
    while es.len() < n {
        let mut v = vector(rng, dim, field);
        for _ in 0..2 {
            for e in &es {
                v = v.add_scaled(-inner_unchecked(&v, e), e);
            }
        }
        let len = norm(&v);
        if len > 1e-6 {
            es.push(v.scaled(Complex::new(1.0 / len, 0.0)));
        }
    }
    es
}

pub(crate) fn orthonormal_from<R: Rng>(rng: &mut R, cfg: &FuzzConfig) -> DiskInstance {
    let field = pick_field(rng, cfg.field_mode);
    let dim = pick(rng, cfg.d_range);
    let n_max = cfg.n_range.max.min(dim);
    let n = pick(rng, IntRange::new(cfg.n_range.min.min(n_max), n_max));
    let es = orthonormal_set(rng, n, dim, field);
    let disk = random_disk(rng, field, cfg.disk_sampler.positive_product_fraction);
    let mut boundary_only = true;
    let zs: Vec<Complex> = (0..n)
        .map(|_| {
            let on = rng.random_bool(cfg.disk_sampler.boundary_fraction);
            boundary_only &= on;
            disk_point(rng, &disk, field, on)
        })
        .collect();
    // x = sum z_j e_j plus a component orthogonal to every e_j
    let mut x = vector(rng, dim, field);
    for e in &es {
        x = x.add_scaled(-inner_unchecked(&x, e), e);
    }
    for (z, e) in zs.iter().zip(&es) {
        x = x.add_scaled(*z, e);
    }
    let family = Family::with_field(x, es, field).expect("sampled dimensions agree");
    DiskInstance { family, disk, boundary_only, extremal: None }
}

/// Orthonormal family `e_1..e_n` (n <= d) with `<x, e_j>` in a random disk.
pub fn sample_orthonormal_family(cfg: &FuzzConfig, index: u64) -> DiskInstance {
    orthonormal_from(&mut instance_rng(cfg.master_seed, index), cfg)
}
