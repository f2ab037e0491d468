//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any fails. All tolerances are pinned below.

use std::f64::consts::PI;
use std::process::{Command, ExitCode};
use std::time::Instant;

use bessel_core::classical::{Moments, SpecialChoice};
use bessel_core::extremal::{self, Target};
use bessel_core::harness::{
    self, instance_rng, sample_disk_family, sample_family, sample_orthonormal_family, FieldMode, FuzzConfig, IntRange,
};
use bessel_core::numeric::{norm, norm_sq};
use bessel_core::sharp::{self, disk_condition_abs, disk_condition_re};
use bessel_core::{BoundId, Complex, Disk, Family, HVector, Tolerance};
use rand::Rng;

/// Bound validity: slack >= -VALIDITY_TOL * max(1, |rhs|).
const VALIDITY_TOL: f64 = 1e-9;
/// Disk boundary tolerance, scaled by max(1, radius).
const BOUNDARY_TOL: f64 = 1e-9;
/// Equality in the sharp bounds and their residuals.
const SHARPNESS_TOL: f64 = 1e-9;
/// Relative agreement of algebraic specialisations.
const IDENTITY_TOL: f64 = 1e-12;
/// Equality in the summed disk lemma.
const LEMMA_TOL: f64 = 1e-9;

const VALIDITY_INSTANCES: u64 = 100_000;
const EQUIVALENCE_POINTS: u64 = 1_000_000;
const SHARPNESS_DRAWS: u64 = 1_000;
const IDENTITY_FAMILIES: u64 = 10_000;
const COARSENESS_INSTANCES: u64 = 10_000;
const REPRODUCIBILITY_INSTANCES: u64 = 20_000;
const LEMMA_INSTANCES: u64 = 100_000;

type Outcome = Result<String, String>;
type Criterion = fn() -> Outcome;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rel_close(a: f64, b: f64, eps: f64) -> bool {
    (a - b).abs() <= eps * a.abs().max(b.abs()).max(1.0)
}

fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

fn random_disk<R: Rng>(rng: &mut R) -> Disk {
    let center = Complex::from_polar(rng.random_range(0.1..3.0), rng.random_range(-PI..PI));
    let radius = center.norm() * rng.random_range(0.0..3.0);
    Disk::from_center(center, radius, rng.random_range(-PI..PI))
}

fn random_vector<R: Rng>(rng: &mut R, dim: usize) -> HVector {
    HVector::new((0..dim).map(|_| c(rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0))).collect()).unwrap()
}

/// 1. Every applicable bound holds on 10^5 mixed real/complex generic and disk instances.
fn validity() -> Outcome {
    let cfg = FuzzConfig {
        master_seed: 42,
        instances: VALIDITY_INSTANCES,
        n_range: IntRange::new(1, 12),
        d_range: IntRange::new(1, 8),
        field_mode: FieldMode::Mixed,
        tolerance: VALIDITY_TOL,
        ..FuzzConfig::default()
    };
    let summary = harness::fuzz(&cfg);
    let evaluations: u64 = summary.checked.values().sum();
    let required = [
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
        BoundId::TriangleReverseRoot,
        BoundId::TriangleReverseSquare,
    ];
    for id in required {
        check(summary.checked.get(&id).copied().unwrap_or(0) > 0, || format!("{id} was never evaluated"))?;
    }
    check(summary.violations.is_empty(), || {
        format!("{} violations, first: {:?}", summary.violations.len(), summary.violations[0])
    })?;
    let worst = summary.min_slack.values().copied().fold(f64::INFINITY, f64::min);
    Ok(format!("{VALIDITY_INSTANCES} instances, {evaluations} evaluations, 0 violations (min slack {worst:e})"))
}

/// 2. The product and modulus forms of the disk condition agree on 10^6 points,
///    concentrated around the tolerance band of the circle.
fn equivalence() -> Outcome {
    let tol = Tolerance::new(BOUNDARY_TOL);
    let mut rng = instance_rng(2, 0);
    let (mut inside, mut disagreements) = (0u64, Vec::new());
    for k in 0..EQUIVALENCE_POINTS {
        let d = random_disk(&mut rng);
        let t = d.boundary_tol(&tol);
        let dist = match k % 4 {
            0 => d.radius() * rng.random_range(0.0..2.0),
            1 => d.radius() + t * rng.random_range(-3.0..3.0),
            2 => d.radius(),
            _ => d.radius() + t * rng.random_range(0.5..1.5),
        };
        let z = d.center() + Complex::from_polar(dist, rng.random_range(-PI..PI));
        let (a, b) = (disk_condition_re(z, &d, &tol), disk_condition_abs(z, &d, &tol));
        inside += u64::from(b);
        if a != b {
            disagreements.push((z, d));
        }
    }
    check(disagreements.is_empty(), || {
        format!("{} disagreements, first: {:?}", disagreements.len(), disagreements[0])
    })?;
    Ok(format!("{EQUIVALENCE_POINTS} points agree ({inside} inside)"))
}

/// Root-bound sides computed straight from the coordinates.
fn root_oracle(f: &Family, d: &Disk) -> (f64, f64) {
    let n = f.n() as f64;
    let x = f.x().coords();
    let mut sum = vec![c(0.0, 0.0); x.len()];
    let mut lhs = 0.0;
    for y in f.ys() {
        let z: Complex = x.iter().zip(y.coords()).map(|(a, b)| a * b.conj()).sum();
        lhs += z.norm_sqr();
        for (s, b) in sum.iter_mut().zip(y.coords()) {
            *s += b;
        }
    }
    let len = |v: &[Complex]| v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let rhs = len(x) * len(&sum) / n.sqrt() + n.sqrt() / 4.0 * (d.high - d.low).norm_sqr() / (d.high + d.low).norm();
    (lhs.sqrt(), rhs)
}

/// 3. Equality families are exact for both sharp bounds, with residuals at rounding level.
fn sharpness() -> Outcome {
    let tol = Tolerance::new(BOUNDARY_TOL);
    // worked fixtures, both sides evaluated independently of the library
    let d = Disk::new(c(1.0, 0.0), c(3.0, 0.0));
    let e1 = HVector::basis(2, 0);
    let root = extremal::build(Target::Root, &e1, 2, &d, None, &tol).map_err(|e| e.to_string())?;
    let (lhs, rhs) = root_oracle(&root, &d);
    let target = 2.0 * 2f64.sqrt();
    check(rel_close(lhs, target, SHARPNESS_TOL) && rel_close(rhs, target, SHARPNESS_TOL), || {
        format!("root fixture: lhs {lhs}, rhs {rhs}, expected 2*sqrt(2)")
    })?;
    let square = extremal::build(Target::Square, &e1, 2, &d, None, &tol).map_err(|e| e.to_string())?;
    let lhs: f64 = square.ys().iter().map(|y| y.coords()[0].norm_sqr()).sum();
    let sum: f64 = square.ys().iter().map(|y| y.coords()).fold([c(0.0, 0.0); 2], |acc, v| [acc[0] + v[0], acc[1] + v[1]])
        .iter()
        .map(|z| z.norm_sqr())
        .sum();
    let rhs = 0.5 * (16.0 / 12.0) * sum;
    check(rel_close(lhs, 6.0, SHARPNESS_TOL) && rel_close(rhs, 6.0, SHARPNESS_TOL), || {
        format!("square fixture: lhs {lhs}, rhs {rhs}, expected 6")
    })?;

    let mut rng = instance_rng(3, 0);
    let (mut accepted, mut drawn, mut worst) = (0u64, 0u64, 0f64);
    let mut per_target = [0u64; 2];
    while accepted < SHARPNESS_DRAWS {
        drawn += 1;
        let target = if rng.random_bool(0.5) { Target::Root } else { Target::Square };
        let n = rng.random_range(2..=10usize);
        let dim = rng.random_range(1..=6usize);
        let d = random_disk(&mut rng);
        let x = random_vector(&mut rng, dim);
        let mut ws: Vec<HVector> = (0..n).map(|_| random_vector(&mut rng, dim)).collect();
        let head = HVector::sum(&ws[..n - 1]).unwrap();
        ws[n - 1] = head.scaled(c(-1.0, 0.0));
        match extremal::plan(target, n, &d) {
            Ok(spec) if spec.feasible && norm(&x) > 1e-3 => {}
            _ => continue,
        }
        let f = extremal::build(target, &x, n, &d, Some(&ws), &tol).map_err(|e| format!("build failed: {e}"))?;
        let (report, residuals) = match target {
            Target::Root => (sharp::disk_root_bound(&f, &d, &tol), sharp::disk_root_residuals(&f, &d, &tol)),
            Target::Square => (sharp::disk_square_bound(&f, &d, &tol), sharp::disk_square_residuals(&f, &d, &tol)),
        };
        let (report, residuals) = (report.map_err(|e| e.to_string())?, residuals.map_err(|e| e.to_string())?);
        let gap = (report.lhs - report.rhs).abs() / report.rhs.max(1.0);
        check(gap <= SHARPNESS_TOL, || format!("{target:?} n={n} dim={dim} {d:?}: {report:?}"))?;
        check(residuals.max_residual <= SHARPNESS_TOL, || {
            format!("{target:?} n={n} dim={dim} {d:?}: residuals {residuals:?}")
        })?;
        worst = worst.max(gap).max(residuals.max_residual);
        per_target[(target == Target::Square) as usize] += 1;
        accepted += 1;
    }
    Ok(format!(
        "fixtures 2*sqrt(2) and 6 reproduced; {accepted} feasible draws ({} root, {} square; {drawn} drawn), worst gap/residual {worst:e}",
        per_target[0], per_target[1]
    ))
}

/// 4. Holder at p=2, the Pecaric specialisations and the orthonormal reduction.
fn specialisations() -> Outcome {
    let cfg = FuzzConfig { master_seed: 4, ..FuzzConfig::default() };
    let (mut selberg_checked, mut skipped_zero) = (0u64, 0u64);
    for i in 0..IDENTITY_FAMILIES {
        let f = sample_family(&cfg, i);
        let m = Moments::of(&f);
        let ctx = |what: &str| format!("family {i}: {what}");

        let h = m.holder_bombieri(2.0).map_err(|e| ctx(&e.to_string()))?;
        let b = m.bombieri();
        check(rel_close(h.lhs, b.lhs, IDENTITY_TOL) && rel_close(h.rhs, b.rhs, IDENTITY_TOL), || {
            ctx(&format!("holder(2) {h:?} vs bombieri {b:?}"))
        })?;

        let s2 = m.bessel_sum();
        if s2 == 0.0 {
            skipped_zero += 1;
            continue;
        }
        let conj = m.special_coefficients(SpecialChoice::Conjugate).expect("always defined");
        let v = m.pecaric(&conj).map_err(|e| ctx(&e.to_string()))?;
        check(rel_close(v.lhs / s2, b.lhs, IDENTITY_TOL) && rel_close(v.rhs_second / s2, b.rhs, IDENTITY_TOL), || {
            ctx(&format!("conjugate choice {v:?} vs bombieri {b:?}"))
        })?;

        if let (Some(w), Ok(sel)) = (m.special_coefficients(SpecialChoice::SelbergWeights), m.selberg()) {
            let v = m.pecaric(&w).map_err(|e| ctx(&e.to_string()))?;
            // first inequality divided by the Selberg sum is the Selberg inequality
            check(
                rel_close(v.lhs / sel.lhs, sel.lhs, IDENTITY_TOL) && rel_close(v.rhs_first / sel.lhs, sel.rhs, IDENTITY_TOL),
                || ctx(&format!("Selberg choice {v:?} vs {sel:?}")),
            )?;
            selberg_checked += 1;
        }

        let unit = m.special_coefficients(SpecialChoice::UnitPhase).expect("always defined");
        let v = m.pecaric(&unit).map_err(|e| ctx(&e.to_string()))?;
        let hb = m.heilbronn();
        check(rel_close(v.lhs, hb.lhs.powi(2), IDENTITY_TOL) && rel_close(v.rhs_first, hb.rhs.powi(2), IDENTITY_TOL), || {
            ctx(&format!("unit-phase choice {v:?} vs heilbronn {hb:?}"))
        })?;
    }

    // orthonormal reduction: exactly |x|^2 on phased permutations of the
    // standard basis, and to 1e-12 on Gram-Schmidt families
    let units = [c(1.0, 0.0), c(-1.0, 0.0), c(0.0, 1.0), c(0.0, -1.0)];
    let mut rng = instance_rng(4, 1);
    for i in 0..IDENTITY_FAMILIES {
        let dim = rng.random_range(1..=8usize);
        let n = rng.random_range(1..=dim);
        let mut axes: Vec<usize> = (0..dim).collect();
        for k in (1..dim).rev() {
            axes.swap(k, rng.random_range(0..=k));
        }
        let ys: Vec<HVector> =
            axes[..n].iter().map(|&a| HVector::basis(dim, a).scaled(units[rng.random_range(0..4)])).collect();
        let x = random_vector(&mut rng, dim);
        let xx = norm_sq(&x);
        let m = Moments::of(&Family::new(x, ys).unwrap());
        for r in [m.boas_bellman(), m.bombieri(), m.max_off_diagonal()] {
            check(r.rhs == xx, || format!("basis family {i}: {} rhs {} != |x|^2 {xx}", r.bound_id, r.rhs))?;
        }
        check(m.selberg().map(|s| s.lhs) == Ok(m.bessel_sum()), || format!("basis family {i}: Selberg lhs"))?;

        let inst = sample_orthonormal_family(&cfg, i);
        let xx = norm_sq(inst.family.x());
        let m = Moments::of(&inst.family);
        for r in [m.boas_bellman(), m.bombieri(), m.max_off_diagonal()] {
            check(rel_close(r.rhs, xx, IDENTITY_TOL), || format!("orthonormal family {i}: {} rhs {} vs {xx}", r.bound_id, r.rhs))?;
        }
    }
    Ok(format!(
        "{IDENTITY_FAMILIES} families (Selberg choice on {selberg_checked}, {skipped_zero} with zero Bessel sum); orthonormal reduction exact on {IDENTITY_FAMILIES} basis families"
    ))
}

/// 5. Orthonormal forms of the sharp bounds are no better than Bessel's inequality.
fn coarseness() -> Outcome {
    let cfg = FuzzConfig { master_seed: 5, ..FuzzConfig::default() };
    let tol = Tolerance::new(VALIDITY_TOL);
    let (mut root_checked, mut square_checked) = (0u64, 0u64);
    for i in 0..COARSENESS_INSTANCES {
        let inst = sample_orthonormal_family(&cfg, i);
        let f = &inst.family;
        let b = sharp::orthonormal_disk_bounds(f.x(), f.ys(), &inst.disk, &tol).map_err(|e| format!("instance {i}: {e}"))?;
        let x_norm = norm(f.x());
        if b.root.preconditions_met {
            check(b.root.rhs >= x_norm, || format!("instance {i}: root rhs {} < |x| {x_norm}", b.root.rhs))?;
            root_checked += 1;
        }
        if b.square.preconditions_met {
            let xx = x_norm * x_norm;
            check(b.square.rhs >= xx - VALIDITY_TOL * xx.max(1.0), || {
                format!("instance {i}: square rhs {} < |x|^2 {xx}", b.square.rhs)
            })?;
            square_checked += 1;
        }
        check(b.coarser_than_bessel, || format!("instance {i}: coarser_than_bessel is false"))?;
    }
    Ok(format!("{COARSENESS_INSTANCES} instances ({root_checked} root, {square_checked} square forms checked)"))
}

fn run_fuzz(output: &std::path::Path, threads: &str) -> Result<Vec<u8>, String> {
    let run = Command::new(env!("CARGO_BIN_EXE_bessel"))
        .args(["fuzz", "--seed", "42", "--instances", &REPRODUCIBILITY_INSTANCES.to_string(), "--threads", threads])
        .arg("--output")
        .arg(output)
        .output()
        .map_err(|e| format!("spawning bessel: {e}"))?;
    check(run.status.code() == Some(0), || {
        format!("fuzz exited with {}: {}", run.status, String::from_utf8_lossy(&run.stderr))
    })?;
    std::fs::read(output).map_err(|e| e.to_string())
}

/// 6. Fuzz summaries are byte-identical across runs and thread counts.
fn reproducibility() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let a = run_fuzz(&dir.path().join("a.json"), "1")?;
    let b = run_fuzz(&dir.path().join("b.json"), "1")?;
    let c = run_fuzz(&dir.path().join("c.json"), "4")?;
    check(a == b, || "two identical runs differ".into())?;
    check(a == c, || "1-thread and 4-thread summaries differ".into())?;
    Ok(format!("3 runs of {REPRODUCIBILITY_INSTANCES} instances, {} identical bytes", a.len()))
}

/// 7. The summed disk lemma holds, with equality exactly when every coefficient is on the circle.
fn lemma() -> Outcome {
    let cfg = FuzzConfig { master_seed: 7, field_mode: FieldMode::Mixed, ..FuzzConfig::default() };
    let tol = Tolerance::new(BOUNDARY_TOL);
    let (mut boundary, mut interior) = (0u64, 0u64);
    let mut min_interior_slack = f64::INFINITY;
    for i in 0..LEMMA_INSTANCES {
        let inst = sample_disk_family(&cfg, i);
        let r = sharp::disk_sum_lemma(&inst.family, &inst.disk, &tol).map_err(|e| format!("instance {i}: {e}"))?;
        let scale = LEMMA_TOL * r.rhs.abs().max(1.0);
        check(r.slack >= -scale, || format!("instance {i}: lemma violated {r:?}"))?;
        if inst.boundary_only {
            check(r.slack.abs() <= scale, || format!("instance {i}: boundary-only but strict {r:?}"))?;
            boundary += 1;
        } else {
            check(r.slack > scale, || format!("instance {i}: interior point but equality {r:?}"))?;
            min_interior_slack = min_interior_slack.min(r.slack);
            interior += 1;
        }
    }
    check(boundary > 0 && interior > 0, || "sampler produced only one kind of instance".into())?;
    Ok(format!(
        "{LEMMA_INSTANCES} instances: equality on {boundary} boundary-only, strict on {interior} others (min slack {min_interior_slack:e})"
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 7] = [
        ("validity", validity),
        ("disk-condition equivalence", equivalence),
        ("sharpness", sharpness),
        ("specialisation identities", specialisations),
        ("coarseness of orthonormal forms", coarseness),
        ("reproducibility", reproducibility),
        ("summed disk lemma", lemma),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {} ({name}): {detail} [{secs:.1}s]", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {} ({name}): {why} [{secs:.1}s]", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
