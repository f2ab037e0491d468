use crate::classical::{Moments, SpecialChoice};
use crate::error::BoundError;
use crate::numeric::{Complex, Family};
use crate::report::{BoundId, BoundReport};
use crate::sharp::{self, Disk};
use crate::tolerance::Tolerance;

fn or_inapplicable(id: BoundId, r: Result<BoundReport, BoundError>) -> BoundReport {
    r.unwrap_or_else(|e| BoundReport::inapplicable(id, e.to_string()))
}

/// Every bound that can be evaluated on `f`.
///
/// Bounds whose hypotheses fail are returned with `preconditions_met = false`.
/// The Pečarić and weighted bounds run for `coeffs` (when given) and for each
/// of the three specialisation choices; p-dependent bounds run once per entry
/// of `p_values`. Disk bounds need `disk`.
pub fn check_all(
    f: &Family,
    disk: Option<&Disk>,
    coeffs: Option<&[Complex]>,
    p_values: &[f64],
    tol: &Tolerance,
) -> Vec<BoundReport> {
    let m = Moments::of(f);
    let mut out = Vec::with_capacity(16 + 12 * p_values.len());

    out.push(or_inapplicable(BoundId::Bessel, m.bessel(tol)));
    out.push(m.boas_bellman());
    out.push(m.bombieri());
    out.push(or_inapplicable(BoundId::Selberg, m.selberg()));
    out.push(m.max_off_diagonal());
    out.push(m.heilbronn());

    for &p in p_values {
        out.push(or_inapplicable(BoundId::HolderBombieri, m.holder_bombieri(p)).with_p(p));
        match m.quotients(p) {
            Ok(reports) => out.extend(reports),
            Err(e) => out.extend(
                [BoundId::QuotientMax, BoundId::QuotientHolder, BoundId::QuotientL1]
                    .map(|id| BoundReport::inapplicable(id, e.to_string()).with_p(p)),
            ),
        }
    }

    let mut coefficient_sets: Vec<Vec<Complex>> = Vec::with_capacity(4);
    if let Some(c) = coeffs {
        coefficient_sets.push(c.to_vec());
    }
    coefficient_sets.extend(SpecialChoice::ALL.iter().filter_map(|&ch| m.special_coefficients(ch)));
    for c in &coefficient_sets {
        match m.pecaric(c) {
            Ok(v) => out.extend(v.reports()),
            Err(e) => out.extend(
                [BoundId::PecaricFirst, BoundId::PecaricSecond].map(|id| BoundReport::inapplicable(id, e.to_string())),
            ),
        }
        for (k, &p) in p_values.iter().enumerate() {
            match m.weighted(c, p) {
                Ok(v) => {
                    let [max, holder, l1] = v.reports();
                    // the max and l1 branches do not depend on p
                    if k == 0 {
                        out.push(max);
                        out.push(l1);
                    }
                    out.push(holder);
                }
                Err(e) => out.push(BoundReport::inapplicable(BoundId::WeightedHolder, e.to_string()).with_p(p)),
            }
        }
    }

    if let Some(d) = disk {
        out.extend(sharp_reports(f, &m, d, tol));
    }
    out
}

/// Disk bounds, the summed disk lemma, the scalar corollaries on the
/// coefficients and, for orthonormal families, the orthonormal forms.
pub fn sharp_reports(f: &Family, m: &Moments, d: &Disk, tol: &Tolerance) -> Vec<BoundReport> {
    let zs = m.coefficients();
    let mut out = vec![
        or_inapplicable(BoundId::DiskRoot, sharp::disk_root_bound(f, d, tol)),
        or_inapplicable(BoundId::DiskSquare, sharp::disk_square_bound(f, d, tol)),
        or_inapplicable(BoundId::DiskSumLemma, sharp::disk_sum_lemma(f, d, tol)),
        or_inapplicable(BoundId::TriangleReverseRoot, sharp::triangle_reverse_root(zs, d, tol)),
        or_inapplicable(BoundId::TriangleReverseSquare, sharp::triangle_reverse_square(zs, d, tol)),
    ];
    if m.gram().identity_defect() <= tol.at(1.0) {
        match sharp::orthonormal_disk_bounds(f.x(), f.ys(), d, tol) {
            Ok(b) => {
                out.push(b.root);
                out.push(b.square);
            }
            Err(e) => out.extend(
                [BoundId::OrthonormalRoot, BoundId::OrthonormalSquare]
                    .map(|id| BoundReport::inapplicable(id, e.to_string())),
            ),
        }
    }
    out
}
