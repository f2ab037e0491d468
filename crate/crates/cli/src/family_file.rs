//! JSON interchange format for families.
//!
//! Complex numbers are `[re, im]` pairs. Floats are written in shortest
//! round-trip form, so writing a family and reading it back is bit-exact.

use std::path::Path;

use anyhow::{bail, Context};
use bessel_core::{Complex, Disk, Family, Field, HVector};
use serde::{Deserialize, Serialize};

pub type Pair = [f64; 2];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyFile {
    pub field_mode: Field,
    pub x: Vec<Pair>,
    pub ys: Vec<Vec<Pair>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<Pair>,
    #[serde(default, rename = "Gamma", skip_serializing_if = "Option::is_none")]
    pub gamma_high: Option<Pair>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coeffs: Option<Vec<Pair>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<Vec<f64>>,
}

/// Everything needed to evaluate the bounds described by a file.
#[derive(Debug, Clone)]
pub struct Loaded {
    pub family: Family,
    pub disk: Option<Disk>,
    pub coeffs: Option<Vec<Complex>>,
    pub p: Option<Vec<f64>>,
}

fn pair(z: Complex) -> Pair {
    [z.re, z.im]
}

fn complex(field: &str, [re, im]: Pair) -> anyhow::Result<Complex> {
    if !(re.is_finite() && im.is_finite()) {
        bail!("{field}: non-finite value");
    }
    Ok(Complex::new(re, im))
}

fn vector(field: &str, coords: &[Pair], mode: Field) -> anyhow::Result<HVector> {
    if coords.is_empty() {
        bail!("{field}: empty vector");
    }
    let zs = coords
        .iter()
        .enumerate()
        .map(|(k, &p)| complex(&format!("{field}[{k}]"), p))
        .collect::<anyhow::Result<Vec<_>>>()?;
    if mode == Field::Real {
        if let Some(k) = zs.iter().position(|z| z.im != 0.0) {
            bail!("{field}[{k}]: imaginary part must be 0 in real mode");
        }
    }
    Ok(HVector::new(zs)?)
}

impl FamilyFile {
    pub fn from_family(f: &Family, disk: Option<&Disk>) -> Self {
        let coords = |v: &HVector| v.coords().iter().copied().map(pair).collect();
        FamilyFile {
            field_mode: f.field(),
            x: coords(f.x()),
            ys: f.ys().iter().map(coords).collect(),
            gamma: disk.map(|d| pair(d.low)),
            gamma_high: disk.map(|d| pair(d.high)),
            coeffs: None,
            p: None,
        }
    }

    /// Validates the file, reporting the first offending field.
    pub fn load(&self) -> anyhow::Result<Loaded> {
        let mode = self.field_mode;
        let x = vector("x", &self.x, mode)?;
        if self.ys.is_empty() {
            bail!("ys: at least one vector is required");
        }
        let ys = self
            .ys
            .iter()
            .enumerate()
            .map(|(j, y)| {
                let field = format!("ys[{j}]");
                if y.len() != x.dim() {
                    bail!("{field}: dimension {} does not match x (dimension {})", y.len(), x.dim());
                }
                vector(&field, y, mode)
            })
            .collect::<anyhow::Result<Vec<_>>>()?;
        let family = Family::with_field(x, ys, mode)?;

        let disk = match (self.gamma, self.gamma_high) {
            (None, None) => None,
            (Some(lo), Some(hi)) => Some(Disk::new(complex("gamma", lo)?, complex("Gamma", hi)?)),
            _ => bail!("gamma, Gamma: give both or neither"),
        };
        let coeffs = match &self.coeffs {
            None => None,
            Some(cs) => {
                if cs.len() != family.n() {
                    bail!("coeffs: expected {} entries (one per ys), found {}", family.n(), cs.len());
                }
                Some(
                    cs.iter()
                        .enumerate()
                        .map(|(k, &c)| complex(&format!("coeffs[{k}]"), c))
                        .collect::<anyhow::Result<Vec<_>>>()?,
                )
            }
        };
        if let Some(ps) = &self.p {
            if let Some(k) = ps.iter().position(|p| !(p.is_finite() && *p > 1.0)) {
                bail!("p[{k}]: must be a finite number greater than 1");
            }
        }
        Ok(Loaded { family, disk, coeffs, p: self.p.clone() })
    }

    pub fn read(path: &Path) -> anyhow::Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        serde_json::from_str(&text).map_err(|e| {
            anyhow::anyhow!("{}: line {}, column {}: {e}", path.display(), e.line(), e.column())
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }
}
