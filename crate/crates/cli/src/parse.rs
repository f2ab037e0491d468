//! Flag value parsers.

use bessel_core::harness::IntRange;
use bessel_core::Complex;

/// Parses `a`, `bi`, `a+bi`, `a-bi`, `i`, `-i` (exponents allowed, spaces ignored).
pub fn parse_complex(s: &str) -> Result<Complex, String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err("empty complex number".into());
    }
    let bad = || format!("cannot parse {s:?} as a complex number (expected a+bi)");
    let z = match t.strip_suffix('i') {
        None => Complex::new(t.parse::<f64>().map_err(|_| bad())?, 0.0),
        Some(body) => split_imaginary(body).ok_or_else(bad)?,
    };
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(format!("{s:?} is not finite"))
    }
}

/// `body` is everything before the trailing `i`.
fn split_imaginary(body: &str) -> Option<Complex> {
    // split before the last sign that is not the sign of an exponent or the leading sign
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        v => v.parse::<f64>().ok()?,
    };
    Some(Complex::new(re.parse::<f64>().ok()?, im))
}

/// Parses `lo..hi` (inclusive) or a single value.
pub fn parse_range(s: &str) -> Result<IntRange, String> {
    let num = |v: &str| v.trim().parse::<usize>().map_err(|_| format!("invalid range bound {v:?}"));
    let r = match s.split_once("..") {
        Some((lo, hi)) => IntRange::new(num(lo)?, num(hi.strip_prefix('=').unwrap_or(hi))?),
        None => {
            let v = num(s)?;
            IntRange::new(v, v)
        }
    };
    if r.min == 0 || r.min > r.max {
        return Err(format!("range {s:?} must satisfy 1 <= min <= max"));
    }
    Ok(r)
}
