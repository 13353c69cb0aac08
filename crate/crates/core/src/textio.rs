//! The point-set text format.
//!
//! ```text
//! # optional comments
//! domain 2 0
//! 0 0
//! 0 1
//! ```
//!
//! The header names the signature (`domain <z> <n>`); every following line is
//! one point with exactly `z + n` decimal coordinates. Lines starting with `#`
//! and blank lines are skipped. Duplicate points are an error. Output is
//! byte-deterministic: points are emitted in canonical order.

use std::collections::HashSet;

use crate::domain::{DomainSignature, LatticePoint};
use crate::error::{Error, Result};
use crate::sets::PointSet;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses a point-set document.
pub fn parse_point_set(text: &str) -> Result<PointSet> {
    let mut sig: Option<DomainSignature> = None;
    let mut points: Vec<LatticePoint> = Vec::new();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        if sig.is_none() {
            if fields.next() != Some("domain") {
                return Err(parse_err(lineno, "expected header `domain <z> <n>`"));
            }
            let z: usize = fields
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| parse_err(lineno, "bad Z-coordinate count in header"))?;
            let n: usize = fields
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| parse_err(lineno, "bad N-coordinate count in header"))?;
            if fields.next().is_some() {
                return Err(parse_err(lineno, "trailing tokens after header"));
            }
            if z + n == 0 {
                return Err(parse_err(
                    lineno,
                    "domain must have at least one coordinate",
                ));
            }
            sig = Some(DomainSignature::new(z, n));
            continue;
        }
        let sig = sig.unwrap();
        let mut coords = Vec::with_capacity(sig.dims());
        for field in fields {
            let v: i64 = field
                .parse()
                .map_err(|_| parse_err(lineno, format!("bad coordinate `{field}`")))?;
            coords.push(v);
        }
        if coords.len() != sig.dims() {
            return Err(parse_err(
                lineno,
                format!(
                    "expected {} coordinates, found {}",
                    sig.dims(),
                    coords.len()
                ),
            ));
        }
        if !seen.insert(coords.clone()) {
            return Err(parse_err(lineno, "duplicate point"));
        }
        let point = LatticePoint::new(coords);
        sig.validate_point(&point)
            .map_err(|e| parse_err(lineno, e.to_string()))?;
        points.push(point);
    }

    let sig = sig.ok_or_else(|| parse_err(0, "missing `domain` header"))?;
    PointSet::new(sig, points)
}

/// Serializes a point set; byte-deterministic for equal sets.
pub fn write_point_set(set: &PointSet) -> Result<String> {
    if set.sig().dims() == 0 {
        return Err(Error::ZeroDimensional);
    }
    let mut out = String::new();
    out.push_str(&format!("domain {} {}\n", set.sig().z(), set.sig().n()));
    for p in set.iter() {
        out.push_str(&p.to_string());
        out.push('\n');
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point;

    #[test]
    fn round_trip_is_canonical() {
        let text = "# a square corner\ndomain 2 0\n1 0\n0 0\n\n0 1\n";
        let set = parse_point_set(text).unwrap();
        assert_eq!(set.len(), 3);
        let emitted = write_point_set(&set).unwrap();
        assert_eq!(emitted, "domain 2 0\n0 0\n0 1\n1 0\n");
        assert_eq!(parse_point_set(&emitted).unwrap(), set);
    }

    #[test]
    fn rejects_duplicates_and_arity_errors() {
        assert!(matches!(
            parse_point_set("domain 2 0\n0 0\n0 0\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_point_set("domain 2 0\n0\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_point_set("domain 1 1\n0 -2\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_point_set("0 0\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_point_set(""),
            Err(Error::Parse { line: 0, .. })
        ));
        assert!(matches!(
            parse_point_set("domain 0 0\n"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn mixed_domain_floors_checked() {
        let set = parse_point_set("domain 1 1\n-4 0\n-4 1\n").unwrap();
        assert_eq!(set.sig(), DomainSignature::new(1, 1));
        assert!(set.contains(&point![-4, 1]));
    }
}
