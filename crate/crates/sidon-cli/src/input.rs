//! Input file parsing: integer sets and rational point sets.
//!
//! One value (or point) per line; `#` starts a comment, blank lines are
//! skipped. Integers take an optional sign and arbitrary precision.
//! Point coordinates are whitespace-separated and each may be an integer,
//! a fraction `p/q`, or a decimal literal (parsed exactly, `1.25` = 5/4);
//! the first data line fixes the dimension. Duplicates are removed and
//! counted.

use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use sidon_core::{GeometryError, PointSet};

#[derive(thiserror::Error, Debug)]
pub enum InputError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("no values in input file")]
    EmptyFile,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

/// Integer set in first-seen order, plus the number of duplicates dropped.
pub fn parse_integers(path: &Path) -> Result<(Vec<BigInt>, usize), InputError> {
    let text = std::fs::read_to_string(path)?;
    let mut values = Vec::new();
    for (line, s) in data_lines(&text) {
        let v = BigInt::from_str(s).map_err(|e| InputError::Parse {
            line,
            msg: format!("bad integer {s:?}: {e}"),
        })?;
        values.push(v);
    }
    if values.is_empty() {
        return Err(InputError::EmptyFile);
    }
    let removed = dedup_in_order(&mut values);
    Ok((values, removed))
}

/// Rational point set, plus the number of duplicate points dropped.
pub fn parse_points(path: &Path) -> Result<(PointSet, usize), InputError> {
    let text = std::fs::read_to_string(path)?;
    let mut points: Vec<Vec<BigRational>> = Vec::new();
    let mut dim = None;
    for (line, s) in data_lines(&text) {
        let point: Vec<BigRational> = s
            .split_whitespace()
            .map(|field| {
                parse_rational(field).map_err(|msg| InputError::Parse {
                    line,
                    msg: format!("bad coordinate {field:?}: {msg}"),
                })
            })
            .collect::<Result<_, _>>()?;
        let expected = *dim.get_or_insert(point.len());
        if point.len() != expected {
            return Err(InputError::Parse {
                line,
                msg: format!("expected {expected} coordinates, got {}", point.len()),
            });
        }
        points.push(point);
    }
    if points.is_empty() {
        return Err(InputError::EmptyFile);
    }
    let removed = dedup_in_order(&mut points);
    match PointSet::new(points) {
        Ok(ps) => Ok((ps, removed)),
        Err(GeometryError::EmptyPointSet) => Err(InputError::EmptyFile),
        Err(e) => Err(InputError::Parse {
            line: 0,
            msg: e.to_string(),
        }),
    }
}

fn dedup_in_order<T: Clone + Ord>(values: &mut Vec<T>) -> usize {
    let before = values.len();
    let mut seen = std::collections::BTreeSet::new();
    values.retain(|v| seen.insert(v.clone()));
    before - values.len()
}

fn parse_rational(s: &str) -> Result<BigRational, String> {
    if let Some((p, q)) = s.split_once('/') {
        let num = BigInt::from_str(p).map_err(|e| e.to_string())?;
        let den = BigInt::from_str(q).map_err(|e| e.to_string())?;
        if den.is_zero() {
            return Err("zero denominator".into());
        }
        return Ok(BigRational::new(num, den));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err("malformed decimal".into());
        }
        let (sign, digits) = match int.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, int.strip_prefix('+').unwrap_or(int)),
        };
        let whole = if digits.is_empty() {
            BigInt::zero()
        } else {
            BigInt::from_str(digits).map_err(|e| e.to_string())?
        };
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let frac = BigInt::from_str(frac).map_err(|e| e.to_string())?;
        return Ok(BigRational::new((whole * &scale + frac) * sign, scale));
    }
    BigInt::from_str(s)
        .map(BigRational::from)
        .map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn write_temp(content: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(content.as_bytes()).unwrap();
        f
    }

    #[test]
    fn integers_parse_and_dedup() {
        let f = write_temp("3\n1\n2\n");
        let (v, removed) = parse_integers(f.path()).unwrap();
        assert_eq!(v, [3, 1, 2].map(BigInt::from).to_vec());
        assert_eq!(removed, 0);

        let f = write_temp("1\n1\n2\n");
        let (v, removed) = parse_integers(f.path()).unwrap();
        assert_eq!(v, [1, 2].map(BigInt::from).to_vec());
        assert_eq!(removed, 1);

        let f = write_temp("# header\n-5 # trailing\n\n99999999999999999999999999\n");
        let (v, _) = parse_integers(f.path()).unwrap();
        assert_eq!(v[0], BigInt::from(-5));
        assert_eq!(v[1].to_string(), "99999999999999999999999999");
    }

    #[test]
    fn integer_errors_carry_line_numbers() {
        let f = write_temp("1\ntwo\n3\n");
        match parse_integers(f.path()) {
            Err(InputError::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        let f = write_temp("# only comments\n");
        assert!(matches!(parse_integers(f.path()), Err(InputError::EmptyFile)));
    }

    #[test]
    fn points_parse_in_all_three_notations() {
        let f = write_temp("1/2 2/3\n0 0\n-1.25 4\n");
        let (ps, removed) = parse_points(f.path()).unwrap();
        assert_eq!(ps.dim(), 2);
        assert_eq!(ps.len(), 3);
        assert_eq!(removed, 0);
        let p = &ps.points()[2];
        assert_eq!(p[0], BigRational::new(BigInt::from(-5), BigInt::from(4)));
    }

    #[test]
    fn point_dimension_mismatch_is_reported() {
        let f = write_temp("1 2\n3\n");
        match parse_points(f.path()) {
            Err(InputError::Parse { line, msg }) => {
                assert_eq!(line, 2);
                assert!(msg.contains("expected 2"));
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn duplicate_points_are_counted() {
        let f = write_temp("1 2\n1 2\n0.5 0.5\n1/2 1/2\n");
        let (ps, removed) = parse_points(f.path()).unwrap();
        assert_eq!(ps.len(), 2);
        assert_eq!(removed, 2);
    }
}
