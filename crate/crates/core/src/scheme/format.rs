//! Line-oriented scheme files.
//!
//! ```text
//! # comment
//! n 2
//! point 1 0 0 mult 2
//! point 1 1/2 0 mult 1
//! ```

use std::fmt::Write;

use num_bigint::BigInt;

use super::{FatPointScheme, ProjectivePoint};
use crate::error::{Error, Result};
use crate::polyring::Rational;

fn parse_rational(tok: &str, line: usize) -> Result<Rational> {
    let bad = || Error::SchemeFormat { line, message: format!("invalid rational '{}'", tok) };
    match tok.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.parse().map_err(|_| bad())?;
            let q: BigInt = q.parse().map_err(|_| bad())?;
            if q <= BigInt::from(0) {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(tok.parse().map_err(|_| bad())?)),
    }
}

/// Parses a scheme file.
pub fn parse_scheme(text: &str) -> Result<FatPointScheme> {
    let mut n: Option<usize> = None;
    let mut points = Vec::new();
    let mut mults = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = content.split_whitespace().collect();
        if toks.is_empty() {
            continue;
        }
        let err = |message: String| Error::SchemeFormat { line, message };
        match (toks[0], n) {
            ("n", None) => {
                if toks.len() != 2 {
                    return Err(err("expected 'n <dimension>'".into()));
                }
                let v: usize = toks[1].parse().map_err(|_| err(format!("invalid dimension '{}'", toks[1])))?;
                if v == 0 {
                    return Err(err("dimension must be positive".into()));
                }
                n = Some(v);
            }
            ("n", Some(_)) => return Err(err("dimension given twice".into())),
            ("point", None) => return Err(err("'n <dimension>' must come first".into())),
            ("point", Some(dim)) => {
                if toks.len() != dim + 4 || toks[dim + 2] != "mult" {
                    return Err(err(format!("expected 'point' with {} coordinates then 'mult <m>'", dim + 1)));
                }
                let coords = toks[1..dim + 2].iter().map(|t| parse_rational(t, line)).collect::<Result<Vec<_>>>()?;
                let m: u32 =
                    toks[dim + 3].parse().map_err(|_| err(format!("invalid multiplicity '{}'", toks[dim + 3])))?;
                if m == 0 {
                    return Err(err("multiplicity must be positive".into()));
                }
                let p = ProjectivePoint::new(coords).map_err(|e| err(e.to_string()))?;
                if points.contains(&p) {
                    return Err(err(format!("point {} repeated", p)));
                }
                points.push(p);
                mults.push(m);
            }
            (other, _) => return Err(err(format!("unknown directive '{}'", other))),
        }
    }
    let n = n.ok_or(Error::SchemeFormat { line: 1, message: "missing 'n <dimension>'".into() })?;
    FatPointScheme::new(n, points, mults)
}

/// Canonical text form; `parse_scheme` inverts it exactly.
pub fn print_scheme(w: &FatPointScheme) -> String {
    let mut out = String::new();
    writeln!(out, "n {}", w.ambient_dimension()).unwrap();
    for (p, m) in w.points().iter().zip(w.multiplicities()) {
        write!(out, "point").unwrap();
        for c in p.coordinates() {
            write!(out, " {}", c).unwrap();
        }
        writeln!(out, " mult {}", m).unwrap();
    }
    out
}
