//! Plain-text formats.
//!
//! A complex file lists one face per line as whitespace-separated vertex
//! labels; the complex is the downward closure. A cochain file starts with
//! `dim <i>` and then lists the `i`-faces of its support. In every format `#`
//! starts a comment and blank lines are skipped.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::applications::SignMatrix;
use crate::cochain::Cochain;
use crate::complex::{Complex, Face, Vertex};
use crate::error::{Error, Result};
use crate::linalg::Rational;

/// Non-empty lines with comments removed, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(k, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((k + 1, line))
    })
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_face(line: usize, s: &str) -> Result<Face> {
    let vertices = s
        .split_whitespace()
        .map(|tok| tok.parse::<Vertex>().map_err(|_| parse_err(line, format!("bad vertex label {tok:?}"))))
        .collect::<Result<Vec<_>>>()?;
    Face::new(vertices).map_err(|e| parse_err(line, e.to_string()))
}

pub fn parse_complex(text: &str) -> Result<Complex> {
    let faces = content_lines(text).map(|(line, s)| parse_face(line, s).map(|f| f.vertices().to_vec())).collect::<Result<Vec<_>>>()?;
    Complex::from_maximal_faces(faces)
}

/// Maximal faces, by dimension and then lexicographically.
pub fn serialize_complex(x: &Complex) -> String {
    let mut out = String::new();
    for face in x.maximal_faces() {
        writeln!(out, "{face}").expect("writing to a String");
    }
    out
}

/// Reads a cochain on `x`. Listing a face twice is an error.
pub fn parse_cochain(text: &str, x: &Complex) -> Result<Cochain> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or_else(|| parse_err(1, "missing \"dim <i>\" header"))?;
    let dim = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["dim", i] => i.parse::<isize>().map_err(|_| parse_err(line, format!("bad dimension {i:?}")))?,
        _ => return Err(parse_err(line, "expected \"dim <i>\"")),
    };
    let mut seen = HashSet::new();
    let mut faces = Vec::new();
    for (line, s) in lines {
        let face = parse_face(line, s)?;
        if face.dim() != dim {
            return Err(parse_err(line, format!("face {face} does not have dimension {dim}")));
        }
        if !seen.insert(face.clone()) {
            return Err(parse_err(line, format!("face {face} listed twice")));
        }
        faces.push(face);
    }
    Cochain::from_faces(x, dim, &faces)
}

pub fn serialize_cochain(x: &Complex, f: &Cochain) -> String {
    let mut out = format!("dim {}\n", f.dim());
    for face in f.faces(x) {
        writeln!(out, "{face}").expect("writing to a String");
    }
    out
}

/// One matrix row per line, entries `1` or `-1`.
pub fn parse_sign_matrix(text: &str) -> Result<SignMatrix> {
    let rows = content_lines(text)
        .map(|(line, s)| {
            s.split_whitespace()
                .map(|tok| tok.parse::<i64>().map_err(|_| parse_err(line, format!("bad entry {tok:?}"))))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    SignMatrix::new(&rows)
}

/// Accepts `p/q`, a decimal such as `0.25`, or an integer.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || parse_err(1, format!("bad rational {s:?}"));
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let num: i64 = num.trim().parse().map_err(|_| bad())?;
        let den: i64 = den.trim().parse().map_err(|_| bad())?;
        if den == 0 {
            return Err(bad());
        }
        return Ok(Rational::new(num, den));
    }
    let (whole, frac) = s.split_once('.').unwrap_or((s, ""));
    if frac.len() > 18 || !frac.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let negative = whole.starts_with('-');
    let whole: i64 = match whole.trim_start_matches(['-', '+']) {
        "" if !frac.is_empty() => 0,
        w if w.bytes().all(|b| b.is_ascii_digit()) => w.parse().map_err(|_| bad())?,
        _ => return Err(bad()),
    };
    let scale = 10i64.pow(frac.len() as u32);
    let frac: i64 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| bad())? };
    let magnitude = whole.checked_mul(scale).and_then(|w| w.checked_add(frac)).ok_or_else(bad)?;
    Ok(Rational::new(if negative { -magnitude } else { magnitude }, scale))
}
