//! Tab-separated point lists: one `x<TAB>y` per line, `#` comments allowed.

use std::collections::HashSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::geometry::GridPoint;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: expected `x<TAB>y`, got {text:?}")]
    Malformed { line: usize, text: String },
    #[error("line {line}: duplicate point {point}")]
    Duplicate { line: usize, point: GridPoint },
}

pub fn parse(text: &str) -> Result<Vec<GridPoint>, ParseError> {
    let mut seen = HashSet::new();
    let mut points = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim_end_matches('\r');
        if line.trim().is_empty() || line.trim_start().starts_with('#') {
            continue;
        }
        let malformed = || ParseError::Malformed { line: i + 1, text: line.to_string() };
        let mut fields = line.split('\t');
        let (Some(x), Some(y), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(malformed());
        };
        let x: i64 = x.trim().parse().map_err(|_| malformed())?;
        let y: i64 = y.trim().parse().map_err(|_| malformed())?;
        let point = GridPoint::new(x, y);
        if !seen.insert(point) {
            return Err(ParseError::Duplicate { line: i + 1, point });
        }
        points.push(point);
    }
    Ok(points)
}

pub fn emit(points: &[GridPoint]) -> String {
    let mut out = String::with_capacity(points.len() * 12);
    for q in points {
        writeln!(out, "{}\t{}", q.x, q.y).unwrap();
    }
    out
}
