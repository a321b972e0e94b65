//! Exact integer primitives: lattice points, reduced directions and
//! canonical lines.
//!
//! Nothing in here touches floating point. Cross products are evaluated in
//! `i128`, which is ample for coordinates that fit in `i64` halves; the
//! constructions in this crate stay below `2^41`.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A lattice point. Ordering is lexicographic: by `x`, then by `y`.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize,
)]
pub struct GridPoint {
    pub x: i64,
    pub y: i64,
}

impl GridPoint {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }
}

impl From<(i64, i64)> for GridPoint {
    fn from((x, y): (i64, i64)) -> Self {
        Self { x, y }
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// `(q - p) x (r - p)`.
#[inline]
pub fn cross(p: GridPoint, q: GridPoint, r: GridPoint) -> i128 {
    let (ux, uy) = (q.x as i128 - p.x as i128, q.y as i128 - p.y as i128);
    let (vx, vy) = (r.x as i128 - p.x as i128, r.y as i128 - p.y as i128);
    ux * vy - uy * vx
}

/// True iff the three points lie on one line. Coincident points count as
/// collinear.
#[inline]
pub fn collinear(p: GridPoint, q: GridPoint, r: GridPoint) -> bool {
    cross(p, q, r) == 0
}

/// Primitive direction vector with `dx > 0`, or `(0, 1)` for vertical
/// segments. Parallel segments share the same `ReducedDirection`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ReducedDirection {
    pub dx: i64,
    pub dy: i64,
}

impl ReducedDirection {
    /// Normalizes an arbitrary nonzero vector.
    pub fn from_vector(dx: i64, dy: i64) -> Option<Self> {
        if dx == 0 && dy == 0 {
            return None;
        }
        let g = dx.gcd(&dy);
        let (mut dx, mut dy) = (dx / g, dy / g);
        if dx < 0 || (dx == 0 && dy < 0) {
            dx = -dx;
            dy = -dy;
        }
        Some(Self { dx, dy })
    }
}

/// Canonical direction of the segment `pq`, independent of argument order.
pub fn direction(p: GridPoint, q: GridPoint) -> Result<ReducedDirection> {
    let dx = q.x.checked_sub(p.x).ok_or(Error::Overflow)?;
    let dy = q.y.checked_sub(p.y).ok_or(Error::Overflow)?;
    ReducedDirection::from_vector(dx, dy).ok_or(Error::DegenerateDirection(p))
}

/// The line `a*x + b*y = c`, normalized so that `gcd(|a|, |b|, |c|) = 1`
/// and the first nonzero of `(a, b)` is positive. Equal keys mean equal
/// lines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LineKey {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl LineKey {
    pub fn is_vertical(&self) -> bool {
        self.b == 0
    }

    pub fn contains(&self, p: GridPoint) -> bool {
        self.a as i128 * p.x as i128 + self.b as i128 * p.y as i128 == self.c as i128
    }
}

impl fmt::Display for LineKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x + {}y = {}", self.a, self.b, self.c)
    }
}

pub fn line_through(p: GridPoint, q: GridPoint) -> Result<LineKey> {
    // gcd(a, b) divides c for a line through lattice points, so reducing by
    // the direction's gcd already makes the triple primitive.
    let d = direction(p, q)?;
    let (a, b) = (d.dy, -d.dx);
    let (a, b) = if a < 0 || (a == 0 && b < 0) { (-a, -b) } else { (a, b) };
    let c = a as i128 * p.x as i128 + b as i128 * p.y as i128;
    let c = i64::try_from(c).map_err(|_| Error::Overflow)?;
    Ok(LineKey { a, b, c })
}

/// Where a line meets a lattice column.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColumnHit {
    /// The intersection is not a lattice point (or a vertical line elsewhere).
    Empty,
    At(i64),
    /// The line is the column itself.
    WholeColumn,
}

impl ColumnHit {
    pub fn y(self) -> Option<i64> {
        match self {
            ColumnHit::At(y) => Some(y),
            _ => None,
        }
    }
}

pub fn lattice_y_at(line: &LineKey, x: i64) -> ColumnHit {
    if line.b == 0 {
        // a = 1 after normalization
        return if line.c as i128 == line.a as i128 * x as i128 {
            ColumnHit::WholeColumn
        } else {
            ColumnHit::Empty
        };
    }
    let num = line.c as i128 - line.a as i128 * x as i128;
    let den = line.b as i128;
    if num % den != 0 {
        return ColumnHit::Empty;
    }
    match i64::try_from(num / den) {
        Ok(y) => ColumnHit::At(y),
        Err(_) => ColumnHit::Empty,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64) -> GridPoint {
        GridPoint::new(x, y)
    }

    #[test]
    fn collinear_examples() {
        assert!(collinear(pt(0, 0), pt(1, 1), pt(2, 2)));
        assert!(!collinear(pt(0, 0), pt(1, 1), pt(2, 4)));
        assert!(!collinear(pt(1, 1), pt(2, 1), pt(3, 2)));
        assert!(collinear(pt(5, 5), pt(5, 5), pt(9, -3)));
    }

    #[test]
    fn direction_examples() {
        assert_eq!(direction(pt(0, 0), pt(2, 4)).unwrap(), ReducedDirection { dx: 1, dy: 2 });
        assert_eq!(direction(pt(3, 5), pt(3, 9)).unwrap(), ReducedDirection { dx: 0, dy: 1 });
        assert_eq!(direction(pt(4, 2), pt(0, 0)).unwrap(), ReducedDirection { dx: 2, dy: 1 });
        assert_eq!(direction(pt(3, 9), pt(3, 5)).unwrap(), ReducedDirection { dx: 0, dy: 1 });
        assert_eq!(direction(pt(0, 0), pt(-3, 0)).unwrap(), ReducedDirection { dx: 1, dy: 0 });
        assert!(matches!(
            direction(pt(1, 1), pt(1, 1)),
            Err(Error::DegenerateDirection(_))
        ));
    }

    #[test]
    fn line_examples() {
        let l = line_through(pt(0, 0), pt(1, 1)).unwrap();
        assert_eq!((l.a, l.b, l.c), (1, -1, 0));
        let l = line_through(pt(2, 7), pt(5, 7)).unwrap();
        assert_eq!((l.a, l.b, l.c), (0, 1, 7));
        let l = line_through(pt(3, 0), pt(3, 4)).unwrap();
        assert_eq!((l.a, l.b, l.c), (1, 0, 3));
        assert!(line_through(pt(3, 0), pt(3, 0)).is_err());
    }

    #[test]
    fn lattice_y_examples() {
        let diag = LineKey { a: 1, b: -1, c: 0 };
        assert_eq!(lattice_y_at(&diag, 7), ColumnHit::At(7));
        let half = LineKey { a: 1, b: -2, c: 0 };
        assert_eq!(lattice_y_at(&half, 3), ColumnHit::Empty);
        assert_eq!(lattice_y_at(&half, 4), ColumnHit::At(2));
        let horiz = LineKey { a: 0, b: 1, c: 7 };
        assert_eq!(lattice_y_at(&horiz, 100), ColumnHit::At(7));
        let vert = LineKey { a: 1, b: 0, c: 3 };
        assert_eq!(lattice_y_at(&vert, 3), ColumnHit::WholeColumn);
        assert_eq!(lattice_y_at(&vert, 4), ColumnHit::Empty);
    }
}
