//! Modular parabolas `y = (x - a)^2 + b (mod p)` and the two uniqueness
//! facts the construction relies on: two points with distinct `x` fix the
//! parabola, and no chord of the parabola is a translate of another.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extensible::SquareSpec;
use crate::geometry::{direction, GridPoint};
use crate::numtheory::{is_prime, pow_mod};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ParabolaParams {
    p: u64,
    a: u64,
    b: u64,
}

impl ParabolaParams {
    pub fn new(p: u64, a: u64, b: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        for value in [a, b] {
            if value >= p {
                return Err(Error::ResidueOutOfRange { value, p });
            }
        }
        Ok(Self { p, a, b })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    /// `((x - a)^2 + b) mod p` for a residue `x`.
    pub fn eval(&self, x: u64) -> u64 {
        let d = (x % self.p + self.p - self.a) % self.p;
        ((d as u128 * d as u128 + self.b as u128) % self.p as u128) as u64
    }

    pub fn contains(&self, x: u64, y: u64) -> bool {
        x < self.p && y < self.p && self.eval(x) == y
    }
}

/// The `p` points of the parabola in `[0, p-1]^2`, ordered by `x`.
pub fn parabola_points(params: &ParabolaParams) -> Vec<GridPoint> {
    (0..params.p)
        .map(|x| GridPoint::new(x as i64, params.eval(x) as i64))
        .collect()
}

fn residue(v: i64, p: u64) -> u64 {
    v.rem_euclid(p as i64) as u64
}

/// The unique `(a, b)` with `(x_i - a)^2 + b = y_i (mod p)` for both points.
///
/// Subtracting the two equations leaves `2a(x1 - x0) = y0 - y1 + x1^2 - x0^2`,
/// which is solved for `a`; `b` then follows from either point.
pub fn fit_parabola(p: u64, p0: GridPoint, p1: GridPoint) -> Result<ParabolaParams> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p == 2 {
        return Err(Error::EvenModulus);
    }
    let (x0, y0) = (residue(p0.x, p), residue(p0.y, p));
    let (x1, y1) = (residue(p1.x, p), residue(p1.y, p));
    if x0 == x1 {
        return Err(Error::VerticalPair(p0.x));
    }
    let m = p as u128;
    let sq = |v: u64| (v as u128 * v as u128) % m;
    let rhs = (y0 as u128 + m - y1 as u128 + sq(x1) + m - sq(x0)) % m;
    let coeff = (2 * (x1 as u128 + m - x0 as u128)) % m;
    let inv = pow_mod(coeff as u64, p - 2, p) as u128;
    let a = (rhs * inv % m) as u64;
    let d = (x0 + p - a) % p;
    let b = ((y0 as u128 + m - sq(d)) % m) as u64;
    Ok(ParabolaParams { p, a, b })
}

/// True iff no two distinct chords of the parabola share both direction and
/// squared length, i.e. no chord is a translate of another.
pub fn unique_difference_property(params: &ParabolaParams) -> bool {
    let pts = parabola_points(params);
    let mut seen = HashSet::with_capacity(pts.len() * pts.len() / 2);
    for (i, &u) in pts.iter().enumerate() {
        for &v in &pts[i + 1..] {
            let dir = direction(u, v).expect("parabola has one point per column");
            let (dx, dy) = (v.x - u.x, v.y - u.y);
            if !seen.insert((dir, dx * dx + dy * dy)) {
                return false;
            }
        }
    }
    true
}

/// Maps the raw parabola into `square` by `(x, y) -> (left + x, top - y)`.
pub fn place_in_square(params: &ParabolaParams, square: &SquareSpec) -> Result<Vec<GridPoint>> {
    if params.p as i64 > square.side {
        return Err(Error::ParabolaTooLarge { p: params.p, side: square.side });
    }
    Ok(parabola_points(params)
        .into_iter()
        .map(|q| square.from_local(q))
        .collect())
}
