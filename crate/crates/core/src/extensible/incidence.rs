//! Red points, blue pairs and the per-parabola incidence tally.
//!
//! A red point of `Q_n` lies on a line through two accepted points of one
//! earlier square. A blue pair is two lattice points of `Q_n`, not both red,
//! on a common line with a single accepted point of an earlier square.

use std::collections::{HashMap, HashSet};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::square::{div_ceil, div_floor, Slope, SquareSpec};
use crate::gadgets::{fit_parabola, ParabolaParams};
use crate::geometry::{direction, lattice_y_at, line_through, GridPoint, LineKey};

pub type BluePair = (GridPoint, GridPoint);

fn ordered(u: GridPoint, v: GridPoint) -> BluePair {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Intersects `[lo, hi]` with the `t` satisfying `lo_v <= t * step <= hi_v`.
fn clamp_multiples(lo: i128, hi: i128, step: i128, lo_v: i128, hi_v: i128) -> (i128, i128) {
    match step.signum() {
        0 if lo_v <= 0 && 0 <= hi_v => (lo, hi),
        0 => (1, 0),
        1 => (lo.max(div_ceil(lo_v, step)), hi.min(div_floor(hi_v, step))),
        _ => (lo.max(div_ceil(-hi_v, -step)), hi.min(div_floor(-lo_v, -step))),
    }
}

/// Lattice points of `square` on `line`.
pub fn line_hits(line: &LineKey, square: &SquareSpec) -> Vec<GridPoint> {
    let (left, right, bottom, top) = (square.left(), square.right(), square.bottom(), square.top());
    if line.is_vertical() {
        // normalized vertical lines are x = c
        if !(left..=right).contains(&line.c) {
            return Vec::new();
        }
        return (bottom..=top).map(|y| GridPoint::new(line.c, y)).collect();
    }
    // Restrict to the columns where the line's height lies within the rows:
    // a*x = c - b*y for y in [bottom, top].
    let (a, b, c) = (line.a as i128, line.b as i128, line.c as i128);
    let (mut x_lo, mut x_hi) = (left as i128, right as i128);
    if a != 0 {
        let (e1, e2) = (c - b * bottom as i128, c - b * top as i128);
        let (e_lo, e_hi) = (e1.min(e2), e1.max(e2));
        (x_lo, x_hi) = clamp_multiples(x_lo, x_hi, a, e_lo, e_hi);
    }
    (x_lo..=x_hi)
        .filter_map(|x| {
            let x = x as i64;
            lattice_y_at(line, x)
                .y()
                .filter(|y| (bottom..=top).contains(y))
                .map(|y| GridPoint::new(x, y))
        })
        .collect()
}

/// Red points of `square` generated by pairs within each group of earlier
/// accepted points. Sorted.
pub fn red_points<'a, I>(groups: I, square: &SquareSpec) -> Vec<GridPoint>
where
    I: IntoIterator<Item = &'a [GridPoint]>,
{
    let mut red = HashSet::new();
    let mut lines = HashSet::new();
    for group in groups {
        for (i, &u) in group.iter().enumerate() {
            for &v in &group[i + 1..] {
                let line = line_through(u, v).expect("accepted points are distinct");
                if lines.insert(line) {
                    red.extend(line_hits(&line, square));
                }
            }
        }
    }
    let mut red: Vec<_> = red.into_iter().collect();
    red.sort_unstable();
    red
}

/// Lattice points of `square` (other than `s`) grouped by direction from `s`,
/// by scanning every cell. Reference path; quadratic in the side.
pub fn collinear_groups_scan(s: GridPoint, square: &SquareSpec) -> Vec<Vec<GridPoint>> {
    let mut buckets: HashMap<_, Vec<GridPoint>> = HashMap::new();
    for u in square.cells().filter(|&u| u != s) {
        buckets.entry(direction(s, u).expect("u != s")).or_default().push(u);
    }
    let mut groups: Vec<_> = buckets.into_values().filter(|g| g.len() >= 2).collect();
    for g in &mut groups {
        g.sort_unstable();
    }
    groups.sort_unstable();
    groups
}

/// Same groups as [`collinear_groups_scan`] for `s` strictly left of the
/// square, found by walking primitive directions `(q, r)` whose slope falls
/// between the extreme slopes from `s` to the square's corners.
pub fn collinear_groups_from_left(s: GridPoint, square: &SquareSpec) -> Vec<Vec<GridPoint>> {
    assert!(s.x < square.left(), "anchor must lie left of the square");
    let slopes = square
        .corners()
        .map(|k| Slope::new((k.y - s.y) as i128, (k.x - s.x) as i128));
    let lo = *slopes.iter().min().unwrap();
    let hi = *slopes.iter().max().unwrap();
    let (sx, sy) = (s.x as i128, s.y as i128);
    let (left, right) = (square.left() as i128, square.right() as i128);
    let (bottom, top) = (square.bottom() as i128, square.top() as i128);
    let mut groups = Vec::new();
    for q in 1..square.side as i128 {
        let r_lo = div_ceil(q * lo.numer(), *lo.denom());
        let r_hi = div_floor(q * hi.numer(), *hi.denom());
        for r in r_lo..=r_hi {
            if q.gcd(&r) != 1 {
                continue;
            }
            let t_lo = div_ceil(left - sx, q);
            let t_hi = div_floor(right - sx, q);
            let (t_lo, t_hi) = clamp_multiples(t_lo, t_hi, r, bottom - sy, top - sy);
            if t_hi - t_lo >= 1 {
                groups.push(
                    (t_lo..=t_hi)
                        .map(|t| GridPoint::new((sx + t * q) as i64, (sy + t * r) as i64))
                        .collect::<Vec<_>>(),
                );
            }
        }
    }
    groups.sort_unstable();
    groups
}

/// Blue pairs of `square` with respect to the earlier accepted `anchors`.
/// `red` must be sorted. Each pair is ordered and the list is sorted.
pub fn blue_pairs(anchors: &[GridPoint], red: &[GridPoint], square: &SquareSpec) -> Vec<BluePair> {
    let is_red = |u: &GridPoint| red.binary_search(u).is_ok();
    let mut pairs = HashSet::new();
    for &s in anchors {
        let groups = if s.x < square.left() {
            collinear_groups_from_left(s, square)
        } else {
            collinear_groups_scan(s, square)
        };
        for g in groups {
            for (i, &u) in g.iter().enumerate() {
                for &v in &g[i + 1..] {
                    if !(is_red(&u) && is_red(&v)) {
                        pairs.insert(ordered(u, v));
                    }
                }
            }
        }
    }
    let mut pairs: Vec<_> = pairs.into_iter().collect();
    pairs.sort_unstable();
    pairs
}

/// Incidences between candidate parabolas `(a, b)` in a square and the red
/// points and blue pairs that can actually land on one of them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IncidenceTally {
    pub p: u64,
    /// Row-major `p x p`, indexed by `a * p + b`.
    pub counts: Vec<u64>,
    pub red_total: u64,
    pub blue_total: u64,
}

impl IncidenceTally {
    pub fn count(&self, a: u64, b: u64) -> u64 {
        self.counts[(a * self.p + b) as usize]
    }

    pub fn sum(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// `p * red_total + blue_total`, which `sum()` must equal.
    pub fn expected_sum(&self) -> u64 {
        self.p * self.red_total + self.blue_total
    }
}

/// Each red point in the parabola box lies on exactly one parabola per `a`;
/// each blue pair in the box with distinct columns lies on exactly one
/// parabola. Anything outside the `p x p` box is skipped.
pub fn tally_incidences(
    red: &[GridPoint],
    blue: &[BluePair],
    p: u64,
    square: &SquareSpec,
) -> IncidenceTally {
    let mut counts = vec![0u64; (p * p) as usize];
    let mut red_total = 0;
    for &u in red {
        let Some((x, y)) = square.to_local(u, p) else { continue };
        red_total += 1;
        for a in 0..p {
            let d = (x + p - a) % p;
            let b = (y + p - (d * d) % p) % p;
            counts[(a * p + b) as usize] += 1;
        }
    }
    let mut blue_total = 0;
    for &(u, v) in blue {
        let (Some((x0, y0)), Some((x1, y1))) = (square.to_local(u, p), square.to_local(v, p)) else {
            continue;
        };
        if x0 == x1 {
            continue;
        }
        let local = |x: u64, y: u64| GridPoint::new(x as i64, y as i64);
        let Ok(params) = fit_parabola(p, local(x0, y0), local(x1, y1)) else { continue };
        blue_total += 1;
        counts[(params.a() * p + params.b()) as usize] += 1;
    }
    IncidenceTally { p, counts, red_total, blue_total }
}

/// The `(a, b)` with the fewest incidences, lexicographically first on ties.
pub fn select_params(tally: &IncidenceTally) -> ParabolaParams {
    let (idx, _) = tally
        .counts
        .iter()
        .enumerate()
        .min_by_key(|&(i, &c)| (c, i))
        .expect("tally is nonempty");
    let idx = idx as u64;
    ParabolaParams::new(tally.p, idx / tally.p, idx % tally.p).expect("tally modulus is prime")
}
