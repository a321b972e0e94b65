//! General-position checks.
//!
//! Two engines answer the same question: `verify_brute` walks every triple
//! and serves as the reference; `verify_fast` buckets directions per anchor
//! and runs in quadratic time. Both treat their input as a set.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{collinear, direction, GridPoint, ReducedDirection};

/// Three pairwise distinct collinear points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollinearWitness {
    pub a: GridPoint,
    pub b: GridPoint,
    pub c: GridPoint,
}

impl fmt::Display for CollinearWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.a, self.b, self.c)
    }
}

fn sorted_set(points: &[GridPoint]) -> Vec<GridPoint> {
    let mut v = points.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

/// First collinear triple in lexicographic order of `(i, j, k)` over the
/// sorted point set.
pub fn verify_brute(points: &[GridPoint]) -> Option<CollinearWitness> {
    let pts = sorted_set(points);
    let k = pts.len();
    for i in 0..k {
        for j in i + 1..k {
            for l in j + 1..k {
                if collinear(pts[i], pts[j], pts[l]) {
                    return Some(CollinearWitness { a: pts[i], b: pts[j], c: pts[l] });
                }
            }
        }
    }
    None
}

/// Looks for two later points sharing a direction from `anchor`.
fn anchor_witness(pts: &[GridPoint], i: usize, dirs: &mut Vec<(ReducedDirection, usize)>) -> Option<CollinearWitness> {
    let anchor = pts[i];
    dirs.clear();
    dirs.extend(
        pts[i + 1..]
            .iter()
            .enumerate()
            .map(|(off, &q)| (direction(anchor, q).expect("points are distinct"), i + 1 + off)),
    );
    dirs.sort_unstable();
    dirs.windows(2)
        .find(|w| w[0].0 == w[1].0)
        .map(|w| CollinearWitness { a: anchor, b: pts[w[0].1], c: pts[w[1].1] })
}

/// Quadratic verifier. Anchors are processed in lexicographic order and the
/// witness from the smallest offending anchor is returned, so the result
/// does not depend on the thread count.
pub fn verify_fast(points: &[GridPoint]) -> Option<CollinearWitness> {
    let pts = sorted_set(points);
    if pts.len() < 3 {
        return None;
    }
    // Small inputs are not worth the scheduling overhead.
    if pts.len() < 512 {
        let mut dirs = Vec::with_capacity(pts.len());
        return (0..pts.len() - 2).find_map(|i| anchor_witness(&pts, i, &mut dirs));
    }
    (0..pts.len() - 2)
        .into_par_iter()
        .map_init(Vec::new, |dirs, i| anchor_witness(&pts, i, dirs))
        .find_first(Option::is_some)
        .flatten()
}

/// Closed axis-parallel box `[x_min, x_max] x [y_min, y_max]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Region {
    pub x_min: i64,
    pub x_max: i64,
    pub y_min: i64,
    pub y_max: i64,
}

impl Region {
    pub fn new(x_min: i64, x_max: i64, y_min: i64, y_max: i64) -> Self {
        Self { x_min, x_max, y_min, y_max }
    }

    /// `[lo, hi]^2`.
    pub fn square(lo: i64, hi: i64) -> Self {
        Self::new(lo, hi, lo, hi)
    }

    pub fn contains(&self, p: GridPoint) -> bool {
        (self.x_min..=self.x_max).contains(&p.x) && (self.y_min..=self.y_max).contains(&p.y)
    }

    pub fn cells(&self) -> impl Iterator<Item = GridPoint> + '_ {
        (self.x_min..=self.x_max)
            .flat_map(move |x| (self.y_min..=self.y_max).map(move |y| GridPoint::new(x, y)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Saturation {
    pub saturated: bool,
    /// Free cells whose addition keeps general position, in lexicographic order.
    pub addable: Vec<GridPoint>,
}

/// Checks whether any cell of `region` can still be added to `points`.
pub fn is_saturated(points: &[GridPoint], region: Region) -> Result<Saturation> {
    let pts = sorted_set(points);
    if let Some(w) = verify_fast(&pts) {
        return Err(Error::NotInGeneralPosition(w));
    }
    let mut dirs: Vec<ReducedDirection> = Vec::with_capacity(pts.len());
    let addable: Vec<GridPoint> = region
        .cells()
        .filter(|cell| pts.binary_search(cell).is_err())
        .filter(|&cell| {
            dirs.clear();
            dirs.extend(pts.iter().map(|&p| direction(cell, p).expect("cell is free")));
            dirs.sort_unstable();
            dirs.windows(2).all(|w| w[0] != w[1])
        })
        .collect();
    Ok(Saturation { saturated: addable.is_empty(), addable })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[(i64, i64)]) -> Vec<GridPoint> {
        v.iter().map(|&p| p.into()).collect()
    }

    #[test]
    fn diagonal_triple_is_caught() {
        let p = pts(&[(0, 0), (1, 1), (2, 2)]);
        let w = verify_brute(&p).unwrap();
        assert_eq!((w.a, w.b, w.c), (p[0], p[1], p[2]));
        assert!(verify_fast(&p).is_some());
    }

    #[test]
    fn erdos_parabola_mod_5() {
        let p = pts(&[(0, 0), (1, 1), (2, 4), (3, 4), (4, 1)]);
        assert_eq!(verify_brute(&p), None);
        assert_eq!(verify_fast(&p), None);
    }

    #[test]
    fn tiny_sets() {
        assert_eq!(verify_brute(&[]), None);
        assert_eq!(verify_fast(&[]), None);
        assert_eq!(verify_fast(&pts(&[(1, 2), (3, 4)])), None);
    }

    #[test]
    fn duplicates_collapse() {
        let p = pts(&[(0, 0), (0, 0), (1, 1)]);
        assert_eq!(verify_brute(&p), None);
        assert_eq!(verify_fast(&p), None);
    }

    #[test]
    fn fast_witness_is_collinear_and_distinct() {
        let p = pts(&[(0, 0), (5, 1), (3, 7), (10, 2), (4, 4)]);
        let w = verify_fast(&p).unwrap();
        assert!(collinear(w.a, w.b, w.c));
        assert!(w.a != w.b && w.b != w.c && w.a != w.c);
    }

    #[test]
    fn full_two_by_two_is_saturated() {
        let p = pts(&[(1, 1), (1, 2), (2, 1), (2, 2)]);
        let s = is_saturated(&p, Region::square(1, 2)).unwrap();
        assert!(s.saturated);
        assert!(s.addable.is_empty());
    }

    #[test]
    fn empty_set_everything_addable() {
        let s = is_saturated(&[], Region::square(1, 3)).unwrap();
        assert!(!s.saturated);
        assert_eq!(s.addable.len(), 9);
    }

    #[test]
    fn single_point_three_addable() {
        let s = is_saturated(&pts(&[(1, 1)]), Region::square(1, 2)).unwrap();
        assert!(!s.saturated);
        assert_eq!(s.addable, pts(&[(1, 2), (2, 1), (2, 2)]));
    }

    #[test]
    fn blocked_cells_are_not_addable() {
        // (1,1),(2,2) blocks (3,3)
        let s = is_saturated(&pts(&[(1, 1), (2, 2)]), Region::square(1, 3)).unwrap();
        assert!(!s.addable.contains(&GridPoint::new(3, 3)));
        assert_eq!(s.addable.len(), 6);
    }

    #[test]
    fn saturation_rejects_collinear_input() {
        let e = is_saturated(&pts(&[(1, 1), (2, 2), (3, 3)]), Region::square(1, 3)).unwrap_err();
        assert!(matches!(e, Error::NotInGeneralPosition(_)));
    }
}
