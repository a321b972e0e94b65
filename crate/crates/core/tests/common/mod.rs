#![allow(dead_code)]

use std::collections::HashSet;

use nothree::GridPoint;
use num_integer::Integer;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type RngT = ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `k` distinct points drawn uniformly from `[lo, hi]^2`.
pub fn random_set(rng: &mut impl Rng, k: usize, lo: i64, hi: i64) -> Vec<GridPoint> {
    let mut seen = HashSet::new();
    while seen.len() < k {
        seen.insert(GridPoint::new(rng.gen_range(lo..=hi), rng.gen_range(lo..=hi)));
    }
    seen.into_iter().collect()
}

/// Collinearity test that shares no code with the library: for every point,
/// hash the primitive direction to every other point up to sign.
pub fn in_general_position(points: &[GridPoint]) -> bool {
    let pts: Vec<GridPoint> = points.iter().copied().collect::<HashSet<_>>().into_iter().collect();
    let mut dirs = HashSet::with_capacity(pts.len());
    for &p in &pts {
        dirs.clear();
        for &q in &pts {
            if p == q {
                continue;
            }
            let (mut dx, mut dy) = (q.x - p.x, q.y - p.y);
            let g = dx.gcd(&dy);
            dx /= g;
            dy /= g;
            if dx < 0 || (dx == 0 && dy < 0) {
                dx = -dx;
                dy = -dy;
            }
            if !dirs.insert((dx, dy)) {
                return false;
            }
        }
    }
    true
}

/// Triple-loop check written against plain tuples.
pub fn has_collinear_triple(points: &[GridPoint]) -> bool {
    let v: Vec<(i128, i128)> = points.iter().map(|p| (p.x as i128, p.y as i128)).collect();
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            for k in j + 1..v.len() {
                let (a, b, c) = (v[i], v[j], v[k]);
                if (b.0 - a.0) * (c.1 - a.1) == (b.1 - a.1) * (c.0 - a.0) {
                    return true;
                }
            }
        }
    }
    false
}

pub fn primes_up_to(n: u64) -> Vec<u64> {
    let n = n as usize;
    let mut sieve = vec![true; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if sieve[i] {
            out.push(i as u64);
            for j in (i * i..=n).step_by(i) {
                sieve[j] = false;
            }
        }
    }
    out
}
