use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{cross, GridPoint};

/// Exact rational slope.
pub type Slope = Ratio<i128>;

/// Axis-parallel lattice square: columns `left..=left+side-1`, rows
/// `top-side+1..=top`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareSpec {
    pub n: u32,
    pub side: i64,
    pub top_left: GridPoint,
}

impl SquareSpec {
    pub fn new(n: u32, side: i64, top_left: GridPoint) -> Self {
        Self { n, side, top_left }
    }

    pub fn left(&self) -> i64 {
        self.top_left.x
    }

    pub fn right(&self) -> i64 {
        self.top_left.x + self.side - 1
    }

    pub fn top(&self) -> i64 {
        self.top_left.y
    }

    pub fn bottom(&self) -> i64 {
        self.top_left.y - self.side + 1
    }

    pub fn contains(&self, q: GridPoint) -> bool {
        (self.left()..=self.right()).contains(&q.x) && (self.bottom()..=self.top()).contains(&q.y)
    }

    /// `[top-left, top-right, bottom-left, bottom-right]`.
    pub fn corners(&self) -> [GridPoint; 4] {
        let (l, r, t, b) = (self.left(), self.right(), self.top(), self.bottom());
        [GridPoint::new(l, t), GridPoint::new(r, t), GridPoint::new(l, b), GridPoint::new(r, b)]
    }

    /// Local parabola frame to grid: down and right from the top-left corner.
    pub fn from_local(&self, q: GridPoint) -> GridPoint {
        GridPoint::new(self.left() + q.x, self.top() - q.y)
    }

    /// Grid to local frame, if the point falls in the `p x p` box hanging off
    /// the top-left corner.
    pub fn to_local(&self, q: GridPoint, p: u64) -> Option<(u64, u64)> {
        let (x, y) = (q.x - self.left(), self.top() - q.y);
        let p = p as i64;
        ((0..p).contains(&x) && (0..p).contains(&y)).then_some((x as u64, y as u64))
    }

    pub fn cells(&self) -> impl Iterator<Item = GridPoint> + '_ {
        (self.left()..=self.right())
            .flat_map(move |x| (self.bottom()..=self.top()).map(move |y| GridPoint::new(x, y)))
    }
}

/// `floor(v)` that tolerates `pow` landing a few ulps under an exact integer.
fn floor_snap(v: f64) -> i64 {
    let r = v.round();
    if (v - r).abs() <= 4.0 * f64::EPSILON * v.abs().max(1.0) {
        r as i64
    } else {
        v.floor() as i64
    }
}

/// Placement of the squares along `x / log^eps x`, without any validation of
/// `c` against `eps`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Layout {
    pub eps: f64,
    pub c: f64,
}

impl Layout {
    pub fn new(eps: f64, c: f64) -> Self {
        Self { eps, c }
    }

    /// `floor(2^n / (c * n^(1+eps)))`.
    pub fn side(&self, n: u32) -> i64 {
        let nf = n as f64;
        floor_snap(2f64.powi(n as i32) / (self.c * nf.powf(1.0 + self.eps)))
    }

    /// `floor(2^n / n^eps)`.
    pub fn top(&self, n: u32) -> i64 {
        floor_snap(2f64.powi(n as i32) / (n as f64).powf(self.eps))
    }

    pub fn square(&self, n: u32) -> Result<SquareSpec> {
        if n == 0 || n > 62 {
            return Err(Error::EmptySquare(n));
        }
        let side = self.side(n);
        if side < 1 {
            return Err(Error::EmptySquare(n));
        }
        Ok(SquareSpec::new(n, side, GridPoint::new(1i64 << n, self.top(n))))
    }

    pub fn is_nonempty(&self, n: u32) -> bool {
        self.square(n).is_ok()
    }
}

/// Parameters of one run of the extensible construction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConstructionConfig {
    pub eps: f64,
    pub c: f64,
    pub n_min: u32,
    pub n_max: u32,
}

/// Smallest side that still leaves room for a parabola with `p >= 5`.
pub const MIN_SIDE: i64 = 7;

/// Largest index whose square still fits below `2^21`.
pub const N_CAP: u32 = 20;

impl ConstructionConfig {
    /// Checks `0 < eps < 1` and `c >= 12/eps`, and picks `n_min` as the first
    /// index whose square has side at least [`MIN_SIDE`].
    pub fn new(eps: f64, c: f64, n_max: u32) -> Result<Self> {
        if !(eps > 0.0 && eps < 1.0) {
            return Err(Error::InvalidConfig(format!("eps = {eps} must lie in (0, 1)")));
        }
        if !(c.is_finite() && c >= 12.0 / eps - 1e-9) {
            return Err(Error::InvalidConfig(format!("c = {c} is below 12/eps = {}", 12.0 / eps)));
        }
        if n_max > N_CAP {
            return Err(Error::InvalidConfig(format!("n_max = {n_max} exceeds {N_CAP}")));
        }
        let layout = Layout::new(eps, c);
        let n_min = (1..=62)
            .find(|&n| layout.side(n) >= MIN_SIDE)
            .ok_or_else(|| Error::InvalidConfig("no square is large enough".into()))?;
        Ok(Self { eps, c, n_min, n_max })
    }

    /// Raises the first index; lowering it below the automatic choice is
    /// rejected.
    pub fn with_n_min(mut self, n_min: u32) -> Result<Self> {
        if n_min < self.n_min {
            return Err(Error::InvalidConfig(format!(
                "n_min = {n_min} is below the smallest usable index {}",
                self.n_min
            )));
        }
        self.n_min = n_min;
        Ok(self)
    }

    pub fn layout(&self) -> Layout {
        Layout::new(self.eps, self.c)
    }

    pub fn square_spec(&self, n: u32) -> Result<SquareSpec> {
        let sq = self.layout().square(n)?;
        if n < self.n_min || sq.side < MIN_SIDE {
            return Err(Error::SquareTooSmall { n, side: sq.side, n_min: self.n_min });
        }
        Ok(sq)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparationReport {
    pub holds: bool,
    pub triples_checked: usize,
    /// `(m, n, k)` with a line through `Q_m` and `Q_k` that meets `Q_n`.
    pub violations: Vec<(u32, u32, u32)>,
}

/// Whether every line through `outer_left` and `outer_right` misses `middle`.
///
/// The lines through two squares sweep the convex hull of their union, whose
/// boundary over the middle column range is made of corner-to-corner
/// segments. So the middle square misses every such line iff its bottom edge
/// lies strictly above all 16 corner lines, or its top edge strictly below.
pub fn square_avoids_lines(outer_left: &SquareSpec, middle: &SquareSpec, outer_right: &SquareSpec) -> bool {
    let [tl, tr, bl, br] = middle.corners();
    let (mut above, mut below) = (true, true);
    for a in outer_left.corners() {
        for b in outer_right.corners() {
            above &= cross(a, b, bl) > 0 && cross(a, b, br) > 0;
            below &= cross(a, b, tl) < 0 && cross(a, b, tr) < 0;
        }
    }
    above || below
}

/// Checks that no line meets three nonempty squares with indices in
/// `range`, over every triple `m < n < k`.
pub fn check_three_square_separation(layout: &Layout, range: std::ops::RangeInclusive<u32>) -> SeparationReport {
    let squares: Vec<SquareSpec> = range.filter_map(|n| layout.square(n).ok()).collect();
    let mut report = SeparationReport { holds: true, triples_checked: 0, violations: Vec::new() };
    for (i, qm) in squares.iter().enumerate() {
        for (j, qn) in squares.iter().enumerate().skip(i + 1) {
            for qk in &squares[j + 1..] {
                report.triples_checked += 1;
                if !square_avoids_lines(qm, qn, qk) {
                    report.violations.push((qm.n, qn.n, qk.n));
                }
            }
        }
    }
    report.holds = report.violations.is_empty();
    report
}

fn slope(a: GridPoint, b: GridPoint) -> Slope {
    Slope::new((b.y - a.y) as i128, (b.x - a.x) as i128)
}

/// Closed range of slopes of lines meeting both `Q_m` and `Q_n`:
/// from `A_m D_n` up to `D_m A_n`, with `A` the top-left and `D` the
/// bottom-right lattice corner.
pub fn slope_interval(layout: &Layout, m: u32, n: u32) -> Result<(Slope, Slope)> {
    if m >= n {
        return Err(Error::InvalidConfig(format!("slope interval needs m < n, got {m} >= {n}")));
    }
    let (qm, qn) = (layout.square(m)?, layout.square(n)?);
    let [a_m, _, _, d_m] = qm.corners();
    let [a_n, _, _, d_n] = qn.corners();
    Ok((slope(a_m, d_n), slope(d_m, a_n)))
}

/// `11 / (c * n^(1+eps))`.
pub fn width_bound(layout: &Layout, n: u32) -> f64 {
    11.0 / (layout.c * (n as f64).powf(1.0 + layout.eps))
}

/// Whether the slope interval of `(m, n)` is narrower than
/// `11 / (c n^(1+eps))`.
pub fn slope_interval_width_ok(layout: &Layout, m: u32, n: u32) -> Result<bool> {
    let (lo, hi) = slope_interval(layout, m, n)?;
    let width = hi - lo;
    Ok((*width.numer() as f64) < width_bound(layout, n) * (*width.denom() as f64))
}

/// Floor and ceiling of `num / den` for `den > 0`.
pub(crate) fn div_floor(num: i128, den: i128) -> i128 {
    Integer::div_floor(&num, &den)
}

pub(crate) fn div_ceil(num: i128, den: i128) -> i128 {
    -Integer::div_floor(&-num, &den)
}
