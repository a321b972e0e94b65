use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::incidence::{blue_pairs, red_points, select_params, tally_incidences, BluePair, IncidenceTally};
use super::square::{ConstructionConfig, SquareSpec};
use crate::error::{Error, Result};
use crate::gadgets::{place_in_square, ParabolaParams};
use crate::geometry::GridPoint;
use crate::numtheory::prev_prime;
use crate::verify::verify_fast;

/// Bookkeeping for one committed square.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SquareRecord {
    pub n: u32,
    pub square: SquareSpec,
    pub p: u64,
    pub a: u64,
    pub b: u64,
    /// Red points and blue pairs anywhere in the square.
    pub red_raw: u64,
    pub blue_raw: u64,
    /// Those that fall inside the parabola's `p x p` box.
    pub red_total: u64,
    pub blue_total: u64,
    pub tally_sum: u64,
    pub selected_count: u64,
    pub red_deleted: u64,
    pub blue_deleted: u64,
    pub kept: u64,
    /// Asymptotic upper bounds on red points and blue pairs, for comparison
    /// only; they are not expected to hold at small n.
    pub red_bound: f64,
    pub blue_bound: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CommittedSquare {
    pub record: SquareRecord,
    /// Accepted points of this square, sorted.
    pub points: Vec<GridPoint>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstructionState {
    pub config: ConstructionConfig,
    /// The accepted set, sorted.
    pub accepted: Vec<GridPoint>,
    pub squares: Vec<CommittedSquare>,
}

impl ConstructionState {
    pub fn new(config: ConstructionConfig) -> Self {
        Self { config, accepted: Vec::new(), squares: Vec::new() }
    }

    pub fn records(&self) -> impl Iterator<Item = &SquareRecord> {
        self.squares.iter().map(|s| &s.record)
    }
}

/// Red points of `Q_n` against every square already committed in `state`.
pub fn enumerate_red(state: &ConstructionState, square: &SquareSpec) -> Vec<GridPoint> {
    red_points(state.squares.iter().map(|s| s.points.as_slice()), square)
}

/// Blue pairs of `Q_n` against every accepted point so far.
pub fn enumerate_blue(state: &ConstructionState, square: &SquareSpec, red: &[GridPoint]) -> Vec<BluePair> {
    blue_pairs(&state.accepted, red, square)
}

/// Deletion outcome for one placed parabola.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pruned {
    pub kept: Vec<GridPoint>,
    pub red_deleted: u64,
    pub blue_deleted: u64,
}

/// Deletes the red points of `placed`, then hits every blue pair with both
/// ends still present by repeatedly removing the point on the most such
/// pairs (lexicographically smallest on ties).
pub fn prune(placed: &[GridPoint], red: &[GridPoint], blue: &[BluePair]) -> Pruned {
    let mut alive: BTreeMap<GridPoint, Vec<usize>> = BTreeMap::new();
    let mut red_deleted = 0;
    for &q in placed {
        if red.binary_search(&q).is_ok() {
            red_deleted += 1;
        } else {
            alive.insert(q, Vec::new());
        }
    }
    let mut live_pairs: Vec<BluePair> = Vec::new();
    for &(u, v) in blue {
        if alive.contains_key(&u) && alive.contains_key(&v) {
            let i = live_pairs.len();
            live_pairs.push((u, v));
            alive.get_mut(&u).unwrap().push(i);
            alive.get_mut(&v).unwrap().push(i);
        }
    }
    let mut hit = vec![false; live_pairs.len()];
    let mut blue_deleted = 0;
    loop {
        // BTreeMap iterates in point order, so the first maximum wins ties.
        let mut best: Option<(GridPoint, usize)> = None;
        for (&q, pairs) in &alive {
            let degree = pairs.iter().filter(|&&i| !hit[i]).count();
            if degree > 0 && best.is_none_or(|(_, d)| degree > d) {
                best = Some((q, degree));
            }
        }
        let Some((q, _)) = best else { break };
        for i in alive.remove(&q).unwrap() {
            hit[i] = true;
        }
        blue_deleted += 1;
    }
    Pruned { kept: alive.into_keys().collect(), red_deleted, blue_deleted }
}

fn merge_sorted(a: &[GridPoint], b: &[GridPoint]) -> Vec<GridPoint> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    out.extend_from_slice(a);
    out.extend_from_slice(b);
    out.sort_unstable();
    out
}

/// Everything computed for a square before any point is committed.
#[derive(Debug, Clone)]
pub struct SquareAnalysis {
    pub square: SquareSpec,
    pub p: u64,
    pub red: Vec<GridPoint>,
    pub blue: Vec<BluePair>,
    pub tally: IncidenceTally,
}

pub fn analyze_square(state: &ConstructionState, n: u32) -> Result<SquareAnalysis> {
    let square = state.config.square_spec(n)?;
    let p = prev_prime(square.side as u64).ok_or(Error::SquareTooSmall {
        n,
        side: square.side,
        n_min: state.config.n_min,
    })?;
    let red = enumerate_red(state, &square);
    let blue = enumerate_blue(state, &square, &red);
    let tally = tally_incidences(&red, &blue, p, &square);
    Ok(SquareAnalysis { square, p, red, blue, tally })
}

/// Places the chosen parabola, prunes it, and appends the survivors to the
/// accepted set. Fails if the result is not in general position.
pub fn prune_and_commit(
    state: &mut ConstructionState,
    analysis: &SquareAnalysis,
    params: ParabolaParams,
) -> Result<SquareRecord> {
    let square = analysis.square;
    let placed = place_in_square(&params, &square)?;
    let pruned = prune(&placed, &analysis.red, &analysis.blue);
    let accepted = merge_sorted(&state.accepted, &pruned.kept);
    if let Some(w) = verify_fast(&accepted) {
        return Err(Error::NotInGeneralPosition(w));
    }
    let (cfg, n) = (state.config, square.n);
    let nf = n as f64;
    let pow2 = 2f64.powi(n as i32);
    let record = SquareRecord {
        n,
        square,
        p: params.p(),
        a: params.a(),
        b: params.b(),
        red_raw: analysis.red.len() as u64,
        blue_raw: analysis.blue.len() as u64,
        red_total: analysis.tally.red_total,
        blue_total: analysis.tally.blue_total,
        tally_sum: analysis.tally.sum(),
        selected_count: analysis.tally.count(params.a(), params.b()),
        red_deleted: pruned.red_deleted,
        blue_deleted: pruned.blue_deleted,
        kept: pruned.kept.len() as u64,
        red_bound: 16.0 * pow2 * pow2 / (cfg.c.powi(3) * nf.powf(3.0 + 3.0 * cfg.eps)) * nf,
        blue_bound: 8.0 * pow2.powi(3) / (cfg.c.powi(4) * nf.powf(3.0 + 4.0 * cfg.eps)),
    };
    state.accepted = accepted;
    state.squares.push(CommittedSquare { record: record.clone(), points: pruned.kept });
    Ok(record)
}

/// Runs the construction from `n_min` to `n_max`.
pub fn build(cfg: ConstructionConfig) -> Result<ConstructionState> {
    let mut state = ConstructionState::new(cfg);
    for n in cfg.n_min..=cfg.n_max {
        let analysis = analyze_square(&state, n)?;
        let params = select_params(&analysis.tally);
        prune_and_commit(&mut state, &analysis, params)?;
    }
    Ok(state)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DensityRow {
    pub n: i64,
    pub count: u64,
    /// `count / (n / ln(n)^(1+eps))`.
    pub ratio: f64,
}

pub fn density_report(points: &[GridPoint], grid_sizes: &[i64], eps: f64) -> Vec<DensityRow> {
    grid_sizes
        .iter()
        .map(|&n| {
            let count = points
                .iter()
                .filter(|q| (1..=n).contains(&q.x) && (1..=n).contains(&q.y))
                .count() as u64;
            let nf = n as f64;
            let ratio = if n >= 1 { count as f64 * nf.ln().powf(1.0 + eps) / nf } else { 0.0 };
            DensityRow { n, count, ratio }
        })
        .collect()
}
