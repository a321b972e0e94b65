mod common;

use nothree::extensible::{
    analyze_square, build, prune_and_commit, select_params, slope_interval, ConstructionConfig, ConstructionState,
};
use nothree::gadgets::{place_in_square, ParabolaParams};
use nothree::{collinear, verify_fast, GridPoint};
use num_rational::Ratio;

/// Replays the construction square by square, checking every intermediate
/// product against a direct scan of the square's cells.
#[test]
fn red_blue_and_tally_match_direct_scans() {
    let cfg = ConstructionConfig::new(0.5, 24.0, 16).unwrap();
    let mut state = ConstructionState::new(cfg);
    for n in cfg.n_min..=cfg.n_max {
        let analysis = analyze_square(&state, n).unwrap();
        let sq = analysis.square;
        let cells: Vec<GridPoint> = sq.cells().collect();

        let mut red: Vec<GridPoint> = cells
            .iter()
            .copied()
            .filter(|&u| {
                state.squares.iter().any(|s| {
                    let pts = &s.points;
                    (0..pts.len()).any(|i| pts[i + 1..].iter().any(|&b| collinear(pts[i], b, u)))
                })
            })
            .collect();
        red.sort_unstable();
        assert_eq!(analysis.red, red, "red points of square {n}");

        let mut blue = Vec::new();
        for (i, &u) in cells.iter().enumerate() {
            for &v in &cells[i + 1..] {
                let both_red = red.binary_search(&u).is_ok() && red.binary_search(&v).is_ok();
                if !both_red && state.accepted.iter().any(|&s| collinear(s, u, v)) {
                    blue.push((u.min(v), u.max(v)));
                }
            }
        }
        blue.sort_unstable();
        assert_eq!(analysis.blue, blue, "blue pairs of square {n}");

        let p = analysis.p;
        for a in 0..p {
            for b in 0..p {
                let params = ParabolaParams::new(p, a, b).unwrap();
                let on = place_in_square(&params, &sq).unwrap();
                let hit = |u: &GridPoint| on.binary_search(u).is_ok();
                let reds = red.iter().filter(|u| hit(u)).count() as u64;
                let blues = blue.iter().filter(|(u, v)| hit(u) && hit(v)).count() as u64;
                assert_eq!(analysis.tally.count(a, b), reds + blues, "square {n}, (a, b) = ({a}, {b})");
            }
        }
        assert_eq!(analysis.tally.sum(), analysis.tally.expected_sum());

        let params = select_params(&analysis.tally);
        let before = state.accepted.len();
        let record = prune_and_commit(&mut state, &analysis, params).unwrap();
        let kept = &state.squares.last().unwrap().points;
        assert_eq!(state.accepted.len(), before + kept.len());
        assert_eq!(record.kept as usize, kept.len());
        assert!(kept.iter().all(|u| red.binary_search(u).is_err()));
        assert!(blue.iter().all(|(u, v)| !(kept.contains(u) && kept.contains(v))));
        assert!(verify_fast(&state.accepted).is_none());
    }
}

#[test]
fn accepted_pairs_respect_slope_intervals() {
    let cfg = ConstructionConfig::new(0.5, 24.0, 20).unwrap();
    let state = build(cfg).unwrap();
    let layout = cfg.layout();
    for (i, sm) in state.squares.iter().enumerate() {
        for sn in &state.squares[i + 1..] {
            let (lo, hi) = slope_interval(&layout, sm.record.n, sn.record.n).unwrap();
            for u in &sm.points {
                for v in &sn.points {
                    let s = Ratio::new((v.y - u.y) as i128, (v.x - u.x) as i128);
                    assert!(lo <= s && s <= hi);
                }
            }
        }
    }
}

#[test]
fn builds_are_reproducible_and_in_general_position() {
    for (eps, c, n_max) in [(0.5, 24.0, 19), (0.9, 14.0, 18), (0.3, 40.0, 18)] {
        let cfg = ConstructionConfig::new(eps, c, n_max).unwrap();
        let a = build(cfg).unwrap();
        let b = build(cfg).unwrap();
        assert_eq!(a, b);
        assert!(common::in_general_position(&a.accepted));
        for r in a.records() {
            assert!(r.kept <= r.p);
            assert_eq!(r.kept + r.red_deleted + r.blue_deleted, r.p);
        }
    }
}
