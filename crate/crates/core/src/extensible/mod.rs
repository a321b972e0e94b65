//! The extensible construction: squares `Q_n` placed along `x / log^eps x`,
//! each hosting a modular parabola whose parameters are chosen to minimize
//! collinear triples with the points already accepted, followed by pruning.

mod build;
mod incidence;
mod square;

pub use build::{
    analyze_square, build, density_report, enumerate_blue, enumerate_red, prune, prune_and_commit,
    CommittedSquare, ConstructionState, DensityRow, Pruned, SquareAnalysis, SquareRecord,
};
pub use incidence::{
    blue_pairs, collinear_groups_from_left, collinear_groups_scan, line_hits, red_points,
    select_params, tally_incidences, BluePair, IncidenceTally,
};
pub use square::{
    check_three_square_separation, slope_interval, slope_interval_width_ok, square_avoids_lines,
    width_bound, ConstructionConfig, Layout, SeparationReport, Slope, SquareSpec, MIN_SIDE, N_CAP,
};
