use thiserror::Error;

use crate::geometry::GridPoint;
use crate::verify::CollinearWitness;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degenerate direction: both endpoints are {0}")]
    DegenerateDirection(GridPoint),

    #[error("no unique parabola through a vertical pair at x = {0}")]
    VerticalPair(i64),

    #[error("no unique parabola exists modulo 2")]
    EvenModulus,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("residue {value} out of range for modulus {p}")]
    ResidueOutOfRange { value: u64, p: u64 },

    #[error("parabola of size {p} does not fit in a square of side {side}")]
    ParabolaTooLarge { p: u64, side: i64 },

    #[error("square empty at n = {0}")]
    EmptySquare(u32),

    #[error("square at n = {n} has side {side}, too small to host a parabola (need n >= {n_min})")]
    SquareTooSmall { n: u32, side: i64, n_min: u32 },

    #[error("invalid construction config: {0}")]
    InvalidConfig(String),

    #[error("value {0} is outside the domain of the check")]
    Domain(u64),

    #[error("points are not in general position: {0}")]
    NotInGeneralPosition(CollinearWitness),

    #[error("arithmetic overflow")]
    Overflow,
}
