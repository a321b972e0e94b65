//! Point sets in general position on the integer grid.
//!
//! The crate builds three families of sets with no three points on a line:
//! modular parabolas ([`gadgets`]), the extensible parabola-in-squares
//! construction ([`extensible`]) and greedy lexicographic sets ([`greedy`]).
//! Everything is checked with exact integer arithmetic ([`geometry`],
//! [`verify`]).

pub mod error;
pub mod extensible;
pub mod gadgets;
pub mod geometry;
pub mod greedy;
pub mod numtheory;
pub mod plot;
pub mod pointfile;
pub mod verify;

pub use error::{Error, Result};
pub use geometry::{collinear, direction, lattice_y_at, line_through, ColumnHit, GridPoint, LineKey, ReducedDirection};
pub use verify::{is_saturated, verify_brute, verify_fast, CollinearWitness, Region, Saturation};
