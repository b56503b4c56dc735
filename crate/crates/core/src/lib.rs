//! Exact minimal polynomials for the coordinates of the Harborth graph.

pub mod angles;
pub mod certify;
pub mod cli;
pub mod geometry;
pub mod golden;
pub mod polyjson;
pub mod render;
pub mod stages;

pub use geometry::{build, build_config, circ_circ, tower_build, tower_build_rational, Branch, Configuration, Frame, GeomError, Num, Point, Scalar};
