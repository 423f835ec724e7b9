//! Exact algorithms for zero exemplar distance (ZED) on sequence and set
//! genomes, exemplar LCS, and the 3SAT reductions to both ZED variants.

pub mod error;
pub mod generate;
pub mod io;
pub mod model;
pub mod sat;
pub mod selftest;
pub mod seq;
pub mod set;

pub use error::ZedError;
pub use model::*;
