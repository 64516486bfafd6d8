//! Multi-indexed orthogonal polynomials and their recurrence relations, in
//! exact rational arithmetic.

pub mod cli;
pub mod diffop;
pub mod error;
pub mod exact;
pub mod families;
pub mod gauged;
pub mod golden;
pub mod mindexed;
pub mod recurrence;
pub mod report;
pub mod shiftalg;

pub use error::{Error, Result};
