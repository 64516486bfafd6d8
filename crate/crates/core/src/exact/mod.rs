//! Exact arithmetic: rationals, polynomials and rational functions over `Q`.

pub mod basis;
pub mod poly;
pub mod ratfunc;
pub mod rational;

pub use poly::{Degree, Poly};
pub use ratfunc::RatFunc;
pub use rational::{format_rational, int, parse_rational, pochhammer, rat, Rational};
