//! Exact cyclic-order domains and the half-open arc-set algebra shared by the
//! circle and the projective line.

mod arcset;
mod point;
mod rational;

pub use arcset::{Arc, ArcError, ArcSet};
pub use point::{between, CirclePoint, CyclicPoint, Domain, ProjPoint};
pub use rational::{frac, int, parse_rational, rat, LiteralError, Rational};
