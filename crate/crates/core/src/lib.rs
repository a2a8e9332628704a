//! Exact verification of ping-pong certificates for free subgroups of
//! groups acting on the circle and on the projective line.

pub mod action;
pub mod certkit;
pub mod circlemaps;
pub mod cli;
pub mod exactgeom;
pub mod projlinear;
pub mod report;
pub mod wordkit;

pub use action::Action;
pub use report::{Check, Report};
