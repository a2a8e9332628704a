//! Piecewise-linear orientation-preserving homeomorphisms of the circle and
//! a catalog of explicit free-group examples.

mod catalog;
mod homeo;

pub use catalog::{
    bennett_b, bennett_generators, closed_s, closed_s0, closed_t, example_certificate,
    partial_orbit_union, rotation, standard_a, standard_condition_ii, sunic_generators,
    CatalogError, ExampleKind,
};
pub use homeo::{PLHomeo, PlError};
