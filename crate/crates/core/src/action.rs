//! The group-action contract shared by circle maps and projective matrices.

use std::fmt;

use crate::exactgeom::{ArcSet, CyclicPoint};

/// A group element acting by orientation-preserving bijections on a cyclic
/// domain.
pub trait Action: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    type Point: CyclicPoint;

    fn identity() -> Self;

    /// `self ∘ inner`: first `inner`, then `self`.
    fn compose(&self, inner: &Self) -> Self;

    fn inverse(&self) -> Self;

    fn apply(&self, p: &Self::Point) -> Self::Point;

    /// True when the element fixes every point of the domain.
    fn acts_trivially(&self) -> bool;

    /// Rejects elements that do not act by orientation-preserving bijections.
    fn validate(&self) -> Result<(), String> {
        Ok(())
    }

    fn image(&self, set: &ArcSet<Self::Point>) -> ArcSet<Self::Point> {
        set.image(|p| self.apply(p))
    }
}
