//! Finite unions of half-open arcs `[p, q)` on a cyclic domain.
//!
//! Internally a set is kept as sorted, pairwise separated intervals of the
//! domain cut open at [`CyclicPoint::cut`]; the canonical arc list merges the
//! interval starting at the cut with the one running to the end of the cycle.

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use super::point::{CirclePoint, CyclicPoint};
use super::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArcError {
    #[error("arc [{0},{0}) is ambiguous; use `empty` or `full`")]
    Degenerate(String),
}

/// A single arc. Proper arcs have distinct endpoints.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Arc<P> {
    Empty,
    Full,
    Proper { left: P, right: P },
}

impl<P: CyclicPoint> Arc<P> {
    pub fn new(left: P, right: P) -> Result<Self, ArcError> {
        if left == right {
            return Err(ArcError::Degenerate(left.to_string()));
        }
        Ok(Arc::Proper { left, right })
    }
}

impl<P: fmt::Display> fmt::Display for Arc<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Arc::Empty => f.write_str("empty"),
            Arc::Full => f.write_str("full"),
            Arc::Proper { left, right } => write!(f, "[{left},{right})"),
        }
    }
}

/// Right end of a cut-open interval.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum Bound<P> {
    At(P),
    Top,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArcSet<P> {
    // sorted, each nonempty, consecutive ones separated by a nonempty gap
    intervals: Vec<(P, Bound<P>)>,
}

impl<P: CyclicPoint> ArcSet<P> {
    pub fn empty() -> Self {
        ArcSet { intervals: Vec::new() }
    }

    pub fn full() -> Self {
        ArcSet {
            intervals: vec![(P::cut(), Bound::Top)],
        }
    }

    /// Canonical set of the single arc `[left, right)`.
    pub fn arc(left: P, right: P) -> Result<Self, ArcError> {
        Ok(Self::normalize([Arc::new(left, right)?]))
    }

    /// Canonical union of arbitrary arcs.
    pub fn normalize(raw: impl IntoIterator<Item = Arc<P>>) -> Self {
        let mut pieces = Vec::new();
        for arc in raw {
            match arc {
                Arc::Empty => {}
                Arc::Full => return Self::full(),
                Arc::Proper { left, right } => {
                    if left < right {
                        pieces.push((left, Bound::At(right)));
                    } else {
                        // wraps through the cut
                        if right != P::cut() {
                            pieces.push((P::cut(), Bound::At(right)));
                        }
                        pieces.push((left, Bound::Top));
                    }
                }
            }
        }
        Self::merge(pieces)
    }

    fn merge(mut pieces: Vec<(P, Bound<P>)>) -> Self {
        pieces.sort();
        let mut out: Vec<(P, Bound<P>)> = Vec::with_capacity(pieces.len());
        for (l, r) in pieces {
            if let Some(last) = out.last_mut() {
                if Bound::At(l.clone()) <= last.1 {
                    if r > last.1 {
                        last.1 = r;
                    }
                    continue;
                }
            }
            out.push((l, r));
        }
        ArcSet { intervals: out }
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn is_full(&self) -> bool {
        matches!(self.intervals.as_slice(), [(l, Bound::Top)] if *l == P::cut())
    }

    /// Canonical arc list: left endpoints strictly increasing, at most one
    /// arc (the last) wrapping through the cut.
    pub fn arcs(&self) -> Vec<Arc<P>> {
        if self.is_empty() {
            return vec![Arc::Empty];
        }
        if self.is_full() {
            return vec![Arc::Full];
        }
        let ivs = &self.intervals;
        let wraps = ivs.len() >= 2 && ivs[0].0 == P::cut() && ivs[ivs.len() - 1].1 == Bound::Top;
        let (body, wrap) = if wraps {
            (&ivs[1..ivs.len() - 1], true)
        } else {
            (&ivs[..], false)
        };
        let close = |b: &Bound<P>| match b {
            Bound::At(p) => p.clone(),
            Bound::Top => P::cut(),
        };
        let mut out: Vec<Arc<P>> = body
            .iter()
            .map(|(l, r)| Arc::Proper {
                left: l.clone(),
                right: close(r),
            })
            .collect();
        if wrap {
            out.push(Arc::Proper {
                left: ivs[ivs.len() - 1].0.clone(),
                right: close(&ivs[0].1),
            });
        }
        out
    }

    pub fn contains(&self, p: &P) -> bool {
        let at = Bound::At(p.clone());
        self.intervals.iter().any(|(l, r)| l <= p && at < *r)
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut pieces = self.intervals.clone();
        pieces.extend(other.intervals.iter().cloned());
        Self::merge(pieces)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let (a, b) = (&self.intervals, &other.intervals);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < a.len() && j < b.len() {
            let l = std::cmp::max(&a[i].0, &b[j].0);
            let r = std::cmp::min(&a[i].1, &b[j].1);
            if Bound::At(l.clone()) < *r {
                out.push((l.clone(), r.clone()));
            }
            if a[i].1 < b[j].1 {
                i += 1;
            } else {
                j += 1;
            }
        }
        ArcSet { intervals: out }
    }

    pub fn complement(&self) -> Self {
        let mut out = Vec::new();
        let mut from = Bound::At(P::cut());
        for (l, r) in &self.intervals {
            if let Bound::At(p) = &from {
                if p < l {
                    out.push((p.clone(), Bound::At(l.clone())));
                }
            }
            from = r.clone();
        }
        if let Bound::At(p) = from {
            out.push((p, Bound::Top));
        }
        ArcSet { intervals: out }
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.intersection(&other.complement())
    }

    pub fn symmetric_difference(&self, other: &Self) -> Self {
        self.difference(other).union(&other.difference(self))
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.difference(other).is_empty()
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.intersection(other).is_empty()
    }

    /// Image under an orientation-preserving bijection of the domain.
    pub fn image(&self, h: impl Fn(&P) -> P) -> Self {
        if self.is_full() {
            return Self::full();
        }
        Self::normalize(self.arcs().into_iter().map(|arc| match arc {
            Arc::Proper { left, right } => Arc::Proper {
                left: h(&left),
                right: h(&right),
            },
            other => other,
        }))
    }
}

impl ArcSet<CirclePoint> {
    /// Total length of a circle set.
    pub fn measure(&self) -> Rational {
        self.intervals
            .iter()
            .map(|(l, r)| {
                let right = match r {
                    Bound::At(p) => p.coordinate().clone(),
                    Bound::Top => Rational::one(),
                };
                right - l.coordinate()
            })
            .fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<P: CyclicPoint> fmt::Display for ArcSet<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arcs = self.arcs();
        for (i, arc) in arcs.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{arc}")?;
        }
        Ok(())
    }
}
