use std::fmt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::action::Action;
use crate::exactgeom::{frac, CirclePoint, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlError {
    #[error("a PL map needs at least one breakpoint")]
    NoBreakpoints,
    #[error("duplicate breakpoint at x = {0}")]
    DuplicateBreakpoint(String),
    #[error("breakpoint images are not in the cyclic order of the breakpoints")]
    NotDegreeOne,
}

/// Orientation-preserving piecewise-linear homeomorphism of `R/Z` with
/// rational breakpoints.
///
/// Stored as a lift `F: R -> R` with `F(x + 1) = F(x) + 1`: breakpoints
/// `0 <= x_0 < ... < x_{m-1} < 1` and lifted values `y_0 < ... < y_{m-1} < y_0 + 1`
/// with `y_0` in `[0, 1)`. The map is affine between consecutive breakpoints.
/// Breakpoints where the slope does not change are dropped; a rotation keeps
/// the single breakpoint `x_0 = 0`. Equality is equality of this form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PLHomeo {
    xs: Vec<Rational>,
    ys: Vec<Rational>,
}

impl PLHomeo {
    pub fn identity() -> Self {
        Self::rotation(Rational::zero())
    }

    /// `t -> t + q (mod 1)`.
    pub fn rotation(q: Rational) -> Self {
        PLHomeo {
            xs: vec![Rational::zero()],
            ys: vec![frac(&q)],
        }
    }

    /// Builds the map sending each `x_i` to `y_i` and interpolating
    /// affinely (positively) in between. Coordinates are read mod 1.
    pub fn from_pairs(pairs: &[(Rational, Rational)]) -> Result<Self, PlError> {
        if pairs.is_empty() {
            return Err(PlError::NoBreakpoints);
        }
        let mut pts: Vec<(Rational, Rational)> =
            pairs.iter().map(|(x, y)| (frac(x), frac(y))).collect();
        pts.sort_by(|a, b| a.0.cmp(&b.0));
        for w in pts.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(PlError::DuplicateBreakpoint(w[0].0.to_string()));
            }
        }
        let mut ys: Vec<Rational> = Vec::with_capacity(pts.len());
        for (_, y) in &pts {
            let mut y = y.clone();
            if let Some(prev) = ys.last() {
                // smallest representative strictly above the previous value
                y += (prev - &y).floor() + Rational::one();
            }
            ys.push(y);
        }
        if ys[ys.len() - 1] >= &ys[0] + Rational::one() {
            return Err(PlError::NotDegreeOne);
        }
        let xs = pts.into_iter().map(|(x, _)| x).collect();
        Ok(Self::canonical(xs, ys))
    }

    /// Canonicalizes a valid lift given by sorted breakpoints in `[0, 1)`.
    fn canonical(xs: Vec<Rational>, ys: Vec<Rational>) -> Self {
        let m = xs.len();
        let slope = |i: usize| -> Rational {
            let j = (i + 1) % m;
            let (x1, y1) = if j == 0 {
                (&xs[0] + Rational::one(), &ys[0] + Rational::one())
            } else {
                (xs[j].clone(), ys[j].clone())
            };
            (y1 - &ys[i]) / (x1 - &xs[i])
        };
        let slopes: Vec<Rational> = (0..m).map(slope).collect();
        let keep: Vec<usize> = (0..m)
            .filter(|&i| slopes[(i + m - 1) % m] != slopes[i])
            .collect();
        if keep.is_empty() {
            // all slopes equal, hence 1: a rotation
            let shift = &ys[0] - &xs[0];
            return Self::rotation(shift);
        }
        let mut kx: Vec<Rational> = keep.iter().map(|&i| xs[i].clone()).collect();
        let mut ky: Vec<Rational> = keep.iter().map(|&i| ys[i].clone()).collect();
        let shift = ky[0].floor();
        for y in &mut ky {
            *y -= &shift;
        }
        kx.shrink_to_fit();
        PLHomeo { xs: kx, ys: ky }
    }

    /// Value of the lift at an arbitrary rational.
    pub fn lift(&self, t: &Rational) -> Rational {
        let k = t.floor();
        let s = t - &k;
        let m = self.xs.len();
        let (x0, y0, x1, y1) = match self.xs.iter().rposition(|x| *x <= s) {
            None => (
                &self.xs[m - 1] - Rational::one(),
                &self.ys[m - 1] - Rational::one(),
                self.xs[0].clone(),
                self.ys[0].clone(),
            ),
            Some(i) if i + 1 < m => (
                self.xs[i].clone(),
                self.ys[i].clone(),
                self.xs[i + 1].clone(),
                self.ys[i + 1].clone(),
            ),
            Some(i) => (
                self.xs[i].clone(),
                self.ys[i].clone(),
                &self.xs[0] + Rational::one(),
                &self.ys[0] + Rational::one(),
            ),
        };
        &y0 + (&s - &x0) * (y1 - &y0) / (x1 - x0) + k
    }

    pub fn eval(&self, p: &CirclePoint) -> CirclePoint {
        CirclePoint::new(self.lift(p.coordinate()))
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &PLHomeo) -> PLHomeo {
        let inner_inv = inner.inverse();
        let mut ts: Vec<Rational> = inner.xs.clone();
        ts.extend(
            self.xs
                .iter()
                .map(|x| inner_inv.eval(&CirclePoint::new(x.clone())).coordinate().clone()),
        );
        ts.sort();
        ts.dedup();
        let ys = ts.iter().map(|t| self.lift(&inner.lift(t))).collect();
        Self::canonical(ts, ys)
    }

    pub fn inverse(&self) -> PLHomeo {
        let mut pts: Vec<(Rational, Rational)> = self
            .xs
            .iter()
            .zip(&self.ys)
            .map(|(x, y)| {
                let k = y.floor();
                (y - &k, x - &k)
            })
            .collect();
        pts.sort_by(|a, b| a.0.cmp(&b.0));
        let (xs, ys): (Vec<_>, Vec<_>) = pts.into_iter().unzip();
        Self::canonical(xs, ys)
    }

    pub fn is_identity(&self) -> bool {
        self.rotation_amount().is_some_and(|q| q.is_zero())
    }

    /// `Some(q)` when the map is the rotation by `q`.
    pub fn rotation_amount(&self) -> Option<Rational> {
        (self.xs.len() == 1).then(|| frac(&(&self.ys[0] - &self.xs[0])))
    }

    /// Canonical breakpoints `(x_i, f(x_i))`.
    pub fn breakpoints(&self) -> Vec<(CirclePoint, CirclePoint)> {
        self.xs
            .iter()
            .zip(&self.ys)
            .map(|(x, y)| (CirclePoint::new(x.clone()), CirclePoint::new(y.clone())))
            .collect()
    }

    /// Slope on `[x_i, x_{i+1})`, cyclically.
    pub fn slopes(&self) -> Vec<Rational> {
        let m = self.xs.len();
        (0..m)
            .map(|i| {
                let (x1, y1) = if i + 1 == m {
                    (&self.xs[0] + Rational::one(), &self.ys[0] + Rational::one())
                } else {
                    (self.xs[i + 1].clone(), self.ys[i + 1].clone())
                };
                (y1 - &self.ys[i]) / (x1 - &self.xs[i])
            })
            .collect()
    }
}

impl fmt::Display for PLHomeo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.rotation_amount() {
            return write!(f, "rot {q}");
        }
        f.write_str("pl [")?;
        for (i, (x, y)) in self.breakpoints().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "({x},{y})")?;
        }
        f.write_str("]")
    }
}

impl Action for PLHomeo {
    type Point = CirclePoint;

    fn identity() -> Self {
        PLHomeo::identity()
    }

    fn compose(&self, inner: &Self) -> Self {
        PLHomeo::compose(self, inner)
    }

    fn inverse(&self) -> Self {
        PLHomeo::inverse(self)
    }

    fn apply(&self, p: &CirclePoint) -> CirclePoint {
        self.eval(p)
    }

    fn acts_trivially(&self) -> bool {
        self.is_identity()
    }

    fn validate(&self) -> Result<(), String> {
        if self.slopes().iter().all(|s| s.is_positive()) {
            Ok(())
        } else {
            Err(format!("{self} has a non-positive slope"))
        }
    }
}
