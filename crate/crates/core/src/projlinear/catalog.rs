//! The `SL_2` ping-pong table on the projective line.
//!
//! The plane set `A` (first and third quadrants with the x-axis, without the
//! y-axis) is symmetric under `-1`, so it is represented by its directions:
//! the arc `[(1:0), (0:1))`.

use num_traits::{One, Signed};
use thiserror::Error;

use super::Matrix2;
use crate::certkit::CondIII;
use crate::exactgeom::{int, ArcSet, CyclicPoint, ProjPoint, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstraintError {
    #[error("constraint violated: {0}")]
    Violated(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sl2Params {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
    pub delta: Rational,
}

impl Sl2Params {
    pub fn new(alpha: Rational, beta: Rational, gamma: Rational, delta: Rational) -> Self {
        Sl2Params {
            alpha,
            beta,
            gamma,
            delta,
        }
    }

    pub fn ints(alpha: i64, beta: i64, gamma: i64, delta: i64) -> Self {
        Self::new(int(alpha), int(beta), int(gamma), int(delta))
    }

    pub fn check(&self) -> Result<(), ConstraintError> {
        for (name, v) in [
            ("alpha", &self.alpha),
            ("beta", &self.beta),
            ("gamma", &self.gamma),
            ("delta", &self.delta),
        ] {
            if !v.is_positive() {
                return Err(ConstraintError::Violated(format!("{name} = {v} is not > 0")));
            }
        }
        let ab = &self.alpha * &self.beta;
        if ab < Rational::one() {
            return Err(ConstraintError::Violated(format!("alpha*beta = {ab} < 1")));
        }
        let gd = &self.gamma * &self.delta;
        if gd < Rational::one() {
            return Err(ConstraintError::Violated(format!("gamma*delta = {gd} < 1")));
        }
        Ok(())
    }

    /// `(a, [a0, a1, a2, a3])`.
    pub fn elements(&self) -> (Matrix2, [Matrix2; 4]) {
        let (zero, one) = (int(0), int(1));
        let a = Matrix2::from_ints(0, -1, 1, 0);
        let a0 = Matrix2::new(one.clone(), self.alpha.clone(), zero.clone(), one.clone());
        let a1 = Matrix2::new(one.clone(), zero.clone(), self.beta.clone(), one.clone());
        let a2 = Matrix2::new(zero.clone(), -&one, one.clone(), self.gamma.clone());
        let a3 = Matrix2::new(-&self.delta, -&one, one, zero);
        (a, [a0, a1, a2, a3])
    }
}

/// The arc `[(1:0), (0:1))`: directions of nonnegative slope.
pub fn quadrant_arc() -> ArcSet<ProjPoint> {
    ArcSet::arc(ProjPoint::cut(), ProjPoint::from_ints(0, 1).unwrap()).expect("proper arc")
}

/// Condition (iii) with `n = 4` on the projective line.
pub fn sl2_example_certificate(params: &Sl2Params) -> Result<CondIII<Matrix2>, ConstraintError> {
    params.check()?;
    let (a, translators) = params.elements();
    Ok(CondIII {
        base: quadrant_arc(),
        ambient: ArcSet::full(),
        a,
        translators: translators.to_vec(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassicPair {
    /// `[[0,-1],[1,-s]]`, `[[0,-1],[1,t]]` with `s, t >= 2`.
    St { s: Rational, t: Rational },
    /// `[[1,u],[0,1]]`, `[[1,0],[v,1]]` with `u, v > 0`, `uv >= 4`.
    Uv { u: Rational, v: Rational },
}

pub fn classic_pairs(kind: &ClassicPair) -> Result<(Matrix2, Matrix2), ConstraintError> {
    let (zero, one) = (int(0), int(1));
    match kind {
        ClassicPair::St { s, t } => {
            for (name, v) in [("s", s), ("t", t)] {
                if *v < int(2) {
                    return Err(ConstraintError::Violated(format!("{name} = {v} < 2")));
                }
            }
            Ok((
                Matrix2::new(zero.clone(), -&one, one.clone(), -s),
                Matrix2::new(zero, -&one, one, t.clone()),
            ))
        }
        ClassicPair::Uv { u, v } => {
            for (name, x) in [("u", u), ("v", v)] {
                if !x.is_positive() {
                    return Err(ConstraintError::Violated(format!("{name} = {x} is not > 0")));
                }
            }
            let uv = u * v;
            if uv < int(4) {
                return Err(ConstraintError::Violated(format!("u*v = {uv} < 4")));
            }
            Ok((
                Matrix2::new(one.clone(), u.clone(), zero.clone(), one.clone()),
                Matrix2::new(one.clone(), zero, v.clone(), one),
            ))
        }
    }
}
