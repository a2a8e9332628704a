use std::fmt;
use std::ops::{Mul, Neg};

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::action::Action;
use crate::exactgeom::{int, ProjPoint, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix is singular")]
    Singular,
    #[error("determinant {0} is not 1")]
    NotUnimodular(String),
    #[error("determinant {0} is not positive; the projective action would reverse orientation")]
    NotOrientationPreserving(String),
}

/// A 2x2 matrix with exact rational entries, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix2 {
    m: [Rational; 4],
}

impl Matrix2 {
    /// `[[m11, m12], [m21, m22]]`, no determinant check.
    pub fn new(m11: Rational, m12: Rational, m21: Rational, m22: Rational) -> Self {
        Matrix2 {
            m: [m11, m12, m21, m22],
        }
    }

    pub fn from_ints(m11: i64, m12: i64, m21: i64, m22: i64) -> Self {
        Self::new(int(m11), int(m12), int(m21), int(m22))
    }

    /// Checked constructor for `SL_2`.
    pub fn sl2(m11: Rational, m12: Rational, m21: Rational, m22: Rational) -> Result<Self, MatrixError> {
        let m = Self::new(m11, m12, m21, m22);
        if m.det().is_one() {
            Ok(m)
        } else {
            Err(MatrixError::NotUnimodular(m.det().to_string()))
        }
    }

    /// Accepts any positive determinant; the flag is true when it is not 1.
    pub fn relaxed(
        m11: Rational,
        m12: Rational,
        m21: Rational,
        m22: Rational,
    ) -> Result<(Self, bool), MatrixError> {
        let m = Self::new(m11, m12, m21, m22);
        let det = m.det();
        if !det.is_positive() {
            return Err(MatrixError::NotOrientationPreserving(det.to_string()));
        }
        Ok((m, !det.is_one()))
    }

    pub fn identity() -> Self {
        Self::from_ints(1, 0, 0, 1)
    }

    pub fn entries(&self) -> &[Rational; 4] {
        &self.m
    }

    pub fn det(&self) -> Rational {
        &self.m[0] * &self.m[3] - &self.m[1] * &self.m[2]
    }

    pub fn try_inverse(&self) -> Result<Matrix2, MatrixError> {
        let d = self.det();
        if d.is_zero() {
            return Err(MatrixError::Singular);
        }
        let [a, b, c, e] = &self.m;
        Ok(Matrix2::new(e / &d, -b / &d, -c / &d, a / &d))
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// `±I`.
    pub fn is_pm_identity(&self) -> bool {
        self.is_identity() || (-self).is_identity()
    }

    /// Scalar matrices are exactly the ones acting trivially on directions.
    pub fn is_scalar(&self) -> bool {
        self.m[1].is_zero() && self.m[2].is_zero() && self.m[0] == self.m[3]
    }

    pub fn eq_up_to_sign(&self, other: &Matrix2) -> bool {
        self == other || *self == -other
    }

    /// Image of the direction `p`. Requires a positive determinant.
    pub fn moebius_apply(&self, p: &ProjPoint) -> Result<ProjPoint, MatrixError> {
        let det = self.det();
        if !det.is_positive() {
            return Err(MatrixError::NotOrientationPreserving(det.to_string()));
        }
        let x = Rational::from_integer(p.x().clone());
        let y = Rational::from_integer(p.y().clone());
        let [a, b, c, d] = &self.m;
        let nx = a * &x + b * &y;
        let ny = c * &x + d * &y;
        Ok(ProjPoint::from_vector(&nx, &ny).expect("nonsingular image of a nonzero vector"))
    }
}

impl Mul for &Matrix2 {
    type Output = Matrix2;

    fn mul(self, rhs: &Matrix2) -> Matrix2 {
        let [a, b, c, d] = &self.m;
        let [e, f, g, h] = &rhs.m;
        Matrix2::new(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)
    }
}

impl Neg for &Matrix2 {
    type Output = Matrix2;

    fn neg(self) -> Matrix2 {
        let [a, b, c, d] = &self.m;
        Matrix2::new(-a, -b, -c, -d)
    }
}

impl fmt::Display for Matrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.m;
        write!(f, "mat [{a} {b}; {c} {d}]")
    }
}

/// Matrices act on the projective line through their action on directions.
/// Only matrices with positive determinant are valid elements; `apply` and
/// `inverse` panic on others, so validate first.
impl Action for Matrix2 {
    type Point = ProjPoint;

    fn identity() -> Self {
        Matrix2::identity()
    }

    fn compose(&self, inner: &Self) -> Self {
        self * inner
    }

    fn inverse(&self) -> Self {
        self.try_inverse().expect("validated matrices are invertible")
    }

    fn apply(&self, p: &ProjPoint) -> ProjPoint {
        self.moebius_apply(p).expect("validated matrices preserve orientation")
    }

    /// `-I` counts: a word equal to `-I` squares to a relation.
    fn acts_trivially(&self) -> bool {
        self.is_scalar()
    }

    fn validate(&self) -> Result<(), String> {
        let det = self.det();
        if det.is_positive() {
            Ok(())
        } else {
            Err(format!("{self} has determinant {det}"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::{between, rat};
    use proptest::prelude::*;

    fn pp(x: i64, y: i64) -> ProjPoint {
        ProjPoint::from_ints(x, y).unwrap()
    }

    #[test]
    fn apply_examples() {
        let t = Matrix2::from_ints(1, 1, 0, 1);
        assert_eq!(t.moebius_apply(&pp(0, 1)).unwrap(), pp(1, 1));
        assert_eq!(Matrix2::identity().moebius_apply(&pp(3, 7)).unwrap(), pp(3, 7));
        let a = Matrix2::from_ints(0, -1, 1, 0);
        assert_eq!(a.moebius_apply(&pp(1, 0)).unwrap(), pp(0, 1));
        let flip = Matrix2::from_ints(1, 0, 0, -1);
        assert!(matches!(
            flip.moebius_apply(&pp(1, 1)),
            Err(MatrixError::NotOrientationPreserving(_))
        ));
    }

    #[test]
    fn inverse_and_det() {
        let m = Matrix2::from_ints(2, 1, 1, 1);
        assert_eq!(&m * &m.try_inverse().unwrap(), Matrix2::identity());
        assert_eq!(Matrix2::from_ints(1, 2, 2, 4).try_inverse(), Err(MatrixError::Singular));
        assert!(Matrix2::sl2(int(2), int(0), int(0), int(1)).is_err());
        let (_, flagged) = Matrix2::relaxed(int(2), int(0), int(0), int(1)).unwrap();
        assert!(flagged);
        assert!(Matrix2::relaxed(int(-1), int(0), int(0), int(1)).is_err());
        assert!((-&Matrix2::identity()).acts_trivially());
        assert!(Matrix2::from_ints(1, 2, 0, 1).eq_up_to_sign(&Matrix2::from_ints(-1, -2, 0, -1)));
        assert_eq!(Matrix2::new(rat(1, 2), int(0), int(-3), int(2)).to_string(), "mat [1/2 0; -3 2]");
    }

    fn arb_matrix() -> impl Strategy<Value = Matrix2> {
        (-4i64..5, -4i64..5, -4i64..5, -4i64..5)
            .prop_map(|(a, b, c, d)| Matrix2::from_ints(a, b, c, d))
            .prop_filter("positive determinant", |m| m.det().is_positive())
    }

    fn arb_point() -> impl Strategy<Value = ProjPoint> {
        (-9i64..10, -9i64..10)
            .prop_filter("nonzero", |(x, y)| *x != 0 || *y != 0)
            .prop_map(|(x, y)| pp(x, y))
    }

    proptest! {
        #[test]
        fn action_respects_products(m in arb_matrix(), n in arb_matrix(), p in arb_point()) {
            let lhs = (&m * &n).moebius_apply(&p).unwrap();
            let rhs = m.moebius_apply(&n.moebius_apply(&p).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!((&m * &n).det(), m.det() * n.det());
            prop_assert_eq!(&m * &m.try_inverse().unwrap(), Matrix2::identity());
        }

        #[test]
        fn cyclic_order_is_preserved(m in arb_matrix(), p in arb_point(), q in arb_point(), r in arb_point()) {
            prop_assume!(p != q && q != r && p != r);
            let img = |x: &ProjPoint| m.moebius_apply(x).unwrap();
            prop_assert_eq!(between(&p, &q, &r), between(&img(&p), &img(&q), &img(&r)));
        }
    }
}
