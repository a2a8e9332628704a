//! Points of the two cyclically ordered domains: the circle `Q/Z` and the
//! rational projective line.

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::rational::{common_denominator, frac, parse_integer, parse_rational, LiteralError, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Domain {
    Circle,
    Projective,
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Domain::Circle => "circle",
            Domain::Projective => "projective",
        })
    }
}

/// A point on a cyclically ordered domain.
///
/// `Ord` is the linear order obtained by cutting the cycle at [`CyclicPoint::cut`],
/// which is the least element.
pub trait CyclicPoint:
    Clone + Ord + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    const DOMAIN: Domain;

    fn cut() -> Self;

    fn parse(text: &str) -> Result<Self, LiteralError>;
}

/// True when walking the positive orientation from `a` meets `b` strictly
/// before `c`. False whenever two of the points coincide.
pub fn between<P: CyclicPoint>(a: &P, b: &P, c: &P) -> bool {
    (a < b && b < c) || (b < c && c < a) || (c < a && a < b)
}

/// A point of `S^1 = R/Z` with rational coordinate in `[0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CirclePoint(Rational);

impl CirclePoint {
    /// Reduces `q` mod 1.
    pub fn new(q: Rational) -> Self {
        CirclePoint(frac(&q))
    }

    pub fn coordinate(&self) -> &Rational {
        &self.0
    }
}

impl From<Rational> for CirclePoint {
    fn from(q: Rational) -> Self {
        CirclePoint::new(q)
    }
}

impl fmt::Display for CirclePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl CyclicPoint for CirclePoint {
    const DOMAIN: Domain = Domain::Circle;

    fn cut() -> Self {
        CirclePoint(Rational::zero())
    }

    fn parse(text: &str) -> Result<Self, LiteralError> {
        parse_rational(text).map(CirclePoint::new)
    }
}

/// A direction `(x:y)` in the plane up to sign.
///
/// Canonical representative: coprime integers with `y > 0`, or `y = 0, x > 0`,
/// so the angle of `(x, y)` lies in `[0, pi)`. The cut point is `(1:0)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjPoint {
    x: BigInt,
    y: BigInt,
}

impl ProjPoint {
    pub fn new(x: BigInt, y: BigInt) -> Option<Self> {
        if x.is_zero() && y.is_zero() {
            return None;
        }
        let g = x.gcd(&y);
        let (mut x, mut y) = (x / &g, y / &g);
        if y.is_negative() || (y.is_zero() && x.is_negative()) {
            x = -x;
            y = -y;
        }
        Some(ProjPoint { x, y })
    }

    pub fn from_ints(x: i64, y: i64) -> Option<Self> {
        Self::new(BigInt::from(x), BigInt::from(y))
    }

    /// The direction of a nonzero rational vector.
    pub fn from_vector(x: &Rational, y: &Rational) -> Option<Self> {
        let m = Rational::from_integer(common_denominator([x, y]));
        let (sx, sy) = (x * &m, y * &m);
        Self::new(sx.to_integer(), sy.to_integer())
    }

    pub fn x(&self) -> &BigInt {
        &self.x
    }

    pub fn y(&self) -> &BigInt {
        &self.y
    }

    /// `x_P * y_Q - x_Q * y_P`; positive iff `self` precedes `other`.
    pub fn cross(&self, other: &ProjPoint) -> BigInt {
        &self.x * &other.y - &other.x * &self.y
    }
}

impl Ord for ProjPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        BigInt::zero().cmp(&self.cross(other))
    }
}

impl PartialOrd for ProjPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.x, self.y)
    }
}

impl CyclicPoint for ProjPoint {
    const DOMAIN: Domain = Domain::Projective;

    fn cut() -> Self {
        ProjPoint::from_ints(1, 0).unwrap()
    }

    fn parse(text: &str) -> Result<Self, LiteralError> {
        let t = text.trim();
        let (x, y) = t
            .split_once(':')
            .ok_or_else(|| LiteralError::BadProjective(t.to_string()))?;
        ProjPoint::new(parse_integer(x)?, parse_integer(y)?)
            .ok_or_else(|| LiteralError::BadProjective(t.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::rational::rat;
    use proptest::prelude::*;

    fn pp(x: i64, y: i64) -> ProjPoint {
        ProjPoint::from_ints(x, y).unwrap()
    }

    #[test]
    fn projective_canonical_sign() {
        assert_eq!(pp(-2, -4), pp(1, 2));
        assert_eq!(pp(-3, 0), pp(1, 0));
        assert_eq!(pp(2, -2).to_string(), "-1:1");
        assert!(ProjPoint::from_ints(0, 0).is_none());
    }

    #[test]
    fn projective_order_follows_angle() {
        // (1:0) < (1:1) < (0:1) < (-1:1)
        assert!(pp(1, 0) < pp(1, 1));
        assert!(pp(1, 1) < pp(0, 1));
        assert!(pp(0, 1) < pp(-1, 1));
        assert_eq!(ProjPoint::cut(), pp(1, 0));
        assert_eq!(ProjPoint::parse(" 4:-2 ").unwrap(), pp(-2, 1));
        assert!(ProjPoint::parse("0:0").is_err());
        assert!(ProjPoint::parse("1/2").is_err());
    }

    #[test]
    fn circle_points_wrap() {
        assert_eq!(CirclePoint::new(rat(8, 7)), CirclePoint::new(rat(1, 7)));
        assert_eq!(CirclePoint::parse("1").unwrap(), CirclePoint::cut());
    }

    #[test]
    fn between_on_circle() {
        let p = |n, d| CirclePoint::new(rat(n, d));
        assert!(between(&p(0, 1), &p(1, 3), &p(2, 3)));
        assert!(between(&p(2, 3), &p(0, 1), &p(1, 3)));
        assert!(!between(&p(0, 1), &p(2, 3), &p(1, 3)));
        assert!(!between(&p(0, 1), &p(0, 1), &p(1, 3)));
    }

    fn arb_proj() -> impl Strategy<Value = ProjPoint> {
        (-20i64..20, -20i64..20)
            .prop_filter("nonzero", |(x, y)| *x != 0 || *y != 0)
            .prop_map(|(x, y)| pp(x, y))
    }

    proptest! {
        #[test]
        fn projective_order_is_total(p in arb_proj(), q in arb_proj()) {
            let c = p.cross(&q);
            if p == q {
                prop_assert!(c.is_zero());
            } else {
                prop_assert!(!c.is_zero());
                prop_assert!((p < q) != (q < p));
                prop_assert_eq!(p < q, c.is_positive());
            }
        }

        #[test]
        fn between_is_cyclic_and_antisymmetric(a in arb_proj(), b in arb_proj(), c in arb_proj()) {
            prop_assume!(a != b && b != c && a != c);
            prop_assert_eq!(between(&a, &b, &c), between(&b, &c, &a));
            prop_assert_eq!(between(&a, &b, &c), !between(&a, &c, &b));
        }
    }
}
