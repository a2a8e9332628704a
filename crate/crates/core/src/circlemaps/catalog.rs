//! Concrete maps on the circle: the order-two map `a`, rotations, the
//! closed forms of `s_i = r^i a r^i` and `t_j = l^j a r l^-j`, Bennett's
//! rotations `b_j`, and the certificates built from them.

use std::ops::ControlFlow;

use thiserror::Error;

use super::PLHomeo;
use crate::action::Action;
use crate::certkit::{CondII, CondIII};
use crate::exactgeom::{rat, ArcSet, CirclePoint, Rational};
use crate::wordkit::walk_reduced;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
}

fn q(num: usize, den: usize) -> Rational {
    rat(num as i64, den as i64)
}

fn need(ok: bool, what: impl FnOnce() -> String) -> Result<(), CatalogError> {
    if ok {
        Ok(())
    } else {
        Err(CatalogError::OutOfRange(what()))
    }
}

pub fn rotation(amount: Rational) -> PLHomeo {
    PLHomeo::rotation(amount)
}

/// The involution swapping `[0, 1/n)` and `[1/n, 1)`:
/// `(n-1)t + 1/n` on the first arc, `t/(n-1) - 1/(n(n-1))` on the second.
pub fn standard_a(n: usize) -> Result<PLHomeo, CatalogError> {
    need(n >= 3, || format!("standard_a needs n >= 3, got {n}"))?;
    Ok(PLHomeo::from_pairs(&[(q(0, 1), q(1, n)), (q(1, n), q(0, 1))]).expect("valid breakpoints"))
}

/// `s_0 = t_0 = a r` for `n = 2k + 1`: slope `1/(2k)` on `[0, 2k/(2k+1))`,
/// slope `2k` on the rest.
pub fn closed_s0(k: usize) -> Result<PLHomeo, CatalogError> {
    need(k >= 2, || format!("closed_s0 needs k >= 2, got {k}"))?;
    let n = 2 * k + 1;
    Ok(PLHomeo::from_pairs(&[(q(0, 1), q(0, 1)), (q(2 * k, n), q(1, n))]).expect("valid breakpoints"))
}

/// `s_i(x) = s_0(x + (i-1)/(2k+1)) + i/(2k+1)`.
pub fn closed_s(i: usize, k: usize) -> Result<PLHomeo, CatalogError> {
    need(k >= 2 && (1..=k).contains(&i), || {
        format!("closed_s needs k >= 2 and 1 <= i <= k, got i = {i}, k = {k}")
    })?;
    let n = 2 * k + 1;
    let shift = q(i - 1, n);
    let lift = q(i, n);
    let pairs = [
        (-shift.clone(), lift.clone()),
        (q(2 * k, n) - &shift, q(1, n) + &lift),
    ];
    Ok(PLHomeo::from_pairs(&pairs).expect("valid breakpoints"))
}

/// `t_j(x) = t_0(x - j/k) + j/k`.
pub fn closed_t(j: usize, k: usize) -> Result<PLHomeo, CatalogError> {
    need(k >= 2 && j < k, || {
        format!("closed_t needs k >= 2 and 0 <= j <= k-1, got j = {j}, k = {k}")
    })?;
    let n = 2 * k + 1;
    let shift = q(j, k);
    let pairs = [
        (shift.clone(), shift.clone()),
        (q(2 * k, n) + &shift, q(1, n) + &shift),
    ];
    Ok(PLHomeo::from_pairs(&pairs).expect("valid breakpoints"))
}

/// `b_{2i} = l^i`, `b_{2i+1} = l^i r^-1` with `l` the rotation by `1/k` and
/// `r` the rotation by `1/(2k+1)`.
pub fn bennett_b(j: usize, k: usize) -> Result<PLHomeo, CatalogError> {
    need(k >= 2 && j < 2 * k, || {
        format!("bennett_b needs k >= 2 and 0 <= j <= 2k-1, got j = {j}, k = {k}")
    })?;
    let i = j / 2;
    let amount = if j.is_multiple_of(2) {
        q(i, k)
    } else {
        q(i, k) - q(1, 2 * k + 1)
    };
    Ok(rotation(amount))
}

/// `s_i = r^i a r^i` for `i = 1..=k`, computed by composition.
pub fn sunic_generators(k: usize) -> Result<Vec<PLHomeo>, CatalogError> {
    need(k >= 2, || format!("rank must be at least 2, got {k}"))?;
    let n = 2 * k + 1;
    let a = standard_a(n)?;
    Ok((1..=k)
        .map(|i| {
            let ri = rotation(q(i, n));
            ri.compose(&a).compose(&ri)
        })
        .collect())
}

/// `t_i = b_{2i} a b_{2i+1}^-1 = l^i a r l^-i` for `i = 0..k`, by composition.
pub fn bennett_generators(k: usize) -> Result<Vec<PLHomeo>, CatalogError> {
    need(k >= 2, || format!("rank must be at least 2, got {k}"))?;
    let a = standard_a(2 * k + 1)?;
    (0..k)
        .map(|i| {
            let even = bennett_b(2 * i, k)?;
            let odd = bennett_b(2 * i + 1, k)?;
            Ok(even.compose(&a).compose(&odd.inverse()))
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExampleKind {
    /// `A = [0, 1/n)`, `a = standard_a(n)`, `a_i` rotation by `i/n`.
    Standard { n: usize },
    /// The standard certificate with `n = 2k + 1`, meant for the pairing
    /// `i -> (i, n - i)`.
    SunicRankK { k: usize },
    /// `A = [0, 1/(2k+1))`, `a = standard_a(2k+1)`, translators `b_0..b_{2k-1}`.
    Bennett { k: usize },
}

pub fn example_certificate(kind: ExampleKind) -> Result<CondIII<PLHomeo>, CatalogError> {
    let (n, translators) = match kind {
        ExampleKind::Standard { n } => {
            need(n >= 3, || format!("standard example needs n >= 3, got {n}"))?;
            (n, (0..n).map(|i| rotation(q(i, n))).collect())
        }
        ExampleKind::SunicRankK { k } => {
            need(k >= 2, || format!("rank must be at least 2, got {k}"))?;
            return example_certificate(ExampleKind::Standard { n: 2 * k + 1 });
        }
        ExampleKind::Bennett { k } => {
            need(k >= 2, || format!("Bennett example needs k >= 2, got {k}"))?;
            let bs = (0..2 * k).map(|j| bennett_b(j, k)).collect::<Result<_, _>>()?;
            (2 * k + 1, bs)
        }
    };
    Ok(CondIII {
        base: ArcSet::arc(CirclePoint::new(q(0, 1)), CirclePoint::new(q(1, n))).expect("proper arc"),
        ambient: ArcSet::full(),
        a: standard_a(n)?,
        translators,
    })
}

/// The standard certificate read as condition (ii) with `a0 = 1`, `a1 = r`,
/// `a2 = r^2`.
pub fn standard_condition_ii(n: usize) -> Result<CondII<PLHomeo>, CatalogError> {
    let c = example_certificate(ExampleKind::Standard { n })?;
    Ok(CondII {
        base: c.base,
        ambient: c.ambient,
        a: c.a,
        a0: c.translators[0].clone(),
        a1: c.translators[1].clone(),
        a2: c.translators[2].clone(),
    })
}

/// Union of `w(A)` over all reduced words of length `<= max_len`.
pub fn partial_orbit_union<E: Action>(
    gens: &[E],
    set: &ArcSet<E::Point>,
    max_len: usize,
) -> ArcSet<E::Point> {
    let mut acc = set.clone();
    walk_reduced(gens, max_len, |_, value| {
        acc = acc.union(&value.image(set));
        ControlFlow::Continue(())
    });
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::{int, Arc};

    fn cp(n: i64, d: i64) -> CirclePoint {
        CirclePoint::new(rat(n, d))
    }

    #[test]
    fn standard_a_values() {
        // second branch t/4 - 1/20 at t = 1/5
        assert_eq!(standard_a(5).unwrap().eval(&cp(1, 5)), cp(0, 1));
        // first branch 2*0 + 1/3
        assert_eq!(standard_a(3).unwrap().eval(&cp(0, 1)), cp(1, 3));
        let img = standard_a(3).unwrap().image(&ArcSet::arc(cp(0, 1), cp(1, 3)).unwrap());
        assert_eq!(img, ArcSet::arc(cp(1, 3), cp(0, 1)).unwrap());
        assert!(standard_a(2).is_err());
    }

    #[test]
    fn closed_forms_evaluate() {
        assert_eq!(closed_s0(2).unwrap().eval(&cp(1, 2)), cp(1, 8));
        let s0 = closed_s0(3).unwrap();
        assert_eq!(s0.slopes(), vec![rat(1, 6), int(6)]);
        assert!(closed_s(0, 2).is_err());
        assert!(closed_s(3, 2).is_err());
        assert!(closed_t(2, 2).is_err());
        assert!(bennett_b(6, 3).is_err());
    }

    #[test]
    fn a_composed_with_r_is_s0() {
        let a = standard_a(5).unwrap();
        let r = rotation(rat(1, 5));
        assert_eq!(a.compose(&r), closed_s0(2).unwrap());
    }

    #[test]
    fn bennett_translate_b3() {
        let b3 = bennett_b(3, 3).unwrap();
        let a = ArcSet::arc(cp(0, 1), cp(1, 7)).unwrap();
        assert_eq!(b3.image(&a).arcs(), vec![Arc::new(cp(4, 21), cp(1, 3)).unwrap()]);
    }

    #[test]
    fn generators_match_closed_forms() {
        for k in 2..=4 {
            for (i, s) in sunic_generators(k).unwrap().iter().enumerate() {
                assert_eq!(s, &closed_s(i + 1, k).unwrap());
            }
            for (j, t) in bennett_generators(k).unwrap().iter().enumerate() {
                assert_eq!(t, &closed_t(j, k).unwrap());
            }
        }
    }

    #[test]
    fn orbit_union_grows() {
        let gens = sunic_generators(2).unwrap();
        let a = ArcSet::arc(cp(0, 1), cp(1, 5)).unwrap();
        assert_eq!(partial_orbit_union(&gens, &a, 0), a);
        let one = partial_orbit_union(&gens, &a, 1);
        assert!(one.measure() > rat(1, 5));
        assert!(a.is_subset(&one));
    }
}
