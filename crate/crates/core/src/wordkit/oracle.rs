use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::ControlFlow;

use super::enumerate::walk_reduced;
use super::word::{Word, WordError};
use num_traits::Zero;

use crate::action::Action;
use crate::circlemaps::PLHomeo;
use crate::exactgeom::{CirclePoint, Rational};
use crate::report::Report;

/// Left-to-right product: `g1 g2` evaluates to `g1 ∘ g2`.
pub fn evaluate_word<E: Action>(word: &Word, assignment: &[E]) -> Result<E, WordError> {
    word.letters().iter().try_fold(E::identity(), |acc, l| {
        let g = assignment
            .get(l.generator)
            .ok_or(WordError::MissingAssignment(l.generator))?;
        Ok(if l.inverse {
            acc.compose(&g.inverse())
        } else {
            acc.compose(g)
        })
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleMode<P> {
    /// No nonempty reduced word may act trivially.
    ElementIdentity,
    /// Distinct reduced words must send the point to distinct points.
    Basepoint(P),
}

/// Brute-force search for a relation among `gens` in the ball of radius
/// `max_len`. Passing is evidence, not proof, of freeness.
pub fn freeness_oracle<E: Action>(
    gens: &[E],
    max_len: usize,
    mode: &OracleMode<E::Point>,
) -> Report {
    let mut examined = 0usize;
    let mut witness = None;
    let subject;
    match mode {
        OracleMode::ElementIdentity => {
            subject = format!("freeness oracle, {} generators, max length {max_len}", gens.len());
            walk_reduced(gens, max_len, |letters, value| {
                examined += 1;
                if value.acts_trivially() {
                    let w = Word::from_reduced(letters.to_vec());
                    witness = Some(format!("{w} acts as the identity"));
                    return ControlFlow::Break(());
                }
                ControlFlow::Continue(())
            });
        }
        OracleMode::Basepoint(p) => {
            subject = format!(
                "orbit oracle at {p}, {} generators, max length {max_len}",
                gens.len()
            );
            let mut seen: BTreeMap<E::Point, Word> = BTreeMap::new();
            seen.insert(p.clone(), Word::empty());
            walk_reduced(gens, max_len, |letters, value| {
                examined += 1;
                let image = value.apply(p);
                let w = Word::from_reduced(letters.to_vec());
                if let Some(other) = seen.get(&image) {
                    witness = Some(format!("{other} and {w} both send {p} to {image}"));
                    return ControlFlow::Break(());
                }
                seen.insert(image, w);
                ControlFlow::Continue(())
            });
        }
    }
    let mut report = Report::new(subject);
    let name = match mode {
        OracleMode::ElementIdentity => "no nontrivial reduced word acts trivially",
        OracleMode::Basepoint(_) => "distinct reduced words give distinct orbit points",
    };
    report.check(format!("{name} ({examined} words examined)"), witness);
    report
}

/// Lifts of circle maps to the real line, one per generator, normalized by
/// `G(0)` in `[0, 1)`; inverses are lifted so that `G^-1(G(0)) = 0`.
#[derive(Debug, Clone)]
pub struct LiftedGenerators {
    forward: Vec<(PLHomeo, Rational)>,
    backward: Vec<(PLHomeo, Rational)>,
}

impl LiftedGenerators {
    pub fn new(gens: &[PLHomeo]) -> Self {
        let zero = Rational::zero();
        let mut forward = Vec::with_capacity(gens.len());
        let mut backward = Vec::with_capacity(gens.len());
        for g in gens {
            let shift = -g.lift(&zero).floor();
            let g0 = g.lift(&zero) + &shift;
            let inv = g.inverse();
            let back = -inv.lift(&g0);
            forward.push((g.clone(), shift));
            backward.push((inv, back));
        }
        LiftedGenerators { forward, backward }
    }

    /// The lifted action of `w` on a real number.
    pub fn act(&self, w: &Word, t: &Rational) -> Result<Rational, WordError> {
        w.letters().iter().rev().try_fold(t.clone(), |x, l| {
            let table = if l.inverse { &self.backward } else { &self.forward };
            let (map, shift) = table
                .get(l.generator)
                .ok_or(WordError::MissingAssignment(l.generator))?;
            Ok(map.lift(&x) + shift)
        })
    }
}

/// Orders words by their orbit points `u(p)`, `v(p)`, compared in the
/// universal cover: each generator is lifted to a homeomorphism of the line
/// (see [`LiftedGenerators`]) and `p` is read as its coordinate in `[0, 1)`.
/// Comparing lifts makes the order invariant under left multiplication.
pub fn orbit_order_compare(
    u: &Word,
    v: &Word,
    gens: &[PLHomeo],
    p: &CirclePoint,
) -> Result<Ordering, WordError> {
    LiftedGenerators::new(gens).compare(u, v, p)
}

impl LiftedGenerators {
    pub fn compare(&self, u: &Word, v: &Word, p: &CirclePoint) -> Result<Ordering, WordError> {
        let x = p.coordinate();
        Ok(self.act(u, x)?.cmp(&self.act(v, x)?))
    }
}
