//! Constructive steps: `a0`-normalization, the inequality lemma as a
//! self-test, amplification from `n` to `n + 1` translates, and the
//! conversion of five translates into a quasi-Schottky configuration.

use super::{require_verified, CertError, CondII, CondIII, CondIV};
use crate::action::Action;
use crate::report::Report;

impl<E: Action> CondII<E> {
    /// Replaces `(a0, a1, a2)` by `(1, a0^-1 a1, a0^-1 a2)`.
    pub fn normalize_a0(&self) -> Result<CondII<E>, CertError> {
        require_verified(self.verify()?)?;
        let inv = self.a0.inverse();
        Ok(CondII {
            base: self.base.clone(),
            ambient: self.ambient.clone(),
            a: self.a.clone(),
            a0: E::identity(),
            a1: inv.compose(&self.a1),
            a2: inv.compose(&self.a2),
        })
    }
}

impl<E: Action> CondIII<E> {
    /// Checks, for every `l` and every `i != j`,
    /// `a_l a^-1 a_j^-1 (a_i A) ⊆ a_l A` and `a_l a a_j^-1 (a_i A) ⊆ a_l A`.
    ///
    /// These hold for every verified certificate, so a failure here points
    /// at a bug in the set or element arithmetic.
    pub fn inequality_lemma_check(&self) -> Result<Report, CertError> {
        require_verified(self.verify()?)?;
        let n = self.n();
        let translates = self.translates();
        let a_inv = self.a.inverse();
        let inverses: Vec<E> = self.translators.iter().map(|t| t.inverse()).collect();
        let mut report = Report::new(format!("inequality lemma, n = {n}"));
        for (l, al) in self.translators.iter().enumerate() {
            for j in 0..n {
                let movers = [
                    ("a^-1", al.compose(&a_inv).compose(&inverses[j])),
                    ("a", al.compose(&self.a).compose(&inverses[j])),
                ];
                for (label, mover) in &movers {
                    for (i, ai_a) in translates.iter().enumerate() {
                        if i == j {
                            continue;
                        }
                        let escaped = mover.image(ai_a).difference(&translates[l]);
                        report.check(
                            format!("a{l} {label} a{j}^-1 (a{i}A) within a{l}A"),
                            (!escaped.is_empty()).then(|| format!("outside a{l}A: {escaped}")),
                        );
                    }
                }
            }
        }
        Ok(report)
    }

    /// One step of the `(ii) => (iii)` induction: keeps `a_0 .. a_{n-2}` and
    /// appends `c a_0` and `c a_1` with `c = a_{n-1} a a_{n-1}^-1`.
    /// The two new translates lie inside `a_{n-1} A`.
    pub fn amplify(&self) -> Result<CondIII<E>, CertError> {
        require_verified(self.verify()?)?;
        let n = self.n();
        let last = &self.translators[n - 1];
        let conj = last.compose(&self.a).compose(&last.inverse());
        let mut translators: Vec<E> = self.translators[..n - 1].to_vec();
        translators.push(conj.compose(&self.translators[0]));
        translators.push(conj.compose(&self.translators[1]));
        Ok(CondIII {
            base: self.base.clone(),
            ambient: self.ambient.clone(),
            a: self.a.clone(),
            translators,
        })
    }

    /// Applies [`CondIII::amplify`] until there are `target` translates.
    pub fn amplify_to(&self, target: usize) -> Result<CondIII<E>, CertError> {
        let mut cur = self.clone();
        while cur.n() < target {
            cur = cur.amplify()?;
        }
        Ok(cur)
    }

    /// `(iii) => (iv)` using the first five translates:
    /// `f1 = a1 a a2^-1`, `f2 = a3 a a4^-1`, `U0 = a0A`, `U1± = a1A, a2A`,
    /// `U2± = a3A, a4A`.
    pub fn to_schottky(&self) -> Result<CondIV<E>, CertError> {
        if self.n() < 5 {
            return Err(CertError::TooFewTranslates {
                need: 5,
                have: self.n(),
            });
        }
        require_verified(self.verify()?)?;
        let t = &self.translators;
        let sets = self.translates();
        Ok(CondIV {
            f1: t[1].compose(&self.a).compose(&t[2].inverse()),
            f2: t[3].compose(&self.a).compose(&t[4].inverse()),
            u0: sets[0].clone(),
            u1p: sets[1].clone(),
            u1m: sets[2].clone(),
            u2p: sets[3].clone(),
            u2m: sets[4].clone(),
        })
    }
}
