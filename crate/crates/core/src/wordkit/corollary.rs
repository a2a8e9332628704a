use super::enumerate::enumerate_reduced;
use super::word::{Letter, Word, WordError};
use crate::report::Report;

/// The free group acting on itself by left multiplication, restricted to
/// the ball of reduced words of length `<= radius`.
///
/// `A'` is the set of nonempty reduced words whose first letter is `a` or
/// `a^-1` (`a = g1`, `b = g2`). The transversal is trivial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegularActionModel {
    pub rank: usize,
    pub radius: usize,
}

impl RegularActionModel {
    pub fn in_a_prime(&self, w: &Word) -> bool {
        w.first().is_some_and(|l| l.generator == 0)
    }

    /// `w ∈ hA'`, i.e. `h^-1 w ∈ A'`.
    pub fn in_translate(&self, h: &Word, w: &Word) -> bool {
        self.in_a_prime(&h.inverse().mul(w))
    }

    fn ball(&self) -> impl Iterator<Item = Word> {
        std::iter::once(Word::empty()).chain(enumerate_reduced(self.rank, self.radius))
    }

    /// Covering `F = A' ∪ aA'` on words of length `< radius`, and pairwise
    /// disjointness of `A'`, `bA'`, `b^2A'` on the whole ball.
    pub fn check(&self) -> Report {
        let a = Word::reduce([Letter::gen(0)]);
        let b = Word::reduce([Letter::gen(1)]);
        let bb = b.mul(&b);
        let mut report = Report::new(format!("free group ball check, radius {}", self.radius));

        let uncovered = self
            .ball()
            .filter(|w| w.len() < self.radius)
            .find(|w| !self.in_a_prime(w) && !self.in_translate(&a, w));
        report.check(
            format!("F = A' u aA' on words of length <= {}", self.radius - 1),
            uncovered.map(|w| format!("{w} is in neither A' nor aA'")),
        );

        let translates = [("A'", Word::empty()), ("bA'", b), ("b^2A'", bb)];
        for i in 0..3 {
            for j in i + 1..3 {
                let shared = self.ball().find(|w| {
                    self.in_translate(&translates[i].1, w) && self.in_translate(&translates[j].1, w)
                });
                report.check(
                    format!(
                        "{}, {} disjoint on words of length <= {}",
                        translates[i].0, translates[j].0, self.radius
                    ),
                    shared.map(|w| format!("{w} lies in both")),
                );
            }
        }
        report
    }
}

pub fn corollary_ball_check(radius: usize) -> Result<Report, WordError> {
    if radius < 2 {
        return Err(WordError::Domain(format!(
            "ball radius must be at least 2, got {radius}"
        )));
    }
    Ok(RegularActionModel { rank: 2, radius }.check())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_examples() {
        let m = RegularActionModel { rank: 2, radius: 7 };
        let a = Word::parse("g1").unwrap();
        let b = Word::parse("g2").unwrap();
        let ab = Word::parse("g1 g2").unwrap();
        // b = a (a^-1 b)
        assert!(m.in_translate(&a, &b));
        assert!(!m.in_a_prime(&b));
        assert!(m.in_a_prime(&ab));
        assert!(!m.in_translate(&b, &ab));
        assert!(!m.in_a_prime(&Word::empty()));
    }

    #[test]
    fn radius_seven_passes() {
        let r = corollary_ball_check(7).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.checks.len(), 4);
        assert!(corollary_ball_check(1).is_err());
    }
}
