//! Ping-pong certificates: the data for conditions (ii), (iii) and (iv), their
//! exact verification, the constructive transformations between them, and
//! extraction of free generators.
//!
//! Conventions: `A` is [`CondIII::base`], `Y` is [`CondIII::ambient`], the
//! covering element is `a`, and the translating elements are `a0, a1, ...`.
//! Invariance of `Y` is checked as equality `hY = Y`, not inclusion.

mod generators;
mod transform;

use thiserror::Error;

use crate::action::Action;
use crate::exactgeom::ArcSet;
use crate::report::Report;

pub use generators::{generators, Generators, Recipe};

/// Input errors. A certificate that is well formed but false is not an
/// error; it yields a failing [`Report`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertError {
    #[error("element {name} is not an orientation-preserving bijection: {reason}")]
    InvalidElement { name: String, reason: String },
    #[error("certificate does not verify\n{0}")]
    NotVerified(Report),
    #[error("need at least {need} translates, certificate has {have}")]
    TooFewTranslates { need: usize, have: usize },
    #[error("translate index {index} out of range (n = {n})")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("translate index {0} used more than once")]
    IndexClash(usize),
    #[error("rank {k} needs n >= {need}, certificate has n = {n}")]
    RankTooLarge { k: usize, need: usize, n: usize },
    #[error("{0}")]
    Recipe(String),
}

/// Condition (ii): `Y = A ∪ aA`, three disjoint translates, `Y` invariant.
#[derive(Debug, Clone, PartialEq)]
pub struct CondII<E: Action> {
    pub base: ArcSet<E::Point>,
    pub ambient: ArcSet<E::Point>,
    pub a: E,
    pub a0: E,
    pub a1: E,
    pub a2: E,
}

/// Condition (iii) for one fixed `n = translators.len()`.
#[derive(Debug, Clone, PartialEq)]
pub struct CondIII<E: Action> {
    pub base: ArcSet<E::Point>,
    pub ambient: ArcSet<E::Point>,
    pub a: E,
    pub translators: Vec<E>,
}

/// Condition (iv): the quasi-Schottky configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct CondIV<E: Action> {
    pub f1: E,
    pub f2: E,
    pub u0: ArcSet<E::Point>,
    pub u1p: ArcSet<E::Point>,
    pub u1m: ArcSet<E::Point>,
    pub u2p: ArcSet<E::Point>,
    pub u2m: ArcSet<E::Point>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Certificate<E: Action> {
    II(CondII<E>),
    III(CondIII<E>),
    IV(CondIV<E>),
}

fn validate<E: Action>(name: &str, e: &E) -> Result<(), CertError> {
    e.validate().map_err(|reason| CertError::InvalidElement {
        name: name.to_string(),
        reason,
    })
}

fn verify_translates<E: Action>(
    subject: String,
    base: &ArcSet<E::Point>,
    ambient: &ArcSet<E::Point>,
    a: &E,
    translators: &[E],
) -> Result<Report, CertError> {
    validate("a", a)?;
    for (i, t) in translators.iter().enumerate() {
        validate(&format!("a{i}"), t)?;
    }
    let mut report = Report::new(subject);
    report.check("A nonempty", base.is_empty().then(|| "A = empty".to_string()));
    let outside = base.difference(ambient);
    report.check("A within Y", (!outside.is_empty()).then(|| format!("A \\ Y = {outside}")));
    let cover = base.union(&a.image(base));
    let diff = cover.symmetric_difference(ambient);
    report.check(
        "Y = A u aA",
        (!diff.is_empty()).then(|| format!("(A u aA) xor Y = {diff}")),
    );
    let translates: Vec<_> = translators.iter().map(|t| t.image(base)).collect();
    for i in 0..translates.len() {
        for j in i + 1..translates.len() {
            let meet = translates[i].intersection(&translates[j]);
            report.check(
                format!("a{i}A, a{j}A disjoint"),
                (!meet.is_empty()).then(|| format!("a{i}A n a{j}A = {meet}")),
            );
        }
    }
    let named = std::iter::once(("a".to_string(), a))
        .chain(translators.iter().enumerate().map(|(i, t)| (format!("a{i}"), t)));
    for (name, h) in named {
        let moved = h.image(ambient).symmetric_difference(ambient);
        report.check(
            format!("{name}Y = Y"),
            (!moved.is_empty()).then(|| format!("{name}Y xor Y = {moved}")),
        );
    }
    Ok(report)
}

impl<E: Action> CondII<E> {
    pub fn verify(&self) -> Result<Report, CertError> {
        verify_translates(
            "condition (ii)".to_string(),
            &self.base,
            &self.ambient,
            &self.a,
            &[self.a0.clone(), self.a1.clone(), self.a2.clone()],
        )
    }

    /// The same data read as condition (iii) with `n = 3`.
    pub fn to_iii(&self) -> CondIII<E> {
        CondIII {
            base: self.base.clone(),
            ambient: self.ambient.clone(),
            a: self.a.clone(),
            translators: vec![self.a0.clone(), self.a1.clone(), self.a2.clone()],
        }
    }
}

impl<E: Action> CondIII<E> {
    pub fn n(&self) -> usize {
        self.translators.len()
    }

    pub fn verify(&self) -> Result<Report, CertError> {
        if self.n() < 3 {
            return Err(CertError::TooFewTranslates {
                need: 3,
                have: self.n(),
            });
        }
        verify_translates(
            format!("condition (iii), n = {}", self.n()),
            &self.base,
            &self.ambient,
            &self.a,
            &self.translators,
        )
    }

    /// `a_i A` for every translator.
    pub fn translates(&self) -> Vec<ArcSet<E::Point>> {
        self.translators.iter().map(|t| t.image(&self.base)).collect()
    }
}

impl<E: Action> CondIV<E> {
    pub fn sets(&self) -> [(&'static str, &ArcSet<E::Point>); 5] {
        [
            ("U0", &self.u0),
            ("U1+", &self.u1p),
            ("U1-", &self.u1m),
            ("U2+", &self.u2p),
            ("U2-", &self.u2m),
        ]
    }

    pub fn verify(&self) -> Result<Report, CertError> {
        validate("f1", &self.f1)?;
        validate("f2", &self.f2)?;
        let mut report = Report::new("condition (iv)");
        let sets = self.sets();
        for (name, s) in &sets {
            report.check(format!("{name} nonempty"), s.is_empty().then(|| format!("{name} = empty")));
        }
        for i in 0..sets.len() {
            for j in i + 1..sets.len() {
                let meet = sets[i].1.intersection(sets[j].1);
                report.check(
                    format!("{}, {} disjoint", sets[i].0, sets[j].0),
                    (!meet.is_empty()).then(|| format!("{} n {} = {meet}", sets[i].0, sets[j].0)),
                );
            }
        }
        let (f1i, f2i) = (self.f1.inverse(), self.f2.inverse());
        let union = |parts: [&ArcSet<E::Point>; 4]| {
            parts.iter().fold(ArcSet::empty(), |acc, s| acc.union(s))
        };
        let clauses = [
            (
                "f1(U0 u U1+ u U2+ u U2-) within U1+",
                &self.f1,
                union([&self.u0, &self.u1p, &self.u2p, &self.u2m]),
                &self.u1p,
            ),
            (
                "f1^-1(U0 u U1- u U2+ u U2-) within U1-",
                &f1i,
                union([&self.u0, &self.u1m, &self.u2p, &self.u2m]),
                &self.u1m,
            ),
            (
                "f2(U0 u U2+ u U1+ u U1-) within U2+",
                &self.f2,
                union([&self.u0, &self.u2p, &self.u1p, &self.u1m]),
                &self.u2p,
            ),
            (
                "f2^-1(U0 u U2- u U1+ u U1-) within U2-",
                &f2i,
                union([&self.u0, &self.u2m, &self.u1p, &self.u1m]),
                &self.u2m,
            ),
        ];
        for (name, f, source, target) in clauses {
            let escaped = f.image(&source).difference(target);
            report.check(
                name,
                (!escaped.is_empty()).then(|| format!("image outside target = {escaped}")),
            );
        }
        Ok(report)
    }
}

impl<E: Action> Certificate<E> {
    pub fn verify(&self) -> Result<Report, CertError> {
        match self {
            Certificate::II(c) => c.verify(),
            Certificate::III(c) => c.verify(),
            Certificate::IV(c) => c.verify(),
        }
    }

    pub fn condition_name(&self) -> &'static str {
        match self {
            Certificate::II(_) => "ii",
            Certificate::III(_) => "iii",
            Certificate::IV(_) => "iv",
        }
    }
}

/// Runs `verify` and turns a failing verdict into [`CertError::NotVerified`].
pub(crate) fn require_verified(report: Report) -> Result<(), CertError> {
    if report.passed() {
        Ok(())
    } else {
        Err(CertError::NotVerified(report))
    }
}
