//! Free generators read off a verified certificate.

use super::{require_verified, CertError, Certificate, CondIII};
use crate::action::Action;
use crate::exactgeom::ArcSet;
use crate::wordkit::{evaluate_word, Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Recipe {
    /// `[a, a1^-1 a0]` and `[a, a2^-1 a0]`, with `[x, y] = x y x^-1 y^-1`.
    FromII,
    /// `a_i a a_j^-1` and `a_p a a_q^-1` for four distinct indices.
    FromIIIPairs {
        first: (usize, usize),
        second: (usize, usize),
    },
    /// `a_{i1} a a_{i2}^-1, ..., a_{i(2k-1)} a a_{i(2k)}^-1`; the default
    /// pairing is `(1,2), (3,4), ..., (2k-1, 2k)`.
    RankK {
        k: usize,
        pairing: Option<Vec<(usize, usize)>>,
    },
}

impl Recipe {
    pub fn n4_default() -> Self {
        Recipe::FromIIIPairs {
            first: (0, 1),
            second: (2, 3),
        }
    }

    /// The pairing `i -> (i, n - i)` for `n = 2k + 1`.
    pub fn rank_k_mirror(k: usize) -> Self {
        let n = 2 * k + 1;
        Recipe::RankK {
            k,
            pairing: Some((1..=k).map(|i| (i, n - i)).collect()),
        }
    }
}

/// Generator words over the certificate alphabet `a, a0, a1, ...`
/// (`g1 = a`, `g2 = a0`, ...), their values, and for rank-k recipes the set
/// `a_j A` of the first unused index, whose orbit the group acts on freely.
#[derive(Debug, Clone, PartialEq)]
pub struct Generators<E: Action> {
    pub names: Vec<String>,
    pub words: Vec<Word>,
    pub elements: Vec<E>,
    pub seed: Option<ArcSet<E::Point>>,
}

fn alphabet<E: Action>(a: &E, translators: &[E]) -> (Vec<String>, Vec<E>) {
    let mut names = vec!["a".to_string()];
    let mut elems = vec![a.clone()];
    for (i, t) in translators.iter().enumerate() {
        names.push(format!("a{i}"));
        elems.push(t.clone());
    }
    (names, elems)
}

fn translator(i: usize) -> Letter {
    Letter::gen(i + 1)
}

fn pair_word(i: usize, j: usize) -> Word {
    Word::reduce([translator(i), Letter::gen(0), translator(j).inverted()])
}

fn check_indices(indices: &[usize], n: usize) -> Result<(), CertError> {
    let mut seen = vec![false; n];
    for &i in indices {
        if i >= n {
            return Err(CertError::IndexOutOfRange { index: i, n });
        }
        if seen[i] {
            return Err(CertError::IndexClash(i));
        }
        seen[i] = true;
    }
    Ok(())
}

fn from_iii<E: Action>(cert: &CondIII<E>, recipe: &Recipe) -> Result<Generators<E>, CertError> {
    let n = cert.n();
    let (names, elems) = alphabet(&cert.a, &cert.translators);
    let (pairs, seed) = match recipe {
        Recipe::FromIIIPairs { first, second } => {
            if n < 4 {
                return Err(CertError::TooFewTranslates { need: 4, have: n });
            }
            (vec![*first, *second], None)
        }
        Recipe::RankK { k, pairing } => {
            let k = *k;
            if k < 2 {
                return Err(CertError::Recipe(format!("rank must be at least 2, got {k}")));
            }
            if n < 2 * k + 1 {
                return Err(CertError::RankTooLarge {
                    k,
                    need: 2 * k + 1,
                    n,
                });
            }
            let pairs = match pairing {
                Some(p) if p.len() != k => {
                    return Err(CertError::Recipe(format!(
                        "rank {k} needs {k} index pairs, got {}",
                        p.len()
                    )))
                }
                Some(p) => p.clone(),
                None => (0..k).map(|i| (2 * i + 1, 2 * i + 2)).collect(),
            };
            let used: Vec<usize> = pairs.iter().flat_map(|&(i, j)| [i, j]).collect();
            check_indices(&used, n)?;
            let free = (0..n).find(|i| !used.contains(i));
            (pairs, free.map(|j| cert.translators[j].image(&cert.base)))
        }
        Recipe::FromII => unreachable!("handled by caller"),
    };
    let used: Vec<usize> = pairs.iter().flat_map(|&(i, j)| [i, j]).collect();
    check_indices(&used, n)?;
    let words: Vec<Word> = pairs.iter().map(|&(i, j)| pair_word(i, j)).collect();
    finish(names, elems, words, seed)
}

fn finish<E: Action>(
    names: Vec<String>,
    elems: Vec<E>,
    words: Vec<Word>,
    seed: Option<ArcSet<E::Point>>,
) -> Result<Generators<E>, CertError> {
    let elements = words
        .iter()
        .map(|w| evaluate_word(w, &elems).map_err(|e| CertError::Recipe(e.to_string())))
        .collect::<Result<_, _>>()?;
    Ok(Generators {
        names,
        words,
        elements,
        seed,
    })
}

/// Extracts free generators from a certificate that verifies.
pub fn generators<E: Action>(
    cert: &Certificate<E>,
    recipe: &Recipe,
) -> Result<Generators<E>, CertError> {
    require_verified(cert.verify()?)?;
    let iii = match cert {
        Certificate::II(c) => c.to_iii(),
        Certificate::III(c) => c.clone(),
        Certificate::IV(_) => {
            return Err(CertError::Recipe(
                "condition (iv) certificates carry their generators f1, f2 directly".into(),
            ))
        }
    };
    match recipe {
        Recipe::FromII => {
            let (names, elems) = alphabet(&iii.a, &iii.translators[..3]);
            let a = Letter::gen(0);
            let words = [1, 2]
                .iter()
                .map(|&i| {
                    // y = a_i^-1 a0
                    let y = [translator(i).inverted(), translator(0)];
                    let y_inv = [translator(0).inverted(), translator(i)];
                    Word::reduce(
                        std::iter::once(a)
                            .chain(y)
                            .chain(std::iter::once(a.inverted()))
                            .chain(y_inv),
                    )
                })
                .collect();
            finish(names, elems, words, None)
        }
        _ => from_iii(&iii, recipe),
    }
}
