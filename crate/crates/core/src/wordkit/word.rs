use std::fmt;

use thiserror::Error;

/// A generator or its inverse. `generator` is 0-based; the text form is 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn gen(generator: usize) -> Self {
        Letter {
            generator,
            inverse: false,
        }
    }

    pub fn inv(generator: usize) -> Self {
        Letter {
            generator,
            inverse: true,
        }
    }

    pub fn inverted(self) -> Self {
        Letter {
            inverse: !self.inverse,
            ..self
        }
    }

    fn cancels(self, other: Letter) -> bool {
        self.generator == other.generator && self.inverse != other.inverse
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = if self.inverse { 'G' } else { 'g' };
        write!(f, "{g}{}", self.generator + 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("bad letter `{0}` (expected g<N> or G<N> with N >= 1)")]
    BadLetter(String),
    #[error("no element assigned to generator g{}", .0 + 1)]
    MissingAssignment(usize),
    #[error("{0}")]
    Domain(String),
}

/// A freely reduced word; the empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Free reduction of an arbitrary letter sequence.
    pub fn reduce(raw: impl IntoIterator<Item = Letter>) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in raw {
            match out.last() {
                Some(&top) if top.cancels(l) => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        Word(out)
    }

    /// Wraps letters already known to be reduced.
    pub(crate) fn from_reduced(letters: Vec<Letter>) -> Self {
        debug_assert!(letters.windows(2).all(|w| !w[0].cancels(w[1])));
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    /// Reduced product `self · other`.
    pub fn mul(&self, other: &Word) -> Word {
        Word::reduce(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverted()).collect())
    }

    /// Largest generator index used plus one.
    pub fn rank_needed(&self) -> usize {
        self.0.iter().map(|l| l.generator + 1).max().unwrap_or(0)
    }

    /// Parses `g1 g2 G1`. Uppercase letters are inverses; the result is reduced.
    pub fn parse(text: &str) -> Result<Word, WordError> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            let inverse = match tok.chars().next() {
                Some('g') => false,
                Some('G') => true,
                _ => return Err(WordError::BadLetter(tok.to_string())),
            };
            let n: usize = tok[1..]
                .parse()
                .map_err(|_| WordError::BadLetter(tok.to_string()))?;
            if n == 0 {
                return Err(WordError::BadLetter(tok.to_string()));
            }
            letters.push(Letter {
                generator: n - 1,
                inverse,
            });
        }
        Ok(Word::reduce(letters))
    }

    /// Renders with custom generator names, `name^-1` for inverses.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        self.0
            .iter()
            .map(|l| {
                let name = names
                    .get(l.generator)
                    .cloned()
                    .unwrap_or_else(|| format!("g{}", l.generator + 1));
                if l.inverse {
                    format!("{name}^-1")
                } else {
                    name
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}
