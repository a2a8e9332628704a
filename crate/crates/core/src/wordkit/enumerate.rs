use std::ops::ControlFlow;

use super::word::{Letter, Word};
use crate::action::Action;

fn letter(index: usize) -> Letter {
    Letter {
        generator: index / 2,
        inverse: index % 2 == 1,
    }
}

fn cancels(prev: Option<&usize>, next: usize) -> bool {
    prev.is_some_and(|&p| p / 2 == next / 2 && p != next)
}

/// Every reduced word of length `1..=max_len` over `rank` generators, once
/// each, depth-first with letters ordered `g1, G1, g2, G2, ...`.
pub fn enumerate_reduced(rank: usize, max_len: usize) -> ReducedWords {
    ReducedWords {
        alphabet: 2 * rank,
        max_len,
        stack: Vec::new(),
        started: false,
    }
}

#[derive(Debug, Clone)]
pub struct ReducedWords {
    alphabet: usize,
    max_len: usize,
    stack: Vec<usize>,
    started: bool,
}

impl ReducedWords {
    fn current(&self) -> Word {
        Word::from_reduced(self.stack.iter().map(|&i| letter(i)).collect())
    }

    fn first_child(&self) -> Option<usize> {
        (0..self.alphabet).find(|&i| !cancels(self.stack.last(), i))
    }
}

impl Iterator for ReducedWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if !self.started {
            self.started = true;
            if self.max_len == 0 || self.alphabet == 0 {
                return None;
            }
            self.stack.push(0);
            return Some(self.current());
        }
        if self.stack.is_empty() {
            return None;
        }
        if self.stack.len() < self.max_len {
            if let Some(c) = self.first_child() {
                self.stack.push(c);
                return Some(self.current());
            }
        }
        while let Some(last) = self.stack.pop() {
            let next = (last + 1..self.alphabet).find(|&i| !cancels(self.stack.last(), i));
            if let Some(c) = next {
                self.stack.push(c);
                return Some(self.current());
            }
        }
        None
    }
}

/// Depth-first walk over nonempty reduced words of length `<= max_len`,
/// carrying each word's value (left-to-right product of `gens`).
pub(crate) fn walk_reduced<E: Action>(
    gens: &[E],
    max_len: usize,
    mut visit: impl FnMut(&[Letter], &E) -> ControlFlow<()>,
) {
    let table: Vec<E> = gens
        .iter()
        .flat_map(|g| [g.clone(), g.inverse()])
        .collect();
    let mut word = Vec::with_capacity(max_len);
    let _ = descend(&table, max_len, &E::identity(), &mut word, &mut visit);
}

fn descend<E: Action>(
    table: &[E],
    max_len: usize,
    value: &E,
    word: &mut Vec<(usize, Letter)>,
    visit: &mut impl FnMut(&[Letter], &E) -> ControlFlow<()>,
) -> ControlFlow<()> {
    if word.len() == max_len {
        return ControlFlow::Continue(());
    }
    let prev = word.last().map(|(i, _)| *i);
    for (i, elem) in table.iter().enumerate() {
        if cancels(prev.as_ref(), i) {
            continue;
        }
        let next = value.compose(elem);
        word.push((i, letter(i)));
        let letters: Vec<Letter> = word.iter().map(|(_, l)| *l).collect();
        visit(&letters, &next)?;
        descend(table, max_len, &next, word, visit)?;
        word.pop();
    }
    ControlFlow::Continue(())
}
