use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use super::RankConstruction;
use crate::error::{Error, Result};
use crate::words::Word;

/// Default materialization budget: 64 MiB of symbols.
pub const DEFAULT_BUDGET: u64 = 64 * 1024 * 1024;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExpandMode {
    Materialize,
    LengthOnly,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Expansion {
    Word(Word),
    Length(BigUint),
}

/// Memoizing expander confined to one borrower; drop it to discard the cache.
pub struct Expander<'a> {
    c: &'a RankConstruction,
    budget: u64,
    words: HashMap<(usize, usize), Word>,
    lengths: HashMap<(usize, usize), BigUint>,
}

impl<'a> Expander<'a> {
    pub fn new(c: &'a RankConstruction, budget: u64) -> Expander<'a> {
        Expander {
            c,
            budget,
            words: HashMap::new(),
            lengths: HashMap::new(),
        }
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    /// Exact length of v_{i,j}.
    pub fn length(&mut self, i: usize, j: usize) -> Result<BigUint> {
        self.c.check_index(i, j)?;
        Ok(self.length_unchecked(i, j))
    }

    fn length_unchecked(&mut self, i: usize, j: usize) -> BigUint {
        if i == 0 {
            return BigUint::from(1u8);
        }
        if let Some(l) = self.lengths.get(&(i, j)) {
            return l.clone();
        }
        let c = self.c;
        let building = &c.step(i - 1).unwrap().buildings[j - 1];
        let mut total = BigUint::zero();
        for seg in &building.segments {
            total += self.length_unchecked(i - 1, seg.index);
            total += seg.spacer.unwrap_or(0);
        }
        self.lengths.insert((i, j), total.clone());
        total
    }

    /// Length of v_{i,j} as a machine integer, if it fits.
    pub fn length_u64(&mut self, i: usize, j: usize) -> Result<u64> {
        let l = self.length(i, j)?;
        l.to_u64().ok_or_else(|| Error::BudgetExceeded {
            needed: l.to_string(),
            budget: self.budget,
        })
    }

    /// Materializes v_{i,j}, refusing words longer than the budget.
    pub fn word(&mut self, i: usize, j: usize) -> Result<Word> {
        let len = self.length(i, j)?;
        if len > BigUint::from(self.budget) {
            return Err(Error::BudgetExceeded {
                needed: len.to_string(),
                budget: self.budget,
            });
        }
        Ok(self.word_unchecked(i, j))
    }

    fn word_unchecked(&mut self, i: usize, j: usize) -> Word {
        if i == 0 {
            return Word::zeros(1);
        }
        if let Some(w) = self.words.get(&(i, j)) {
            return w.clone();
        }
        let c = self.c;
        let building = &c.step(i - 1).unwrap().buildings[j - 1];
        let len = self.length_unchecked(i, j).to_usize().unwrap();
        let mut bits = Vec::with_capacity(len);
        for seg in &building.segments {
            let sub = self.word_unchecked(i - 1, seg.index);
            bits.extend_from_slice(sub.bits());
            bits.resize(bits.len() + seg.spacer.unwrap_or(0) as usize, 1);
        }
        let w = Word::from_bits_unchecked(bits);
        self.words.insert((i, j), w.clone());
        w
    }

    pub fn expand(&mut self, i: usize, j: usize, mode: ExpandMode) -> Result<Expansion> {
        match mode {
            ExpandMode::Materialize => self.word(i, j).map(Expansion::Word),
            ExpandMode::LengthOnly => self.length(i, j).map(Expansion::Length),
        }
    }

    /// All words of level i, in index order.
    pub fn level(&mut self, i: usize) -> Result<Vec<Word>> {
        self.c.check_reachable(i)?;
        (1..=self.c.arity(i)).map(|j| self.word(i, j)).collect()
    }

    /// All lengths of level i, in index order.
    pub fn level_lengths(&mut self, i: usize) -> Result<Vec<BigUint>> {
        self.c.check_reachable(i)?;
        (1..=self.c.arity(i)).map(|j| self.length(i, j)).collect()
    }
}

impl RankConstruction {
    pub fn expander(&self, budget: u64) -> Expander<'_> {
        Expander::new(self, budget)
    }

    /// v_{i,j} under the default budget.
    pub fn expand(&self, i: usize, j: usize) -> Result<Word> {
        self.expander(DEFAULT_BUDGET).word(i, j)
    }

    pub fn length(&self, i: usize, j: usize) -> Result<BigUint> {
        self.expander(DEFAULT_BUDGET).length(i, j)
    }

    pub fn level_words(&self, i: usize) -> Result<Vec<Word>> {
        self.expander(DEFAULT_BUDGET).level(i)
    }
}
