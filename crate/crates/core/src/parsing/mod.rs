//! Decoding finite windows against constructions: building enumeration,
//! built-from detection, readings, and expected occurrences.

mod buildings;
mod detect;
mod probe;
mod reading;

pub use buildings::{enumerate_buildings, BuildingList};
pub use detect::detect_built_from;
pub use probe::{rank1_witness_probe, rank1_witness_probe_words, unique_readability_probe, ProbeOutcome, Rank1Report};
pub use reading::{
    expected_occurrence, occurrence_criterion, parse_window, parse_window_words, Occurrence, ParseCandidate,
    ParseResult,
};

use crate::error::{Error, Result};
use crate::words::Word;

/// A finite view of a bi-infinite point: `word` sits at ambient positions
/// origin..origin+|word|.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WindowContext {
    pub word: Word,
    pub origin: i64,
}

impl WindowContext {
    pub fn new(word: Word, origin: i64) -> Result<WindowContext> {
        if word.is_empty() {
            return Err(Error::InvalidArgument("window must be nonempty".into()));
        }
        Ok(WindowContext { word, origin })
    }

    /// Ambient position one past the last symbol.
    pub fn end(&self) -> i64 {
        self.origin + self.word.len() as i64
    }

    /// Whether ambient positions lo..=hi all lie in the window.
    pub fn covers(&self, lo: i64, hi: i64) -> bool {
        lo >= self.origin && hi < self.end()
    }

    pub fn at(&self, k: i64) -> u8 {
        self.word.bits()[(k - self.origin) as usize]
    }
}

/// Marks (ambient position, word index) of one level of a reading.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReadingLayer {
    pub level: usize,
    pub marks: Vec<(i64, usize)>,
}
