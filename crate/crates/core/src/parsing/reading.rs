use std::fmt;

use super::{ReadingLayer, WindowContext};
use crate::construction::{check_good, AffixMode, RankConstruction, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::words::{find_all, Word};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Occurrence {
    True,
    False,
    WindowTooSmall,
}

impl fmt::Display for Occurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Occurrence::True => "true",
            Occurrence::False => "false",
            Occurrence::WindowTooSmall => "WINDOW_TOO_SMALL",
        })
    }
}

/// Expected occurrence of v_{i,j} at ambient position k. Requires level i to be good.
pub fn expected_occurrence(
    ctx: &WindowContext,
    c: &RankConstruction,
    i: usize,
    j: usize,
    k: i64,
) -> Result<Occurrence> {
    if !check_good(c, i, AffixMode::AllowFull)?.good {
        return Err(Error::NotGood(i));
    }
    let words = c.expander(DEFAULT_BUDGET).level(i)?;
    occurrence_criterion(ctx, &words, j, k)
}

/// The expected-occurrence test on explicit level words, without the goodness
/// precondition: word j occurs at k and no other word occurs at some k' ≤ k
/// reaching at least as far right.
///
/// Only the positions the test reads must be inside the window.
pub fn occurrence_criterion(ctx: &WindowContext, words: &[Word], j: usize, k: i64) -> Result<Occurrence> {
    if j == 0 || j > words.len() {
        return Err(Error::InvalidArgument(format!("word index {j} out of range")));
    }
    let v = &words[j - 1];
    let lv = v.len() as i64;
    if !ctx.covers(k, k + lv - 1) {
        return Ok(Occurrence::WindowTooSmall);
    }
    let occurs_at = |u: &Word, p: i64| u.bits().iter().enumerate().all(|(t, &b)| ctx.at(p + t as i64) == b);
    if !occurs_at(v, k) {
        return Ok(Occurrence::False);
    }
    let rivals: Vec<&Word> = words
        .iter()
        .enumerate()
        .filter(|&(q, u)| q + 1 != j && u.len() >= v.len())
        .map(|(_, u)| u)
        .collect();
    for u in &rivals {
        let lu = u.len() as i64;
        if !ctx.covers(k + lv - lu, k + lu - 1) {
            return Ok(Occurrence::WindowTooSmall);
        }
    }
    for u in rivals {
        let lu = u.len() as i64;
        if (k + lv - lu..=k).any(|p| occurs_at(u, p)) {
            return Ok(Occurrence::False);
        }
    }
    Ok(Occurrence::True)
}

/// One complete reading of a window: `layers[i]` holds the level-i marks.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParseCandidate {
    pub layers: Vec<ReadingLayer>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParseResult {
    pub candidates: Vec<ParseCandidate>,
    pub overflow: bool,
}

/// Readings of the window through level `max_level`.
///
/// Window convention: every mark lies fully inside the window, level-0 marks
/// are the zeros, and each level-(i-1) mark lies inside exactly one level-i
/// mark. Windows whose edges cut a word admit no candidate.
pub fn parse_window(ctx: &WindowContext, c: &RankConstruction, max_level: usize, cap: usize) -> Result<ParseResult> {
    if max_level < 1 {
        return Err(Error::InvalidArgument("max_level must be at least 1".into()));
    }
    let mut e = c.expander(DEFAULT_BUDGET);
    let levels = (1..=max_level).map(|i| e.level(i)).collect::<Result<Vec<_>>>()?;
    parse_window_words(ctx, &levels, cap)
}

/// [`parse_window`] on explicit level words; `levels[0]` holds the level-1 words.
pub fn parse_window_words(ctx: &WindowContext, levels: &[Vec<Word>], cap: usize) -> Result<ParseResult> {
    if levels.is_empty() {
        return Err(Error::InvalidArgument("need at least one level".into()));
    }
    if cap == 0 {
        return Err(Error::InvalidArgument("cap must be at least 1".into()));
    }
    let bits = ctx.word.bits();
    let occ: Vec<Vec<Vec<usize>>> = levels
        .iter()
        .map(|words| {
            let mut at = vec![Vec::new(); bits.len()];
            let mut order: Vec<usize> = (0..words.len()).collect();
            order.sort_by_key(|&q| (std::cmp::Reverse(words[q].len()), q));
            for q in order {
                for p in find_all(words[q].bits(), bits) {
                    at[p].push(q + 1);
                }
            }
            at
        })
        .collect();
    let zeros: Vec<Mark> = bits
        .iter()
        .enumerate()
        .filter(|&(_, &b)| b == 0)
        .map(|(p, _)| Mark {
            start: p,
            end: p + 1,
            word: 1,
        })
        .collect();
    let mut search = Search {
        levels,
        occ: &occ,
        cap,
        stack: vec![zeros],
        out: ParseResult {
            candidates: Vec::new(),
            overflow: false,
        },
        origin: ctx.origin,
    };
    search.level(0);
    Ok(search.out)
}

#[derive(Clone, Copy)]
struct Mark {
    start: usize,
    end: usize,
    word: usize,
}

struct Search<'a> {
    levels: &'a [Vec<Word>],
    occ: &'a [Vec<Vec<usize>>],
    cap: usize,
    stack: Vec<Vec<Mark>>,
    out: ParseResult,
    origin: i64,
}

impl Search<'_> {
    fn done(&self) -> bool {
        self.out.overflow
    }

    /// Tiles the marks of the top layer with words of level `li + 1`.
    fn level(&mut self, li: usize) {
        if li == self.levels.len() {
            if self.out.candidates.len() == self.cap {
                self.out.overflow = true;
                return;
            }
            let layers = self
                .stack
                .iter()
                .enumerate()
                .map(|(level, marks)| ReadingLayer {
                    level,
                    marks: marks.iter().map(|m| (self.origin + m.start as i64, m.word)).collect(),
                })
                .collect();
            self.out.candidates.push(ParseCandidate { layers });
            return;
        }
        let mut cur = Vec::new();
        self.tile(li, 0, &mut cur);
    }

    fn tile(&mut self, li: usize, t: usize, cur: &mut Vec<Mark>) {
        let lower_len = self.stack[li].len();
        if t == lower_len {
            self.stack.push(cur.clone());
            self.level(li + 1);
            self.stack.pop();
            return;
        }
        let start = self.stack[li][t].start;
        let occ = self.occ;
        for &q in &occ[li][start] {
            if self.done() {
                return;
            }
            let end = start + self.levels[li][q - 1].len();
            let lower = &self.stack[li];
            let u = t + lower[t..].partition_point(|m| m.start < end);
            if lower[u - 1].end > end {
                continue;
            }
            cur.push(Mark { start, end, word: q });
            self.tile(li, u, cur);
            cur.pop();
        }
    }
}
