use super::{parse_window_words, WindowContext};
use crate::construction::{subword_sets, RankConstruction, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::words::Word;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ProbeOutcome {
    /// `complete` is false when the window budget ran out first.
    NoViolation {
        windows_checked: usize,
        complete: bool,
    },
    Counterexample {
        window: Word,
        candidates: usize,
    },
}

/// Searches subwords of v_{source_level,1} (default level + 2) of lengths
/// 1..=window_len for a window with two readings through `level`.
///
/// Windows are enumerated per length in lexicographic order; `budget` caps the
/// number of windows parsed.
pub fn unique_readability_probe(
    c: &RankConstruction,
    level: usize,
    window_len: usize,
    budget: usize,
    source_level: Option<usize>,
) -> Result<ProbeOutcome> {
    if level < 1 {
        return Err(Error::InvalidArgument("level must be at least 1".into()));
    }
    let source = source_level.unwrap_or(level + 2);
    if source < level {
        return Err(Error::InvalidArgument("source level below probed level".into()));
    }
    c.check_reachable(source)?;
    let mut e = c.expander(DEFAULT_BUDGET);
    let levels = (1..=level).map(|i| e.level(i)).collect::<Result<Vec<_>>>()?;
    let source_len = e.length(source, 1)?;
    let top = if source_len < window_len.into() {
        usize::try_from(&source_len).expect("below window_len")
    } else {
        window_len
    };
    let mut checked = 0;
    if top == 0 {
        return Ok(ProbeOutcome::NoViolation {
            windows_checked: 0,
            complete: true,
        });
    }
    // one summary at the longest length yields every shorter language
    let sets = subword_sets(c, top, source)?;
    let summary = &sets[source][0];
    for n in 1..=top {
        for window in summary.members_of_len(n) {
            if checked == budget {
                return Ok(ProbeOutcome::NoViolation {
                    windows_checked: checked,
                    complete: false,
                });
            }
            checked += 1;
            let ctx = WindowContext::new(window, 0)?;
            let r = parse_window_words(&ctx, &levels, 2)?;
            if r.candidates.len() >= 2 {
                return Ok(ProbeOutcome::Counterexample {
                    window: ctx.word,
                    candidates: r.candidates.len() + r.overflow as usize,
                });
            }
        }
    }
    Ok(ProbeOutcome::NoViolation {
        windows_checked: checked,
        complete: true,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Rank1Level {
    pub level: usize,
    pub pass: bool,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Rank1Report {
    pub levels: Vec<Rank1Level>,
}

impl Rank1Report {
    pub fn all_pass(&self) -> bool {
        self.levels.iter().all(|l| l.pass)
    }

    pub fn first_failure(&self) -> Option<usize> {
        self.levels.iter().find(|l| !l.pass).map(|l| l.level)
    }
}

/// For i < depth, whether v_{i+1} is an initial segment of a word built
/// from v_i of length at most |v_{i+1}| + |v_i|.
pub fn rank1_witness_probe(c: &RankConstruction, depth: usize) -> Result<Rank1Report> {
    c.check_reachable(depth)?;
    if let Some(i) = (0..=depth).find(|&i| c.arity(i) != 1) {
        return Err(Error::InvalidArgument(format!(
            "level {i} has arity {}, expected 1",
            c.arity(i)
        )));
    }
    let mut e = c.expander(DEFAULT_BUDGET);
    let words = (0..=depth).map(|i| e.word(i, 1)).collect::<Result<Vec<_>>>()?;
    Ok(rank1_witness_probe_words(&words))
}

/// [`rank1_witness_probe`] on an explicit word sequence; `words[i]` is level i.
pub fn rank1_witness_probe_words(words: &[Word]) -> Rank1Report {
    let levels = words
        .windows(2)
        .enumerate()
        .map(|(i, pair)| Rank1Level {
            level: i,
            pass: extends_built(&pair[1], &pair[0]),
        })
        .collect();
    Rank1Report { levels }
}

/// Since v starts with 0, parsing u as v 1^{s_1} v … is forced; the last
/// copy may be cut by the end of u.
fn extends_built(u: &Word, v: &Word) -> bool {
    let (u, v) = (u.bits(), v.bits());
    if v.is_empty() || v[0] != 0 {
        return false;
    }
    let mut p = 0;
    let mut copies = 0;
    let mut completion = u.len();
    while p < u.len() {
        let rest = &u[p..];
        if rest.len() >= v.len() {
            if !rest.starts_with(v) {
                return false;
            }
            p += v.len();
            copies += 1;
            while p < u.len() && u[p] == 1 {
                p += 1;
            }
        } else {
            if !v.starts_with(rest) {
                return false;
            }
            completion += v.len() - rest.len();
            copies += 1;
            p = u.len();
        }
    }
    if copies < 2 {
        completion += v.len();
    }
    completion <= u.len() + v.len()
}
