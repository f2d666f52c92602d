//! Rank-n constructions: levels of words v_{i,j}, each built from the previous
//! level by a building (blocks separated by runs of 1s).
//!
//! Word indices are 1-based everywhere, matching v_{i,j}. Step i builds level
//! i+1 from level i; level 0 consists of `arity0` copies of "0".

mod chains;
mod checks;
mod expand;
mod language;

use std::fmt;

pub use chains::{from_chains, ChainAssembly, ChainLevel};
pub use checks::check_good_words;
pub use checks::{
    check_good, check_proper, expected_subwords, minimality_verdict, rank_bounds, spacer_stats, AffixMode, GoodReport,
    GoodWitness, Minimality, MinimalityReport, ProperReport, ProperWitness, RankBoundReport, SpacerStats,
};
pub use expand::{ExpandMode, Expander, Expansion, DEFAULT_BUDGET};
pub use language::{language, language_profile, run_stats, subword_sets, RunStats, SubwordSummary};

use crate::error::{Error, Result};

/// One block of a building: word `index` of the previous level followed by
/// `spacer` ones (absent on the final block).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Segment {
    pub index: usize,
    pub spacer: Option<u64>,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Building {
    pub segments: Vec<Segment>,
}

impl Building {
    /// Building from block indices and the spacers between them.
    pub fn new(blocks: &[usize], spacers: &[u64]) -> Result<Building> {
        if blocks.len() < 2 || spacers.len() + 1 != blocks.len() {
            return Err(Error::InvalidConstruction(format!(
                "a building needs at least 2 blocks and one spacer between each pair (got {} blocks, {} spacers)",
                blocks.len(),
                spacers.len()
            )));
        }
        let segments = blocks
            .iter()
            .enumerate()
            .map(|(t, &index)| Segment {
                index,
                spacer: spacers.get(t).copied(),
            })
            .collect();
        Ok(Building { segments })
    }

    /// Building with all spacers zero.
    pub fn concatenation(blocks: &[usize]) -> Result<Building> {
        Building::new(blocks, &vec![0; blocks.len().saturating_sub(1)])
    }

    /// The building of `word` (which must begin and end with 0) over the
    /// single level-0 word "0": every 0 is a block, every 1-run a spacer.
    pub fn over_zero(word: &crate::words::Word) -> Result<Building> {
        let fw = crate::words::FWord::new(word.clone())?;
        let bits = fw.word().bits();
        let mut spacers = Vec::new();
        let mut run = 0u64;
        let mut blocks = 0usize;
        for (p, &b) in bits.iter().enumerate() {
            if b == 0 {
                if p > 0 {
                    spacers.push(run);
                }
                run = 0;
                blocks += 1;
            } else {
                run += 1;
            }
        }
        if blocks < 2 {
            return Err(Error::InvalidConstruction(format!(
                "\"{word}\" has a single 0 and cannot be built from \"0\""
            )));
        }
        Building::new(&vec![1; blocks], &spacers)
    }

    pub fn blocks(&self) -> impl Iterator<Item = usize> + '_ {
        self.segments.iter().map(|s| s.index)
    }

    pub fn spacers(&self) -> impl Iterator<Item = u64> + '_ {
        self.segments.iter().filter_map(|s| s.spacer)
    }

    pub fn first(&self) -> usize {
        self.segments[0].index
    }

    pub fn max_spacer(&self) -> u64 {
        self.spacers().max().unwrap_or(0)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LevelStep {
    pub buildings: Vec<Building>,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Schedule {
    /// Only the listed steps exist.
    Explicit,
    /// The last `cycle_len` steps repeat forever.
    Periodic { cycle_len: usize },
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RankConstruction {
    pub arity0: usize,
    pub steps: Vec<LevelStep>,
    pub schedule: Schedule,
}

/// A broken invariant, located at a step (building level step+1 from level step).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Violation {
    pub step: Option<usize>,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.step {
            Some(s) => write!(f, "step {s}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

impl RankConstruction {
    pub fn explicit(steps: Vec<LevelStep>) -> RankConstruction {
        RankConstruction {
            arity0: 1,
            steps,
            schedule: Schedule::Explicit,
        }
    }

    pub fn periodic(steps: Vec<LevelStep>, cycle_len: usize) -> RankConstruction {
        RankConstruction {
            arity0: 1,
            steps,
            schedule: Schedule::Periodic { cycle_len },
        }
    }

    pub fn is_periodic(&self) -> bool {
        matches!(self.schedule, Schedule::Periodic { .. })
    }

    /// Number of steps before the repeating cycle (all steps when explicit).
    pub fn prefix_len(&self) -> usize {
        match self.schedule {
            Schedule::Explicit => self.steps.len(),
            Schedule::Periodic { cycle_len } => self.steps.len().saturating_sub(cycle_len),
        }
    }

    /// Deepest level, or None when the schedule repeats forever.
    pub fn max_level(&self) -> Option<usize> {
        match self.schedule {
            Schedule::Explicit => Some(self.steps.len()),
            Schedule::Periodic { .. } => None,
        }
    }

    pub fn is_reachable(&self, level: usize) -> bool {
        self.max_level().is_none_or(|m| level <= m)
    }

    pub(crate) fn check_reachable(&self, level: usize) -> Result<()> {
        match self.max_level() {
            Some(max) if level > max => Err(Error::Unreachable { level, max }),
            _ => Ok(()),
        }
    }

    /// The step building level i+1 from level i.
    pub fn step(&self, i: usize) -> Option<&LevelStep> {
        if i < self.steps.len() {
            return self.steps.get(i);
        }
        match self.schedule {
            Schedule::Explicit => None,
            Schedule::Periodic { cycle_len } => {
                if cycle_len == 0 || cycle_len > self.steps.len() {
                    return None;
                }
                let prefix = self.steps.len() - cycle_len;
                self.steps.get(prefix + (i - prefix) % cycle_len)
            }
        }
    }

    /// Number of words at level i (0 if the level does not exist).
    pub fn arity(&self, i: usize) -> usize {
        if i == 0 {
            self.arity0
        } else {
            self.step(i - 1).map_or(0, |s| s.buildings.len())
        }
    }

    /// Largest arity over all levels; finite for both schedules.
    pub fn rank(&self) -> usize {
        self.steps
            .iter()
            .map(|s| s.buildings.len())
            .chain(std::iter::once(self.arity0))
            .max()
            .unwrap_or(0)
    }

    pub(crate) fn check_index(&self, level: usize, j: usize) -> Result<()> {
        self.check_reachable(level)?;
        let arity = self.arity(level);
        if j == 0 || j > arity {
            return Err(Error::IndexOutOfRange { level, index: j, arity });
        }
        Ok(())
    }

    /// Checks every structural invariant, reporting the first violation per step.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.arity0 == 0 {
            out.push(Violation {
                step: None,
                message: "level 0 must contain at least one word".into(),
            });
        }
        if self.steps.is_empty() {
            out.push(Violation {
                step: None,
                message: "construction needs at least one step".into(),
            });
        }
        if let Schedule::Periodic { cycle_len } = self.schedule {
            if cycle_len == 0 || cycle_len > self.steps.len() {
                out.push(Violation {
                    step: None,
                    message: format!(
                        "cycle length {cycle_len} must be between 1 and the number of steps ({})",
                        self.steps.len()
                    ),
                });
            } else {
                let prefix = self.steps.len() - cycle_len;
                let entry = self.arity(prefix);
                let exit = self.steps[self.steps.len() - 1].buildings.len();
                if entry != exit {
                    out.push(Violation {
                        step: None,
                        message: format!("periodic cycle enters with arity {entry} but exits with arity {exit}"),
                    });
                }
            }
        }
        for (i, step) in self.steps.iter().enumerate() {
            if let Some(message) = step_violation(step, self.arity(i)) {
                out.push(Violation { step: Some(i), message });
            }
        }
        out
    }

    pub fn validated(&self) -> Result<()> {
        match self.validate().first() {
            None => Ok(()),
            Some(v) => Err(Error::InvalidConstruction(v.to_string())),
        }
    }

    /// Composes steps so that level k of the result is level cuts[k] of `self`.
    pub fn telescope(&self, cuts: &[usize]) -> Result<RankConstruction> {
        if cuts.len() < 2 || cuts[0] != 0 {
            return Err(Error::InvalidArgument(
                "cuts must start at 0 and contain at least two levels".into(),
            ));
        }
        if cuts.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument("cuts must be strictly increasing".into()));
        }
        self.check_reachable(*cuts.last().unwrap())?;
        let mut steps = Vec::with_capacity(cuts.len() - 1);
        for w in cuts.windows(2) {
            let mut acc = self.step(w[0]).unwrap().clone();
            for i in w[0] + 1..w[1] {
                acc = compose_steps(&acc, self.step(i).unwrap());
            }
            steps.push(acc);
        }
        Ok(RankConstruction {
            arity0: self.arity0,
            steps,
            schedule: Schedule::Explicit,
        })
    }

    /// Buildings of level `hi` words directly over level `lo` words.
    pub fn composed_step(&self, lo: usize, hi: usize) -> Result<LevelStep> {
        if lo >= hi {
            return Err(Error::InvalidArgument(format!("need lo < hi (got {lo}, {hi})")));
        }
        self.check_reachable(hi)?;
        let mut acc = self.step(lo).unwrap().clone();
        for i in lo + 1..hi {
            acc = compose_steps(&acc, self.step(i).unwrap());
        }
        Ok(acc)
    }

    /// Truncation keeping levels 0..=depth as an explicit construction.
    pub fn truncate(&self, depth: usize) -> Result<RankConstruction> {
        self.check_reachable(depth)?;
        Ok(RankConstruction {
            arity0: self.arity0,
            steps: (0..depth).map(|i| self.step(i).unwrap().clone()).collect(),
            schedule: Schedule::Explicit,
        })
    }
}

fn step_violation(step: &LevelStep, prev_arity: usize) -> Option<String> {
    if step.buildings.is_empty() {
        return Some("step has no buildings".into());
    }
    for (q, b) in step.buildings.iter().enumerate() {
        let q = q + 1;
        if b.segments.len() < 2 {
            return Some(format!("building {q} has fewer than 2 blocks"));
        }
        let last = b.segments.len() - 1;
        for (t, seg) in b.segments.iter().enumerate() {
            if seg.index == 0 || seg.index > prev_arity {
                return Some(format!(
                    "building {q} block {} uses word {} but the previous level has {prev_arity} words",
                    t + 1,
                    seg.index
                ));
            }
            if (t == last) != seg.spacer.is_none() {
                return Some(format!("building {q}: exactly the last block must have no spacer"));
            }
        }
    }
    if step.buildings[0].first() != 1 {
        return Some("building 1 must start with word 1".into());
    }
    None
}

/// Given `lower` (level i to i+1) and `upper` (level i+1 to i+2), returns the
/// buildings of level i+2 directly over level i.
pub fn compose_steps(lower: &LevelStep, upper: &LevelStep) -> LevelStep {
    let buildings = upper
        .buildings
        .iter()
        .map(|b| {
            let mut segments = Vec::new();
            for seg in &b.segments {
                let inner = &lower.buildings[seg.index - 1].segments;
                let last = inner.len() - 1;
                for (t, s) in inner.iter().enumerate() {
                    segments.push(Segment {
                        index: s.index,
                        spacer: if t == last { seg.spacer } else { s.spacer },
                    });
                }
            }
            Building { segments }
        })
        .collect();
    LevelStep { buildings }
}
