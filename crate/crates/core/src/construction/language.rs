//! Subword languages and run statistics computed level by level from the
//! buildings, so deep levels never need to be materialized.

use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use super::RankConstruction;
use crate::error::{Error, Result};
use crate::words::{LanguageSnapshot, Word};

const CUT: u8 = 2;

/// Length-n subwords of one level word plus the context needed to find
/// windows straddling its boundary inside longer words.
#[derive(Clone, Debug)]
pub struct SubwordSummary {
    pub len: u64,
    head: Vec<u8>,
    tail: Vec<u8>,
    full: Option<Vec<u8>>,
    pub set: Arc<HashSet<Vec<u8>>>,
}

impl SubwordSummary {
    fn leaf(n: usize) -> SubwordSummary {
        let mut set = HashSet::new();
        if n == 1 {
            set.insert(vec![0]);
        }
        SubwordSummary {
            len: 1,
            head: if n > 1 { vec![0] } else { vec![] },
            tail: if n > 1 { vec![0] } else { vec![] },
            full: Some(vec![0]),
            set: Arc::new(set),
        }
    }

    /// Compressed form: the whole word when short, else head, a cut marker, tail.
    fn compressed(&self, out: &mut Vec<u8>) {
        match &self.full {
            Some(f) => out.extend_from_slice(f),
            None => {
                out.extend_from_slice(&self.head);
                out.push(CUT);
                out.extend_from_slice(&self.tail);
            }
        }
    }

    pub fn members(&self) -> BTreeSet<Word> {
        self.set.iter().map(|v| Word::from_bits_unchecked(v.clone())).collect()
    }

    /// Length-m subwords for m no longer than the summary's n: a window
    /// either starts a length-n window or lies in the last n-1 symbols.
    pub fn members_of_len(&self, m: usize) -> BTreeSet<Word> {
        let mut out: BTreeSet<Word> = BTreeSet::new();
        if m == 0 {
            return out;
        }
        for v in self.set.iter() {
            if v.len() >= m {
                out.insert(Word::from_bits_unchecked(v[..m].to_vec()));
            }
        }
        for src in [Some(&self.tail), self.full.as_ref()].into_iter().flatten() {
            for w in src.windows(m) {
                out.insert(Word::from_bits_unchecked(w.to_vec()));
            }
        }
        out
    }
}

/// Per-level summaries of all words for levels 0..=depth.
pub fn subword_sets(c: &RankConstruction, n: usize, depth: usize) -> Result<Vec<Vec<SubwordSummary>>> {
    if n < 1 {
        return Err(Error::InvalidArgument("subword length must be at least 1".into()));
    }
    c.check_reachable(depth)?;
    let keep = n - 1;
    let mut levels = vec![vec![SubwordSummary::leaf(n); c.arity0]];
    for i in 0..depth {
        let prev = &levels[i];
        let step = c.step(i).unwrap();
        let mut next = Vec::with_capacity(step.buildings.len());
        for b in &step.buildings {
            let mut seq = Vec::new();
            let mut len = 0u64;
            let mut largest: Option<&Arc<HashSet<Vec<u8>>>> = None;
            for seg in &b.segments {
                let s = &prev[seg.index - 1];
                s.compressed(&mut seq);
                len = len.saturating_add(s.len);
                if largest.is_none_or(|l| l.len() < s.set.len()) {
                    largest = Some(&s.set);
                }
                let sp = seg.spacer.unwrap_or(0);
                seq.resize(seq.len() + sp.min(n as u64) as usize, 1);
                len = len.saturating_add(sp);
            }
            let mut set: HashSet<Vec<u8>> = largest.map(|l| (**l).clone()).unwrap_or_default();
            for seg in &b.segments {
                let s = &prev[seg.index - 1];
                if !Arc::ptr_eq(&s.set, largest.unwrap()) {
                    set.extend(s.set.iter().cloned());
                }
            }
            if seq.len() >= n {
                for w in seq.windows(n) {
                    if !w.contains(&CUT) {
                        set.insert(w.to_vec());
                    }
                }
            }
            let full = if len <= 2 * keep as u64 {
                let mut real = Vec::with_capacity(len as usize);
                for seg in &b.segments {
                    real.extend_from_slice(prev[seg.index - 1].full.as_ref().unwrap());
                    real.resize(real.len() + seg.spacer.unwrap_or(0) as usize, 1);
                }
                Some(real)
            } else {
                None
            };
            let head_len = keep.min(len as usize);
            next.push(SubwordSummary {
                len,
                head: seq[..head_len].to_vec(),
                tail: seq[seq.len() - head_len..].to_vec(),
                full,
                set: Arc::new(set),
            });
        }
        levels.push(next);
    }
    Ok(levels)
}

/// Length-n language of v_{depth,1}, with the two-depth stabilization guard.
pub fn language(c: &RankConstruction, n: usize, depth: usize) -> Result<LanguageSnapshot> {
    if depth < 1 {
        return Err(Error::InvalidArgument("depth must be at least 1".into()));
    }
    let levels = subword_sets(c, n, depth)?;
    Ok(snapshot_at(&levels, n, depth))
}

fn snapshot_at(levels: &[Vec<SubwordSummary>], n: usize, depth: usize) -> LanguageSnapshot {
    let here = &levels[depth][0];
    let stabilized =
        depth >= 2 && levels[depth - 2].iter().all(|s| s.len >= n as u64) && *here.set == *levels[depth - 1][0].set;
    LanguageSnapshot {
        n,
        members: here.members(),
        depth,
        stabilized,
    }
}

/// For each n in 1..=max_n, the snapshot at the first stabilized depth
/// (or the unstabilized snapshot at `max_depth`).
pub fn language_profile(c: &RankConstruction, max_n: usize, max_depth: usize) -> Result<Vec<LanguageSnapshot>> {
    let max_depth = c.max_level().map_or(max_depth, |m| m.min(max_depth));
    let mut out = Vec::with_capacity(max_n);
    for n in 1..=max_n {
        let levels = subword_sets(c, n, max_depth)?;
        let snap = (2..=max_depth)
            .map(|d| snapshot_at(&levels, n, d))
            .find(|s| s.stabilized)
            .unwrap_or_else(|| snapshot_at(&levels, n, max_depth));
        out.push(snap);
    }
    Ok(out)
}

/// Run-length statistics of a word: leading, trailing and longest runs of each symbol.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct RunStats {
    pub len: u64,
    pub lead: [u64; 2],
    pub trail: [u64; 2],
    pub max: [u64; 2],
}

impl RunStats {
    fn constant(symbol: usize, k: u64) -> RunStats {
        let mut r = RunStats {
            len: k,
            ..RunStats::default()
        };
        r.lead[symbol] = k;
        r.trail[symbol] = k;
        r.max[symbol] = k;
        r
    }

    fn then(&self, b: &RunStats) -> RunStats {
        let mut r = RunStats {
            len: self.len.saturating_add(b.len),
            ..RunStats::default()
        };
        for s in 0..2 {
            r.lead[s] = if self.lead[s] == self.len {
                self.len.saturating_add(b.lead[s])
            } else {
                self.lead[s]
            };
            r.trail[s] = if b.trail[s] == b.len {
                b.len.saturating_add(self.trail[s])
            } else {
                b.trail[s]
            };
            r.max[s] = self.max[s].max(b.max[s]).max(self.trail[s].saturating_add(b.lead[s]));
        }
        r
    }
}

/// Run statistics of every word at levels 0..=depth.
pub fn run_stats(c: &RankConstruction, depth: usize) -> Result<Vec<Vec<RunStats>>> {
    c.check_reachable(depth)?;
    let mut levels = vec![vec![RunStats::constant(0, 1); c.arity0]];
    for i in 0..depth {
        let prev = &levels[i];
        let next = c
            .step(i)
            .unwrap()
            .buildings
            .iter()
            .map(|b| {
                b.segments.iter().fold(RunStats::default(), |acc, seg| {
                    acc.then(&prev[seg.index - 1])
                        .then(&RunStats::constant(1, seg.spacer.unwrap_or(0)))
                })
            })
            .collect();
        levels.push(next);
    }
    Ok(levels)
}

#[cfg(test)]
mod tests {
    use super::super::tests::chacon;
    use super::*;
    use crate::words::{max_run, subwords};

    #[test]
    fn chacon_language_examples() {
        let s = language(&chacon(), 2, 3).unwrap();
        assert!(s.stabilized);
        let expect: BTreeSet<Word> = ["00", "01", "10"].iter().map(|x| x.parse().unwrap()).collect();
        assert_eq!(s.members, expect);
        let one = language(&chacon(), 1, 2).unwrap();
        assert_eq!(one.members.len(), 2);
    }

    #[test]
    fn summaries_match_materialized_subwords() {
        let c = chacon();
        for n in 1..=30 {
            let levels = subword_sets(&c, n, 5).unwrap();
            for (i, lvl) in levels.iter().enumerate() {
                let w = c.expand(i, 1).unwrap();
                assert_eq!(lvl[0].members(), subwords(&w, n).unwrap().members, "n={n} level={i}");
            }
        }
    }

    #[test]
    fn shorter_members_derive_from_one_summary() {
        let c = chacon();
        for top in [1, 5, 17, 40] {
            let levels = subword_sets(&c, top, 4).unwrap();
            let w = c.expand(4, 1).unwrap();
            for m in 1..=top {
                assert_eq!(
                    levels[4][0].members_of_len(m),
                    subwords(&w, m).unwrap().members,
                    "top={top} m={m}"
                );
            }
        }
    }

    #[test]
    fn large_spacers_are_capped_without_losing_windows() {
        let c = crate::construction::RankConstruction::explicit(vec![
            crate::construction::LevelStep {
                buildings: vec![crate::construction::Building::new(&[1, 1, 1], &[7, 2]).unwrap()],
            },
            crate::construction::LevelStep {
                buildings: vec![crate::construction::Building::new(&[1, 1], &[5]).unwrap()],
            },
        ]);
        for n in 1..=12 {
            let levels = subword_sets(&c, n, 2).unwrap();
            let w = c.expand(2, 1).unwrap();
            assert_eq!(levels[2][0].members(), subwords(&w, n).unwrap().members, "n={n}");
        }
    }

    #[test]
    fn run_stats_match_materialized() {
        let c = chacon();
        let stats = run_stats(&c, 5).unwrap();
        for (i, lvl) in stats.iter().enumerate() {
            let w = c.expand(i, 1).unwrap();
            assert_eq!(lvl[0].max[0], max_run(&w, 0) as u64);
            assert_eq!(lvl[0].max[1], max_run(&w, 1) as u64);
            assert_eq!(lvl[0].len, w.len() as u64);
        }
    }
}
