use std::collections::{BTreeSet, HashSet};
use std::fmt;

use super::{language::run_stats, RankConstruction, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::words::{find_all, prefix_function, Word};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ProperWitness {
    /// Level `level` has `arity` words where `expected` were required.
    ArityChange {
        level: usize,
        arity: usize,
        expected: usize,
    },
    /// Building `building` of level `level` never uses word `missing` of level `level - 1`.
    MissingIndex {
        level: usize,
        building: usize,
        missing: usize,
    },
}

impl fmt::Display for ProperWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProperWitness::ArityChange { level, arity, expected } => {
                write!(f, "level {level} has {arity} words, expected {expected}")
            }
            ProperWitness::MissingIndex {
                level,
                building,
                missing,
            } => write!(
                f,
                "level {level} building {building} does not use word {missing} of level {}",
                level - 1
            ),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProperReport {
    pub proper: bool,
    pub witness: Option<ProperWitness>,
}

pub fn check_proper(c: &RankConstruction, depth: usize) -> Result<ProperReport> {
    if depth < 1 {
        return Err(Error::InvalidArgument("depth must be at least 1".into()));
    }
    c.check_reachable(depth)?;
    let n = c.arity(1);
    let fail = |w| {
        Ok(ProperReport {
            proper: false,
            witness: Some(w),
        })
    };
    for i in 0..depth {
        let arity = c.arity(i + 1);
        if arity != n {
            return fail(ProperWitness::ArityChange {
                level: i + 1,
                arity,
                expected: n,
            });
        }
        let prev = c.arity(i);
        for (q, b) in c.step(i).unwrap().buildings.iter().enumerate() {
            let used: HashSet<usize> = b.blocks().collect();
            if let Some(missing) = (1..=prev).find(|x| !used.contains(x)) {
                return fail(ProperWitness::MissingIndex {
                    level: i + 1,
                    building: q + 1,
                    missing,
                });
            }
        }
    }
    Ok(ProperReport {
        proper: true,
        witness: None,
    })
}

/// Whether a full level word may serve as the partial blocks α and β.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum AffixMode {
    /// α may be any nonempty suffix of a level word, the word itself included.
    #[default]
    AllowFull,
    /// α and β must be proper (shorter than the level word they come from).
    ProperOnly,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GoodWitness {
    /// Two level words are equal.
    Duplicate { first: usize, second: usize },
    /// v_{level,word} = α 1^{s_1} u_1 … 1^{s_k} β.
    Decomposition {
        word: usize,
        alpha: Word,
        alpha_from: usize,
        spacers: Vec<u64>,
        interior: Vec<usize>,
        beta: Word,
        beta_from: usize,
    },
}

impl fmt::Display for GoodWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GoodWitness::Duplicate { first, second } => {
                write!(f, "words {first} and {second} are equal")
            }
            GoodWitness::Decomposition {
                word,
                alpha,
                alpha_from,
                spacers,
                interior,
                beta,
                beta_from,
            } => {
                write!(f, "word {word} = \"{alpha}\" (suffix of word {alpha_from})")?;
                for (t, s) in spacers.iter().enumerate() {
                    write!(f, " 1^{s}")?;
                    match interior.get(t) {
                        Some(u) => write!(f, " [word {u}]")?,
                        None => write!(f, " \"{beta}\" (prefix of word {beta_from})")?,
                    }
                }
                Ok(())
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GoodReport {
    pub good: bool,
    pub witness: Option<GoodWitness>,
}

/// Goodness of level `level`: no level word splits as α 1^{s_1} u_1 … 1^{s_k} β.
pub fn check_good(c: &RankConstruction, level: usize, mode: AffixMode) -> Result<GoodReport> {
    let words = c.expander(DEFAULT_BUDGET).level(level)?;
    Ok(check_good_words(&words, mode))
}

/// Goodness of an explicit list of level words.
pub fn check_good_words(words: &[Word], mode: AffixMode) -> GoodReport {
    for a in 0..words.len() {
        for b in a + 1..words.len() {
            if words[a] == words[b] {
                return GoodReport {
                    good: false,
                    witness: Some(GoodWitness::Duplicate {
                        first: a + 1,
                        second: b + 1,
                    }),
                };
            }
        }
    }
    for (j, v) in words.iter().enumerate() {
        if let Some(w) = decompose(j + 1, v, words, mode) {
            return GoodReport {
                good: false,
                witness: Some(w),
            };
        }
    }
    GoodReport {
        good: true,
        witness: None,
    }
}

/// Lengths b such that the first b symbols of `v` equal the last b of `u`,
/// with 1 ≤ b ≤ min(|v|, |u|) (b < |u| when `proper`).
fn prefix_suffix_overlaps(v: &[u8], u: &[u8], proper: bool) -> Vec<usize> {
    let mut s = Vec::with_capacity(v.len() + u.len() + 1);
    s.extend_from_slice(v);
    s.push(2);
    s.extend_from_slice(u);
    let pi = prefix_function(&s);
    let mut out = Vec::new();
    let mut b = *pi.last().unwrap_or(&0);
    while b > 0 {
        if !proper || b < u.len() {
            out.push(b);
        }
        b = pi[b - 1];
    }
    out
}

enum Step {
    Alpha { len: usize, from: usize },
    Interior { start: usize, word: usize, prev: usize },
}

fn decompose(j: usize, v: &Word, words: &[Word], mode: AffixMode) -> Option<GoodWitness> {
    let bits = v.bits();
    let l = bits.len();
    if l < 2 {
        return None;
    }
    let proper = mode == AffixMode::ProperOnly;
    let mut reach: Vec<Option<Step>> = (0..=l).map(|_| None).collect();
    let mut beta_from = vec![0usize; l + 1];
    let rev_v: Vec<u8> = bits.iter().rev().copied().collect();
    let mut occ: Vec<Vec<usize>> = vec![Vec::new(); l];
    for (q, u) in words.iter().enumerate() {
        for b in prefix_suffix_overlaps(bits, u.bits(), proper) {
            if b < l && reach[b].is_none() {
                reach[b] = Some(Step::Alpha { len: b, from: q + 1 });
            }
        }
        let rev_u: Vec<u8> = u.bits().iter().rev().copied().collect();
        for m in prefix_suffix_overlaps(&rev_v, &rev_u, proper) {
            if m < l && beta_from[l - m] == 0 {
                beta_from[l - m] = q + 1;
            }
        }
        for p in find_all(u.bits(), bits) {
            occ[p].push(q + 1);
        }
    }
    for pos in 1..l {
        if reach[pos].is_none() {
            continue;
        }
        let mut p2 = pos;
        while p2 < l && bits[p2] == 1 {
            p2 += 1;
        }
        if p2 >= l {
            continue;
        }
        if beta_from[p2] != 0 {
            return Some(witness(j, v, &reach, pos, p2, beta_from[p2]));
        }
        for &u in &occ[p2] {
            let e = p2 + words[u - 1].len();
            if e < l && reach[e].is_none() {
                reach[e] = Some(Step::Interior {
                    start: p2,
                    word: u,
                    prev: pos,
                });
            }
        }
    }
    None
}

fn witness(j: usize, v: &Word, reach: &[Option<Step>], end: usize, beta_start: usize, beta_from: usize) -> GoodWitness {
    let mut spacers = vec![(beta_start - end) as u64];
    let mut interior = Vec::new();
    let mut pos = end;
    loop {
        match reach[pos].as_ref().unwrap() {
            Step::Alpha { len, from } => {
                spacers.reverse();
                interior.reverse();
                return GoodWitness::Decomposition {
                    word: j,
                    alpha: v.slice(0, *len),
                    alpha_from: *from,
                    spacers,
                    interior,
                    beta: v.slice(beta_start, v.len()),
                    beta_from,
                };
            }
            Step::Interior { start, word, prev } => {
                interior.push(*word);
                spacers.push((*start - *prev) as u64);
                pos = *prev;
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpacerStats {
    /// Largest spacer of each inspected step (step i builds level i+1).
    pub per_step: Vec<u64>,
    /// Largest spacer over the inspected steps, or over all steps when periodic.
    pub bound: u64,
    /// The bound holds at every level (periodic schedule).
    pub certified: bool,
    /// Explicit schedule whose per-step maxima strictly increase.
    pub unbounded_evidence: bool,
}

pub fn spacer_stats(c: &RankConstruction, depth: usize) -> Result<SpacerStats> {
    if depth < 1 {
        return Err(Error::InvalidArgument("depth must be at least 1".into()));
    }
    c.check_reachable(depth)?;
    let step_max = |i: usize| {
        c.step(i)
            .unwrap()
            .buildings
            .iter()
            .map(|b| b.max_spacer())
            .max()
            .unwrap_or(0)
    };
    let per_step: Vec<u64> = (0..depth).map(step_max).collect();
    let certified = c.is_periodic();
    let bound = if certified {
        (0..c.steps.len())
            .map(step_max)
            .chain(per_step.iter().copied())
            .max()
            .unwrap_or(0)
    } else {
        per_step.iter().copied().max().unwrap_or(0)
    };
    let unbounded_evidence = !certified && per_step.len() >= 2 && per_step.windows(2).all(|w| w[0] < w[1]);
    Ok(SpacerStats {
        per_step,
        bound,
        certified,
        unbounded_evidence,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Minimality {
    MinimalCertified,
    MinimalEvidence,
    NotMinimalEvidence,
}

impl fmt::Display for Minimality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Minimality::MinimalCertified => "MINIMAL_CERTIFIED",
            Minimality::MinimalEvidence => "MINIMAL_EVIDENCE",
            Minimality::NotMinimalEvidence => "NOT_MINIMAL_EVIDENCE",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MinimalityReport {
    pub verdict: Minimality,
    pub reasons: Vec<String>,
}

/// Minimality via properness plus bounded spacers, certified only by a periodic schedule.
pub fn minimality_verdict(c: &RankConstruction, depth: usize) -> Result<MinimalityReport> {
    let depth = c.max_level().map_or(depth, |m| m.min(depth)).max(1);
    let proper = check_proper(c, depth)?;
    let stats = spacer_stats(c, depth)?;
    let mut reasons = Vec::new();
    match &proper.witness {
        None => reasons.push(format!("proper through level {depth}")),
        Some(w) => reasons.push(format!("not proper: {w}")),
    }
    if stats.unbounded_evidence {
        reasons.push(format!(
            "spacer maxima strictly increase over {} steps: {:?}",
            stats.per_step.len(),
            stats.per_step
        ));
        return Ok(MinimalityReport {
            verdict: Minimality::NotMinimalEvidence,
            reasons,
        });
    }
    if c.is_periodic() {
        let full = c.steps.len() + c.prefix_len().max(1);
        let cycle_proper = check_proper(c, full)?.proper;
        reasons.push(format!(
            "spacer bound M = {} certified by periodic schedule",
            stats.bound
        ));
        if proper.proper && cycle_proper {
            reasons.push("every cycle step uses all words".into());
            return Ok(MinimalityReport {
                verdict: Minimality::MinimalCertified,
                reasons,
            });
        }
        if !cycle_proper {
            reasons.push("some cycle step omits a word".into());
        }
    } else {
        reasons.push(format!(
            "explicit schedule: spacer bound {} on the truncation only",
            stats.bound
        ));
    }
    Ok(MinimalityReport {
        verdict: Minimality::MinimalEvidence,
        reasons,
    })
}

/// v_{i,j} together with every block of its building, recursively, down to level `down_to`.
pub fn expected_subwords(c: &RankConstruction, i: usize, j: usize, down_to: usize) -> Result<BTreeSet<Word>> {
    c.check_index(i, j)?;
    let mut e = c.expander(DEFAULT_BUDGET);
    let mut frontier: BTreeSet<usize> = [j].into();
    let mut out = BTreeSet::new();
    let mut level = i;
    loop {
        if level < down_to {
            break;
        }
        for &q in &frontier {
            out.insert(e.word(level, q)?);
        }
        if level == 0 {
            break;
        }
        let step = c.step(level - 1).unwrap();
        frontier = frontier.iter().flat_map(|&q| step.buildings[q - 1].blocks()).collect();
        level -= 1;
    }
    Ok(out)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RankBoundReport {
    pub symbolic_rank: u64,
    pub spacer_bound: u64,
    pub spacer_bound_certified: bool,
    pub one_run_bound: u64,
    /// n²ℓ
    pub upper_a: u64,
    /// 4(M+1)n²
    pub upper_b: u64,
    pub depth: usize,
}

pub fn rank_bounds(c: &RankConstruction, depth: usize) -> Result<RankBoundReport> {
    let stats = spacer_stats(c, depth)?;
    let runs = run_stats(c, depth)?;
    let n = c.rank() as u64;
    let ell = runs[depth][0].max[1] + 1;
    Ok(RankBoundReport {
        symbolic_rank: n,
        spacer_bound: stats.bound,
        spacer_bound_certified: stats.certified,
        one_run_bound: ell,
        upper_a: n * n * ell,
        upper_b: 4 * (stats.bound + 1) * n * n,
        depth,
    })
}

#[cfg(test)]
mod tests {
    use super::super::tests::chacon;
    use super::super::{Building, LevelStep};
    use super::*;

    fn ws(list: &[&str]) -> Vec<Word> {
        list.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn chacon_is_proper_and_good() {
        assert!(check_proper(&chacon(), 5).unwrap().proper);
        for level in 0..=4 {
            assert!(
                check_good(&chacon(), level, AffixMode::AllowFull).unwrap().good,
                "level {level}"
            );
        }
    }

    #[test]
    fn missing_index_is_witnessed() {
        let c = RankConstruction::explicit(vec![
            LevelStep {
                buildings: vec![
                    Building::new(&[1, 1], &[0]).unwrap(),
                    Building::new(&[1, 1], &[1]).unwrap(),
                ],
            },
            LevelStep {
                buildings: vec![
                    Building::new(&[1, 2], &[0]).unwrap(),
                    Building::new(&[1, 1], &[1]).unwrap(),
                ],
            },
        ]);
        let r = check_proper(&c, 2).unwrap();
        assert_eq!(
            r.witness,
            Some(ProperWitness::MissingIndex {
                level: 2,
                building: 2,
                missing: 2
            })
        );
    }

    #[test]
    fn goodness_examples() {
        let r = check_good_words(&ws(&["00", "000"]), AffixMode::AllowFull);
        assert!(!r.good);
        match r.witness.unwrap() {
            GoodWitness::Decomposition {
                word,
                alpha,
                beta,
                spacers,
                ..
            } => {
                assert_eq!(word, 1);
                assert_eq!(alpha.to_string(), "0");
                assert_eq!(beta.to_string(), "0");
                assert_eq!(spacers, vec![0]);
            }
            other => panic!("unexpected witness {other:?}"),
        }
        assert!(!check_good_words(&ws(&["0000"]), AffixMode::AllowFull).good);
        assert!(!check_good_words(&ws(&["0010", "0010"]), AffixMode::AllowFull).good);
        assert!(check_good_words(&ws(&["0010"]), AffixMode::ProperOnly).good);
    }

    #[test]
    fn witness_with_interior_blocks() {
        // "0101010" = "0" 1 [010] 1 "0" over the level {"010", "0101010"}.
        let r = check_good_words(&ws(&["010", "0101010"]), AffixMode::ProperOnly);
        assert!(!r.good);
        let text = r.witness.unwrap().to_string();
        assert!(text.starts_with("word 1"), "{text}");
    }

    #[test]
    fn spacer_examples() {
        let s = spacer_stats(&chacon(), 4).unwrap();
        assert_eq!((s.bound, s.certified, s.unbounded_evidence), (1, true, false));
        assert_eq!(s.per_step, vec![1, 1, 1, 1]);
    }

    #[test]
    fn minimality_examples() {
        assert_eq!(
            minimality_verdict(&chacon(), 5).unwrap().verdict,
            Minimality::MinimalCertified
        );
        let t = chacon().truncate(3).unwrap();
        assert_eq!(minimality_verdict(&t, 3).unwrap().verdict, Minimality::MinimalEvidence);
    }

    #[test]
    fn expected_subword_examples() {
        let got = expected_subwords(&chacon(), 2, 1, 0).unwrap();
        assert_eq!(got, ws(&["0010001010010", "0010", "0"]).into_iter().collect());
        assert_eq!(
            expected_subwords(&chacon(), 0, 1, 0).unwrap(),
            ws(&["0"]).into_iter().collect()
        );
    }

    #[test]
    fn chacon_rank_bounds() {
        let r = rank_bounds(&chacon(), 4).unwrap();
        assert_eq!((r.symbolic_rank, r.spacer_bound, r.one_run_bound), (1, 1, 2));
        assert_eq!(r.upper_a, 2);
        assert_eq!(r.upper_b, 8);
    }
}
