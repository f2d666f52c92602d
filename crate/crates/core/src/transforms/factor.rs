use std::collections::{BTreeMap, BTreeSet};

use super::code::SlidingBlockCode;
use super::stable_max_run;
use crate::construction::{from_chains, Building, ChainLevel, RankConstruction, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::words::Word;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FactorOptions {
    /// Levels of the output construction.
    pub levels: usize,
    /// Depth searched for the stabilized one-run bound.
    pub run_depth: usize,
    /// Deepest source level that may be used.
    pub max_source_level: usize,
}

impl Default for FactorOptions {
    fn default() -> Self {
        FactorOptions {
            levels: 4,
            run_depth: 12,
            max_source_level: 40,
        }
    }
}

#[derive(Clone, Debug)]
pub struct FactorResult {
    pub construction: RankConstruction,
    /// Source level whose images form output level 1.
    pub start_level: usize,
    pub k1: u64,
    /// |T_p| for each output level.
    pub sizes: Vec<usize>,
    /// n²k₁ with n the source rank.
    pub rank_bound: usize,
}

/// (q, s, q'): an expected w_q followed by 1^s and an expected w_{q'}.
type Adjacency = (usize, u64, usize);

/// Image of an adjacency: the code output on w_q 1^s, written as 1^a ũ 1^b.
#[derive(Clone, Debug)]
struct Image {
    lead: u64,
    core: Word,
    trail: u64,
}

/// Construction of the factor of the source subshift under `code`.
///
/// Output level t collects the trimmed images ũ of all adjacencies (q,s,q')
/// at source level p_0 + t - 1; p_0 is the first level whose shortest word
/// exceeds 2r + k_1 and whose images all contain two zeros. Adjacencies at
/// level p are read off the buildings of level p+2 over level p and must be
/// unchanged when level p+3 is used.
pub fn factor_construction(c: &RankConstruction, code: &SlidingBlockCode, opts: FactorOptions) -> Result<FactorResult> {
    if opts.levels < 1 {
        return Err(Error::InvalidArgument("need at least one output level".into()));
    }
    c.validated()?;
    let r = code.radius() as u64;
    let k1 = stable_max_run(c, 1, opts.run_depth)? + 1;
    let reach = |i: usize| -> Result<()> {
        if i > opts.max_source_level || !c.is_reachable(i) {
            return Err(Error::ExtendDepth(format!(
                "source level {i} is needed but not available"
            )));
        }
        Ok(())
    };
    let mut e = c.expander(DEFAULT_BUDGET);

    let mut p0 = 1;
    let (start, base) = loop {
        reach(p0 + 3)?;
        let shortest = (1..=c.arity(p0))
            .map(|j| e.length_u64(p0, j))
            .collect::<Result<Vec<_>>>()?;
        if *shortest.iter().min().unwrap() > 2 * r + k1 {
            let words = e.level(p0)?;
            let adj = adjacencies(c, p0)?;
            let mut images = BTreeMap::new();
            for &(q, s, q2) in &adj {
                images.insert((q, s, q2), direct_image(code, &words, (q, s, q2))?);
            }
            if images
                .values()
                .all(|im| im.core.bits().iter().filter(|&&b| b == 0).count() >= 2)
            {
                break (p0, images);
            }
        }
        p0 += 1;
    };

    // Level t of the chain: distinct cores with their buildings.
    let mut levels: Vec<ChainLevel> = Vec::with_capacity(opts.levels);
    let mut index_of: BTreeMap<Word, usize> = BTreeMap::new();
    let mut first = ChainLevel {
        words: Vec::new(),
        buildings: Vec::new(),
    };
    for im in base.values() {
        if !index_of.contains_key(&im.core) {
            index_of.insert(im.core.clone(), first.words.len() + 1);
            first.buildings.push(Some(Building::over_zero(&im.core)?));
            first.words.push(im.core.clone());
        }
    }
    levels.push(first);

    let mut below = base;
    for t in 1..opts.levels {
        let p = start + t;
        reach(p + 3)?;
        let step = c.step(p - 1).ok_or(Error::Unreachable { level: p, max: p - 1 })?;
        let adj = adjacencies(c, p)?;
        let mut here = BTreeMap::new();
        let mut lvl = ChainLevel {
            words: Vec::new(),
            buildings: Vec::new(),
        };
        let mut next_index: BTreeMap<Word, usize> = BTreeMap::new();
        for &(q, s, q2) in &adj {
            let b = &step.buildings[q - 1];
            let next_first = step.buildings[q2 - 1].first();
            let parts = b
                .segments
                .iter()
                .enumerate()
                .map(|(u, seg)| {
                    let key = match seg.spacer {
                        Some(sp) => (seg.index, sp, b.segments[u + 1].index),
                        None => (seg.index, s, next_first),
                    };
                    below.get(&key).cloned().ok_or_else(|| {
                        Error::ExtendDepth(format!("adjacency {key:?} at level {} was not collected", p - 1))
                    })
                })
                .collect::<Result<Vec<Image>>>()?;
            let blocks: Vec<usize> = parts.iter().map(|im| index_of[&im.core]).collect();
            let spacers: Vec<u64> = parts.windows(2).map(|w| w[0].trail + w[1].lead).collect();
            let mut bits = Vec::new();
            for (u, im) in parts.iter().enumerate() {
                bits.extend_from_slice(im.core.bits());
                if let Some(&sp) = spacers.get(u) {
                    bits.resize(bits.len() + sp as usize, 1);
                }
            }
            let im = Image {
                lead: parts[0].lead,
                core: Word::from_bits_unchecked(bits),
                trail: parts.last().unwrap().trail,
            };
            if !next_index.contains_key(&im.core) {
                next_index.insert(im.core.clone(), lvl.words.len() + 1);
                lvl.buildings.push(Some(Building::new(&blocks, &spacers)?));
                lvl.words.push(im.core.clone());
            }
            here.insert((q, s, q2), im);
        }
        if t == 1 {
            cross_check(&mut e, code, p, &here)?;
        }
        levels.push(lvl);
        index_of = next_index;
        below = here;
    }

    let sizes = levels.iter().map(|l| l.words.len()).collect();
    let n = c.rank();
    let assembly = from_chains(&levels)?;
    Ok(FactorResult {
        construction: assembly.construction,
        start_level: start,
        k1,
        sizes,
        rank_bound: n * n * k1 as usize,
    })
}

/// Adjacencies inside the level-(p+2) words over level p, unchanged at p+3.
fn adjacencies(c: &RankConstruction, p: usize) -> Result<BTreeSet<Adjacency>> {
    let collect = |hi: usize| -> Result<BTreeSet<Adjacency>> {
        let step = c.composed_step(p, hi)?;
        let mut out = BTreeSet::new();
        for b in &step.buildings {
            for w in b.segments.windows(2) {
                out.insert((w[0].index, w[0].spacer.unwrap(), w[1].index));
            }
        }
        Ok(out)
    };
    let two = collect(p + 2)?;
    let three = collect(p + 3)?;
    if let Some(extra) = three.difference(&two).next() {
        return Err(Error::ExtendDepth(format!(
            "adjacency {extra:?} at level {p} appears only above level {}",
            p + 2
        )));
    }
    Ok(two)
}

fn direct_image(code: &SlidingBlockCode, words: &[Word], (q, s, q2): Adjacency) -> Result<Image> {
    let r2 = 2 * code.radius();
    let next = words[q2 - 1].bits();
    if next.len() < r2 {
        return Err(Error::Precondition(format!("word {q2} is shorter than 2r = {r2}")));
    }
    let mut bits = words[q - 1].bits().to_vec();
    bits.resize(bits.len() + s as usize, 1);
    bits.extend_from_slice(&next[..r2]);
    trim(code.apply_bits(&bits)?)
}

fn trim(raw: Vec<u8>) -> Result<Image> {
    let lead = raw.iter().take_while(|&&b| b == 1).count();
    if lead == raw.len() {
        return Err(Error::Precondition(
            "the code maps an adjacency to all ones; the image has no 0 to anchor on".into(),
        ));
    }
    let trail = raw.iter().rev().take_while(|&&b| b == 1).count();
    Ok(Image {
        lead: lead as u64,
        core: Word::from_bits_unchecked(raw[lead..raw.len() - trail].to_vec()),
        trail: trail as u64,
    })
}

/// Images assembled from lower levels must match the code applied directly.
fn cross_check(
    e: &mut crate::construction::Expander<'_>,
    code: &SlidingBlockCode,
    p: usize,
    assembled: &BTreeMap<Adjacency, Image>,
) -> Result<()> {
    let words = e.level(p)?;
    for (&key, im) in assembled {
        let direct = direct_image(code, &words, key)?;
        if direct.core != im.core || direct.lead != im.lead || direct.trail != im.trail {
            return Err(Error::NotLocallyConstant {
                level: p,
                detail: format!("adjacency {key:?} has two different images"),
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::{language, LevelStep};
    use crate::transforms::gallery;

    fn flip(w: &Word) -> Word {
        Word::from_bits_unchecked(w.bits().iter().map(|b| 1 - b).collect())
    }

    #[test]
    fn identity_reproduces_chacon() {
        let c = gallery("chacon").unwrap();
        let f = factor_construction(&c, &SlidingBlockCode::identity(), FactorOptions::default()).unwrap();
        assert_eq!(f.k1, 2);
        for n in [1, 5, 9] {
            let out = language(&f.construction, n, 4).unwrap();
            let src = language(&c, n, 6).unwrap();
            assert!(out.stabilized && src.stabilized);
            assert_eq!(out.members, src.members, "n = {n}");
        }
    }

    #[test]
    fn bit_flip_of_chacon() {
        let c = gallery("chacon").unwrap();
        let f = factor_construction(&c, &SlidingBlockCode::bit_flip(), FactorOptions::default()).unwrap();
        assert!(f.sizes.iter().all(|&s| s <= f.rank_bound));
        for n in [3, 8] {
            let out = language(&f.construction, n, 4).unwrap();
            let src = language(&c, n, 6).unwrap();
            let flipped: BTreeSet<Word> = src.members.iter().map(flip).collect();
            assert_eq!(out.members, flipped, "n = {n}");
        }
    }

    #[test]
    fn constant_code_is_rejected() {
        let c = gallery("chacon").unwrap();
        let ones = SlidingBlockCode::new(0, vec![1, 1]).unwrap();
        assert!(matches!(
            factor_construction(&c, &ones, FactorOptions::default()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn adjacency_guard() {
        // Level-2 words of this construction only meet across a level-4 boundary.
        let step = |b: Vec<Building>| LevelStep { buildings: b };
        let c = RankConstruction::explicit(vec![
            step(vec![Building::new(&[1, 1], &[1]).unwrap()]),
            step(vec![Building::new(&[1, 1], &[0]).unwrap()]),
            step(vec![Building::new(&[1, 1], &[0]).unwrap()]),
            step(vec![Building::new(&[1, 1], &[2]).unwrap()]),
        ]);
        assert!(matches!(adjacencies(&c, 1), Err(Error::ExtendDepth(_))));
        assert_eq!(adjacencies(&c, 0).unwrap().len(), 2);
    }
}
