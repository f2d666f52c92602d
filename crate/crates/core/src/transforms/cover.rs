use super::code::SubstitutionTable;
use super::stable_max_run;
use crate::construction::{check_proper, compose_steps, Building, LevelStep, RankConstruction, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::words::Word;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CoverOptions {
    /// Levels of the output construction.
    pub levels: usize,
    /// Depth searched for the stabilized zero-run bound.
    pub run_depth: usize,
    /// Deepest source level the index search may reach.
    pub max_source_level: usize,
}

impl Default for CoverOptions {
    fn default() -> Self {
        CoverOptions {
            levels: 3,
            run_depth: 12,
            max_source_level: 40,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoverTrace {
    pub k0: u64,
    /// i_1 < i_2 < …
    pub indices: Vec<usize>,
    /// m_1, m_2, …
    pub m: Vec<u64>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GoodCover {
    pub cover: RankConstruction,
    pub table: SubstitutionTable,
    pub trace: CoverTrace,
}

/// Good rank-2n construction whose subshift factors onto the input's.
///
/// Level choices are the least ones satisfying the displayed bounds: i_1 is
/// the first level with shortest word longer than 4k_0+4, and i_{p+1} the
/// first level whose buildings over level i_p have more than 12m_p+4n
/// spacers and cover every index in each run of 2m_p consecutive blocks.
pub fn good_cover(c: &RankConstruction, opts: CoverOptions) -> Result<GoodCover> {
    if opts.levels < 1 {
        return Err(Error::InvalidArgument("need at least one output level".into()));
    }
    let proper_depth = c.steps.len().min(opts.max_source_level).max(1);
    let proper = check_proper(c, proper_depth)?;
    if let Some(w) = proper.witness {
        return Err(Error::Precondition(format!("input construction is not proper: {w}")));
    }
    let n = c.arity(1);
    let k0 = stable_max_run(c, 0, opts.run_depth)? + 1;
    let mut e = c.expander(DEFAULT_BUDGET);
    let reach = |i: usize| -> Result<()> {
        if i > opts.max_source_level || !c.is_reachable(i) {
            return Err(Error::ExtendDepth(format!(
                "source level {i} is needed but not available"
            )));
        }
        Ok(())
    };
    let mut lens = |i: usize| -> Result<(u64, u64)> {
        reach(i)?;
        let l = (1..=n).map(|j| e.length_u64(i, j)).collect::<Result<Vec<_>>>()?;
        Ok((*l.iter().max().unwrap(), *l.iter().min().unwrap()))
    };

    let mut i1 = 1;
    while lens(i1)?.1 <= 4 * k0 + 4 {
        i1 += 1;
    }
    let mut indices = vec![i1];
    let mut ms = Vec::new();
    // per p: buildings of w_{p+1,q} over w_p (q = 1..2n)
    let mut steps: Vec<LevelStep> = Vec::new();
    for _ in 0..opts.levels {
        let ip = *indices.last().unwrap();
        let m = lens(ip + 1)?.0.div_ceil(lens(ip)?.1);
        let bound = 12 * m + 4 * n as u64;
        let mut i = ip + 1;
        reach(i)?;
        let mut acc = c.step(ip).unwrap().clone();
        while !acc.buildings.iter().all(|b| {
            let blocks: Vec<usize> = b.blocks().collect();
            (blocks.len() as u64 - 1) > bound && covers_windows(&blocks, 2 * m as usize, n)
        }) {
            reach(i + 1)?;
            acc = compose_steps(&acc, c.step(i).unwrap());
            i += 1;
        }
        indices.push(i);
        ms.push(m);
        steps.push(split_step(&acc, m as i64, n));
    }

    let mut e = c.expander(DEFAULT_BUDGET);
    let mut w1 = Vec::with_capacity(2 * n);
    for q in 1..=n {
        w1.push(e.word(i1, q)?);
    }
    for q in 1..=n {
        let l = w1[q - 1].len();
        w1.push("01".parse::<Word>()?.concat(&Word::zeros(l - 4)).concat(&"10".parse()?));
    }
    let w2: Vec<Word> = steps[0].buildings.iter().map(|b| materialize(b, &w1)).collect();
    let mut cover_steps = vec![LevelStep {
        buildings: w2.iter().map(Building::over_zero).collect::<Result<Vec<_>>>()?,
    }];
    cover_steps.extend(steps.into_iter().skip(1));
    let cover = RankConstruction::explicit(cover_steps);
    cover.validated()?;

    let i2 = indices[1];
    let entries = (0..2 * n)
        .map(|q| Ok((w2[q].clone(), e.word(i2, q % n + 1)?)))
        .collect::<Result<Vec<_>>>()?;
    let table = SubstitutionTable { entries, radius: 0 };
    table.validated()?;
    Ok(GoodCover {
        cover,
        table,
        trace: CoverTrace { k0, indices, m: ms },
    })
}

/// Every run of `width` consecutive blocks uses all indices 1..=n.
fn covers_windows(blocks: &[usize], width: usize, n: usize) -> bool {
    if blocks.len() < width {
        return false;
    }
    let mut count = vec![0usize; n + 1];
    let mut distinct = 0;
    for (t, &b) in blocks.iter().enumerate() {
        count[b] += 1;
        if count[b] == 1 {
            distinct += 1;
        }
        if t >= width {
            let old = blocks[t - width];
            count[old] -= 1;
            if count[old] == 0 {
                distinct -= 1;
            }
        }
        if t + 1 >= width && distinct != n {
            return false;
        }
    }
    true
}

/// Buildings of w_{p+1,j} (φ) and w_{p+1,j+n} (ψ) over the 2n words w_p.
fn split_step(step: &LevelStep, m: i64, n: usize) -> LevelStep {
    let mut phi = Vec::with_capacity(n);
    let mut psi = Vec::with_capacity(n);
    for (j, b) in step.buildings.iter().enumerate() {
        let j = j as i64 + 1;
        let ell = b.segments.len() as i64 - 1;
        let shifted = |extra: i64| {
            let mut out = b.clone();
            for (t, seg) in out.segments.iter_mut().enumerate() {
                let t = t as i64 + 1;
                if (2..=2 * m + j + extra + 1).contains(&t) || (ell - 2 * m - j - extra + 1..=ell).contains(&t) {
                    seg.index += n;
                }
            }
            out
        };
        phi.push(shifted(0));
        psi.push(shifted(n as i64));
    }
    phi.extend(psi);
    LevelStep { buildings: phi }
}

fn materialize(b: &Building, words: &[Word]) -> Word {
    let mut bits = Vec::new();
    for seg in &b.segments {
        bits.extend_from_slice(words[seg.index - 1].bits());
        bits.resize(bits.len() + seg.spacer.unwrap_or(0) as usize, 1);
    }
    Word::from_bits_unchecked(bits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::{check_good, AffixMode};

    fn chacon() -> RankConstruction {
        RankConstruction::periodic(
            vec![LevelStep {
                buildings: vec![Building::new(&[1, 1, 1], &[0, 1]).unwrap()],
            }],
            1,
        )
    }

    #[test]
    fn chacon_cover_trace() {
        let g = good_cover(
            &chacon(),
            CoverOptions {
                levels: 2,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(g.trace.k0, 4);
        assert_eq!(g.trace.indices, vec![3, 7, 11]);
        assert_eq!(g.trace.m, vec![4, 4]);
        assert_eq!(g.cover.arity(1), 2);
        let w = g.cover.level_words(1).unwrap();
        assert_eq!(w[0].len(), 3280);
        assert_eq!(w[1].len(), 3280);
        assert_eq!(g.table.entries[1].1, chacon().expand(7, 1).unwrap());
        assert!(check_proper(&g.cover, 2).unwrap().proper);
        assert!(check_good(&g.cover, 1, AffixMode::AllowFull).unwrap().good);
    }

    #[test]
    fn level_one_of_the_recipe() {
        let g = good_cover(
            &chacon(),
            CoverOptions {
                levels: 1,
                ..Default::default()
            },
        )
        .unwrap();
        // Blocks of the first cover word: w_{1,1} = v_3, then the marker word.
        let b = &g.cover.steps[0].buildings[0];
        assert_eq!(
            b.segments.len(),
            g.cover.expand(1, 1).unwrap().bits().iter().filter(|&&x| x == 0).count()
        );
        let v3 = chacon().expand(3, 1).unwrap();
        assert!(g.cover.expand(1, 1).unwrap().bits().starts_with(v3.bits()));
        let marker: Word = format!("01{}10", "0".repeat(36)).parse().unwrap();
        assert!(g.cover.expand(1, 1).unwrap().to_string().contains(&marker.to_string()));
    }

    #[test]
    fn window_property() {
        assert!(covers_windows(&[1, 2, 1, 2], 2, 2));
        assert!(!covers_windows(&[1, 1, 2], 2, 2));
        assert!(!covers_windows(&[1], 2, 1));
    }

    #[test]
    fn rejects_improper_input() {
        let c = RankConstruction::periodic(
            vec![
                LevelStep {
                    buildings: vec![
                        Building::new(&[1, 1], &[0]).unwrap(),
                        Building::new(&[1, 1], &[1]).unwrap(),
                    ],
                },
                LevelStep {
                    buildings: vec![
                        Building::new(&[1, 1], &[0]).unwrap(),
                        Building::new(&[1, 2], &[1]).unwrap(),
                    ],
                },
            ],
            1,
        );
        assert!(matches!(
            good_cover(&c, CoverOptions::default()),
            Err(Error::Precondition(_))
        ));
    }
}
