use super::{Building, LevelStep, RankConstruction, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::words::Word;

/// One level T_i (i ≥ 1) of word sets: each member with its building over T_{i-1}.
#[derive(Clone, Debug)]
pub struct ChainLevel {
    pub words: Vec<Word>,
    pub buildings: Vec<Option<Building>>,
}

/// Assembled construction plus, per level, the original index of each new position.
#[derive(Clone, Debug)]
pub struct ChainAssembly {
    pub construction: RankConstruction,
    pub order: Vec<Vec<usize>>,
}

/// Assembles levels T_1, T_2, … (T_0 = {"0"} implicit) into a construction whose
/// first word at each level is built starting with the previous level's first word.
pub fn from_chains(levels: &[ChainLevel]) -> Result<ChainAssembly> {
    if levels.is_empty() {
        return Err(Error::InvalidArgument("no levels given".into()));
    }
    let mut raw = Vec::with_capacity(levels.len());
    for (i, lvl) in levels.iter().enumerate() {
        if lvl.words.is_empty() || lvl.words.len() != lvl.buildings.len() {
            return Err(Error::InvalidArgument(format!(
                "level {} needs one building per word",
                i + 1
            )));
        }
        let mut bs = Vec::with_capacity(lvl.buildings.len());
        for (q, b) in lvl.buildings.iter().enumerate() {
            match b {
                Some(b) => bs.push(b.clone()),
                None => {
                    return Err(Error::InvalidArgument(format!(
                        "missing building for word {} of level {}",
                        q + 1,
                        i + 1
                    )))
                }
            }
        }
        raw.push(bs);
    }
    let depth = levels.len();
    let arity = |i: usize| if i == 0 { 1 } else { levels[i - 1].words.len() };

    // extends[i][q]: word q of level i starts a chain reaching the deepest level.
    let mut extends: Vec<Vec<bool>> = (0..=depth).map(|i| vec![false; arity(i)]).collect();
    extends[depth].iter_mut().for_each(|e| *e = true);
    for i in (0..depth).rev() {
        for (q, b) in raw[i].iter().enumerate() {
            let first = b.first();
            if first == 0 || first > arity(i) {
                return Err(Error::InvalidArgument(format!(
                    "building of word {} of level {} uses word {first} outside level {i}",
                    q + 1,
                    i + 1
                )));
            }
            if extends[i + 1][q] {
                extends[i][first - 1] = true;
            }
        }
    }
    if !extends[0][0] {
        return Err(Error::InvalidArgument("no chain reaches level 1".into()));
    }
    let mut chain = vec![1usize];
    for i in 1..=depth {
        let prev = chain[i - 1];
        let next = (1..=arity(i))
            .find(|&q| raw[i - 1][q - 1].first() == prev && extends[i][q - 1])
            .ok_or_else(|| Error::InvalidArgument(format!("chain breaks at level {i}")))?;
        chain.push(next);
    }

    let order: Vec<Vec<usize>> = (0..=depth)
        .map(|i| {
            let mut o = vec![chain[i]];
            o.extend((1..=arity(i)).filter(|&q| q != chain[i]));
            o
        })
        .collect();
    let position: Vec<Vec<usize>> = order
        .iter()
        .map(|o| {
            let mut p = vec![0; o.len()];
            for (new, &old) in o.iter().enumerate() {
                p[old - 1] = new + 1;
            }
            p
        })
        .collect();
    let steps = (0..depth)
        .map(|i| LevelStep {
            buildings: order[i + 1]
                .iter()
                .map(|&old| {
                    let mut b = raw[i][old - 1].clone();
                    for s in &mut b.segments {
                        s.index = position[i][s.index - 1];
                    }
                    b
                })
                .collect(),
        })
        .collect();
    let construction = RankConstruction::explicit(steps);
    construction.validated()?;
    let mut e = construction.expander(DEFAULT_BUDGET);
    for i in 1..=depth {
        for (new, &old) in order[i].iter().enumerate() {
            if e.length(i, new + 1)? > num_bigint::BigUint::from(DEFAULT_BUDGET) {
                continue;
            }
            if e.word(i, new + 1)? != levels[i - 1].words[old - 1] {
                return Err(Error::InvalidArgument(format!(
                    "building of word {old} of level {i} does not produce that word"
                )));
            }
        }
    }
    Ok(ChainAssembly { construction, order })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn singletons_pass_through() {
        let levels = vec![
            ChainLevel {
                words: vec![w("0010")],
                buildings: vec![Some(Building::new(&[1, 1, 1], &[0, 1]).unwrap())],
            },
            ChainLevel {
                words: vec![w("0010001010010")],
                buildings: vec![Some(Building::new(&[1, 1, 1], &[0, 1]).unwrap())],
            },
        ];
        let a = from_chains(&levels).unwrap();
        assert_eq!(a.construction.expand(2, 1).unwrap(), w("0010001010010"));
        assert_eq!(a.order, vec![vec![1], vec![1], vec![1]]);
    }

    #[test]
    fn chain_reindexes_levels() {
        // Level 1: "010" (1), "00" (2). Level 2 words all start with level-1 word 2,
        // so the chain must move "00" to position 1 at level 1.
        let l1 = ChainLevel {
            words: vec![w("010"), w("00")],
            buildings: vec![
                Some(Building::new(&[1, 1], &[1]).unwrap()),
                Some(Building::new(&[1, 1], &[0]).unwrap()),
            ],
        };
        let l2 = ChainLevel {
            words: vec![w("00010"), w("00100")],
            buildings: vec![
                Some(Building::new(&[2, 1], &[0]).unwrap()),
                Some(Building::new(&[2, 2], &[1]).unwrap()),
            ],
        };
        let l3 = ChainLevel {
            words: vec![w("0010000010")],
            buildings: vec![Some(Building::new(&[2, 1], &[0]).unwrap())],
        };
        let a = from_chains(&[l1, l2, l3]).unwrap();
        assert_eq!(a.order[1], vec![2, 1]);
        assert_eq!(a.order[2], vec![2, 1]);
        assert_eq!(a.construction.expand(1, 1).unwrap(), w("00"));
        assert_eq!(a.construction.expand(2, 1).unwrap(), w("00100"));
        assert_eq!(a.construction.expand(3, 1).unwrap(), w("0010000010"));
        assert!(a.construction.validate().is_empty());
    }

    #[test]
    fn missing_building_is_an_error() {
        let l1 = ChainLevel {
            words: vec![w("00")],
            buildings: vec![None],
        };
        assert!(from_chains(&[l1]).is_err());
    }
}
