use crate::construction::Building;
use crate::error::{Error, Result};
use crate::words::FWord;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BuildingList {
    pub buildings: Vec<Building>,
    /// More buildings exist beyond the cap.
    pub overflow: bool,
}

/// All buildings of `w` from the words of `s` (indices 1-based into `s`),
/// longest block first at each position.
pub fn enumerate_buildings(w: &FWord, s: &[FWord], cap: usize) -> Result<BuildingList> {
    if cap == 0 {
        return Err(Error::InvalidArgument("cap must be at least 1".into()));
    }
    if s.is_empty() {
        return Err(Error::InvalidArgument("word set must be nonempty".into()));
    }
    let bits = w.word().bits();
    let l = bits.len();
    let mut order: Vec<usize> = (0..s.len()).collect();
    order.sort_by_key(|&q| (std::cmp::Reverse(s[q].word().len()), q));

    // matches[p]: indices of words occurring at p.
    let matches: Vec<Vec<usize>> = (0..l)
        .map(|p| {
            order
                .iter()
                .copied()
                .filter(|&q| bits[p..].starts_with(s[q].word().bits()))
                .collect()
        })
        .collect();
    // next_block[e]: start of the block after a block ending at e, with the spacer.
    let next_block = |e: usize| {
        let mut p = e;
        while p < l && bits[p] == 1 {
            p += 1;
        }
        (p, (p - e) as u64)
    };
    // alive[p]: some tiling of bits[p..] exists.
    let mut alive = vec![false; l + 1];
    alive[l] = true;
    for p in (0..l).rev() {
        alive[p] = matches[p].iter().any(|&q| {
            let e = p + s[q].word().len();
            e == l || {
                let (n, _) = next_block(e);
                n < l && alive[n]
            }
        });
    }

    let mut out = BuildingList {
        buildings: Vec::new(),
        overflow: false,
    };
    let mut blocks = Vec::new();
    let mut spacers = Vec::new();
    if alive[0] {
        walk(
            0,
            bits,
            s,
            &matches,
            &alive,
            &next_block,
            &mut blocks,
            &mut spacers,
            cap,
            &mut out,
        );
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn walk(
    p: usize,
    bits: &[u8],
    s: &[FWord],
    matches: &[Vec<usize>],
    alive: &[bool],
    next_block: &dyn Fn(usize) -> (usize, u64),
    blocks: &mut Vec<usize>,
    spacers: &mut Vec<u64>,
    cap: usize,
    out: &mut BuildingList,
) {
    let l = bits.len();
    for &q in &matches[p] {
        if out.overflow {
            return;
        }
        let e = p + s[q].word().len();
        blocks.push(q + 1);
        if e == l {
            if blocks.len() >= 2 {
                if out.buildings.len() == cap {
                    out.overflow = true;
                } else {
                    out.buildings.push(Building::new(blocks, spacers).unwrap());
                }
            }
        } else {
            let (n, sp) = next_block(e);
            if n < l && alive[n] {
                spacers.push(sp);
                walk(n, bits, s, matches, alive, next_block, blocks, spacers, cap, out);
                spacers.pop();
            }
        }
        blocks.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(x: &str) -> FWord {
        x.parse().unwrap()
    }

    #[test]
    fn examples() {
        let r = enumerate_buildings(&f("00100"), &[f("0"), f("00")], 10).unwrap();
        assert_eq!(r.buildings.len(), 4);
        assert!(!r.overflow);
        assert_eq!(r.buildings[0], Building::new(&[2, 2], &[1]).unwrap());
        assert!(enumerate_buildings(&f("0"), &[f("0")], 10)
            .unwrap()
            .buildings
            .is_empty());
        let one = enumerate_buildings(&f("01010"), &[f("0")], 10).unwrap();
        assert_eq!(one.buildings, vec![Building::new(&[1, 1, 1], &[1, 1]).unwrap()]);
    }

    #[test]
    fn cap_flags_overflow() {
        let r = enumerate_buildings(&f("00100"), &[f("0"), f("00")], 3).unwrap();
        assert_eq!(r.buildings.len(), 3);
        assert!(r.overflow);
        assert!(enumerate_buildings(&f("00100"), &[f("0")], 0).is_err());
    }
}
