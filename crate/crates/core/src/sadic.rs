//! S-adic directive sequences τ_i : A_{i+1}* → A_i* over finite alphabets.
//! Letters are 1-based; words over general alphabets are `Vec<usize>`.

use std::collections::BTreeSet;

use crate::construction::{Building, LevelStep, RankConstruction, Schedule};
use crate::error::{Error, Result};
use crate::words::Word;

/// Default cap on the total number of letters in a composed morphism.
pub const DEFAULT_LETTER_BUDGET: u64 = 1 << 24;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Morphism {
    pub source_size: usize,
    pub target_size: usize,
    /// `rules[a - 1]`: the image of letter a.
    pub rules: Vec<Vec<usize>>,
}

impl Morphism {
    pub fn new(target_size: usize, rules: Vec<Vec<usize>>) -> Result<Morphism> {
        let m = Morphism {
            source_size: rules.len(),
            target_size,
            rules,
        };
        m.check()?;
        Ok(m)
    }

    fn check(&self) -> Result<()> {
        if self.source_size == 0 || self.rules.len() != self.source_size {
            return Err(Error::InvalidDirective(format!(
                "morphism on {} letters has {} rules",
                self.source_size,
                self.rules.len()
            )));
        }
        for (a, r) in self.rules.iter().enumerate() {
            if r.is_empty() {
                return Err(Error::InvalidDirective(format!("rule for letter {} is empty", a + 1)));
            }
            if let Some(&b) = r.iter().find(|&&b| b == 0 || b > self.target_size) {
                return Err(Error::InvalidDirective(format!(
                    "rule for letter {} uses letter {b} outside 1..={}",
                    a + 1,
                    self.target_size
                )));
            }
        }
        Ok(())
    }

    pub fn rule(&self, a: usize) -> &[usize] {
        &self.rules[a - 1]
    }

    /// Image of a word.
    pub fn apply(&self, w: &[usize]) -> Vec<usize> {
        w.iter().flat_map(|&a| self.rule(a).iter().copied()).collect()
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Morphism) -> Result<Morphism> {
        if inner.target_size != self.source_size {
            return Err(Error::InvalidDirective(format!(
                "cannot compose: inner target has {} letters, outer source {}",
                inner.target_size, self.source_size
            )));
        }
        Ok(Morphism {
            source_size: inner.source_size,
            target_size: self.target_size,
            rules: inner.rules.iter().map(|r| self.apply(r)).collect(),
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DirectiveSequence {
    /// |A_0|, …, |A_m| for the stored morphisms τ_0, …, τ_{m-1}.
    pub alphabets: Vec<usize>,
    pub morphisms: Vec<Morphism>,
    /// Periodic: the last `cycle_len` morphisms repeat.
    pub schedule: Schedule,
}

impl DirectiveSequence {
    pub fn new(alphabets: Vec<usize>, morphisms: Vec<Morphism>, schedule: Schedule) -> Result<DirectiveSequence> {
        let ds = DirectiveSequence {
            alphabets,
            morphisms,
            schedule,
        };
        ds.validated()?;
        Ok(ds)
    }

    /// Thue–Morse: 1 → 12, 2 → 21 repeated.
    pub fn thue_morse() -> DirectiveSequence {
        let m = Morphism::new(2, vec![vec![1, 2], vec![2, 1]]).unwrap();
        DirectiveSequence {
            alphabets: vec![2, 2],
            morphisms: vec![m],
            schedule: Schedule::Periodic { cycle_len: 1 },
        }
    }

    pub fn validated(&self) -> Result<()> {
        if self.morphisms.is_empty() || self.alphabets.len() != self.morphisms.len() + 1 {
            return Err(Error::InvalidDirective(format!(
                "{} alphabets for {} morphisms",
                self.alphabets.len(),
                self.morphisms.len()
            )));
        }
        for (i, m) in self.morphisms.iter().enumerate() {
            m.check()?;
            if m.target_size != self.alphabets[i] || m.source_size != self.alphabets[i + 1] {
                return Err(Error::InvalidDirective(format!(
                    "morphism {i} maps {} letters to {}, alphabets say {} to {}",
                    m.source_size,
                    m.target_size,
                    self.alphabets[i + 1],
                    self.alphabets[i]
                )));
            }
        }
        if let Schedule::Periodic { cycle_len } = self.schedule {
            let m = self.morphisms.len();
            if cycle_len == 0 || cycle_len > m {
                return Err(Error::InvalidDirective(format!(
                    "cycle length {cycle_len} outside 1..={m}"
                )));
            }
            if self.alphabets[m] != self.alphabets[m - cycle_len] {
                return Err(Error::InvalidDirective(
                    "periodic cycle does not close on its alphabet".into(),
                ));
            }
        }
        Ok(())
    }

    fn wrap(&self, i: usize) -> Option<usize> {
        let m = self.morphisms.len();
        match self.schedule {
            _ if i < m => Some(i),
            Schedule::Explicit => None,
            Schedule::Periodic { cycle_len } => Some(m - cycle_len + (i - m) % cycle_len),
        }
    }

    /// τ_i, if defined.
    pub fn morphism(&self, i: usize) -> Option<&Morphism> {
        self.wrap(i).map(|t| &self.morphisms[t])
    }

    /// |A_i|, if defined.
    pub fn alphabet(&self, i: usize) -> Option<usize> {
        if i == 0 {
            return Some(self.alphabets[0]);
        }
        self.wrap(i - 1).map(|t| self.alphabets[t + 1])
    }

    fn reach(&self, i: usize) -> Result<&Morphism> {
        self.morphism(i).ok_or_else(|| {
            Error::InvalidArgument(format!(
                "morphism {i} is beyond the {} stored ones",
                self.morphisms.len()
            ))
        })
    }

    /// Explicit sequence of τ_{[cuts[k], cuts[k+1])}.
    pub fn telescope(&self, cuts: &[usize], budget: u64) -> Result<DirectiveSequence> {
        if cuts.len() < 2 || cuts[0] != 0 || cuts.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument("cuts must be strictly increasing from 0".into()));
        }
        let morphisms = cuts
            .windows(2)
            .map(|w| compose_range(self, w[0], w[1], budget))
            .collect::<Result<Vec<_>>>()?;
        let alphabets = cuts.iter().map(|&c| self.alphabet(c).unwrap()).collect();
        DirectiveSequence::new(alphabets, morphisms, Schedule::Explicit)
    }
}

/// τ_n ∘ … ∘ τ_{N-1}.
pub fn compose_range(ds: &DirectiveSequence, n: usize, big_n: usize, budget: u64) -> Result<Morphism> {
    if n >= big_n {
        return Err(Error::InvalidArgument(format!("need n < N (got {n}, {big_n})")));
    }
    let mut acc = ds.reach(big_n - 1)?.clone();
    for i in (n..big_n - 1).rev() {
        let outer = ds.reach(i)?;
        let lens: Vec<u64> = outer.rules.iter().map(|r| r.len() as u64).collect();
        let total = acc
            .rules
            .iter()
            .flatten()
            .fold(0u64, |s, &a| s.saturating_add(lens[a - 1]));
        if total > budget {
            return Err(Error::BudgetExceeded {
                needed: total.to_string(),
                budget,
            });
        }
        acc = outer.compose(&acc)?;
    }
    Ok(acc)
}

/// Length-`word_len` factors of the words τ_{[n,N)}(a).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SadicLanguage {
    pub word_len: usize,
    pub members: BTreeSet<Vec<usize>>,
    pub level: usize,
    /// The set at N - 1 (when N - 1 > n) was already the same.
    pub stabilized: bool,
}

pub fn language_level(
    ds: &DirectiveSequence,
    n: usize,
    word_len: usize,
    big_n: usize,
    budget: u64,
) -> Result<SadicLanguage> {
    if word_len == 0 {
        return Err(Error::InvalidArgument("word length must be at least 1".into()));
    }
    let factors = |m: &Morphism| -> BTreeSet<Vec<usize>> {
        m.rules
            .iter()
            .flat_map(|r| r.windows(word_len).map(<[usize]>::to_vec))
            .collect()
    };
    let members = factors(&compose_range(ds, n, big_n, budget)?);
    let stabilized = big_n > n + 1 && factors(&compose_range(ds, n, big_n - 1, budget)?) == members;
    Ok(SadicLanguage {
        word_len,
        members,
        level: big_n,
        stabilized,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Primitivity {
    Found(usize),
    NotFound,
}

/// Least N ≤ horizon such that every τ_{[n,N)}(a) contains every letter of A_n.
pub fn primitivity_probe(ds: &DirectiveSequence, n: usize, horizon: usize) -> Result<Primitivity> {
    let Some(size) = ds.alphabet(n) else {
        return Ok(Primitivity::NotFound);
    };
    // sets[a]: letters of A_n occurring in τ_{[n,N)}(a).
    let mut sets: Option<Vec<BTreeSet<usize>>> = None;
    for big_n in n + 1..=horizon {
        let Some(m) = ds.morphism(big_n - 1) else { break };
        let next: Vec<BTreeSet<usize>> = match &sets {
            None => m.rules.iter().map(|r| r.iter().copied().collect()).collect(),
            Some(prev) => m
                .rules
                .iter()
                .map(|r| r.iter().flat_map(|&b| prev[b - 1].iter().copied()).collect())
                .collect(),
        };
        if next.iter().all(|s| s.len() == size) {
            return Ok(Primitivity::Found(big_n));
        }
        sets = Some(next);
    }
    Ok(Primitivity::NotFound)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct AlphabetRankStats {
    /// min |A_i| over 1 ≤ i ≤ depth.
    pub min_size: usize,
    /// The liminf, known exactly when the schedule is periodic.
    pub liminf: Option<usize>,
}

pub fn alphabet_rank_stats(ds: &DirectiveSequence, depth: usize) -> Result<AlphabetRankStats> {
    if depth < 1 {
        return Err(Error::InvalidArgument("depth must be at least 1".into()));
    }
    let sizes = (1..=depth)
        .map(|i| {
            ds.alphabet(i)
                .ok_or_else(|| Error::InvalidArgument(format!("alphabet {i} is not defined")))
        })
        .collect::<Result<Vec<_>>>()?;
    let liminf = match ds.schedule {
        Schedule::Periodic { cycle_len } => {
            let m = ds.alphabets.len();
            ds.alphabets[m - cycle_len..].iter().copied().min()
        }
        Schedule::Explicit => None,
    };
    Ok(AlphabetRankStats {
        min_size: sizes.into_iter().min().unwrap(),
        liminf,
    })
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SadicConversion {
    pub construction: RankConstruction,
    /// `letter_order[i][j - 1]`: the letter of A_i that became v_{i,j}.
    pub letter_order: Vec<Vec<usize>>,
    /// Recognizability is assumed, not checked.
    pub recognizable_declared: bool,
}

/// Rank-K construction from τ_0, …, τ_{depth-1}: level-1 words have the
/// lengths |τ_0(a_{1,j})| and the shape 0(01)^j 0^* (10)^{j+K} 0; deeper
/// levels concatenate along the rules with no spacers.
pub fn to_rank_construction(
    ds: &DirectiveSequence,
    k: usize,
    depth: usize,
    recognizable_declared: bool,
) -> Result<SadicConversion> {
    ds.validated()?;
    if depth < 1 {
        return Err(Error::InvalidArgument("depth must be at least 1".into()));
    }
    let taus = (0..depth).map(|i| ds.reach(i)).collect::<Result<Vec<_>>>()?;
    for (i, tau) in taus.iter().enumerate() {
        for (b, rule) in tau.rules.iter().enumerate() {
            if let Some(a) = (1..=tau.target_size).find(|a| !rule.contains(a)) {
                return Err(Error::Precondition(format!(
                    "tau_{i}(letter {}) does not contain letter {a} of A_{i}",
                    b + 1
                )));
            }
        }
    }
    for i in 1..=depth {
        let size = ds.alphabet(i).unwrap();
        if size != k {
            return Err(Error::Precondition(format!("|A_{i}| = {size}, need {k}")));
        }
    }

    // ext[i][a]: letter a of A_i starts a chain of first letters up to A_depth.
    let mut ext: Vec<Vec<bool>> = vec![vec![true; k]; depth + 1];
    for i in (1..depth).rev() {
        ext[i] = vec![false; k];
        for (b, rule) in taus[i].rules.iter().enumerate() {
            if ext[i + 1][b] {
                ext[i][rule[0] - 1] = true;
            }
        }
    }
    let mut chain = Vec::with_capacity(depth);
    for i in 1..=depth {
        let pick = (1..=k).find(|&a| ext[i][a - 1] && (i == 1 || taus[i - 1].rule(a)[0] == chain[i - 2]));
        match pick {
            Some(a) => chain.push(a),
            None => {
                return Err(Error::Precondition(format!(
                    "telescope or split: no start chain at A_{i}"
                )))
            }
        }
    }
    let mut letter_order = vec![(1..=ds.alphabets[0]).collect::<Vec<_>>()];
    for &lead in &chain {
        let mut order = vec![lead];
        order.extend((1..=k).filter(|&a| a != lead));
        letter_order.push(order);
    }

    let mut level1 = Vec::with_capacity(k);
    for (j, &a) in letter_order[1].iter().enumerate().map(|(t, a)| (t + 1, a)) {
        let h = taus[0].rule(a).len();
        let bound = 2 * k + 4 * j + 3;
        if h < bound {
            return Err(Error::Precondition(format!(
                "|tau_0(a_1,{j})| = {h} (letter {a}) is below the required bound 2K+4j+3 = {bound}"
            )));
        }
        let word = Word::zeros(1)
            .concat(&"01".parse::<Word>()?.power(j))
            .concat(&Word::zeros(h - 2 * k - 4 * j - 2))
            .concat(&"10".parse::<Word>()?.power(j + k))
            .concat(&Word::zeros(1));
        level1.push(Building::over_zero(&word)?);
    }
    let mut steps = vec![LevelStep { buildings: level1 }];
    for i in 1..depth {
        let below = &letter_order[i];
        let rank_of = |a: usize| below.iter().position(|&b| b == a).unwrap() + 1;
        let buildings = letter_order[i + 1]
            .iter()
            .map(|&a| {
                let blocks: Vec<usize> = taus[i].rule(a).iter().map(|&b| rank_of(b)).collect();
                Building::concatenation(&blocks)
            })
            .collect::<Result<Vec<_>>>()?;
        steps.push(LevelStep { buildings });
    }
    let construction = RankConstruction::explicit(steps);
    construction.validated()?;
    Ok(SadicConversion {
        construction,
        letter_order,
        recognizable_declared,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const B: u64 = DEFAULT_LETTER_BUDGET;

    /// τ_0 with rules of the given lengths over {1,2}, then Thue–Morse.
    fn wide(lens: &[usize], depth: usize) -> DirectiveSequence {
        let rules = lens
            .iter()
            .map(|&l| (0..l).map(|t| 1 + (t % 3 == 1) as usize).collect())
            .collect();
        let mut morphisms = vec![Morphism::new(2, rules).unwrap()];
        morphisms.extend(std::iter::repeat_n(
            DirectiveSequence::thue_morse().morphisms[0].clone(),
            depth - 1,
        ));
        DirectiveSequence::new(vec![2; depth + 1], morphisms, Schedule::Explicit).unwrap()
    }

    #[test]
    fn composition() {
        let tm = DirectiveSequence::thue_morse();
        let m = compose_range(&tm, 0, 2, B).unwrap();
        assert_eq!(m.rule(1), &[1, 2, 2, 1]);
        assert_eq!(compose_range(&tm, 3, 4, B).unwrap(), tm.morphisms[0]);
        assert_eq!(compose_range(&tm, 0, 10, B).unwrap().rule(2).len(), 1 << 10);
        assert!(matches!(
            compose_range(&tm, 0, 30, 1000),
            Err(Error::BudgetExceeded { .. })
        ));
        let left = compose_range(&tm, 0, 2, B)
            .unwrap()
            .compose(&compose_range(&tm, 2, 5, B).unwrap())
            .unwrap();
        assert_eq!(left, compose_range(&tm, 0, 5, B).unwrap());
    }

    #[test]
    fn languages() {
        let tm = DirectiveSequence::thue_morse();
        let l = language_level(&tm, 0, 2, 3, B).unwrap();
        assert_eq!(l.members.len(), 4);
        assert!(l.stabilized);
        let l1 = language_level(&tm, 0, 1, 2, B).unwrap();
        assert_eq!(l1.members, [vec![1], vec![2]].into_iter().collect());
        let skip = Morphism::new(2, vec![vec![1, 1], vec![1]]).unwrap();
        let ds = DirectiveSequence::new(vec![2, 2], vec![skip], Schedule::Periodic { cycle_len: 1 }).unwrap();
        assert_eq!(
            language_level(&ds, 0, 1, 3, B).unwrap().members,
            [vec![1]].into_iter().collect()
        );
    }

    #[test]
    fn primitivity() {
        assert_eq!(
            primitivity_probe(&DirectiveSequence::thue_morse(), 0, 10).unwrap(),
            Primitivity::Found(1)
        );
        let id = Morphism::new(2, vec![vec![1], vec![2]]).unwrap();
        let ds = DirectiveSequence::new(vec![2, 2], vec![id], Schedule::Periodic { cycle_len: 1 }).unwrap();
        assert_eq!(primitivity_probe(&ds, 0, 10).unwrap(), Primitivity::NotFound);
        let slow = Morphism::new(2, vec![vec![2, 2], vec![1, 2]]).unwrap();
        let ds = DirectiveSequence::new(vec![2, 2], vec![slow], Schedule::Periodic { cycle_len: 1 }).unwrap();
        assert_eq!(primitivity_probe(&ds, 0, 10).unwrap(), Primitivity::Found(2));
    }

    #[test]
    fn alphabet_ranks() {
        let s = alphabet_rank_stats(&DirectiveSequence::thue_morse(), 5).unwrap();
        assert_eq!(
            s,
            AlphabetRankStats {
                min_size: 2,
                liminf: Some(2)
            }
        );
        let up = Morphism::new(2, vec![vec![1, 2], vec![2, 1], vec![1, 2, 1]]).unwrap();
        let down = Morphism::new(3, vec![vec![1, 2, 3], vec![3, 2, 1]]).unwrap();
        let ds = DirectiveSequence::new(vec![2, 3, 2], vec![up, down], Schedule::Periodic { cycle_len: 2 }).unwrap();
        assert_eq!(alphabet_rank_stats(&ds, 6).unwrap().liminf, Some(2));
        let m = |t: usize, s: usize| Morphism::new(t, vec![(1..=t).collect(); s]).unwrap();
        let ds = DirectiveSequence::new(vec![2, 5, 4, 3], vec![m(2, 5), m(5, 4), m(4, 3)], Schedule::Explicit).unwrap();
        assert_eq!(
            alphabet_rank_stats(&ds, 3).unwrap(),
            AlphabetRankStats {
                min_size: 3,
                liminf: None
            }
        );
    }

    #[test]
    fn conversion() {
        let conv = to_rank_construction(&wide(&[20, 20], 3), 2, 3, true).unwrap();
        let c = &conv.construction;
        assert_eq!(c.expand(1, 1).unwrap().len(), 20);
        assert_eq!(c.expand(1, 2).unwrap().len(), 20);
        assert_eq!(c.length(3, 1).unwrap(), 80u32.into());
        assert!(conv.recognizable_declared);
        let e = to_rank_construction(&wide(&[20, 9], 2), 2, 2, false).unwrap_err();
        assert!(e.to_string().contains("15"));
    }

    #[test]
    fn conversion_reorders_letters() {
        let t1 = Morphism::new(2, vec![vec![2, 1], vec![2, 1, 1]]).unwrap();
        let ds = DirectiveSequence::new(
            vec![2, 2, 2],
            vec![wide(&[16, 15], 2).morphisms[0].clone(), t1],
            Schedule::Explicit,
        )
        .unwrap();
        let conv = to_rank_construction(&ds, 2, 2, false).unwrap();
        assert_eq!(conv.letter_order[1], vec![2, 1]);
        assert_eq!(conv.construction.length(2, 2).unwrap(), (15u32 + 16 + 16).into());
    }
}
