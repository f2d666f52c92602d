use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::construction::{Building, LevelStep, RankConstruction};
use crate::error::{Error, Result};
use crate::words::Word;

/// Edge counts a_1, a_2, … of the odometer; `a[0]` is a_1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MefParams {
    pub a: Vec<u64>,
}

impl MefParams {
    pub fn new(a: Vec<u64>) -> MefParams {
        MefParams { a }
    }

    /// (p_i, q_i) for i = 0..=depth: p_0 = q_0 = 1, p' = 2p+2q, q' = 2p+q.
    pub fn pq(depth: usize) -> Vec<(BigUint, BigUint)> {
        let mut out = vec![(BigUint::one(), BigUint::one())];
        for _ in 0..depth {
            let (p, q) = out.last().unwrap().clone();
            out.push((2u32 * &p + 2u32 * &q, 2u32 * p + q));
        }
        out
    }

    /// A_i = a_1 ⋯ a_i (A_0 = 1).
    pub fn big_a(&self, i: usize) -> Result<BigUint> {
        if i > self.a.len() {
            return Err(Error::InvalidArgument(format!(
                "a_{i} is not given ({} edge counts)",
                self.a.len()
            )));
        }
        Ok(self.a[..i].iter().map(|&x| BigUint::from(x)).product())
    }

    /// Checks a_i ≥ 2 and a_i > slack·(p_i + q_i) for i ≤ depth.
    pub fn check(&self, depth: usize, slack: u64) -> Result<()> {
        if depth > self.a.len() {
            return Err(Error::InvalidArgument(format!(
                "depth {depth} needs {depth} edge counts, got {}",
                self.a.len()
            )));
        }
        let pq = Self::pq(depth);
        for (i, (p, q)) in pq.iter().enumerate().skip(1) {
            let a = self.a[i - 1];
            let need = BigUint::from(slack) * (p + q);
            if a < 2 || BigUint::from(a) <= need {
                return Err(Error::EdgeCountTooSmall(format!(
                    "a_{i} = {a} must exceed {need} (p_{i}+q_{i} times {slack})"
                )));
            }
        }
        Ok(())
    }
}

/// Rank-2 construction with v_{1,1} = 0^a 1^{2a} 0^a, v_{1,2} = 0^a 1^a 0^a
/// (a = a_1) and v_{i+1,1} = v_{i,1}^a v_{i,2}^{2a} v_{i,1}^a,
/// v_{i+1,2} = v_{i,1}^a v_{i,2}^a v_{i,1}^a (a = a_{i+1}).
pub fn mef_construction(params: &MefParams, depth: usize, slack: u64) -> Result<RankConstruction> {
    if depth < 1 {
        return Err(Error::InvalidArgument("depth must be at least 1".into()));
    }
    params.check(depth, slack)?;
    let a1 = params.a[0] as usize;
    let z = Word::zeros(a1);
    let v11 = z.concat(&Word::ones(2 * a1)).concat(&z);
    let v12 = z.concat(&Word::ones(a1)).concat(&z);
    let mut steps = vec![LevelStep {
        buildings: vec![Building::over_zero(&v11)?, Building::over_zero(&v12)?],
    }];
    for &a in &params.a[1..depth] {
        let a = a as usize;
        let run = |mid: usize| [vec![1; a], vec![2; mid * a], vec![1; a]].concat();
        steps.push(LevelStep {
            buildings: vec![Building::concatenation(&run(2))?, Building::concatenation(&run(1))?],
        });
    }
    let c = RankConstruction::explicit(steps);
    c.validated()?;
    Ok(c)
}

/// The level-i odometer digit at position k, relative to an expected
/// occurrence of v_{i+1,1} at 0: the j with (j-1)A_i ≤ k mod A_{i+1} < jA_i.
pub fn mef_digits(params: &MefParams, k: &BigInt, i: usize) -> Result<u64> {
    let lo = BigInt::from(params.big_a(i)?);
    let hi = BigInt::from(params.big_a(i + 1)?);
    let r = k.mod_floor(&hi);
    let j = r / lo + 1u32;
    j.to_u64()
        .ok_or_else(|| Error::InvalidArgument("digit out of range".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pq_sequence() {
        let pq = MefParams::pq(3);
        let pairs: Vec<(u64, u64)> = pq
            .iter()
            .map(|(p, q)| (p.to_u64().unwrap(), q.to_u64().unwrap()))
            .collect();
        assert_eq!(pairs, vec![(1, 1), (4, 3), (14, 11), (50, 39)]);
        for (p, q) in &pq {
            assert!(p.gcd(q).is_one());
            assert!(q.is_odd());
        }
    }

    #[test]
    fn lengths_match_p_and_q() {
        let params = MefParams::new(vec![8, 26, 100, 400]);
        let c = mef_construction(&params, 4, 1).unwrap();
        assert_eq!(c.expand(1, 1).unwrap().len(), 32);
        let pq = MefParams::pq(4);
        let mut e = c.expander(0);
        for (n, (p, q)) in pq.iter().enumerate().skip(1) {
            let an = params.big_a(n).unwrap();
            assert_eq!(e.length(n, 1).unwrap(), p * &an);
            assert_eq!(e.length(n, 2).unwrap(), q * &an);
        }
    }

    #[test]
    fn edge_count_bound() {
        let e = mef_construction(&MefParams::new(vec![7]), 1, 1).unwrap_err();
        assert!(matches!(e, Error::EdgeCountTooSmall(_)));
        assert!(mef_construction(&MefParams::new(vec![8]), 1, 1).is_ok());
        assert!(mef_construction(&MefParams::new(vec![8]), 1, 2).is_err());
    }

    #[test]
    fn digits() {
        let p = MefParams::new(vec![8, 30]);
        assert_eq!(mef_digits(&p, &BigInt::from(-3), 0).unwrap(), 6);
        assert_eq!(mef_digits(&p, &BigInt::from(0), 0).unwrap(), 1);
        assert_eq!(mef_digits(&p, &BigInt::from(5 + 8), 0).unwrap(), 6);
        assert_eq!(mef_digits(&p, &BigInt::from(17), 1).unwrap(), 3);
        assert_eq!(mef_digits(&p, &BigInt::from(17 - 240), 1).unwrap(), 3);
    }
}
