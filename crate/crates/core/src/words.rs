//! Binary words, occurrence search, subword languages, run statistics and the
//! language distance d_L.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A finite word over {0,1}. Cloning is cheap; contents never change.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Arc<[u8]>);

impl Word {
    pub fn empty() -> Word {
        Word(Arc::from(Vec::new()))
    }

    /// Builds a word from symbols, rejecting anything other than 0 and 1.
    pub fn from_bits(bits: Vec<u8>) -> Result<Word> {
        if let Some(b) = bits.iter().find(|&&b| b > 1) {
            return Err(Error::InvalidWord(format!("symbol {b} is not 0 or 1")));
        }
        Ok(Word(Arc::from(bits)))
    }

    /// Caller guarantees every symbol is 0 or 1.
    pub(crate) fn from_bits_unchecked(bits: Vec<u8>) -> Word {
        debug_assert!(bits.iter().all(|&b| b <= 1));
        Word(Arc::from(bits))
    }

    pub fn zeros(n: usize) -> Word {
        Word::from_bits_unchecked(vec![0; n])
    }

    pub fn ones(n: usize) -> Word {
        Word::from_bits_unchecked(vec![1; n])
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word::from_bits_unchecked(v)
    }

    pub fn power(&self, k: usize) -> Word {
        Word::from_bits_unchecked(self.0.repeat(k))
    }

    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word::from_bits_unchecked(self.0[start..end].to_vec())
    }

    /// Renders the word, eliding the middle of long words unless `full`.
    pub fn render(&self, full: bool) -> String {
        const LIMIT: usize = 80;
        if full || self.len() <= LIMIT {
            return self.to_string();
        }
        let head: String = self.0[..32].iter().map(|&b| char::from(b'0' + b)).collect();
        let tail: String = self.0[self.len() - 32..]
            .iter()
            .map(|&b| char::from(b'0' + b))
            .collect();
        format!("{head}…{tail} (length {})", self.len())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(0u8),
                '1' => Ok(1u8),
                other => Err(Error::InvalidWord(format!("unexpected character {other:?}"))),
            })
            .collect::<Result<Vec<u8>>>()?;
        Ok(Word::from_bits_unchecked(bits))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in self.0.iter() {
            f.write_str(if b == 0 { "0" } else { "1" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word(\"{self}\")")
    }
}

/// A nonempty word beginning and ending with 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct FWord(Word);

impl FWord {
    pub fn new(w: Word) -> Result<FWord> {
        match (w.bits().first(), w.bits().last()) {
            (Some(0), Some(0)) => Ok(FWord(w)),
            _ => Err(Error::InvalidWord(format!(
                "\"{w}\" must be nonempty and begin and end with 0"
            ))),
        }
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }
}

impl FromStr for FWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<FWord> {
        FWord::new(s.parse()?)
    }
}

impl fmt::Display for FWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The set of length-n subwords observed at some truncation depth.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LanguageSnapshot {
    pub n: usize,
    pub members: BTreeSet<Word>,
    pub depth: usize,
    pub stabilized: bool,
}

/// Prefix function of `p` (Knuth-Morris-Pratt failure table).
pub(crate) fn prefix_function(p: &[u8]) -> Vec<usize> {
    let mut pi = vec![0; p.len()];
    let mut k = 0;
    for i in 1..p.len() {
        while k > 0 && p[i] != p[k] {
            k = pi[k - 1];
        }
        if p[i] == p[k] {
            k += 1;
        }
        pi[i] = k;
    }
    pi
}

/// All start positions of `u` in `w`, in increasing order.
pub(crate) fn find_all(u: &[u8], w: &[u8]) -> Vec<usize> {
    let mut out = Vec::new();
    if u.is_empty() || u.len() > w.len() {
        return out;
    }
    let pi = prefix_function(u);
    let mut k = 0;
    for (i, &c) in w.iter().enumerate() {
        while k > 0 && c != u[k] {
            k = pi[k - 1];
        }
        if c == u[k] {
            k += 1;
        }
        if k == u.len() {
            out.push(i + 1 - u.len());
            k = pi[k - 1];
        }
    }
    out
}

pub fn occurrences(u: &Word, w: &Word) -> Result<Vec<usize>> {
    if u.is_empty() {
        return Err(Error::EmptyPattern);
    }
    Ok(find_all(u.bits(), w.bits()))
}

pub fn subwords(w: &Word, n: usize) -> Result<LanguageSnapshot> {
    if n < 1 {
        return Err(Error::InvalidArgument("subword length must be at least 1".into()));
    }
    let members = if w.len() < n {
        BTreeSet::new()
    } else {
        w.bits()
            .windows(n)
            .map(|s| Word::from_bits_unchecked(s.to_vec()))
            .collect()
    };
    Ok(LanguageSnapshot {
        n,
        members,
        depth: 0,
        stabilized: false,
    })
}

pub fn max_run(w: &Word, symbol: u8) -> usize {
    let mut best = 0;
    let mut cur = 0;
    for &b in w.bits() {
        if b == symbol {
            cur += 1;
            best = best.max(cur);
        } else {
            cur = 0;
        }
    }
    best
}

/// Result of comparing two languages up to a finite length.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DistanceReport {
    /// The languages first differ at length `n_star`; the distance is 2^-n_star.
    Exact { n_star: usize },
    /// The languages agree for every n up to `max_n`.
    AtMost { max_n: usize },
}

impl DistanceReport {
    /// The exponent e with distance 2^-e (exact) or distance ≤ 2^-e.
    pub fn exponent(&self) -> usize {
        match *self {
            DistanceReport::Exact { n_star } => n_star,
            DistanceReport::AtMost { max_n } => max_n,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, DistanceReport::Exact { .. })
    }
}

impl fmt::Display for DistanceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DistanceReport::Exact { n_star } => write!(f, "d_L = 2^-{n_star}"),
            DistanceReport::AtMost { max_n } => write!(f, "d_L ≤ 2^-{max_n}"),
        }
    }
}

/// Language distance from snapshot sequences. Each sequence must hold a
/// stabilized snapshot for every n in 1..=max_n (in any order).
pub fn d_l(a: &[LanguageSnapshot], b: &[LanguageSnapshot], max_n: usize) -> Result<DistanceReport> {
    if max_n < 1 {
        return Err(Error::InvalidArgument("max_n must be at least 1".into()));
    }
    let pick = |seq: &'_ [LanguageSnapshot], n: usize| -> Result<BTreeSet<Word>> {
        match seq.iter().find(|s| s.n == n) {
            Some(s) if s.stabilized => Ok(s.members.clone()),
            _ => Err(Error::NotCertified(n)),
        }
    };
    for n in 1..=max_n {
        if pick(a, n)? != pick(b, n)? {
            return Ok(DistanceReport::Exact { n_star: n });
        }
    }
    Ok(DistanceReport::AtMost { max_n })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn occurrence_examples() {
        assert_eq!(occurrences(&w("0010"), &w("0010001010010")).unwrap(), vec![0, 4, 9]);
        assert!(occurrences(&w("11"), &w("0010")).unwrap().is_empty());
        assert_eq!(occurrences(&w("0"), &w("0")).unwrap(), vec![0]);
        assert_eq!(occurrences(&w(""), &w("0")), Err(Error::EmptyPattern));
        assert_eq!(occurrences(&w("000"), &w("00000")).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn subword_examples() {
        let s = subwords(&w("0010"), 2).unwrap();
        assert_eq!(s.members, ["00", "01", "10"].iter().map(|x| w(x)).collect());
        assert!(!s.stabilized);
        assert!(subwords(&w("0"), 2).unwrap().members.is_empty());
        assert_eq!(subwords(&w("01101001"), 2).unwrap().members.len(), 4);
        assert!(subwords(&w("0"), 0).is_err());
    }

    #[test]
    fn run_examples() {
        assert_eq!(max_run(&w("0010001010010"), 0), 3);
        assert_eq!(max_run(&w("1111"), 0), 0);
        assert_eq!(max_run(&w("0"), 0), 1);
        assert_eq!(max_run(&w(""), 1), 0);
    }

    #[test]
    fn fword_rules() {
        assert!("0".parse::<FWord>().is_ok());
        assert!("010".parse::<FWord>().is_ok());
        assert!("01".parse::<FWord>().is_err());
        assert!("".parse::<FWord>().is_err());
        assert!("02".parse::<Word>().is_err());
    }

    #[test]
    fn render_elides_long_words() {
        let long = Word::zeros(200);
        assert!(long.render(false).contains("(length 200)"));
        assert_eq!(long.render(true).len(), 200);
        assert_eq!(w("0101").render(false), "0101");
    }

    fn snap(n: usize, words: &[&str], stabilized: bool) -> LanguageSnapshot {
        LanguageSnapshot {
            n,
            members: words.iter().map(|x| w(x)).collect(),
            depth: 3,
            stabilized,
        }
    }

    #[test]
    fn distance_reports() {
        let a = vec![snap(1, &["0", "1"], true), snap(2, &["00", "01", "10"], true)];
        let b = vec![snap(1, &["0"], true), snap(2, &["00"], true)];
        assert_eq!(d_l(&a, &b, 2).unwrap(), DistanceReport::Exact { n_star: 1 });
        assert_eq!(d_l(&a, &a, 2).unwrap(), DistanceReport::AtMost { max_n: 2 });
        assert_eq!(d_l(&a, &a, 2).unwrap().to_string(), "d_L ≤ 2^-2");
        let c = vec![snap(1, &["0", "1"], false)];
        assert_eq!(d_l(&a, &c, 1), Err(Error::NotCertified(1)));
        assert_eq!(d_l(&a, &a, 3), Err(Error::NotCertified(3)));
    }
}
