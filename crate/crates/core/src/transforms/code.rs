use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::parsing::{occurrence_criterion, Occurrence, WindowContext};
use crate::words::{find_all, Word};

/// A radius-r sliding-block code: the output at k is `table[x[k-r..=k+r]]`,
/// the window read as a binary number with x[k-r] most significant.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SlidingBlockCode {
    radius: usize,
    table: Vec<u8>,
}

impl SlidingBlockCode {
    pub const MAX_RADIUS: usize = 10;

    pub fn new(radius: usize, table: Vec<u8>) -> Result<SlidingBlockCode> {
        if radius > Self::MAX_RADIUS {
            return Err(Error::InvalidArgument(format!(
                "radius {radius} above {}",
                Self::MAX_RADIUS
            )));
        }
        let size = 1usize << (2 * radius + 1);
        if table.len() != size {
            return Err(Error::InvalidArgument(format!(
                "radius {radius} needs a table of {size} entries, got {}",
                table.len()
            )));
        }
        if table.iter().any(|&b| b > 1) {
            return Err(Error::InvalidArgument("table entries must be 0 or 1".into()));
        }
        Ok(SlidingBlockCode { radius, table })
    }

    pub fn from_fn(radius: usize, f: impl Fn(&[u8]) -> u8) -> Result<SlidingBlockCode> {
        let width = 2 * radius + 1;
        let table = (0..1usize << width.min(2 * Self::MAX_RADIUS + 1))
            .map(|x| {
                let bits: Vec<u8> = (0..width).map(|t| ((x >> (width - 1 - t)) & 1) as u8).collect();
                f(&bits)
            })
            .collect();
        SlidingBlockCode::new(radius, table)
    }

    pub fn identity() -> SlidingBlockCode {
        SlidingBlockCode {
            radius: 0,
            table: vec![0, 1],
        }
    }

    pub fn bit_flip() -> SlidingBlockCode {
        SlidingBlockCode {
            radius: 0,
            table: vec![1, 0],
        }
    }

    pub fn majority3() -> SlidingBlockCode {
        SlidingBlockCode::from_fn(1, |w| (w.iter().sum::<u8>() >= 2) as u8).unwrap()
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn table(&self) -> &[u8] {
        &self.table
    }

    /// Image of a finite word; shorter by 2r.
    pub fn apply_bits(&self, bits: &[u8]) -> Result<Vec<u8>> {
        let width = 2 * self.radius + 1;
        if bits.len() < width {
            return Err(Error::WindowTooSmall);
        }
        let mask = (1usize << width) - 1;
        let mut x = 0usize;
        let mut out = Vec::with_capacity(bits.len() + 1 - width);
        for (t, &b) in bits.iter().enumerate() {
            x = ((x << 1) | b as usize) & mask;
            if t + 1 >= width {
                out.push(self.table[x]);
            }
        }
        Ok(out)
    }
}

/// Window image under a code; the output starts r positions later.
pub fn apply_code(ctx: &WindowContext, code: &SlidingBlockCode) -> Result<WindowContext> {
    let out = code.apply_bits(ctx.word.bits())?;
    WindowContext::new(Word::from_bits_unchecked(out), ctx.origin + code.radius as i64)
}

/// Level-1 words of a cover paired with their images.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubstitutionTable {
    /// `entries[q - 1] = (w'_{1,q}, image)`.
    pub entries: Vec<(Word, Word)>,
    pub radius: usize,
}

impl SubstitutionTable {
    pub fn validated(&self) -> Result<()> {
        let mut seen = HashSet::new();
        for (q, (src, dst)) in self.entries.iter().enumerate() {
            if !seen.insert(src) {
                return Err(Error::InvalidArgument(format!("source word {} repeats", q + 1)));
            }
            if src.len() != dst.len() {
                return Err(Error::InvalidArgument(format!(
                    "entry {} maps {} symbols to {}",
                    q + 1,
                    src.len(),
                    dst.len()
                )));
            }
        }
        Ok(())
    }

    pub fn max_len(&self) -> usize {
        self.entries.iter().map(|e| e.0.len()).max().unwrap_or(0)
    }
}

/// Paints each expected level-1 occurrence with its table image; positions
/// outside every occurrence become 1. The result drops max_len - 1 symbols at
/// each edge, where expected occurrences cannot be decided.
///
/// The cover is assumed good; the table's source words are its level-1 words.
pub fn apply_substitution(ctx: &WindowContext, table: &SubstitutionTable) -> Result<WindowContext> {
    table.validated()?;
    let sources: Vec<Word> = table.entries.iter().map(|e| e.0.clone()).collect();
    let margin = table.max_len().saturating_sub(1);
    let len = ctx.word.len();
    if len <= 2 * margin {
        return Err(Error::WindowTooSmall);
    }
    let (lo, hi) = (margin, len - margin);
    let mut out = vec![1u8; hi - lo];
    let mut painted = vec![false; hi - lo];
    for (q, (src, dst)) in table.entries.iter().enumerate() {
        for p in find_all(src.bits(), ctx.word.bits()) {
            let end = p + src.len();
            if end <= lo || p >= hi {
                continue;
            }
            match occurrence_criterion(ctx, &sources, q + 1, ctx.origin + p as i64)? {
                Occurrence::True => {}
                Occurrence::False => continue,
                Occurrence::WindowTooSmall => return Err(Error::WindowTooSmall),
            }
            for t in p.max(lo)..end.min(hi) {
                let sym = dst.bits()[t - p];
                if painted[t - lo] && out[t - lo] != sym {
                    return Err(Error::Precondition(format!(
                        "expected occurrences overlap with different images at position {}",
                        ctx.origin + t as i64
                    )));
                }
                out[t - lo] = sym;
                painted[t - lo] = true;
            }
        }
    }
    WindowContext::new(Word::from_bits_unchecked(out), ctx.origin + lo as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn win(s: &str) -> WindowContext {
        WindowContext::new(s.parse().unwrap(), 0).unwrap()
    }

    #[test]
    fn code_examples() {
        assert_eq!(
            apply_code(&win("0010"), &SlidingBlockCode::bit_flip())
                .unwrap()
                .word
                .to_string(),
            "1101"
        );
        assert_eq!(
            apply_code(&win("0010"), &SlidingBlockCode::identity())
                .unwrap()
                .word
                .to_string(),
            "0010"
        );
        let m = apply_code(&win("00100"), &SlidingBlockCode::majority3()).unwrap();
        assert_eq!(m.word.to_string(), "000");
        assert_eq!(m.origin, 1);
        let m = apply_code(&win("0110100"), &SlidingBlockCode::majority3()).unwrap();
        assert_eq!(m.word.to_string(), "11100");
        assert_eq!(
            apply_code(&win("01"), &SlidingBlockCode::majority3()),
            Err(Error::WindowTooSmall)
        );
    }

    #[test]
    fn table_validation() {
        assert!(SlidingBlockCode::new(1, vec![0; 7]).is_err());
        assert!(SlidingBlockCode::new(0, vec![0, 2]).is_err());
        let w = |s: &str| s.parse::<Word>().unwrap();
        let t = SubstitutionTable {
            entries: vec![(w("00"), w("010"))],
            radius: 0,
        };
        assert!(t.validated().is_err());
    }

    #[test]
    fn substitution_paints_expected_occurrences() {
        let w = |s: &str| s.parse::<Word>().unwrap();
        let table = SubstitutionTable {
            entries: vec![(w("0010"), w("0110")), (w("0100"), w("0000"))],
            radius: 0,
        };
        let ctx = win("1110010111");
        let out = apply_substitution(&ctx, &table).unwrap();
        assert_eq!(out.origin, 3);
        assert_eq!(out.word.to_string(), "0110");
        let ones = apply_substitution(&win("11111111111"), &table).unwrap();
        assert_eq!(ones.word.to_string(), "11111");
    }
}
