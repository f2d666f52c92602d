use std::collections::BTreeSet;

use super::gallery::GalleryEntry;
use crate::construction::language;
use crate::error::{Error, Result};
use crate::words::Word;

/// {0^{3k}, 0^{2k}1^k, 0^k1^k0^k, 1^k0^k1^k, 1^k0^{2k}}.
pub fn cyclic_partition_words(k: usize) -> BTreeSet<Word> {
    let (z, o) = (Word::zeros(k), Word::ones(k));
    [
        z.power(3),
        z.power(2).concat(&o),
        z.concat(&o).concat(&z),
        o.concat(&z).concat(&o),
        o.concat(&z.power(2)),
    ]
    .into_iter()
    .collect()
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PartitionReport {
    pub k: usize,
    pub depth: usize,
    /// Size of the length-4k language checked.
    pub words_checked: usize,
    /// A length-4k language word violating invariance or the partition count.
    pub witness: Option<Word>,
}

impl PartitionReport {
    pub fn pass(&self) -> bool {
        self.witness.is_none()
    }
}

/// Checks that the cylinder of `U` at 0 is σ^k-invariant and that its first
/// k shifts are disjoint and cover, on the length-4k language of chacon_like(k).
pub fn verify_cyclic_partition(k: usize, depth: usize) -> Result<PartitionReport> {
    verify_cyclic_partition_with(k, depth, &cyclic_partition_words(k))
}

pub fn verify_cyclic_partition_with(k: usize, depth: usize, u: &BTreeSet<Word>) -> Result<PartitionReport> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let c = GalleryEntry::ChaconLike(k).construction()?;
    let snap = language(&c, 4 * k, depth)?;
    if !snap.stabilized {
        return Err(Error::ExtendDepth(format!(
            "length-{} language not stabilized at depth {depth}",
            4 * k
        )));
    }
    let member = |b: &[u8]| u.iter().any(|w| w.bits() == b);
    let witness = snap
        .members
        .iter()
        .find(|w| {
            let b = w.bits();
            let invariant = member(&b[..3 * k]) == member(&b[k..]);
            let hits = (0..k).filter(|&t| member(&b[t..t + 3 * k])).count();
            !invariant || hits != 1
        })
        .cloned();
    Ok(PartitionReport {
        k,
        depth,
        words_checked: snap.members.len(),
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chacon_like_partitions() {
        for k in [2, 3] {
            let r = verify_cyclic_partition(k, 5).unwrap();
            assert!(r.pass(), "k = {k}: {:?}", r.witness);
            assert!(r.words_checked > 0);
        }
    }

    #[test]
    fn removing_a_word_breaks_it() {
        let mut u = cyclic_partition_words(2);
        u.remove(&"110011".parse::<Word>().unwrap());
        let r = verify_cyclic_partition_with(2, 5, &u).unwrap();
        assert!(!r.pass());
        let w = r.witness.unwrap();
        assert_eq!(w.len(), 8);
    }

    #[test]
    fn shallow_depth_is_reported() {
        assert!(matches!(verify_cyclic_partition(2, 1), Err(Error::ExtendDepth(_))));
    }
}
