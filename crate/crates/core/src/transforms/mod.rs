//! Constructive transforms: the good rank-2n cover of a proper construction,
//! sliding-block codes and the factor constructions they induce, the rank-2
//! MEF odometer family, and the named example gallery.

mod code;
mod cover;
mod factor;
mod gallery;
mod mef;
mod partition;

pub use code::{apply_code, apply_substitution, SlidingBlockCode, SubstitutionTable};
pub use cover::{good_cover, CoverOptions, CoverTrace, GoodCover};
pub use factor::{factor_construction, FactorOptions, FactorResult};
pub use gallery::{gallery, GalleryEntry, GALLERY_NAMES};
pub use mef::{mef_construction, mef_digits, MefParams};
pub use partition::{cyclic_partition_words, verify_cyclic_partition, verify_cyclic_partition_with, PartitionReport};

use crate::construction::{run_stats, RankConstruction};
use crate::error::{Error, Result};

/// Longest run of `symbol` over all words of a level, once it agrees on three
/// consecutive levels (searched up to `max_depth`).
pub(crate) fn stable_max_run(c: &RankConstruction, symbol: usize, max_depth: usize) -> Result<u64> {
    let depth = c.max_level().map_or(max_depth, |m| m.min(max_depth));
    let stats = run_stats(c, depth)?;
    let per_level: Vec<u64> = stats
        .iter()
        .map(|lvl| lvl.iter().map(|r| r.max[symbol]).max().unwrap_or(0))
        .collect();
    per_level
        .windows(3)
        .find(|w| w[0] == w[1] && w[1] == w[2])
        .map(|w| w[0])
        .ok_or_else(|| {
            Error::ExtendDepth(format!(
                "longest {symbol}-run did not stabilize over three levels within depth {depth}"
            ))
        })
}
