use std::fmt;
use std::str::FromStr;

use crate::construction::{Building, LevelStep, RankConstruction};
use crate::error::{Error, Result};
use crate::words::Word;

pub const GALLERY_NAMES: [&str; 5] = ["chacon", "chacon_like(k)", "prop_6_10", "prop_6_11(N)", "zero_spacer"];

/// Named example constructions.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GalleryEntry {
    /// v_{n+1} = v_n v_n 1 v_n.
    Chacon,
    /// v_1 = 0^{2k}1^k0^k, v_{n+1} = v_n v_n 1^k v_n.
    ChaconLike(usize),
    /// Rank 1 with 2n+7 blocks at step n and spacers growing like 3n.
    GrowingSpacers { depth: usize },
    /// Rank 1 with p = 2N middle spacers [2,2,3,3,…,N+1,N+1] and q = 10N.
    BoundedSpacers { n: usize },
    /// v_{n+1} = v_n v_n.
    ZeroSpacer,
}

impl GalleryEntry {
    pub const GROWING_DEPTH: usize = 9;

    pub fn construction(self) -> Result<RankConstruction> {
        let rank1 = |blocks: usize, spacers: Vec<u64>| -> Result<LevelStep> {
            Ok(LevelStep {
                buildings: vec![Building::new(&vec![1; blocks], &spacers)?],
            })
        };
        let c = match self {
            GalleryEntry::Chacon => RankConstruction::periodic(vec![rank1(3, vec![0, 1])?], 1),
            GalleryEntry::ChaconLike(k) => {
                if k == 0 {
                    return Err(Error::InvalidArgument("chacon_like needs k >= 1".into()));
                }
                let v1 = Word::zeros(2 * k).concat(&Word::ones(k)).concat(&Word::zeros(k));
                let first = LevelStep {
                    buildings: vec![Building::over_zero(&v1)?],
                };
                RankConstruction::periodic(vec![first, rank1(3, vec![0, k as u64])?], 1)
            }
            GalleryEntry::GrowingSpacers { depth } => {
                if depth == 0 {
                    return Err(Error::InvalidArgument("prop_6_10 needs depth >= 1".into()));
                }
                let steps = (0..depth as u64)
                    .map(|n| {
                        let mut s = vec![3 * n + 1];
                        for m in 0..=n + 1 {
                            s.extend([3 * m, 3 * m]);
                        }
                        s.push(3 * n + 2);
                        rank1(s.len() + 1, s)
                    })
                    .collect::<Result<Vec<_>>>()?;
                RankConstruction::explicit(steps)
            }
            GalleryEntry::BoundedSpacers { n } => {
                if n < 2 {
                    return Err(Error::InvalidArgument("prop_6_11 needs N >= 2".into()));
                }
                let q = 10 * n;
                let mut s = vec![1u64; q];
                for m in 2..=n as u64 + 1 {
                    s.extend([m, m]);
                }
                s.extend(std::iter::repeat_n(n as u64 + 2, q));
                RankConstruction::periodic(vec![rank1(s.len() + 1, s)?], 1)
            }
            GalleryEntry::ZeroSpacer => RankConstruction::periodic(vec![rank1(2, vec![0])?], 1),
        };
        c.validated()?;
        Ok(c)
    }
}

impl fmt::Display for GalleryEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GalleryEntry::Chacon => write!(f, "chacon"),
            GalleryEntry::ChaconLike(k) => write!(f, "chacon_like({k})"),
            GalleryEntry::GrowingSpacers { depth } if *depth == Self::GROWING_DEPTH => write!(f, "prop_6_10"),
            GalleryEntry::GrowingSpacers { depth } => write!(f, "prop_6_10({depth})"),
            GalleryEntry::BoundedSpacers { n } => write!(f, "prop_6_11({n})"),
            GalleryEntry::ZeroSpacer => write!(f, "zero_spacer"),
        }
    }
}

impl FromStr for GalleryEntry {
    type Err = Error;

    fn from_str(s: &str) -> Result<GalleryEntry> {
        let s = s.trim();
        let (head, arg) = match s.split_once('(') {
            Some((h, rest)) => {
                let inner = rest
                    .strip_suffix(')')
                    .ok_or_else(|| Error::UnknownGallery(s.to_string()))?;
                let v = inner
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| Error::UnknownGallery(s.to_string()))?;
                (h.trim(), Some(v))
            }
            None => (s, None),
        };
        match (head, arg) {
            ("chacon", None) => Ok(GalleryEntry::Chacon),
            ("chacon_like", Some(k)) => Ok(GalleryEntry::ChaconLike(k)),
            ("prop_6_10", None) => Ok(GalleryEntry::GrowingSpacers {
                depth: Self::GROWING_DEPTH,
            }),
            ("prop_6_10", Some(depth)) => Ok(GalleryEntry::GrowingSpacers { depth }),
            ("prop_6_11", Some(n)) => Ok(GalleryEntry::BoundedSpacers { n }),
            ("zero_spacer", None) => Ok(GalleryEntry::ZeroSpacer),
            _ => Err(Error::UnknownGallery(s.to_string())),
        }
    }
}

/// The named construction, e.g. `gallery("chacon_like(2)")`.
pub fn gallery(name: &str) -> Result<RankConstruction> {
    name.parse::<GalleryEntry>()?.construction()
}
