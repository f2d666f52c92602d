//! Ordered Bratteli diagrams stored by incoming edge lists.
//!
//! Vertex indices are 1-based; level 0 is the single root. The incoming list
//! of a vertex enumerates the sources of its edges in increasing edge order,
//! so it is also the word η_k(v).

mod convert;
mod vershik;

pub use convert::{to_rank_construction, BratteliConversion};
pub use vershik::{
    all_paths, min_path, tower_coding, tower_coding_from, tower_position, vershik_orbit, vershik_successor, PathPrefix,
};

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrderedBratteliDiagram {
    /// |V_k| for k = 0..=depth; the first entry is 1.
    pub level_sizes: Vec<usize>,
    /// `incoming[k - 1][v - 1]`: sources of the edges into vertex v of V_k.
    pub incoming: Vec<Vec<Vec<usize>>>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DiagramViolation {
    pub level: usize,
    pub message: String,
}

impl std::fmt::Display for DiagramViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "level {}: {}", self.level, self.message)
    }
}

impl OrderedBratteliDiagram {
    /// Diagram from the incoming lists of levels 1..=depth; sizes are read off the lists.
    pub fn new(incoming: Vec<Vec<Vec<usize>>>) -> OrderedBratteliDiagram {
        let mut level_sizes = vec![1];
        level_sizes.extend(incoming.iter().map(Vec::len));
        OrderedBratteliDiagram { level_sizes, incoming }
    }

    /// Single-vertex levels with a_k parallel edges.
    pub fn odometer(a: &[usize]) -> OrderedBratteliDiagram {
        OrderedBratteliDiagram::new(a.iter().map(|&k| vec![vec![1; k]]).collect())
    }

    pub fn depth(&self) -> usize {
        self.level_sizes.len() - 1
    }

    pub fn size(&self, k: usize) -> usize {
        self.level_sizes[k]
    }

    pub fn incoming(&self, k: usize, v: usize) -> &[usize] {
        &self.incoming[k - 1][v - 1]
    }

    pub fn validate(&self) -> Vec<DiagramViolation> {
        let mut out = Vec::new();
        let mut bad = |level: usize, message: String| out.push(DiagramViolation { level, message });
        if self.level_sizes.first() != Some(&1) {
            bad(0, "level 0 must have exactly one vertex".into());
        }
        if self.incoming.len() + 1 != self.level_sizes.len() {
            bad(
                0,
                format!(
                    "{} level sizes but {} incoming levels",
                    self.level_sizes.len(),
                    self.incoming.len()
                ),
            );
            return out;
        }
        for k in 1..=self.depth() {
            let lists = &self.incoming[k - 1];
            if lists.len() != self.level_sizes[k] {
                bad(
                    k,
                    format!("size {} but {} incoming lists", self.level_sizes[k], lists.len()),
                );
            }
            if lists.is_empty() {
                bad(k, "level has no vertices".into());
            }
            let below = self.level_sizes[k - 1];
            let mut used = vec![false; below];
            for (v, list) in lists.iter().enumerate() {
                if list.is_empty() {
                    bad(k, format!("vertex {} has empty incoming list", v + 1));
                }
                for &s in list {
                    if s == 0 || s > below {
                        bad(k, format!("vertex {} has source {s} outside 1..={below}", v + 1));
                    } else {
                        used[s - 1] = true;
                    }
                }
            }
            for (s, u) in used.iter().enumerate() {
                if !u {
                    bad(
                        k,
                        format!(
                            "source-surjectivity: vertex {} of level {} is never a source",
                            s + 1,
                            k - 1
                        ),
                    );
                }
            }
        }
        out
    }

    pub fn validated(&self) -> Result<()> {
        match self.validate().first() {
            None => Ok(()),
            Some(v) => Err(Error::InvalidDiagram(v.to_string())),
        }
    }

    fn check_level(&self, k: usize) -> Result<()> {
        if k > self.depth() {
            return Err(Error::InvalidArgument(format!(
                "level {k} exceeds diagram depth {}",
                self.depth()
            )));
        }
        Ok(())
    }

    /// η_k(v): the incoming source sequence.
    pub fn eta(&self, k: usize, v: usize) -> Result<Vec<usize>> {
        if k == 0 {
            return Err(Error::InvalidArgument("eta needs k >= 1".into()));
        }
        self.check_level(k)?;
        if v == 0 || v > self.size(k) {
            return Err(Error::IndexOutOfRange {
                level: k,
                index: v,
                arity: self.size(k),
            });
        }
        Ok(self.incoming(k, v).to_vec())
    }

    /// Tower heights h_k(v): the number of root paths into each vertex.
    pub fn heights(&self, k: usize) -> Result<Vec<BigUint>> {
        self.check_level(k)?;
        let mut h = vec![BigUint::from(1u8)];
        for level in 1..=k {
            h = self.incoming[level - 1]
                .iter()
                .map(|list| list.iter().fold(BigUint::zero(), |acc, &s| acc + &h[s - 1]))
                .collect();
        }
        Ok(h)
    }

    /// Composed diagram whose level k is level cuts[k]; incoming lists list
    /// the sources of all paths, ordered with the top edge most significant.
    pub fn telescope(&self, cuts: &[usize]) -> Result<OrderedBratteliDiagram> {
        if cuts.first() != Some(&0) || cuts.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument("cuts must be strictly increasing from 0".into()));
        }
        self.check_level(*cuts.last().unwrap())?;
        let incoming = cuts
            .windows(2)
            .map(|w| {
                (1..=self.size(w[1]))
                    .map(|v| {
                        let mut word = self.incoming(w[1], v).to_vec();
                        for k in (w[0] + 1..w[1]).rev() {
                            word = word.iter().flat_map(|&u| self.incoming(k, u).iter().copied()).collect();
                        }
                        word
                    })
                    .collect()
            })
            .collect();
        Ok(OrderedBratteliDiagram::new(incoming))
    }

    /// Truncation to levels 0..=depth.
    pub fn truncate(&self, depth: usize) -> Result<OrderedBratteliDiagram> {
        self.check_level(depth)?;
        Ok(OrderedBratteliDiagram::new(self.incoming[..depth].to_vec()))
    }
}

/// Per edge level k: whether all minimal (maximal) edges into V_k share one
/// source in V_{k-1}.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtremalLevel {
    pub edge_level: usize,
    pub w_min: Option<usize>,
    pub w_max: Option<usize>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtremalReport {
    pub levels: Vec<ExtremalLevel>,
}

impl ExtremalReport {
    pub fn determined(&self) -> bool {
        self.levels.iter().all(|l| l.w_min.is_some() && l.w_max.is_some())
    }

    /// w_min chain in V_0, V_1, … as far as it is determined.
    pub fn min_chain(&self) -> Vec<usize> {
        self.levels.iter().map_while(|l| l.w_min).collect()
    }

    pub fn max_chain(&self) -> Vec<usize> {
        self.levels.iter().map_while(|l| l.w_max).collect()
    }
}

pub fn extremal_path_probe(d: &OrderedBratteliDiagram, depth: usize) -> Result<ExtremalReport> {
    d.validated()?;
    d.check_level(depth)?;
    let common = |k: usize, pick: fn(&[usize]) -> usize| {
        let mut it = d.incoming[k - 1].iter().map(|l| pick(l));
        let first = it.next()?;
        it.all(|s| s == first).then_some(first)
    };
    let levels = (1..=depth)
        .map(|k| ExtremalLevel {
            edge_level: k,
            w_min: common(k, |l| l[0]),
            w_max: common(k, |l| l[l.len() - 1]),
        })
        .collect();
    Ok(ExtremalReport { levels })
}
