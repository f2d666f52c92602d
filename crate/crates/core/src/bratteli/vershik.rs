use num_bigint::BigUint;
use num_traits::Zero;

use super::OrderedBratteliDiagram;
use crate::error::{Error, Result};

/// A root path of length N: `picks[k - 1] = (r_k, p_k)`, the vertex reached at
/// level k and the 1-based position of the edge in its incoming list.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PathPrefix {
    pub picks: Vec<(usize, usize)>,
}

impl PathPrefix {
    pub fn depth(&self) -> usize {
        self.picks.len()
    }

    pub fn top(&self) -> usize {
        self.picks.last().map_or(1, |p| p.0)
    }

    /// Vertex at level k (the root for k = 0).
    pub fn vertex(&self, k: usize) -> usize {
        if k == 0 {
            1
        } else {
            self.picks[k - 1].0
        }
    }

    pub fn check(&self, d: &OrderedBratteliDiagram) -> Result<()> {
        if self.depth() > d.depth() {
            return Err(Error::InvalidArgument(format!(
                "path depth {} exceeds diagram depth {}",
                self.depth(),
                d.depth()
            )));
        }
        for (k, &(r, p)) in self.picks.iter().enumerate().map(|(i, x)| (i + 1, x)) {
            if r == 0 || r > d.size(k) {
                return Err(Error::IndexOutOfRange {
                    level: k,
                    index: r,
                    arity: d.size(k),
                });
            }
            let list = d.incoming(k, r);
            if p == 0 || p > list.len() {
                return Err(Error::InvalidArgument(format!(
                    "edge position {p} at level {k} outside 1..={}",
                    list.len()
                )));
            }
            if list[p - 1] != self.vertex(k - 1) {
                return Err(Error::InvalidArgument(format!("path is inconsistent at level {k}")));
            }
        }
        Ok(())
    }
}

/// Minimal path into vertex v of V_depth.
pub fn min_path(d: &OrderedBratteliDiagram, depth: usize, v: usize) -> Result<PathPrefix> {
    if depth > d.depth() || v == 0 || v > d.size(depth) {
        return Err(Error::IndexOutOfRange {
            level: depth,
            index: v,
            arity: d.size(depth.min(d.depth())),
        });
    }
    let mut picks = vec![(0, 0); depth];
    fill_min(d, depth, v, &mut picks);
    Ok(PathPrefix { picks })
}

fn fill_min(d: &OrderedBratteliDiagram, top: usize, v: usize, picks: &mut [(usize, usize)]) {
    let mut r = v;
    for k in (1..=top).rev() {
        picks[k - 1] = (r, 1);
        r = d.incoming(k, r)[0];
    }
}

/// Vershik successor; the all-maximal path wraps to the minimal path into
/// the same top vertex.
pub fn vershik_successor(d: &OrderedBratteliDiagram, p: &PathPrefix) -> Result<(PathPrefix, bool)> {
    p.check(d)?;
    let mut picks = p.picks.clone();
    for k in 1..=picks.len() {
        let (r, pos) = picks[k - 1];
        let list = d.incoming(k, r);
        if pos < list.len() {
            picks[k - 1].1 = pos + 1;
            fill_min(d, k - 1, list[pos], &mut picks);
            return Ok((PathPrefix { picks }, false));
        }
    }
    Ok((min_path(d, p.depth(), p.top())?, true))
}

/// Successor orbit from `start` until it returns, capped at `max_steps` paths.
pub fn vershik_orbit(d: &OrderedBratteliDiagram, start: &PathPrefix, max_steps: usize) -> Result<Vec<PathPrefix>> {
    let mut out = vec![start.clone()];
    let mut cur = start.clone();
    while out.len() < max_steps {
        cur = vershik_successor(d, &cur)?.0;
        if cur == *start {
            break;
        }
        out.push(cur.clone());
    }
    Ok(out)
}

/// All root paths of length `depth`, each fiber in successor order.
pub fn all_paths(d: &OrderedBratteliDiagram, depth: usize) -> Result<Vec<PathPrefix>> {
    let mut out = Vec::new();
    for v in 1..=d.size(depth) {
        let start = min_path(d, depth, v)?;
        let mut cur = start.clone();
        loop {
            out.push(cur.clone());
            let (next, wrapped) = vershik_successor(d, &cur)?;
            if wrapped {
                break;
            }
            cur = next;
        }
    }
    Ok(out)
}

/// 0-based position of the path within its tower (fiber order).
pub fn tower_position(d: &OrderedBratteliDiagram, p: &PathPrefix) -> Result<BigUint> {
    p.check(d)?;
    let mut pos = BigUint::zero();
    for k in 1..=p.depth() {
        let below = d.heights(k - 1)?;
        let (r, e) = p.picks[k - 1];
        for &s in &d.incoming(k, r)[..e - 1] {
            pos += &below[s - 1];
        }
    }
    Ok(pos)
}

/// Level-`level` vertices along the successor orbit of the minimal path into
/// top vertex 1 of V_depth.
pub fn tower_coding(d: &OrderedBratteliDiagram, depth: usize, level: usize, steps: usize) -> Result<Vec<usize>> {
    tower_coding_from(d, depth, level, steps, 1)
}

pub fn tower_coding_from(
    d: &OrderedBratteliDiagram,
    depth: usize,
    level: usize,
    steps: usize,
    top: usize,
) -> Result<Vec<usize>> {
    if level > depth {
        return Err(Error::InvalidArgument(format!("level {level} exceeds depth {depth}")));
    }
    let mut cur = min_path(d, depth, top)?;
    let mut out = Vec::with_capacity(steps);
    for _ in 0..steps {
        out.push(cur.vertex(level));
        cur = vershik_successor(d, &cur)?.0;
    }
    Ok(out)
}
