use num_bigint::BigUint;

use super::{extremal_path_probe, OrderedBratteliDiagram};
use crate::construction::{Building, LevelStep, RankConstruction};
use crate::error::{Error, Result};
use crate::words::Word;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BratteliConversion {
    pub construction: RankConstruction,
    /// `vertex_order[i][j - 1]`: the diagram vertex of V_i that became v_{i,j}.
    pub vertex_order: Vec<Vec<usize>>,
}

/// Rank-n construction of the diagram's Vershik system over the given
/// truncation. Each V_i is reordered so the common minimal source comes
/// first; level-1 words are 0(01)^j 0^{h-2n-4j-2} (10)^{j+n} 0 with h the
/// level-1 height, and deeper levels concatenate along η with no spacers.
pub fn to_rank_construction(d: &OrderedBratteliDiagram, n: usize) -> Result<BratteliConversion> {
    d.validated()?;
    let depth = d.depth();
    if depth < 1 {
        return Err(Error::InvalidArgument("diagram needs at least one level".into()));
    }
    let probe = extremal_path_probe(d, depth)?;
    if let Some(l) = probe.levels[1..]
        .iter()
        .find(|l| l.w_min.is_none() || l.w_max.is_none())
    {
        return Err(Error::TelescopeFurther(format!(
            "extremal edges into level {} do not share a source",
            l.edge_level
        )));
    }
    let mut vertex_order = vec![vec![1]];
    for i in 1..=depth {
        let lead = probe.levels.get(i).and_then(|l| l.w_min).unwrap_or(1);
        let mut order = vec![lead];
        order.extend((1..=d.size(i)).filter(|&v| v != lead));
        vertex_order.push(order);
    }

    let heights = d.heights(1)?;
    for (j, &v) in vertex_order[1].iter().enumerate().map(|(t, v)| (t + 1, v)) {
        let bound = 2 * n + 4 * j + 3;
        if heights[v - 1] < BigUint::from(bound) {
            return Err(Error::Precondition(format!(
                "|eta_1(w_1,{j})| = {} is below the required bound 2n+4j+3 = {bound}",
                heights[v - 1]
            )));
        }
    }
    for i in 1..=depth {
        let size = d.size(i);
        if size < 2 || size > n {
            return Err(Error::Precondition(format!(
                "level {i} has {size} vertices, need 2..={n}"
            )));
        }
    }
    for k in 2..=depth {
        for v in 1..=d.size(k) {
            let list = d.incoming(k, v);
            if let Some(s) = (1..=d.size(k - 1)).find(|s| !list.contains(s)) {
                return Err(Error::Precondition(format!(
                    "level {k} is not fully connected: no edge from vertex {s} to vertex {v}"
                )));
            }
        }
    }

    let mut steps = Vec::with_capacity(depth);
    let mut level1 = Vec::new();
    for (j, &v) in vertex_order[1].iter().enumerate().map(|(t, v)| (t + 1, v)) {
        let h =
            usize::try_from(&heights[v - 1]).map_err(|_| Error::InvalidArgument("level-1 height too large".into()))?;
        let word = Word::zeros(1)
            .concat(&"01".parse::<Word>()?.power(j))
            .concat(&Word::zeros(h - 2 * n - 4 * j - 2))
            .concat(&"10".parse::<Word>()?.power(j + n))
            .concat(&Word::zeros(1));
        level1.push(Building::over_zero(&word)?);
    }
    steps.push(LevelStep { buildings: level1 });
    for i in 2..=depth {
        let below = &vertex_order[i - 1];
        let rank_of = |v: usize| below.iter().position(|&u| u == v).unwrap() + 1;
        let buildings = vertex_order[i]
            .iter()
            .map(|&v| {
                let blocks: Vec<usize> = d.incoming(i, v).iter().map(|&s| rank_of(s)).collect();
                Building::concatenation(&blocks)
            })
            .collect::<Result<Vec<_>>>()?;
        steps.push(LevelStep { buildings });
    }
    let construction = RankConstruction::explicit(steps);
    construction.validated()?;
    Ok(BratteliConversion {
        construction,
        vertex_order,
    })
}
