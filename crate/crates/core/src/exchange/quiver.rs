//! Ice quivers with half arrows between frozen vertices.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exchange::matrix::HalfMatrix;
use crate::half::Half;

/// `weight` arrows from `source` to `target` (1-based), `weight > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub weight: Half,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quiver {
    pub m: usize,
    pub f: usize,
    pub arrows: Vec<Arrow>,
}

pub fn quiver_from_half_arrows(h: &HalfMatrix, m: usize, f: usize) -> Result<Quiver> {
    if !h.is_square() || h.rows() != m + f {
        return Err(Error::LengthMismatch { expected: m + f, actual: h.rows() });
    }
    if !h.is_skew_symmetric() {
        return Err(Error::Invariant("half-arrow matrix is not skew-symmetric".into()));
    }
    let mut arrows = Vec::new();
    for (i, j, w) in h.entries() {
        if w > Half::ZERO {
            if (i < m || j < m) && !w.is_integer() {
                return Err(Error::Integrality(format!(
                    "half arrow {} → {} touches a mutable vertex",
                    i + 1,
                    j + 1
                )));
            }
            arrows.push(Arrow { source: i + 1, target: j + 1, weight: w });
        }
    }
    Ok(Quiver { m, f, arrows })
}

impl Quiver {
    pub fn len(&self) -> usize {
        self.m + self.f
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_frozen(&self, vertex: usize) -> bool {
        vertex > self.m
    }

    pub fn to_matrix(&self) -> HalfMatrix {
        let mut b = HalfMatrix::zeros(self.len(), self.len());
        for a in &self.arrows {
            let (i, j) = (a.source - 1, a.target - 1);
            b.set(i, j, b.get(i, j) + a.weight);
            b.set(j, i, b.get(j, i) - a.weight);
        }
        b
    }

    /// Quiver mutation at mutable vertex `k`: compose paths through `k`,
    /// reverse the arrows at `k`, then cancel 2-cycles.
    pub fn mutate(&self, k: usize) -> Result<Quiver> {
        if k == 0 || k > self.m {
            return Err(Error::NotMutable { index: k, mutable: self.m });
        }
        // Half-unit weights per ordered pair; opposite pairs cancel at the end.
        let mut weights: BTreeMap<(usize, usize), i64> = BTreeMap::new();
        for a in &self.arrows {
            let key = if a.source == k || a.target == k { (a.target, a.source) } else { (a.source, a.target) };
            *weights.entry(key).or_insert(0) += a.weight.halves();
        }
        for i in self.arrows.iter().filter(|a| a.target == k) {
            for j in self.arrows.iter().filter(|a| a.source == k) {
                // Arrows at a mutable vertex are whole.
                let count = (i.weight.halves() / 2) * (j.weight.halves() / 2);
                *weights.entry((i.source, j.target)).or_insert(0) += 2 * count;
            }
        }
        let pairs: BTreeSet<(usize, usize)> =
            weights.keys().map(|&(s, t)| (s.min(t), s.max(t))).collect();
        let mut arrows = Vec::new();
        for (s, t) in pairs {
            let net = weights.get(&(s, t)).copied().unwrap_or(0) - weights.get(&(t, s)).copied().unwrap_or(0);
            if net > 0 {
                arrows.push(Arrow { source: s, target: t, weight: Half::from_halves(net) });
            } else if net < 0 {
                arrows.push(Arrow { source: t, target: s, weight: Half::from_halves(-net) });
            }
        }
        arrows.sort();
        Ok(Quiver { m: self.m, f: self.f, arrows })
    }
}
