//! `B̂` and its inverse built one column at a time from the right.
//!
//! Prepending a crossing leaves both matrices unchanged. Prepending a bridge
//! adjoins a new vertex `0` with `Z₁ = (-1) ⊕ B̂'` and
//! `B̂ = L⁻¹ Z₁ R⁻¹`, `A = R Z₁⁻¹ L`, where `L` is the identity plus the
//! new column `a + c - b - d` and `R` the identity plus the new row `b - d`.

use serde::{Deserialize, Serialize};

use crate::braid::{reflect, BraidWord, Permutation};
use crate::error::{Error, Result};
use crate::exchange::matrix::IntMatrix;
use crate::plabic::{build_diagram, ColumnKind, FilmSlice, LocalMultiplicity, PlabicDiagram};
use crate::plabic::film::Anomalies;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InductiveStep {
    pub position: usize,
    pub kind: ColumnKind,
    pub gap: usize,
    /// Origins of the live films, in the row order of the matrices below.
    pub origins: Vec<usize>,
    /// Present for bridges only.
    pub l: Option<IntMatrix>,
    pub r: Option<IntMatrix>,
    pub z1: Option<IntMatrix>,
    pub bhat: IntMatrix,
    pub a: IntMatrix,
    /// Boundary vectors after the step, aligned with `origins`.
    pub boundaries: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InductiveBuild {
    pub bhat: IntMatrix,
    pub a: IntMatrix,
    pub m: usize,
    pub f: usize,
    /// Origins in canonical order.
    pub vertex_order: Vec<usize>,
    /// `permutation[new] = old` index from origin order to canonical order.
    pub permutation: Vec<usize>,
    /// Ordered from the rightmost column to the leftmost.
    pub steps: Vec<InductiveStep>,
}

struct LiveFilm {
    origin: usize,
    slice: FilmSlice,
}

fn boundaries(live: &[LiveFilm], gaps: usize) -> Vec<Vec<i64>> {
    live.iter()
        .map(|f| f.slice.multiplicities(gaps).into_iter().map(i64::from).collect())
        .collect()
}

fn bordered(corner: i64, inner: &IntMatrix) -> IntMatrix {
    let n = inner.rows() + 1;
    IntMatrix::from_fn(n, n, |i, j| match (i, j) {
        (0, 0) => corner,
        (0, _) | (_, 0) => 0,
        _ => inner.get(i - 1, j - 1),
    })
}

// Identity with `values` placed in column 0 (below the diagonal) or row 0.
fn elementary(values: &[i64], in_column: bool, sign: i64) -> IntMatrix {
    let n = values.len() + 1;
    let mut e = IntMatrix::identity(n);
    for (idx, &v) in values.iter().enumerate() {
        if in_column {
            e.set(idx + 1, 0, sign * v);
        } else {
            e.set(0, idx + 1, sign * v);
        }
    }
    e
}

pub fn inductive_build(u: &Permutation, beta: &BraidWord) -> Result<InductiveBuild> {
    inductive_build_diagram(&build_diagram(u, beta)?)
}

pub fn inductive_build_diagram(diagram: &PlabicDiagram) -> Result<InductiveBuild> {
    let gaps = diagram.gaps();
    let mut live: Vec<LiveFilm> = Vec::new();
    let mut bhat = IntMatrix::zeros(0, 0);
    let mut a = IntMatrix::zeros(0, 0);
    let mut steps = Vec::with_capacity(diagram.len());
    let mut scratch = Anomalies::default();

    for position in (1..=diagram.len()).rev() {
        let col = *diagram.column(position);
        let (mut l, mut r, mut z1) = (None, None, None);
        match col.kind {
            ColumnKind::Crossing => {
                let before = boundaries(&live, gaps);
                for film in &mut live {
                    film.slice = film.slice.step_crossing(col.gap, &mut scratch);
                }
                for (old, new) in before.iter().zip(boundaries(&live, gaps)) {
                    if reflect(col.gap, old)? != new {
                        return Err(Error::Invariant(format!(
                            "boundary at crossing {position} does not transform by reflection"
                        )));
                    }
                }
            }
            ColumnKind::Bridge => {
                let mut column = Vec::with_capacity(live.len());
                let mut row = Vec::with_capacity(live.len());
                for film in &mut live {
                    let (next, LocalMultiplicity { a, b, c, d }) = film.slice.step_bridge(col.gap);
                    film.slice = next;
                    let [a, b, c, d] = [a, b, c, d].map(i64::from);
                    column.push(a + c - b - d);
                    row.push(b - d);
                }
                let z = bordered(-1, &bhat);
                let z_inv = bordered(-1, &a);
                let l_mat = elementary(&column, true, 1);
                let r_mat = elementary(&row, false, 1);
                let l_inv = elementary(&column, true, -1);
                let r_inv = elementary(&row, false, -1);
                bhat = l_inv.checked_mul(&z)?.checked_mul(&r_inv)?;
                a = r_mat.checked_mul(&z_inv)?.checked_mul(&l_mat)?;
                live.insert(0, LiveFilm { origin: position, slice: FilmSlice::born(col.gap) });
                l = Some(l_mat);
                r = Some(r_mat);
                z1 = Some(z);
            }
        }
        steps.push(InductiveStep {
            position,
            kind: col.kind,
            gap: col.gap,
            origins: live.iter().map(|f| f.origin).collect(),
            l,
            r,
            z1,
            bhat: bhat.clone(),
            a: a.clone(),
            boundaries: boundaries(&live, gaps),
        });
    }

    let frozen: Vec<bool> = live.iter().map(|f| !f.slice.is_empty()).collect();
    let mut permutation: Vec<usize> = (0..live.len()).collect();
    permutation.sort_by_key(|&i| (frozen[i], live[i].origin));
    let f = frozen.iter().filter(|&&x| x).count();
    Ok(InductiveBuild {
        bhat: bhat.permute_symmetric(&permutation),
        a: a.permute_symmetric(&permutation),
        m: live.len() - f,
        f,
        vertex_order: permutation.iter().map(|&i| live[i].origin).collect(),
        permutation,
        steps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_word;

    #[test]
    fn one_bridge() {
        let out = inductive_build(&Permutation::identity(2), &parse_word("1", 2).unwrap()).unwrap();
        assert_eq!(out.bhat.to_rows(), vec![vec![-1]]);
        assert_eq!(out.a.to_rows(), vec![vec![-1]]);
        assert_eq!((out.m, out.f), (0, 1));
    }

    #[test]
    fn example_a() {
        let u = Permutation::parse_word("2", 4).unwrap();
        let out = inductive_build(&u, &parse_word("3 2 1 2 3", 4).unwrap()).unwrap();
        assert_eq!(
            out.bhat.to_rows(),
            vec![vec![-1, 0, 0, 1], vec![1, -1, 0, -1], vec![0, 1, -1, 0], vec![0, -1, 1, -1]]
        );
        assert!(out.bhat.checked_mul(&out.a).unwrap().is_identity());
        assert_eq!(out.steps.len(), 5);
    }
}
