//! Half-arrow, boundary-correction and exchange matrices.

pub mod inductive;
pub mod linalg;
pub mod matrix;
pub mod quiver;

use serde::{Deserialize, Serialize};

use crate::braid::boundary_form;
use crate::error::{Error, Result};
use crate::half::Half;
use crate::plabic::{FilmSet, PlabicDiagram};

pub use inductive::{inductive_build, InductiveBuild, InductiveStep};
pub use linalg::{determinant, unimodular_inverse};
pub use matrix::{HalfMatrix, IntMatrix, Matrix};
pub use quiver::{quiver_from_half_arrows, Arrow, Quiver};

/// Skew-symmetric signed count of half arrows between films.
///
/// Each bridge contributes the half arrows `d→b`, `d→b`, `a→d`, `b→a`,
/// `c→d` and `b→c`, weighted by the multiplicities of the endpoint films in
/// those regions.
pub fn half_arrow_matrix(diagram: &PlabicDiagram, films: &FilmSet) -> Result<HalfMatrix> {
    let size = films.len();
    let mut count = IntMatrix::zeros(size, size);
    for &p in diagram.bridge_positions() {
        let mut present = Vec::new();
        for (idx, film) in films.films.iter().enumerate() {
            if film.origin < p {
                continue;
            }
            let local = film.bridge_local.get(&p).copied().ok_or_else(|| {
                Error::Invariant(format!("film at {} lacks local data at bridge {p}", film.origin))
            })?;
            if !local.is_zero() {
                let [a, b, c, d] = [local.a, local.b, local.c, local.d].map(i64::from);
                present.push((idx, a, b, c, d));
            }
        }
        for &(x, ax, bx, cx, dx) in &present {
            for &(y, ay, by, cy, dy) in &present {
                let add = 2 * dx * by + ax * dy + bx * ay + cx * dy + bx * cy;
                if add != 0 {
                    let v = count.get(x, y).checked_add(add).ok_or(Error::Overflow("half-arrow count"))?;
                    count.set(x, y, v);
                }
            }
        }
    }
    Ok(HalfMatrix::from_fn(size, size, |x, y| Half::from_halves(count.get(x, y) - count.get(y, x))))
}

/// Pairwise boundary form of the films' boundary vectors.
pub fn boundary_correction_matrix(films: &FilmSet) -> Result<HalfMatrix> {
    let size = films.len();
    let mut d = HalfMatrix::zeros(size, size);
    for i in 0..size {
        for j in 0..=i {
            let v = boundary_form(&films.films[i].boundary, &films.films[j].boundary)?;
            d.set(i, j, v);
            d.set(j, i, v);
        }
    }
    Ok(d)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assembled {
    pub bhat: IntMatrix,
    /// First `m` rows of `bhat`.
    pub btilde: IntMatrix,
    pub det: i64,
}

pub fn expected_determinant(m: usize, f: usize) -> i64 {
    if (m + f).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Forms `H + D`, checks integrality and the determinant sign.
pub fn assemble_bhat(h: &HalfMatrix, d: &HalfMatrix, m: usize, f: usize) -> Result<Assembled> {
    if h.rows() != m + f || d.rows() != m + f || !h.is_square() || !d.is_square() {
        return Err(Error::LengthMismatch { expected: m + f, actual: h.rows() });
    }
    let sum = h + d;
    let bhat = sum.to_integer().ok_or_else(|| {
        let (i, j, v) = sum.entries().find(|(_, _, v)| !v.is_integer()).expect("non-integral entry");
        Error::Integrality(format!("B̂ entry ({}, {}) = {v}\nH =\n{h}D =\n{d}", i + 1, j + 1))
    })?;
    let expected = expected_determinant(m, f);
    let det = determinant(&bhat)?;
    if det != i128::from(expected) {
        return Err(Error::Determinant { expected, actual: det });
    }
    Ok(Assembled { btilde: bhat.top_rows(m), bhat, det: expected })
}

/// Matrix mutation at the 1-based mutable index `k`.
///
/// Works on the full square matrix or on its first `m` rows.
pub fn mutate(b: &IntMatrix, k: usize, m: usize) -> Result<IntMatrix> {
    if k == 0 || k > m || m > b.rows() || m > b.cols() {
        return Err(Error::NotMutable { index: k, mutable: m });
    }
    let k = k - 1;
    let mut out = b.clone();
    for i in 0..b.rows() {
        for j in 0..b.cols() {
            let v = if i == k || j == k {
                -b.get(i, j)
            } else {
                let (bik, bkj) = (b.get(i, k), b.get(k, j));
                let delta = bik
                    .abs()
                    .checked_mul(bkj)
                    .and_then(|x| x.checked_add(bik.checked_mul(bkj.abs())?))
                    .ok_or(Error::Overflow("mutation"))?;
                b.get(i, j).checked_add(delta / 2).ok_or(Error::Overflow("mutation"))?
            };
            out.set(i, j, v);
        }
    }
    Ok(out)
}

/// Applies mutations left to right.
pub fn mutate_sequence(b: &IntMatrix, seq: &[usize], m: usize) -> Result<IntMatrix> {
    seq.iter().try_fold(b.clone(), |acc, &k| mutate(&acc, k, m))
}
