//! Fraction-free elimination over the integers.

use crate::error::{Error, Result};
use crate::exchange::matrix::IntMatrix;

fn checked(op: Option<i128>) -> Result<i128> {
    op.ok_or(Error::Overflow("fraction-free elimination"))
}

/// Bareiss elimination on `work` (rows x cols, row-major) over the first
/// `pivot_cols` columns. Returns the final pivot with the sign of the row swaps
/// folded in, or 0 if the leading block is singular.
fn bareiss(work: &mut [Vec<i128>], pivot_cols: usize) -> Result<i128> {
    let n = work.len();
    let mut prev: i128 = 1;
    let mut sign: i128 = 1;
    for k in 0..n.min(pivot_cols) {
        let Some(p) = (k..n).find(|&r| work[r][k] != 0) else {
            return Ok(0);
        };
        if p != k {
            work.swap(p, k);
            sign = -sign;
        }
        let width = work[k].len();
        for i in k + 1..n {
            for j in k + 1..width {
                let lhs = checked(work[i][j].checked_mul(work[k][k]))?;
                let rhs = checked(work[i][k].checked_mul(work[k][j]))?;
                work[i][j] = checked(lhs.checked_sub(rhs))? / prev;
            }
            work[i][k] = 0;
        }
        prev = work[k][k];
    }
    Ok(sign * prev)
}

fn widen(m: &IntMatrix) -> Vec<Vec<i128>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(|&x| i128::from(x)).collect()).collect()
}

/// Exact determinant; the empty matrix has determinant 1.
pub fn determinant(m: &IntMatrix) -> Result<i128> {
    if !m.is_square() {
        return Err(Error::LengthMismatch { expected: m.rows(), actual: m.cols() });
    }
    if m.rows() == 0 {
        return Ok(1);
    }
    let mut work = widen(m);
    bareiss(&mut work, m.cols())
}

/// Integer inverse of a matrix with determinant ±1.
pub fn unimodular_inverse(m: &IntMatrix) -> Result<IntMatrix> {
    if !m.is_square() {
        return Err(Error::LengthMismatch { expected: m.rows(), actual: m.cols() });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(IntMatrix::identity(0));
    }
    let mut work = widen(m);
    for (i, row) in work.iter_mut().enumerate() {
        row.extend((0..n).map(|j| i128::from(i == j)));
    }
    let det = bareiss(&mut work, n)?;
    if det.abs() != 1 {
        return Err(Error::Determinant { expected: 1, actual: det });
    }

    // Back substitution on the fraction-free echelon form: every pivot row k
    // has leading entry p_k and the last pivot equals ±det.
    let mut x = vec![vec![0i128; n]; n];
    for k in (0..n).rev() {
        let pivot = work[k][k];
        for c in 0..n {
            let mut acc = work[k][n + c];
            for j in k + 1..n {
                acc = checked(acc.checked_sub(checked(work[k][j].checked_mul(x[j][c]))?))?;
            }
            if acc % pivot != 0 {
                return Err(Error::Integrality(format!("inverse entry ({}, {}) is not integral", k + 1, c + 1)));
            }
            x[k][c] = acc / pivot;
        }
    }
    let mut out = IntMatrix::zeros(n, n);
    for (i, row) in x.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            out.set(i, j, i64::try_from(v).map_err(|_| Error::Overflow("inverse entry"))?);
        }
    }
    Ok(out)
}
