//! Dense row-major matrices over exact scalars.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::half::Half;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type IntMatrix = Matrix<i64>;
pub type HalfMatrix = Matrix<Half>;

impl<T: Copy + Default> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::default(); rows * cols] }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::LengthMismatch { expected: cols, actual: bad.len() });
        }
        let n = rows.len();
        Ok(Matrix { rows: n, cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// 0-based access.
    pub fn get(&self, i: usize, j: usize) -> T {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn map<U: Copy + Default>(&self, mut f: impl FnMut(T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&x| f(x)).collect() }
    }

    /// Rows `0..count`.
    pub fn top_rows(&self, count: usize) -> Self {
        Matrix::from_fn(count, self.cols, |i, j| self.get(i, j))
    }

    /// `P M P^T` where `order[new] = old`.
    pub fn permute_symmetric(&self, order: &[usize]) -> Self {
        Matrix::from_fn(order.len(), order.len(), |i, j| self.get(order[i], order[j]))
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, T)> + '_ {
        self.data.iter().enumerate().map(|(idx, &v)| (idx / self.cols.max(1), idx % self.cols.max(1), v))
    }
}

impl<T: Copy + Default + PartialEq + Neg<Output = T>> Matrix<T> {
    pub fn is_skew_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == -self.get(j, i)))
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

impl<T: Copy + Default + Add<Output = T>> Add for &Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        Matrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + rhs.get(i, j))
    }
}

impl<T: Copy + Default + Sub<Output = T>> Sub for &Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        Matrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) - rhs.get(i, j))
    }
}

impl IntMatrix {
    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| i64::from(i == j))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && self.entries().all(|(i, j, v)| v == i64::from(i == j))
    }

    /// Product with overflow checking.
    pub fn checked_mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::LengthMismatch { expected: self.cols, actual: rhs.rows });
        }
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let term = a.checked_mul(rhs.get(k, j)).ok_or(Error::Overflow("matrix product"))?;
                    let sum = out.get(i, j).checked_add(term).ok_or(Error::Overflow("matrix product"))?;
                    out.set(i, j, sum);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[i64]) -> Result<Vec<i64>> {
        let col = IntMatrix::from_fn(v.len(), 1, |i, _| v[i]);
        Ok(self.checked_mul(&col)?.column(0))
    }

    pub fn to_half(&self) -> HalfMatrix {
        self.map(Half::from_int)
    }
}

impl HalfMatrix {
    /// The integer matrix with the same entries, if every entry is integral.
    pub fn to_integer(&self) -> Option<IntMatrix> {
        self.data.iter().all(|h| h.is_integer()).then(|| self.map(|h| h.halves() / 2))
    }

    pub fn doubled(&self) -> IntMatrix {
        self.map(Half::halves)
    }
}

impl<T: Copy + Default + fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>width$}", cells[i * self.cols + j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl<T: Copy + Default + fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[T]> = (0..self.rows).map(|i| &self.data[i * self.cols..(i + 1) * self.cols]).collect();
        write!(f, "Matrix{}x{}{:?}", self.rows, self.cols, rows)
    }
}

impl<T: Copy + Default + Serialize> Serialize for Matrix<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(serializer)
    }
}

impl<'de, T: Copy + Default + Deserialize<'de>> Deserialize<'de> for Matrix<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<T>>::deserialize(deserializer)?;
        Matrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}
