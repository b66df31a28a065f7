use std::fmt;

use super::LinalgError;

/// Dense integer matrix, row-major.
///
/// Entries are machine integers (adjacency, degree and incidence data never
/// come close to the range); everything derived from them, characteristic
/// polynomial coefficients in particular, is computed in arbitrary precision.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
    symmetric: bool,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols], symmetric: rows == cols }
    }

    pub fn identity(k: usize) -> Self {
        Self::from_fn(k, k, |i, j| (i == j) as i64)
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> i64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        let mut m = IntMatrix { rows, cols, data, symmetric: false };
        m.symmetric = m.check_symmetric();
        m
    }

    /// Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::from_fn(r, c, |i, j| rows[i][j])
    }

    fn check_symmetric(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
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

    /// True iff the matrix equals its transpose; maintained on every mutation.
    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
        self.symmetric = self.check_symmetric();
    }

    /// Sets `(i, j)` and `(j, i)` together, keeping symmetry.
    pub fn set_sym(&mut self, i: usize, j: usize, v: i64) {
        let was = self.symmetric;
        self.data[i * self.cols + j] = v;
        self.data[j * self.cols + i] = v;
        self.symmetric = if was { true } else { self.check_symmetric() };
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        Self::from_fn(self.rows, other.cols, |i, j| (0..self.cols).map(|k| self[(i, k)] * other[(k, j)]).sum())
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "dimension mismatch");
        Self::from_fn(self.rows, self.cols, |i, j| self[(i, j)] + other[(i, j)])
    }

    pub fn trace(&self) -> i64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn max_diagonal(&self) -> i64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).max().unwrap_or(0)
    }

    /// Principal submatrix on the given row/column indices, in that order.
    pub fn principal(&self, idx: &[usize]) -> Result<IntMatrix, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        Ok(Self::from_fn(idx.len(), idx.len(), |i, j| self[(idx[i], idx[j])]))
    }

    /// Entries as `f64`, row-major.
    pub fn to_f64(&self) -> Vec<f64> {
        self.data.iter().map(|&x| x as f64).collect()
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = i64;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{}{}", self.rows, self.cols, if self.symmetric { " (symmetric)" } else { "" })?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}
