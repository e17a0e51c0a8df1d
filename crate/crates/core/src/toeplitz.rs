//! Dense Toeplitz matrices over an exact scalar.

use crate::scalar::Exact;

/// Matrix whose entry `(i, j)` depends only on `i - j`.
///
/// `diagonals[k]` holds the value on the diagonal `i - j = k - (cols - 1)`,
/// so index `0` is the top-right corner and the last index the bottom-left
/// corner.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToeplitzMatrix<T> {
    rows: usize,
    cols: usize,
    diagonals: Vec<T>,
}

impl<T: Exact> ToeplitzMatrix<T> {
    /// Build from a function of the diagonal offset `i - j`.
    pub fn from_offsets(rows: usize, cols: usize, mut entry: impl FnMut(isize) -> T) -> Self {
        let diagonals = (0..rows + cols - 1)
            .map(|k| entry(k as isize - (cols as isize - 1)))
            .collect();
        ToeplitzMatrix {
            rows,
            cols,
            diagonals,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Zero-based entry `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> &T {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &self.diagonals[i + self.cols - 1 - j]
    }

    /// First column, top to bottom.
    pub fn first_column(&self) -> Vec<T> {
        (0..self.rows).map(|i| self.entry(i, 0).clone()).collect()
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.entry(i, j).is_zero()))
    }

    pub fn to_dense(&self) -> Vec<Vec<T>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.entry(i, j).clone()).collect())
            .collect()
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                v.iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .fold(T::zero(), |acc, (j, x)| acc + self.entry(i, j).clone() * x.clone())
            })
            .collect()
    }
}
