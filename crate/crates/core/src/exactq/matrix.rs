use std::fmt;

use serde::{Deserialize, Serialize};

use super::Rational;
use crate::error::{Error, Result};

/// Dense row-major matrix over the rationals.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl QMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if rows * cols != entries.len() {
            return Err(Error::Shape {
                rows,
                cols,
                len: entries.len(),
            });
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from row vectors, which must all have the same length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::Dimension {
                    expected: cols,
                    got: row.len(),
                });
            }
            entries.extend(row);
        }
        Self::new(n, cols, entries)
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::int(x)).collect())
                .collect(),
        )
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Rational::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        if x.len() != self.cols {
            return Err(Error::Dimension {
                expected: self.cols,
                got: x.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| self.row(r).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect())
    }

    pub fn rank(&self) -> usize {
        matrix_rank(self)
    }

    pub fn solve(&self, b: &[Rational]) -> Result<Vec<Rational>> {
        solve_exact(self, b)
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<_> = (0..self.rows).map(|r| self.row(r)).collect();
        f.debug_list().entries(rows).finish()
    }
}

/// In-place reduction to reduced row echelon form over the first `ncols`
/// columns, choosing the first nonzero entry as pivot. Returns pivot columns.
fn reduce(rows: &mut [Vec<Rational>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut pr = 0;
    for col in 0..ncols {
        if pr == rows.len() {
            break;
        }
        let Some(found) = (pr..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pr, found);
        let inv = rows[pr][col].recip().expect("pivot is nonzero");
        for x in rows[pr].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[pr].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == pr || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &(&factor * p);
                }
            }
        }
        pivots.push(col);
        pr += 1;
    }
    pivots
}

fn to_rows(a: &QMatrix) -> Vec<Vec<Rational>> {
    (0..a.rows).map(|r| a.row(r).to_vec()).collect()
}

/// Exact rank over Q.
pub fn matrix_rank(a: &QMatrix) -> usize {
    let mut rows = to_rows(a);
    reduce(&mut rows, a.cols).len()
}

/// Solves `A x = b` exactly, requiring a unique solution.
///
/// Overdetermined systems are accepted as long as they are consistent.
pub fn solve_exact(a: &QMatrix, b: &[Rational]) -> Result<Vec<Rational>> {
    if b.len() != a.rows {
        return Err(Error::Dimension {
            expected: a.rows,
            got: b.len(),
        });
    }
    let mut rows = to_rows(a);
    for (row, rhs) in rows.iter_mut().zip(b) {
        row.push(rhs.clone());
    }
    let pivots = reduce(&mut rows, a.cols);
    let rank = pivots.len();
    // a pivot-free row with nonzero right-hand side means 0 = c
    if rows[rank..].iter().any(|r| !r[a.cols].is_zero()) {
        return Err(Error::Inconsistent { rank });
    }
    if rank < a.cols {
        return Err(Error::Underdetermined {
            rank,
            unknowns: a.cols,
        });
    }
    Ok(rows[..rank].iter().map(|r| r[a.cols].clone()).collect())
}
