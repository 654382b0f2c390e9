//! Dense exact matrices with rank and kernel computation.
//!
//! Rational rank goes through fraction-free Bareiss elimination on an integer
//! matrix obtained by clearing denominators row by row, so no rational
//! normalization happens during elimination. Modular rank is plain Gaussian
//! elimination over F_p. Kernels are computed by reduced row echelon form
//! over the entry field.

use crate::scalar::{Mode, Scalar, ScalarError};
use num::bigint::BigInt;
use num::integer::Integer;
use num::traits::{Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatrixError {
    #[error("entry count {got} does not match {rows} x {cols}")]
    ShapeMismatch { rows: usize, cols: usize, got: usize },
    #[error("mixed-mode entries: entry {index} has a different mode")]
    MixedMode { index: usize },
    #[error("matrix is not in rational mode")]
    NotRational,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Row-major dense matrix over a single field mode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    mode: Mode,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self, MatrixError> {
        if entries.len() != rows * cols {
            return Err(MatrixError::ShapeMismatch {
                rows,
                cols,
                got: entries.len(),
            });
        }
        let mode = entries.first().map(Scalar::mode).unwrap_or(Mode::Rational);
        for (index, e) in entries.iter().enumerate() {
            if e.mode() != mode {
                return Err(MatrixError::MixedMode { index });
            }
        }
        Ok(Matrix {
            rows,
            cols,
            mode,
            entries,
        })
    }

    pub fn zero(rows: usize, cols: usize, mode: Mode) -> Self {
        Matrix {
            rows,
            cols,
            mode,
            entries: vec![Scalar::zero(mode); rows * cols],
        }
    }

    pub fn identity(n: usize, mode: Mode) -> Self {
        let mut m = Matrix::zero(n, n, mode);
        for i in 0..n {
            *m.at_mut(i, i) = Scalar::one(mode);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, MatrixError> {
        let r = rows.len();
        let c = rows.first().map(Vec::len).unwrap_or(0);
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Scalar {
        &mut self.entries[i * self.cols + j]
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows, self.mode);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *t.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        t
    }

    /// Matrix-vector product, exact.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero(self.mode);
                for j in 0..self.cols {
                    acc = acc.add(&self.at(i, j).mul(&v[j]));
                }
                acc
            })
            .collect()
    }

    /// Exact rank over the entry field.
    pub fn rank(&self) -> usize {
        match self.mode {
            Mode::Rational => bareiss_rank(&self.to_integer_rows()),
            Mode::Modular(_) => self.rref_full().0,
        }
    }

    /// Rank after reduction mod p; always at most the rational rank.
    pub fn rank_modp(&self, p: u64) -> Result<usize, MatrixError> {
        if self.mode != Mode::Rational {
            return Err(MatrixError::NotRational);
        }
        let mut entries = Vec::with_capacity(self.entries.len());
        for i in 0..self.rows {
            for j in 0..self.cols {
                let e = self.at(i, j).reduce_mod(p).ok_or(
                    ScalarError::DenominatorDivisibleByPrime {
                        row: i,
                        col: j,
                        prime: p,
                    },
                )?;
                entries.push(e);
            }
        }
        let reduced = Matrix::new(self.rows, self.cols, entries)?;
        Ok(reduced.rref_full().0)
    }

    /// Basis of the right kernel, each vector normalized so its first
    /// nonzero entry is 1. Returns cols - rank vectors.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let (rank, rref, pivot_cols) = self.rref_full();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivot_cols {
            is_pivot[c] = true;
        }
        let mut basis = Vec::with_capacity(self.cols - rank);
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Scalar::zero(self.mode); self.cols];
            v[free] = Scalar::one(self.mode);
            for (row, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = rref.at(row, free).neg();
            }
            normalize_first_nonzero(&mut v);
            basis.push(v);
        }
        basis
    }

    // Clear denominators row by row; scaling a row does not change the rank.
    fn to_integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let mut lcm = BigInt::from(1);
                for j in 0..self.cols {
                    let r = self.at(i, j).as_rational().expect("rational mode");
                    lcm = lcm.lcm(r.denom());
                }
                (0..self.cols)
                    .map(|j| {
                        let r = self.at(i, j).as_rational().unwrap();
                        r.numer() * (&lcm / r.denom())
                    })
                    .collect()
            })
            .collect()
    }

    // Reduced row echelon form over the field. Returns (rank, rref, pivot columns).
    fn rref_full(&self) -> (usize, Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivot_cols = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pivot_row) = (r..m.rows).find(|&i| !m.at(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, pivot_row);
            let inv = m.at(r, c).inv().expect("nonzero pivot");
            for j in c..m.cols {
                *m.at_mut(r, j) = m.at(r, j).mul(&inv);
            }
            for i in 0..m.rows {
                if i != r && !m.at(i, c).is_zero() {
                    let factor = m.at(i, c).clone();
                    for j in c..m.cols {
                        let delta = factor.mul(m.at(r, j));
                        *m.at_mut(i, j) = m.at(i, j).sub(&delta);
                    }
                }
            }
            pivot_cols.push(c);
            r += 1;
        }
        (r, m, pivot_cols)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

/// Fraction-free Bareiss elimination; pivots on the largest-magnitude entry
/// to limit integer blow-up. All divisions are exact.
fn bareiss_rank(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let nrows = m.len();
    let ncols = m.first().map(Vec::len).unwrap_or(0);
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let pivot_row = (r..nrows)
            .filter(|&i| !m[i][c].is_zero())
            .max_by(|&a, &b| m[a][c].abs().cmp(&m[b][c].abs()));
        let Some(pivot_row) = pivot_row else {
            continue;
        };
        m.swap(r, pivot_row);
        for i in r + 1..nrows {
            for j in c + 1..ncols {
                let num = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                m[i][j] = num / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

fn normalize_first_nonzero(v: &mut [Scalar]) {
    if let Some(first) = v.iter().find(|s| !s.is_zero()).cloned() {
        let inv = first.inv().expect("nonzero");
        for e in v.iter_mut() {
            *e = e.mul(&inv);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(entries: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            entries
                .iter()
                .map(|row| row.iter().map(|&n| Scalar::from_integer(n)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn rank_identity_and_zero() {
        assert_eq!(Matrix::identity(3, Mode::Rational).rank(), 3);
        assert_eq!(Matrix::zero(2, 4, Mode::Rational).rank(), 0);
    }

    #[test]
    fn rank_proportional_rows() {
        assert_eq!(rat(&[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn kernel_single_equation() {
        let m = rat(&[&[1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], vec![Scalar::from_integer(1), Scalar::from_integer(-1)]);
    }

    #[test]
    fn kernel_full_rank_is_empty() {
        assert!(Matrix::identity(2, Mode::Rational).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_proportional_rows() {
        let m = rat(&[&[1, 2], &[2, 4]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        // proportional to (-2, 1), normalized to leading 1
        assert_eq!(
            k[0],
            vec![Scalar::from_integer(1), Scalar::from_fraction(-1, 2)]
        );
        for e in m.apply(&k[0]) {
            assert!(e.is_zero());
        }
    }

    #[test]
    fn rank_modp_identity_and_drop() {
        let id = Matrix::identity(3, Mode::Rational);
        assert_eq!(id.rank_modp(5).unwrap(), 3);
        let m = rat(&[&[5, 0], &[0, 1]]);
        assert_eq!(m.rank_modp(5).unwrap(), 1);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn rank_modp_invertible_residue() {
        let m = Matrix::from_rows(vec![vec![Scalar::from_fraction(1, 2)]]).unwrap();
        assert_eq!(m.rank_modp(3).unwrap(), 1);
    }

    #[test]
    fn rank_modp_rejects_bad_denominator() {
        let m = Matrix::from_rows(vec![vec![Scalar::from_fraction(1, 3)]]).unwrap();
        let err = m.rank_modp(3).unwrap_err();
        assert_eq!(
            err,
            MatrixError::Scalar(ScalarError::DenominatorDivisibleByPrime {
                row: 0,
                col: 0,
                prime: 3
            })
        );
    }

    #[test]
    fn mixed_mode_rejected_at_construction() {
        let err = Matrix::new(
            1,
            2,
            vec![Scalar::from_integer(1), Scalar::from_residue(1, 7)],
        )
        .unwrap_err();
        assert_eq!(err, MatrixError::MixedMode { index: 1 });
    }

    #[test]
    fn modular_rank() {
        let m = Matrix::from_rows(vec![
            vec![Scalar::from_residue(2, 7), Scalar::from_residue(4, 7)],
            vec![Scalar::from_residue(1, 7), Scalar::from_residue(2, 7)],
        ])
        .unwrap();
        assert_eq!(m.rank(), 1);
    }
}
