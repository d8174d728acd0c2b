//! Dense integer matrices with exact determinant and inertia.
//!
//! Entries are stored as `i64`; anything that can blow up (determinants,
//! congruence diagonalization) is carried out in arbitrary precision.

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

/// Counts of positive, zero and negative entries of a congruence-diagonal form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inertia {
    pub positive: usize,
    pub zero: usize,
    pub negative: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|r| r.len() != n_cols) {
            return Err(Error::Shape(format!(
                "row {bad} has {} entries, expected {n_cols}",
                rows[bad].len()
            )));
        }
        Ok(IntMatrix {
            rows: n_rows,
            cols: n_cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self[(i, j)] == i64::from(i == j)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// First off-diagonal position where `m[i][j] != m[j][i]`.
    pub fn symmetry_defect(&self) -> Option<(usize, usize)> {
        if !self.is_square() {
            return Some((0, 0));
        }
        (0..self.rows)
            .flat_map(|i| (i + 1..self.cols).map(move |j| (i, j)))
            .find(|&(i, j)| self[(i, j)] != self[(j, i)])
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetry_defect().is_none()
    }

    /// Checked matrix product; `None` on shape mismatch or overflow.
    pub fn checked_mul(&self, rhs: &IntMatrix) -> Option<IntMatrix> {
        if self.cols != rhs.rows {
            return None;
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = a.checked_mul(rhs[(k, j)])?;
                    out[(i, j)] = out[(i, j)].checked_add(prod)?;
                }
            }
        }
        Some(out)
    }

    pub fn checked_sub(&self, rhs: &IntMatrix) -> Option<IntMatrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return None;
        }
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()?;
        Some(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// Principal submatrix on the given (ordered) index set.
    pub fn principal_submatrix(&self, indices: &[usize]) -> IntMatrix {
        let n = indices.len();
        let mut out = Self::zeros(n, n);
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate() {
                out[(a, b)] = self[(i, j)];
            }
        }
        out
    }

    /// Simultaneous row/column permutation: `out[a][b] = self[perm[a]][perm[b]]`.
    pub fn permute_symmetric(&self, perm: &[usize]) -> IntMatrix {
        self.principal_submatrix(perm)
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::Shape(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|i| self.row(i).iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        let mut sign = 1;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        Ok(if sign < 0 { -det } else { det })
    }

    /// Inertia of a symmetric matrix by fraction-free symmetric elimination.
    ///
    /// After step `k` the trailing block holds bordered minors of the leading
    /// block, so the pivots are the leading principal minors `D_1, D_2, ...`
    /// of a congruent matrix and the sign of `D_k / D_(k-1)` is the sign of
    /// the k-th diagonal entry. When every remaining diagonal entry is zero
    /// but some `a[i][j]` is not, row/column `j` is added to row/column `i`,
    /// which makes the new diagonal entry `2 a[i][j]` nonzero.
    pub fn inertia(&self) -> Result<Inertia> {
        if let Some((row, col)) = self.symmetry_defect() {
            return Err(Error::NotSymmetric { row, col });
        }
        let n = self.rows;
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|i| self.row(i).iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        let mut inertia = Inertia {
            positive: 0,
            zero: 0,
            negative: 0,
        };
        let mut prev = BigInt::one();
        for k in 0..n {
            let pivot = match (k..n).find(|&i| !a[i][i].is_zero()) {
                Some(p) => p,
                None => {
                    let pair = (k..n)
                        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                        .find(|&(i, j)| !a[i][j].is_zero());
                    match pair {
                        Some((i, j)) => {
                            add_symmetric(&mut a, j, i);
                            i
                        }
                        None => {
                            inertia.zero += n - k;
                            break;
                        }
                    }
                }
            };
            swap_symmetric(&mut a, k, pivot);
            let d = a[k][k].clone();
            if (d.sign() == Sign::Minus) == (prev.sign() == Sign::Minus) {
                inertia.positive += 1;
            } else {
                inertia.negative += 1;
            }
            for i in k + 1..n {
                for j in i..n {
                    let v = (&a[i][j] * &d - &a[i][k] * &a[k][j]) / &prev;
                    a[j][i] = v.clone();
                    a[i][j] = v;
                }
            }
            for row in a.iter_mut().skip(k + 1) {
                row[k] = BigInt::zero();
            }
            a[k][k + 1..].fill(BigInt::zero());
            prev = d;
        }
        Ok(inertia)
    }

    pub fn max_abs(&self) -> i64 {
        self.data.iter().map(|x| x.abs()).max().unwrap_or(0)
    }
}

/// row_i += row_j, col_i += col_j
fn add_symmetric(a: &mut [Vec<BigInt>], j: usize, i: usize) {
    let src = a[j].clone();
    for (x, v) in a[i].iter_mut().zip(src) {
        *x += v;
    }
    for row in a.iter_mut() {
        let v = row[j].clone();
        row[i] += v;
    }
}

fn swap_symmetric(a: &mut [Vec<BigInt>], i: usize, j: usize) {
    if i == j {
        return;
    }
    a.swap(i, j);
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_rows()).finish()
    }
}

/// Plain-text rendering, one row per line, right-aligned columns.
impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .data
            .iter()
            .map(|x| x.to_string().len())
            .max()
            .unwrap_or(1);
        for i in 0..self.rows {
            let line = self
                .row(i)
                .iter()
                .map(|x| format!("{x:>width$}"))
                .collect::<Vec<_>>()
                .join(" ");
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_rows().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<i64>>::deserialize(deserializer)?;
        IntMatrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn small_determinants() {
        assert_eq!(m(&[&[-2, -1], &[-1, -2]]).determinant().unwrap(), 3.into());
        assert_eq!(m(&[&[0, 1], &[1, 0]]).determinant().unwrap(), (-1).into());
        assert_eq!(m(&[&[1, 2], &[2, 4]]).determinant().unwrap(), 0.into());
        assert_eq!(IntMatrix::zeros(0, 0).determinant().unwrap(), 1.into());
        let a = m(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]);
        assert_eq!(a.determinant().unwrap(), 4.into());
    }

    #[test]
    fn inertia_of_hyperbolic_plane_needs_pivot_completion() {
        let h = m(&[&[0, 1], &[1, 0]]);
        let i = h.inertia().unwrap();
        assert_eq!((i.positive, i.zero, i.negative), (1, 0, 1));
    }

    #[test]
    fn inertia_counts_nullity() {
        let a = m(&[&[1, 1, 0], &[1, 1, 0], &[0, 0, -3]]);
        let i = a.inertia().unwrap();
        assert_eq!((i.positive, i.zero, i.negative), (1, 1, 1));
        assert_eq!(IntMatrix::zeros(3, 3).inertia().unwrap().zero, 3);
    }

    #[test]
    fn inertia_rejects_asymmetric() {
        let a = m(&[&[1, 2], &[0, 1]]);
        assert_eq!(a.inertia(), Err(Error::NotSymmetric { row: 0, col: 1 }));
    }

    #[test]
    fn checked_mul_detects_overflow() {
        let a = m(&[&[i64::MAX, 1], &[0, 1]]);
        assert!(a.checked_mul(&a).is_none());
    }

    #[test]
    fn display_is_aligned() {
        let a = m(&[&[-2, 1], &[1, -2]]);
        assert_eq!(a.to_string(), "-2  1\n 1 -2\n");
    }
}
