//! Dense exact matrices for elimination and sparse `i64` matrices for chain maps.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::int::Int;

/// Row-major dense matrix over [`Int`].
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![Int::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Int::ONE;
        }
        m
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.as_ref().len());
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            assert_eq!(row.len(), c, "ragged rows");
            for (j, v) in row.iter().enumerate() {
                m.data[i * c + j] = Int::from(*v);
            }
        }
        m
    }

    /// Builds a matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Int>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                m.data[i * m.cols + j] = v.clone();
            }
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Int {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut Int {
        &mut self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Int) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Int] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Int> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Int::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j].add_mul_assign(a, b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(self.cols, v.len(), "shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Int::ZERO;
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc.add_mul_assign(a, b);
                    }
                }
                acc
            })
            .collect()
    }

    /// `self * s` for a sparse right factor.
    pub fn mul_sparse(&self, s: &SparseMatrix) -> IntMatrix {
        assert_eq!(self.cols, s.rows(), "shape mismatch");
        let mut out = IntMatrix::zeros(self.rows, s.cols());
        for j in 0..s.cols() {
            for &(k, v) in s.column(j) {
                let v = Int::from(v);
                for i in 0..self.rows {
                    let a = self.get(i, k);
                    if !a.is_zero() {
                        out.data[i * s.cols() + j].add_mul_assign(a, &v);
                    }
                }
            }
        }
        out
    }

    /// Keeps rows `start..` only.
    pub fn rows_from(&self, start: usize) -> IntMatrix {
        let start = start.min(self.rows);
        IntMatrix {
            rows: self.rows - start,
            cols: self.cols,
            data: self.data[start * self.cols..].to_vec(),
        }
    }

    /// Keeps columns `start..` only.
    pub fn cols_from(&self, start: usize) -> IntMatrix {
        let start = start.min(self.cols);
        let mut out = IntMatrix::zeros(self.rows, self.cols - start);
        for i in 0..self.rows {
            for j in start..self.cols {
                out.data[i * out.cols + (j - start)] = self.get(i, j).clone();
            }
        }
        out
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, other.rows);
        let cols = self.cols + other.cols;
        let mut out = IntMatrix::zeros(self.rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[i * cols + j] = self.get(i, j).clone();
            }
            for j in 0..other.cols {
                out.data[i * cols + self.cols + j] = other.get(i, j).clone();
            }
        }
        out
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let c = self.cols;
        for j in 0..c {
            self.data.swap(a * c + j, b * c + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    pub fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = &mut self.data[i * self.cols + j];
            *v = v.neg();
        }
    }

    pub fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = &mut self.data[i * self.cols + j];
            *v = v.neg();
        }
    }

    /// `row[dst] += q * row[src]`
    pub fn row_add_mul(&mut self, dst: usize, src: usize, q: &Int) {
        debug_assert_ne!(dst, src);
        let c = self.cols;
        for j in 0..c {
            if self.data[src * c + j].is_zero() {
                continue;
            }
            let s = self.data[src * c + j].clone();
            self.data[dst * c + j].add_mul_assign(q, &s);
        }
    }

    /// `col[dst] += q * col[src]`
    pub fn col_add_mul(&mut self, dst: usize, src: usize, q: &Int) {
        debug_assert_ne!(dst, src);
        let c = self.cols;
        for i in 0..self.rows {
            if self.data[i * c + src].is_zero() {
                continue;
            }
            let s = self.data[i * c + src].clone();
            self.data[i * c + dst].add_mul_assign(q, &s);
        }
    }

    /// Replaces rows `(i, j)` by `(a*ri + b*rj, c*ri + d*rj)`.
    pub fn row_combine(&mut self, i: usize, j: usize, a: &Int, b: &Int, c: &Int, d: &Int) {
        let n = self.cols;
        for k in 0..n {
            let x = self.data[i * n + k].clone();
            let y = self.data[j * n + k].clone();
            if x.is_zero() && y.is_zero() {
                continue;
            }
            self.data[i * n + k] = a.mul(&x).add(&b.mul(&y));
            self.data[j * n + k] = c.mul(&x).add(&d.mul(&y));
        }
    }

    /// Replaces columns `(i, j)` by `(a*ci + b*cj, c*ci + d*cj)`.
    pub fn col_combine(&mut self, i: usize, j: usize, a: &Int, b: &Int, c: &Int, d: &Int) {
        let n = self.cols;
        for k in 0..self.rows {
            let x = self.data[k * n + i].clone();
            let y = self.data[k * n + j].clone();
            if x.is_zero() && y.is_zero() {
                continue;
            }
            self.data[k * n + i] = a.mul(&x).add(&b.mul(&y));
            self.data[k * n + j] = c.mul(&x).add(&d.mul(&y));
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{} ", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Column-major sparse matrix with `i64` entries and no stored zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, columns: vec![Vec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix { rows: n, cols: n, columns: (0..n).map(|i| vec![(i, 1)]).collect() }
    }

    /// Builds from per-column entry lists; duplicates are summed and zeros dropped.
    pub fn from_columns(rows: usize, columns: Vec<Vec<(usize, i64)>>) -> Self {
        let cols = columns.len();
        let columns = columns
            .into_iter()
            .map(|mut col| {
                col.sort_unstable_by_key(|e| e.0);
                let mut out: Vec<(usize, i64)> = Vec::with_capacity(col.len());
                for (r, v) in col {
                    assert!(r < rows, "row index out of range");
                    match out.last_mut() {
                        Some(last) if last.0 == r => last.1 += v,
                        _ => out.push((r, v)),
                    }
                }
                out.retain(|e| e.1 != 0);
                out
            })
            .collect();
        SparseMatrix { rows, cols, columns }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> &[(usize, i64)] {
        &self.columns[j]
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.columns[j].iter().find(|e| e.0 == i).map_or(0, |e| e.1)
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    /// `(row, col, value)` triplets in column-major order.
    pub fn triplets(&self) -> Vec<(usize, usize, i64)> {
        let mut out = Vec::with_capacity(self.nnz());
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                out.push((i, j, v));
            }
        }
        out
    }

    pub fn from_triplets(rows: usize, cols: usize, triplets: &[(usize, usize, i64)]) -> Self {
        let mut columns = vec![Vec::new(); cols];
        for &(i, j, v) in triplets {
            assert!(j < cols, "column index out of range");
            columns[j].push((i, v));
        }
        Self::from_columns(rows, columns)
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut columns = vec![Vec::new(); self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                columns[i].push((j, v));
            }
        }
        SparseMatrix { rows: self.cols, cols: self.rows, columns }
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let columns = other
            .columns
            .iter()
            .map(|col| {
                let mut acc: Vec<(usize, i64)> = Vec::new();
                for &(k, b) in col {
                    for &(i, a) in &self.columns[k] {
                        acc.push((i, a * b));
                    }
                }
                acc
            })
            .collect();
        SparseMatrix::from_columns(self.rows, columns)
    }

    pub fn mul_vec(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(self.cols, v.len(), "shape mismatch");
        let mut out = vec![0i64; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            if v[j] == 0 {
                continue;
            }
            for &(i, a) in col {
                out[i] += a * v[j];
            }
        }
        out
    }

    pub fn mul_int_vec(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(self.cols, v.len(), "shape mismatch");
        let mut out = vec![Int::ZERO; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            if v[j].is_zero() {
                continue;
            }
            for &(i, a) in col {
                out[i].add_mul_assign(&Int::from(a), &v[j]);
            }
        }
        out
    }

    pub fn scale(&self, k: i64) -> SparseMatrix {
        let columns = self
            .columns
            .iter()
            .map(|c| c.iter().map(|&(i, v)| (i, v * k)).collect())
            .collect();
        SparseMatrix::from_columns(self.rows, columns)
    }

    pub fn add(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let columns = self
            .columns
            .iter()
            .zip(&other.columns)
            .map(|(a, b)| a.iter().chain(b.iter()).copied().collect())
            .collect();
        SparseMatrix::from_columns(self.rows, columns)
    }

    pub fn to_dense(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows, self.cols);
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                m.set(i, j, Int::from(v));
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sparse_dense_agree() {
        let s = SparseMatrix::from_triplets(2, 3, &[(0, 0, 1), (1, 2, -1), (0, 0, 2), (1, 1, 0)]);
        assert_eq!(s.nnz(), 2);
        assert_eq!(s.get(0, 0), 3);
        let d = s.to_dense();
        assert_eq!(d, IntMatrix::from_rows(&[[3, 0, 0], [0, 0, -1]]));
        assert_eq!(s.transpose().to_dense(), d.transpose());
        let p = s.mul(&s.transpose());
        assert_eq!(p.to_dense(), d.mul(&d.transpose()));
    }

    #[test]
    fn combine_is_unimodular_action() {
        let mut m = IntMatrix::from_rows(&[[1, 2], [3, 4]]);
        m.row_combine(0, 1, &Int::from(2), &Int::from(1), &Int::from(1), &Int::from(1));
        assert_eq!(m, IntMatrix::from_rows(&[[5, 8], [4, 6]]));
    }
}
