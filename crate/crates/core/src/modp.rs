//! Linear algebra over the prime field `F_p`.

use alloc::vec;
use alloc::vec::Vec;

use crate::int::Int;
use crate::matrix::SparseMatrix;

/// Multiplicative inverse of `a` modulo the prime `p`.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    let (g, s, _) = Int::ext_gcd(&Int::from(a % p), &Int::from(p));
    assert!(g.is_one(), "{a} is not invertible modulo {p}");
    s.rem_euclid_u64(p)
}

pub fn reduce_vec(v: &[Int], p: u64) -> Vec<u64> {
    v.iter().map(|x| x.rem_euclid_u64(p)).collect()
}

fn dense_rows(m: &SparseMatrix, p: u64) -> Vec<Vec<u64>> {
    let mut rows = vec![vec![0u64; m.cols()]; m.rows()];
    for j in 0..m.cols() {
        for &(i, v) in m.column(j) {
            rows[i][j] = (v as i128).rem_euclid(p as i128) as u64;
        }
    }
    rows
}

/// Reduced row echelon form in place; returns pivot columns.
fn rref(rows: &mut [Vec<u64>], p: u64) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(k) = (r..rows.len()).find(|&k| rows[k][c] != 0) else { continue };
        rows.swap(r, k);
        let inv = inv_mod(rows[r][c], p);
        for x in rows[r].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot_row = rows[r].clone();
        for (k, row) in rows.iter_mut().enumerate() {
            if k == r || row[c] == 0 {
                continue;
            }
            let f = p - row[c];
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                if *y != 0 {
                    *x = (*x + f * y) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of an integer matrix reduced modulo the prime `p`.
pub fn rank_mod_p(m: &SparseMatrix, p: u64) -> usize {
    // eliminate along the shorter side
    let mut rows = if m.rows() <= m.cols() { dense_rows(m, p) } else { dense_rows(&m.transpose(), p) };
    rref(&mut rows, p).len()
}

/// Basis of the kernel of `m` over `F_p`.
pub fn kernel_mod_p(m: &SparseMatrix, p: u64) -> Vec<Vec<u64>> {
    let mut rows = dense_rows(m, p);
    let pivots = rref(&mut rows, p);
    let mut is_pivot = vec![false; m.cols()];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for free in (0..m.cols()).filter(|&c| !is_pivot[c]) {
        let mut v = vec![0u64; m.cols()];
        v[free] = 1;
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = (p - rows[r][free]) % p;
        }
        basis.push(v);
    }
    basis
}

/// An incrementally built subspace of `F_p^dim` kept in echelon form.
#[derive(Clone, Debug)]
pub struct Span {
    p: u64,
    dim: usize,
    basis: Vec<(usize, Vec<u64>)>,
}

impl Span {
    pub fn new(p: u64, dim: usize) -> Self {
        Span { p, dim, basis: Vec::new() }
    }

    /// Column space of `m` modulo `p`.
    pub fn column_space(m: &SparseMatrix, p: u64) -> Self {
        let mut s = Span::new(p, m.rows());
        for j in 0..m.cols() {
            let mut v = vec![0u64; m.rows()];
            for &(i, x) in m.column(j) {
                v[i] = (x as i128).rem_euclid(p as i128) as u64;
            }
            s.insert(v);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn reduce(&self, mut v: Vec<u64>) -> Vec<u64> {
        let p = self.p;
        for (piv, b) in &self.basis {
            let f = v[*piv];
            if f == 0 {
                continue;
            }
            for (x, y) in v.iter_mut().zip(b) {
                *x = (*x + (p - f) * y) % p;
            }
        }
        v
    }

    /// Adds `v`; returns whether it was independent.
    pub fn insert(&mut self, v: Vec<u64>) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut v = self.reduce(v);
        let Some(piv) = v.iter().position(|&x| x != 0) else { return false };
        let inv = inv_mod(v[piv], self.p);
        for x in v.iter_mut() {
            *x = *x * inv % self.p;
        }
        self.basis.push((piv, v));
        true
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v.to_vec()).iter().all(|&x| x == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_kernel() {
        // [[1,2],[2,4]] has rank 1 over every field; [[2,0],[0,2]] drops rank mod 2
        let a = SparseMatrix::from_triplets(2, 2, &[(0, 0, 1), (0, 1, 2), (1, 0, 2), (1, 1, 4)]);
        assert_eq!(rank_mod_p(&a, 3), 1);
        let b = SparseMatrix::from_triplets(2, 2, &[(0, 0, 2), (1, 1, 2)]);
        assert_eq!(rank_mod_p(&b, 2), 0);
        assert_eq!(rank_mod_p(&b, 3), 2);
        let k = kernel_mod_p(&a, 5);
        assert_eq!(k, vec![vec![3, 1]]);
    }

    #[test]
    fn span_membership() {
        let mut s = Span::new(3, 3);
        assert!(s.insert(vec![1, 1, 0]));
        assert!(s.insert(vec![0, 1, 1]));
        assert!(!s.insert(vec![1, 2, 1]));
        assert!(s.contains(&[2, 0, 1]));
        assert!(!s.contains(&[1, 0, 0]));
        assert_eq!(s.dim(), 2);
    }
}
