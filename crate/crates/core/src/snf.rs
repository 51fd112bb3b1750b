//! Smith normal form over the integers.
//!
//! [`smith_with`] diagonalises a dense [`IntMatrix`] by unimodular row and
//! column operations, optionally recording the left transform `U`, the right
//! transform `V` and their inverses so that `U * A * V = D`. Pivots are chosen
//! by smallest magnitude, ties broken by Markowitz cost, which keeps fill low
//! on the `±1` boundary matrices this crate produces.

use alloc::vec;
use alloc::vec::Vec;

use crate::int::Int;
use crate::matrix::IntMatrix;

/// Which transforms to record during elimination.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Transforms {
    /// Record `U` and `U^{-1}`.
    pub left: bool,
    /// Record `V` and `V^{-1}`.
    pub right: bool,
}

impl Transforms {
    pub const NONE: Transforms = Transforms { left: false, right: false };
    pub const BOTH: Transforms = Transforms { left: true, right: true };
    pub const LEFT: Transforms = Transforms { left: true, right: false };
    pub const RIGHT: Transforms = Transforms { left: false, right: true };
}

/// Result of a Smith normal form computation: `U * A * V = D`.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    rows: usize,
    cols: usize,
    /// Nonzero diagonal entries `d_1 | d_2 | ... | d_r`, all positive.
    diagonal: Vec<Int>,
    pub u: Option<IntMatrix>,
    pub u_inv: Option<IntMatrix>,
    pub v: Option<IntMatrix>,
    pub v_inv: Option<IntMatrix>,
}

impl SmithDecomposition {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    /// The nonzero diagonal entries in divisibility order.
    pub fn diagonal(&self) -> &[Int] {
        &self.diagonal
    }

    /// Diagonal entries different from one.
    pub fn invariant_factors(&self) -> Vec<Int> {
        self.diagonal.iter().filter(|d| !d.is_one()).cloned().collect()
    }

    /// The full `rows x cols` diagonal matrix `D`.
    pub fn d_matrix(&self) -> IntMatrix {
        let mut d = IntMatrix::zeros(self.rows, self.cols);
        for (i, v) in self.diagonal.iter().enumerate() {
            d.set(i, i, v.clone());
        }
        d
    }

    /// A basis of the integer kernel of `A`: the last `cols - rank` columns of `V`.
    pub fn kernel_basis(&self) -> Vec<Vec<Int>> {
        let v = self.v.as_ref().expect("kernel basis needs the right transform");
        (self.rank()..self.cols).map(|j| v.column(j)).collect()
    }

    /// Whether `b` lies in the integer column space of `A`. Needs the left transform.
    pub fn in_image(&self, b: &[Int]) -> bool {
        let u = self.u.as_ref().expect("membership needs the left transform");
        let y = u.mul_vec(b);
        y.iter().enumerate().all(|(i, yi)| match self.diagonal.get(i) {
            Some(d) => d.divides(yi),
            None => yi.is_zero(),
        })
    }

    /// Whether `A x = b (mod m)` is solvable; `m = 0` is [`Self::in_image`].
    /// Needs the left transform.
    pub fn in_image_mod(&self, b: &[Int], m: u64) -> bool {
        if m == 0 {
            return self.in_image(b);
        }
        let u = self.u.as_ref().expect("membership needs the left transform");
        let modulus = Int::from(m);
        u.mul_vec(b).iter().enumerate().all(|(i, yi)| match self.diagonal.get(i) {
            Some(d) => d.gcd(&modulus).divides(&Int::from(yi.rem_euclid_u64(m))),
            None => yi.rem_euclid_u64(m) == 0,
        })
    }

    /// Solves `A x = b` over the integers. Needs both transforms.
    pub fn solve(&self, b: &[Int]) -> Option<Vec<Int>> {
        self.solve_mod(b, 0)
    }

    /// Solves `A x = b (mod m)`; `m = 0` means exact integer solving.
    pub fn solve_mod(&self, b: &[Int], m: u64) -> Option<Vec<Int>> {
        let u = self.u.as_ref().expect("solving needs the left transform");
        let v = self.v.as_ref().expect("solving needs the right transform");
        assert_eq!(b.len(), self.rows, "right-hand side has wrong length");
        let y = u.mul_vec(b);
        let mut z = vec![Int::ZERO; self.cols];
        let modulus = Int::from(m);
        for (i, yi) in y.iter().enumerate() {
            if i < self.rank() {
                let d = &self.diagonal[i];
                if m == 0 {
                    z[i] = yi.div_exact(d)?;
                } else {
                    let g = d.gcd(&modulus);
                    let rhs = Int::from(yi.rem_euclid_u64(m));
                    let rhs_g = rhs.div_exact(&g)?;
                    let m_g = modulus.div_exact(&g).expect("gcd divides");
                    let d_g = d.div_exact(&g).expect("gcd divides");
                    // d_g is invertible modulo m_g
                    let (_, inv, _) = Int::ext_gcd(&d_g, &m_g);
                    let m_g = m_g.to_i64().expect("divisor of a u64 modulus") as u64;
                    z[i] = Int::from(rhs_g.mul(&inv).rem_euclid_u64(m_g));
                }
            } else if m == 0 {
                if !yi.is_zero() {
                    return None;
                }
            } else if yi.rem_euclid_u64(m) != 0 {
                return None;
            }
        }
        let mut x = v.mul_vec(&z);
        if m > 0 {
            for xi in &mut x {
                *xi = Int::from(xi.rem_euclid_u64(m));
            }
        }
        Some(x)
    }
}

struct Elimination {
    m: IntMatrix,
    u: Option<IntMatrix>,
    u_inv: Option<IntMatrix>,
    v: Option<IntMatrix>,
    v_inv: Option<IntMatrix>,
}

impl Elimination {
    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        self.m.swap_rows(a, b);
        if let Some(u) = &mut self.u {
            u.swap_rows(a, b);
        }
        if let Some(ui) = &mut self.u_inv {
            ui.swap_cols(a, b);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        self.m.swap_cols(a, b);
        if let Some(v) = &mut self.v {
            v.swap_cols(a, b);
        }
        if let Some(vi) = &mut self.v_inv {
            vi.swap_rows(a, b);
        }
    }

    fn negate_row(&mut self, i: usize) {
        self.m.negate_row(i);
        if let Some(u) = &mut self.u {
            u.negate_row(i);
        }
        if let Some(ui) = &mut self.u_inv {
            ui.negate_col(i);
        }
    }

    /// `row[dst] += q * row[src]`, touching only the listed columns of the working matrix.
    fn row_add_mul(&mut self, dst: usize, src: usize, q: &Int, support: &[usize]) {
        for &j in support {
            let s = self.m.get(src, j).clone();
            self.m.get_mut(dst, j).add_mul_assign(q, &s);
        }
        if let Some(u) = &mut self.u {
            u.row_add_mul(dst, src, q);
        }
        if let Some(ui) = &mut self.u_inv {
            ui.col_add_mul(src, dst, &q.neg());
        }
    }

    fn track_col_add_mul(&mut self, dst: usize, src: usize, q: &Int) {
        if let Some(v) = &mut self.v {
            v.col_add_mul(dst, src, q);
        }
        if let Some(vi) = &mut self.v_inv {
            vi.row_add_mul(src, dst, &q.neg());
        }
    }

    fn col_add_mul(&mut self, dst: usize, src: usize, q: &Int) {
        self.m.col_add_mul(dst, src, q);
        self.track_col_add_mul(dst, src, q);
    }

    /// Rows `(i, j)` become `(a*ri + b*rj, c*ri + d*rj)`; `ad - bc = 1`.
    fn row_combine(&mut self, i: usize, j: usize, a: &Int, b: &Int, c: &Int, d: &Int) {
        self.m.row_combine(i, j, a, b, c, d);
        if let Some(u) = &mut self.u {
            u.row_combine(i, j, a, b, c, d);
        }
        if let Some(ui) = &mut self.u_inv {
            ui.col_combine(i, j, d, &c.neg(), &b.neg(), a);
        }
    }

    /// Columns `(i, j)` become `(a*ci + b*cj, c*ci + d*cj)`; `ad - bc = 1`.
    fn col_combine(&mut self, i: usize, j: usize, a: &Int, b: &Int, c: &Int, d: &Int) {
        self.m.col_combine(i, j, a, b, c, d);
        if let Some(v) = &mut self.v {
            v.col_combine(i, j, a, b, c, d);
        }
        if let Some(vi) = &mut self.v_inv {
            vi.row_combine(i, j, d, &c.neg(), &b.neg(), a);
        }
    }

    fn find_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let (rows, cols) = (self.m.rows(), self.m.cols());
        let mut row_nnz = vec![0usize; rows];
        let mut col_nnz = vec![0usize; cols];
        let mut best: Option<Int> = None;
        for i in t..rows {
            for (j, v) in self.m.row(i).iter().enumerate().skip(t) {
                if v.is_zero() {
                    continue;
                }
                row_nnz[i] += 1;
                col_nnz[j] += 1;
                let better = match &best {
                    None => true,
                    Some(b) => v.cmp_abs(b).is_lt(),
                };
                if better {
                    best = Some(v.abs());
                }
            }
        }
        let best = best?;
        let mut choice = None;
        let mut cost = usize::MAX;
        for i in t..rows {
            if row_nnz[i] == 0 {
                continue;
            }
            for (j, v) in self.m.row(i).iter().enumerate().skip(t) {
                if v.is_zero() || v.cmp_abs(&best).is_ne() {
                    continue;
                }
                let c = (row_nnz[i] - 1) * (col_nnz[j] - 1);
                if c < cost {
                    cost = c;
                    choice = Some((i, j));
                    if c == 0 {
                        return choice;
                    }
                }
            }
        }
        choice
    }

    fn row_support(&self, i: usize, from: usize) -> Vec<usize> {
        self.m
            .row(i)
            .iter()
            .enumerate()
            .skip(from)
            .filter(|(_, v)| !v.is_zero())
            .map(|(j, _)| j)
            .collect()
    }

    fn run(&mut self) -> Vec<Int> {
        let (rows, cols) = (self.m.rows(), self.m.cols());
        let mut t = 0;
        while t < rows.min(cols) {
            let Some((pi, pj)) = self.find_pivot(t) else { break };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                // clear column t below the pivot
                let mut support = self.row_support(t, t);
                for i in t + 1..rows {
                    let e = self.m.get(i, t).clone();
                    if e.is_zero() {
                        continue;
                    }
                    let p = self.m.get(t, t).clone();
                    match e.div_exact(&p) {
                        Some(q) => self.row_add_mul(i, t, &q.neg(), &support),
                        None => {
                            let (g, s, r) = Int::ext_gcd(&p, &e);
                            let c = e.div_exact(&g).expect("gcd divides").neg();
                            let d = p.div_exact(&g).expect("gcd divides");
                            self.row_combine(t, i, &s, &r, &c, &d);
                            support = self.row_support(t, t);
                        }
                    }
                }
                // clear row t right of the pivot
                let mut column_clean = true;
                for j in t + 1..cols {
                    let e = self.m.get(t, j).clone();
                    if e.is_zero() {
                        continue;
                    }
                    let p = self.m.get(t, t).clone();
                    match e.div_exact(&p) {
                        Some(q) => {
                            let q = q.neg();
                            if column_clean {
                                self.m.set(t, j, Int::ZERO);
                                self.track_col_add_mul(j, t, &q);
                            } else {
                                self.col_add_mul(j, t, &q);
                            }
                        }
                        None => {
                            let (g, s, r) = Int::ext_gcd(&p, &e);
                            let c = e.div_exact(&g).expect("gcd divides").neg();
                            let d = p.div_exact(&g).expect("gcd divides");
                            self.col_combine(t, j, &s, &r, &c, &d);
                            column_clean = false;
                        }
                    }
                }
                if column_clean {
                    break;
                }
            }
            if self.m.get(t, t).is_negative() {
                self.negate_row(t);
            }
            t += 1;
        }
        let rank = t;
        // enforce d_i | d_j
        for i in 0..rank {
            for j in i + 1..rank {
                let di = self.m.get(i, i).clone();
                let dj = self.m.get(j, j).clone();
                if di.divides(&dj) {
                    continue;
                }
                self.col_add_mul(i, j, &Int::ONE);
                let (g, s, r) = Int::ext_gcd(&di, &dj);
                let c = dj.div_exact(&g).expect("gcd divides").neg();
                let d = di.div_exact(&g).expect("gcd divides");
                self.row_combine(i, j, &s, &r, &c, &d);
                let off = self.m.get(i, j).clone();
                let q = off.div_exact(&g).expect("gcd divides entry").neg();
                self.col_add_mul(j, i, &q);
                if self.m.get(j, j).is_negative() {
                    self.negate_row(j);
                }
            }
        }
        (0..rank).map(|i| self.m.get(i, i).clone()).collect()
    }
}

/// Smith normal form with both transforms recorded.
pub fn smith(a: &IntMatrix) -> SmithDecomposition {
    smith_with(a, Transforms::BOTH)
}

/// Smith normal form recording only the requested transforms.
pub fn smith_with(a: &IntMatrix, transforms: Transforms) -> SmithDecomposition {
    let (rows, cols) = (a.rows(), a.cols());
    let mut e = Elimination {
        m: a.clone(),
        u: transforms.left.then(|| IntMatrix::identity(rows)),
        u_inv: transforms.left.then(|| IntMatrix::identity(rows)),
        v: transforms.right.then(|| IntMatrix::identity(cols)),
        v_inv: transforms.right.then(|| IntMatrix::identity(cols)),
    };
    let diagonal = e.run();
    SmithDecomposition { rows, cols, diagonal, u: e.u, u_inv: e.u_inv, v: e.v, v_inv: e.v_inv }
}

/// Invariant factors (diagonal entries greater than one) and rank, without transforms.
pub fn invariant_factors(a: &IntMatrix) -> (usize, Vec<Int>) {
    let s = smith_with(a, Transforms::NONE);
    (s.rank(), s.invariant_factors())
}

/// Reduces an arbitrary list of cyclic orders to invariant-factor form.
/// Orders equal to one are dropped; zero entries (infinite cyclic) are kept out
/// and reported separately as the returned free rank.
pub fn canonical_cyclic(orders: &[Int]) -> (usize, Vec<Int>) {
    let free = orders.iter().filter(|o| o.is_zero()).count();
    let finite: Vec<Int> = orders.iter().filter(|o| !o.is_zero()).map(Int::abs).collect();
    let n = finite.len();
    let mut d = IntMatrix::zeros(n, n);
    for (i, o) in finite.into_iter().enumerate() {
        d.set(i, i, o);
    }
    let (_, factors) = invariant_factors(&d);
    (free, factors)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(a: &IntMatrix) -> SmithDecomposition {
        let s = smith(a);
        let u = s.u.as_ref().unwrap();
        let v = s.v.as_ref().unwrap();
        assert_eq!(u.mul(a).mul(v), s.d_matrix());
        assert_eq!(u.mul(s.u_inv.as_ref().unwrap()), IntMatrix::identity(a.rows()));
        assert_eq!(v.mul(s.v_inv.as_ref().unwrap()), IntMatrix::identity(a.cols()));
        for w in s.diagonal().windows(2) {
            assert!(w[0].divides(&w[1]));
        }
        s
    }

    #[test]
    fn zero_matrix() {
        let s = check(&IntMatrix::zeros(3, 2));
        assert_eq!(s.rank(), 0);
    }

    #[test]
    fn hand_example() {
        // [[2,4],[6,8]]: gcd of entries 2, det -8, so diag(2, 4)
        let s = check(&IntMatrix::from_rows(&[[2, 4], [6, 8]]));
        assert_eq!(s.diagonal(), &[Int::from(2), Int::from(4)]);
    }

    #[test]
    fn identity_is_fixed() {
        let s = check(&IntMatrix::identity(4));
        assert_eq!(s.diagonal(), &[Int::ONE, Int::ONE, Int::ONE, Int::ONE]);
    }

    #[test]
    fn divisibility_fix() {
        let s = check(&IntMatrix::from_rows(&[[2, 0], [0, 3]]));
        assert_eq!(s.diagonal(), &[Int::ONE, Int::from(6)]);
        let s = check(&IntMatrix::from_rows(&[[4, 0, 0], [0, 6, 0], [0, 0, 10]]));
        assert_eq!(s.diagonal(), &[Int::from(2), Int::from(2), Int::from(60)]);
    }

    #[test]
    fn solve_roundtrip() {
        let a = IntMatrix::from_rows(&[[1, 2, 3], [4, 5, 6], [7, 8, 10]]);
        let s = check(&a);
        let x = [Int::from(3), Int::from(-1), Int::from(2)];
        let b = a.mul_vec(&x);
        assert_eq!(s.solve(&b).unwrap(), x.to_vec());
        let a = IntMatrix::from_rows(&[[2, 0], [0, 2]]);
        let s = check(&a);
        assert!(s.solve(&[Int::ONE, Int::ZERO]).is_none());
        // but mod 3 it is solvable
        let x = s.solve_mod(&[Int::ONE, Int::ZERO], 3).unwrap();
        assert_eq!(x, vec![Int::from(2), Int::ZERO]);
    }

    #[test]
    fn kernel_basis_annihilated() {
        let a = IntMatrix::from_rows(&[[1, -1, 0, 0], [0, 1, -1, 0], [1, 0, -1, 0]]);
        let s = check(&a);
        let k = s.kernel_basis();
        assert_eq!(k.len(), 2);
        for v in k {
            assert!(a.mul_vec(&v).iter().all(Int::is_zero));
        }
    }

    #[test]
    fn canonical_form() {
        let (free, t) = canonical_cyclic(&[Int::from(2), Int::from(3), Int::ZERO, Int::ONE, Int::from(2)]);
        assert_eq!(free, 1);
        assert_eq!(t, vec![Int::from(2), Int::from(6)]);
    }
}
