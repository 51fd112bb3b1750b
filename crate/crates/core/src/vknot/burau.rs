//! Burau matrices of virtual braid words, acting on row vectors of colors in
//! an Alexander quandle.

use alloc::vec;
use alloc::vec::Vec;

use super::diagram::{Letter, VirtualBraidWord};
use crate::poly::LaurentPoly;

/// A square matrix of Laurent polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    pub entries: Vec<Vec<LaurentPoly>>,
}

impl PolyMatrix {
    pub fn identity(n: usize, modulus: u64) -> Self {
        let entries =
            (0..n).map(|i| (0..n).map(|j| if i == j { LaurentPoly::one(modulus) } else { LaurentPoly::zero(modulus) }).collect()).collect();
        PolyMatrix { entries }
    }

    pub fn from_rows(entries: Vec<Vec<LaurentPoly>>) -> Self {
        PolyMatrix { entries }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i][j]
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        let n = self.size();
        let modulus = self.entries[0][0].modulus();
        let mut out = vec![vec![LaurentPoly::zero(modulus); n]; n];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                for k in 0..n {
                    *cell = cell.add(&self.entries[i][k].mul(&other.entries[k][j]));
                }
            }
        }
        PolyMatrix { entries: out }
    }

    /// Reduces every entry modulo `m` and then modulo the monic polynomial `h`.
    pub fn reduce(&self, m: u64, h: &LaurentPoly) -> PolyMatrix {
        let entries = self.entries.iter().map(|r| r.iter().map(|p| reduce_poly(p, m, h)).collect()).collect();
        PolyMatrix { entries }
    }

    pub fn is_identity(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..n).all(|j| {
            let p = &self.entries[i][j];
            if i == j { p.sub(&LaurentPoly::one(p.modulus())).is_zero() } else { p.is_zero() }
        }))
    }

    /// `v M` for a row vector `v`.
    pub fn act_on_row(&self, v: &[LaurentPoly]) -> Vec<LaurentPoly> {
        let n = self.size();
        (0..n)
            .map(|j| (0..n).fold(LaurentPoly::zero(v[0].modulus()), |acc, k| acc.add(&v[k].mul(&self.entries[k][j]))))
            .collect()
    }
}

/// Residue of a Laurent polynomial modulo `(m, h)`, with exponents in
/// `[0, deg h)`. `h` must be monic with unit constant term mod `m`.
pub fn reduce_poly(p: &LaurentPoly, m: u64, h: &LaurentPoly) -> LaurentPoly {
    let h = h.reduce_mod(m).laurent_normalized();
    let hc = h.to_coeff_vec().expect("normalized");
    let d = hc.len() - 1;
    assert!(hc[d].is_one(), "h must be monic");
    let p = p.reduce_mod(m);
    // clear negative exponents: T^-1 = -h_0^{-1}(h_1 + ... + T^{d-1}) mod h
    let mut p = p;
    if p.min_exp() < 0 && !p.is_zero() {
        let h0 = hc[0].rem_euclid_u64(m);
        let inv = crate::modp::inv_mod(h0, m);
        let tinv = LaurentPoly::new(m, 0, hc[1..].iter().map(|c| crate::int::Int::from(c.rem_euclid_u64(m) * (m - inv) % m)).collect());
        let k = (-p.min_exp()) as u32;
        p = p.shift(k as i64).mul(&tinv.pow(k));
    }
    let mut c: Vec<i64> = p.to_coeff_vec().map(|v| v.iter().map(|x| x.rem_euclid_u64(m) as i64).collect()).unwrap_or_default();
    let h: Vec<i64> = hc.iter().map(|x| x.rem_euclid_u64(m) as i64).collect();
    let mi = m as i64;
    while c.len() > d {
        let top = c.pop().expect("nonempty");
        let base = c.len() - d;
        for (i, &hi) in h[..d].iter().enumerate() {
            c[base + i] = (c[base + i] - top * hi).rem_euclid(mi);
        }
    }
    LaurentPoly::from_coeffs(m, &c)
}

/// Matrix of one letter on `n` strands over the given coefficient modulus.
pub fn letter_matrix(l: Letter, n: usize, modulus: u64) -> PolyMatrix {
    let mut m = PolyMatrix::identity(n, modulus);
    let i = l.index() - 1;
    let one = LaurentPoly::one(modulus);
    let zero = LaurentPoly::zero(modulus);
    let t = LaurentPoly::t(modulus);
    let block = match l {
        // [[0, T], [1, 1-T]]
        Letter::Sigma { sign, .. } if sign > 0 => [[zero.clone(), t.clone()], [one.clone(), one.sub(&t)]],
        // [[1-T^-1, 1], [T^-1, 0]]
        Letter::Sigma { .. } => {
            let ti = LaurentPoly::monomial(modulus, 1, -1);
            [[one.sub(&ti), one.clone()], [ti, zero.clone()]]
        }
        Letter::Virtual { .. } => [[zero.clone(), one.clone()], [one.clone(), zero.clone()]],
    };
    for (a, row) in block.into_iter().enumerate() {
        for (b, p) in row.into_iter().enumerate() {
            m.entries[i + a][i + b] = p;
        }
    }
    m
}

/// Product of the letter matrices, so that the bottom colors are `c M` for
/// top colors `c`.
pub fn burau_color_matrix(w: &VirtualBraidWord, modulus: u64) -> PolyMatrix {
    w.letters().iter().fold(PolyMatrix::identity(w.strands(), modulus), |acc, &l| acc.mul(&letter_matrix(l, w.strands(), modulus)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn k3_matrix() {
        let w = VirtualBraidWord::parse("s1 s1 v1", None).unwrap().power(3);
        let m = burau_color_matrix(&w, 0);
        let expected = PolyMatrix::from_rows(vec![
            vec![p("T-T^3+T^5-T^6"), p("T-T^3+T^5")],
            vec![p("1-T+T^3-T^5+T^6"), p("1-T+T^3-T^5")],
        ]);
        assert_eq!(m, expected);
        assert!(m.reduce(2, &p("T^4+T^2+1")).is_identity());
        assert!(burau_color_matrix(&VirtualBraidWord::new(2, vec![]).unwrap(), 0).is_identity());
    }

    #[test]
    fn inverse_letters_cancel() {
        let w = VirtualBraidWord::parse("s1 s1^-1 v1 v1 s1^-1 s1", None).unwrap();
        assert!(burau_color_matrix(&w, 0).is_identity());
    }

    #[test]
    fn reduction() {
        assert_eq!(reduce_poly(&p("T^2"), 2, &p("T^2+T+1")), p("T+1").reduce_mod(2));
        assert_eq!(reduce_poly(&p("T^-1"), 2, &p("T^2+T+1")), p("T+1").reduce_mod(2));
    }
}
