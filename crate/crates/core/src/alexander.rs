//! Finite Alexander quandles `Z_n[T, T^-1]/(h)` with `a * b = Ta + (1-T)b`.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::int::Int;
use crate::poly::LaurentPoly;
use crate::quandle::{FiniteQuandle, QuandleHom};

/// An Alexander quandle with its polynomial element representation.
///
/// Element `k` is the residue `sum c_i T^i` (degree below `deg h`) where
/// `c_0 + c_1 n + c_2 n^2 + ...` is the base-`n` expansion of `k`.
#[derive(Clone, Debug)]
pub struct AlexanderQuandle {
    modulus: u64,
    /// Monic `h`, coefficients of `T^0..=T^d`.
    h: Vec<u64>,
    quandle: FiniteQuandle,
}

fn inverse_mod(a: u64, n: u64) -> Option<u64> {
    let (g, s, _) = Int::ext_gcd(&Int::from(a), &Int::from(n));
    g.is_one().then(|| s.rem_euclid_u64(n))
}

impl AlexanderQuandle {
    /// Builds `Z_n[T, T^-1]/(h)`. `h` is shifted to start at `T^0` and made monic.
    pub fn new(modulus: u64, h: &LaurentPoly) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::NotFinite(format!("modulus {modulus} does not give a finite quandle with n >= 2")));
        }
        let h = h.reduce_mod(modulus).laurent_normalized();
        let coeffs: Vec<u64> =
            h.to_coeff_vec().expect("normalized").iter().map(|c| c.rem_euclid_u64(modulus)).collect();
        if coeffs.len() < 2 {
            return Err(Error::NotFinite(format!("h = {h} has degree 0 after normalization")));
        }
        let lead = *coeffs.last().expect("nonempty");
        let lead_inv = inverse_mod(lead, modulus)
            .ok_or_else(|| Error::NotFinite(format!("leading coefficient {lead} is not a unit mod {modulus}")))?;
        if inverse_mod(coeffs[0], modulus).is_none() {
            return Err(Error::NotFinite(format!("constant coefficient {} is not a unit mod {modulus}", coeffs[0])));
        }
        let monic: Vec<u64> = coeffs.iter().map(|&c| c * lead_inv % modulus).collect();
        let d = monic.len() - 1;
        let size = (modulus as usize).checked_pow(d as u32).ok_or_else(|| Error::NotFinite("too many elements".into()))?;
        let mut a = AlexanderQuandle { modulus, h: monic, quandle: FiniteQuandle::trivial(1) };
        let digits: Vec<Vec<u64>> = (0..size).map(|k| a.digits(k)).collect();
        let t_times: Vec<Vec<u64>> = digits.iter().map(|v| a.mul_t(v)).collect();
        let mut table = vec![vec![0usize; size]; size];
        for x in 0..size {
            for y in 0..size {
                // T x + y - T y
                let r: Vec<u64> = (0..d)
                    .map(|i| (t_times[x][i] + digits[y][i] + modulus - t_times[y][i]) % modulus)
                    .collect();
                table[x][y] = a.index(&r);
            }
        }
        let label = format!("Z{modulus}[T]/({})", a.h_poly());
        let names = (0..size).map(|k| a.poly_of(k).to_string()).collect();
        a.quandle = FiniteQuandle::validate(table, label)?.with_names(names)?;
        Ok(a)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn degree(&self) -> usize {
        self.h.len() - 1
    }

    /// The normalized monic `h`.
    pub fn h_poly(&self) -> LaurentPoly {
        LaurentPoly::new(self.modulus, 0, self.h.iter().map(|&c| Int::from(c)).collect())
    }

    pub fn quandle(&self) -> &FiniteQuandle {
        &self.quandle
    }

    pub fn into_quandle(self) -> FiniteQuandle {
        self.quandle
    }

    pub fn size(&self) -> usize {
        self.quandle.size()
    }

    fn digits(&self, mut k: usize) -> Vec<u64> {
        let n = self.modulus as usize;
        (0..self.degree())
            .map(|_| {
                let c = (k % n) as u64;
                k /= n;
                c
            })
            .collect()
    }

    fn index(&self, digits: &[u64]) -> usize {
        digits.iter().rev().fold(0usize, |acc, &c| acc * self.modulus as usize + c as usize)
    }

    /// `T * v` reduced modulo `h`.
    fn mul_t(&self, v: &[u64]) -> Vec<u64> {
        let d = self.degree();
        let n = self.modulus;
        let top = v[d - 1];
        let mut r = vec![0u64; d];
        for i in (1..d).rev() {
            r[i] = v[i - 1];
        }
        for (i, ri) in r.iter_mut().enumerate() {
            *ri = (*ri + (n - top) * self.h[i] % n) % n;
        }
        r
    }

    /// The residue polynomial of element `k`.
    pub fn poly_of(&self, k: usize) -> LaurentPoly {
        let digits = self.digits(k);
        LaurentPoly::new(self.modulus, 0, digits.into_iter().map(Int::from).collect())
    }

    /// The element represented by a Laurent polynomial (coefficients are
    /// reduced modulo `n` first).
    pub fn element_of(&self, p: &LaurentPoly) -> usize {
        let n = self.modulus;
        let d = self.degree();
        let p = p.reduce_mod(n);
        // T^{-1} = -h_0^{-1} (h_1 + h_2 T + ... + T^{d-1})
        let h0_inv = inverse_mod(self.h[0], n).expect("unit");
        let t_inv: Vec<u64> = (0..d).map(|i| (n - self.h[i + 1] * h0_inv % n) % n).collect();
        let mut acc = vec![0u64; d];
        let t_inv_pow = |k: u64| -> Vec<u64> {
            let mut v = vec![0u64; d];
            v[0] = 1;
            for _ in 0..k {
                v = self.mul_poly(&v, &t_inv);
            }
            v
        };
        for (e, c) in p.terms() {
            let c = c.rem_euclid_u64(n);
            let mono = if e >= 0 {
                let mut v = vec![0u64; d];
                v[0] = 1;
                for _ in 0..e {
                    v = self.mul_t(&v);
                }
                v
            } else {
                t_inv_pow(e.unsigned_abs())
            };
            for i in 0..d {
                acc[i] = (acc[i] + c * mono[i]) % n;
            }
        }
        self.index(&acc)
    }

    fn mul_poly(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let n = self.modulus;
        let d = self.degree();
        let mut acc = vec![0u64; d];
        let mut shifted = b.to_vec();
        for &ai in a {
            for i in 0..d {
                acc[i] = (acc[i] + ai * shifted[i]) % n;
            }
            shifted = self.mul_t(&shifted);
        }
        acc
    }

    /// Element lookup by polynomial text, e.g. `"2T+2"`.
    pub fn parse_element(&self, s: &str) -> Result<usize> {
        Ok(self.element_of(&LaurentPoly::parse(s, 0)?))
    }

    /// The reduction map into another Alexander quandle whose modulus divides
    /// this one and whose `h` divides this `h` after reduction.
    pub fn quotient_hom(&self, other: &AlexanderQuandle) -> Result<QuandleHom> {
        if self.modulus % other.modulus != 0 {
            return Err(Error::InvalidArgument(format!(
                "modulus {} does not divide {}",
                other.modulus, self.modulus
            )));
        }
        let map = (0..self.size()).map(|k| other.element_of(&self.poly_of(k))).collect();
        QuandleHom::new(self.quandle.clone(), other.quandle.clone(), map)
    }

    /// `f -> f(1)` onto the trivial quandle on `Z_n`; a homomorphism when `h(1) = 0`.
    pub fn evaluation_at_one(&self) -> Result<QuandleHom> {
        let n = self.modulus;
        let target = FiniteQuandle::trivial(n as usize).with_label(format!("T{n}"));
        let map = (0..self.size()).map(|k| self.poly_of(k).eval_at_one().rem_euclid_u64(n) as usize).collect();
        QuandleHom::new(self.quandle.clone(), target, map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alex(n: u64, h: &str) -> AlexanderQuandle {
        AlexanderQuandle::new(n, &h.parse().unwrap()).unwrap()
    }

    #[test]
    fn s4_indexing() {
        let s4 = alex(2, "T^2+T+1");
        assert_eq!(s4.size(), 4);
        assert_eq!(s4.quandle().names(), &["0", "1", "T", "T+1"]);
        // 0 * 1 = (1 - T) * 1 = T + 1 mod 2
        assert_eq!(s4.quandle().op(0, 1), 3);
        assert_eq!(s4.parse_element("T^-1").unwrap(), s4.parse_element("T+1").unwrap());
    }

    #[test]
    fn sizes_and_finiteness() {
        assert_eq!(alex(2, "T^4+T^2+1").size(), 16);
        assert_eq!(alex(3, "T^2+2T+1").size(), 9);
        assert!(matches!(AlexanderQuandle::new(4, &"2T+1".parse().unwrap()), Err(Error::NotFinite(_))));
        assert!(matches!(AlexanderQuandle::new(4, &"T+2".parse().unwrap()), Err(Error::NotFinite(_))));
    }

    #[test]
    fn z3_mod_t_plus_one_is_dihedral() {
        let a = alex(3, "T+1");
        assert_eq!(a.quandle().table(), FiniteQuandle::dihedral(3).table());
    }

    #[test]
    fn reduction_maps() {
        let big = alex(4, "T^2-T-1");
        let s4 = alex(2, "T^2+T+1");
        let f = big.quotient_hom(&s4).unwrap();
        assert!(f.is_surjective());
        let x = alex(3, "T^2+2T+1");
        let r3 = alex(3, "T+1");
        let pi = x.quotient_hom(&r3).unwrap();
        // 2(1 - T) maps to 1
        assert_eq!(pi.apply(x.parse_element("2-2T").unwrap()), 1);
        // (T+1)^2 does not vanish at 1, (T-1)^2 does
        assert!(x.evaluation_at_one().is_err());
        let y = alex(3, "T^2-2T+1");
        let ev = y.evaluation_at_one().unwrap();
        assert_eq!(ev.apply(y.parse_element("T").unwrap()), 1);
    }

    #[test]
    fn laurent_element_lookup() {
        let a = alex(4, "T^2-T-1");
        let t = a.parse_element("T").unwrap();
        let tinv = a.parse_element("T^-1").unwrap();
        let prod = a.element_of(&a.poly_of(t).mul(&a.poly_of(tinv)));
        assert_eq!(prod, a.parse_element("1").unwrap());
    }
}
