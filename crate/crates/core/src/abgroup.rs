//! Finitely generated abelian groups in coordinates.
//!
//! A group is `Z^k / diag(orders)` where an order of `0` marks a free
//! coordinate. Elements are integer vectors; subgroups are given by lists of
//! generating vectors.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::int::Int;
use crate::matrix::IntMatrix;
use crate::snf::{canonical_cyclic, smith, smith_with, Transforms};

/// Free rank plus torsion invariant factors `d_1 | d_2 | ...`, each at least 2.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AbelianGroupDescriptor {
    pub free_rank: usize,
    pub torsion: Vec<Int>,
}

impl AbelianGroupDescriptor {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroupDescriptor { free_rank: rank, torsion: Vec::new() }
    }

    /// Canonical form of `Z^free + sum Z_{orders}`; orders of 0 count as free,
    /// orders of 1 vanish.
    pub fn from_orders(free_rank: usize, orders: &[Int]) -> Self {
        let (extra, torsion) = canonical_cyclic(orders);
        AbelianGroupDescriptor { free_rank: free_rank + extra, torsion }
    }

    /// `(Z_p)^k`.
    pub fn elementary(p: u64, k: usize) -> Self {
        Self::from_orders(0, &vec![Int::from(p); k])
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// The torsion subgroup.
    pub fn torsion_part(&self) -> AbelianGroupDescriptor {
        AbelianGroupDescriptor { free_rank: 0, torsion: self.torsion.clone() }
    }

    /// Order of a finite group, `None` if infinite.
    pub fn order(&self) -> Option<Int> {
        (self.free_rank == 0).then(|| self.torsion.iter().fold(Int::ONE, |a, d| a.mul(d)))
    }

    /// Direct sum.
    pub fn sum(&self, other: &AbelianGroupDescriptor) -> AbelianGroupDescriptor {
        let mut orders = self.torsion.clone();
        orders.extend(other.torsion.iter().cloned());
        Self::from_orders(self.free_rank + other.free_rank, &orders)
    }

    /// `self (x) Z_m`; `m = 0` returns `self`.
    pub fn tensor_zm(&self, m: u64) -> AbelianGroupDescriptor {
        if m == 0 {
            return self.clone();
        }
        let mm = Int::from(m);
        let mut orders = vec![mm.clone(); self.free_rank];
        orders.extend(self.torsion.iter().map(|d| d.gcd(&mm)));
        Self::from_orders(0, &orders)
    }

    /// `Tor(self, Z_m)`; zero for `m = 0`.
    pub fn tor_zm(&self, m: u64) -> AbelianGroupDescriptor {
        if m == 0 {
            return Self::zero();
        }
        let mm = Int::from(m);
        let orders: Vec<Int> = self.torsion.iter().map(|d| d.gcd(&mm)).collect();
        Self::from_orders(0, &orders)
    }

    /// `Hom(self, Z_m)`; `Hom(self, Z)` for `m = 0`.
    pub fn hom_zm(&self, m: u64) -> AbelianGroupDescriptor {
        if m == 0 {
            return Self::free(self.free_rank);
        }
        self.tensor_zm(m)
    }

    /// `Ext(self, Z_m)`; `Ext(self, Z)` for `m = 0`.
    pub fn ext_zm(&self, m: u64) -> AbelianGroupDescriptor {
        if m == 0 {
            return self.torsion_part();
        }
        self.tor_zm(m)
    }
}

impl fmt::Display for AbelianGroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut parts: Vec<(alloc::string::String, usize)> = Vec::new();
        if self.free_rank > 0 {
            parts.push((alloc::string::String::from("Z"), self.free_rank));
        }
        for d in &self.torsion {
            let name = alloc::format!("Z_{d}");
            match parts.last_mut() {
                Some((last, k)) if *last == name => *k += 1,
                _ => parts.push((name, 1)),
            }
        }
        for (i, (name, k)) in parts.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if *k == 1 {
                f.write_str(name)?;
            } else if name == "Z" {
                write!(f, "Z^{k}")?;
            } else {
                write!(f, "({name})^{k}")?;
            }
        }
        Ok(())
    }
}

fn relation_columns(orders: &[Int]) -> Vec<Vec<Int>> {
    orders
        .iter()
        .enumerate()
        .filter(|(_, d)| !d.is_zero())
        .map(|(i, d)| {
            let mut v = vec![Int::ZERO; orders.len()];
            v[i] = d.clone();
            v
        })
        .collect()
}

/// Reduces an element into canonical coordinates (torsion entries in `[0, d)`).
pub fn reduce(orders: &[Int], v: &[Int]) -> Vec<Int> {
    v.iter()
        .zip(orders)
        .map(|(x, d)| if d.is_zero() { x.clone() } else { x.sub(&x.div_floor(d).mul(d)) })
        .collect()
}

/// Whether `v` lies in the subgroup generated by `gens`.
pub fn contains(orders: &[Int], gens: &[Vec<Int>], v: &[Int]) -> bool {
    let k = orders.len();
    if k == 0 {
        return true;
    }
    let mut cols: Vec<Vec<Int>> = gens.to_vec();
    cols.extend(relation_columns(orders));
    if cols.is_empty() {
        return v.iter().all(Int::is_zero);
    }
    let s = smith(&IntMatrix::from_columns(k, &cols));
    s.solve(v).is_some()
}

/// Whether two generating sets span the same subgroup.
pub fn subgroups_equal(orders: &[Int], a: &[Vec<Int>], b: &[Vec<Int>]) -> bool {
    a.iter().all(|v| contains(orders, b, v)) && b.iter().all(|v| contains(orders, a, v))
}

/// Generators of the kernel of the map given by `f` (columns are images of
/// the source generators) from `Z^k1 / src` to `Z^k2 / dst`.
pub fn kernel(f: &IntMatrix, src_orders: &[Int], dst_orders: &[Int]) -> Vec<Vec<Int>> {
    let k1 = src_orders.len();
    let k2 = dst_orders.len();
    assert_eq!((f.rows(), f.cols()), (k2, k1), "map shape");
    if k1 == 0 {
        return Vec::new();
    }
    let mut cols: Vec<Vec<Int>> = (0..k1).map(|j| f.column(j)).collect();
    cols.extend(relation_columns(dst_orders));
    let big = IntMatrix::from_columns(k2, &cols);
    let s = smith_with(&big, Transforms::RIGHT);
    s.kernel_basis()
        .into_iter()
        .map(|v| reduce(src_orders, &v[..k1]))
        .filter(|v| v.iter().any(|x| !x.is_zero()))
        .collect()
}

/// Image generators of the map `f`: its columns, reduced.
pub fn image(f: &IntMatrix, dst_orders: &[Int]) -> Vec<Vec<Int>> {
    (0..f.cols()).map(|j| reduce(dst_orders, &f.column(j))).filter(|v| v.iter().any(|x| !x.is_zero())).collect()
}

/// Isomorphism type of the subgroup generated by `gens`.
pub fn subgroup_descriptor(orders: &[Int], gens: &[Vec<Int>]) -> AbelianGroupDescriptor {
    let s = gens.len();
    if s == 0 {
        return AbelianGroupDescriptor::zero();
    }
    let k = orders.len();
    // relations among the generators: kernel of [G | D] projected to G-coordinates
    let mut cols: Vec<Vec<Int>> = gens.to_vec();
    cols.extend(relation_columns(orders));
    let big = IntMatrix::from_columns(k, &cols);
    let rels: Vec<Vec<Int>> = smith_with(&big, Transforms::RIGHT)
        .kernel_basis()
        .into_iter()
        .map(|v| v[..s].to_vec())
        .filter(|v| v.iter().any(|x| !x.is_zero()))
        .collect();
    if rels.is_empty() {
        return AbelianGroupDescriptor::free(s);
    }
    let l = smith_with(&IntMatrix::from_columns(s, &rels), Transforms::NONE);
    AbelianGroupDescriptor::from_orders(s - l.rank(), &l.invariant_factors())
}

/// Isomorphism type of the quotient `Z^k / (diag(orders) + span(gens))`.
pub fn quotient_descriptor(orders: &[Int], gens: &[Vec<Int>]) -> AbelianGroupDescriptor {
    let k = orders.len();
    let mut cols: Vec<Vec<Int>> = gens.to_vec();
    cols.extend(relation_columns(orders));
    if cols.is_empty() {
        return AbelianGroupDescriptor::free(k);
    }
    let s = smith_with(&IntMatrix::from_columns(k, &cols), Transforms::NONE);
    AbelianGroupDescriptor::from_orders(k - s.rank(), &s.invariant_factors())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn v(xs: &[i64]) -> Vec<Int> {
        xs.iter().map(|&x| Int::from(x)).collect()
    }

    #[test]
    fn descriptor_display_and_algebra() {
        let g = AbelianGroupDescriptor::from_orders(2, &v(&[2, 2]));
        assert_eq!(g.to_string(), "Z^2 + (Z_2)^2");
        assert_eq!(g.tensor_zm(2), AbelianGroupDescriptor::elementary(2, 4));
        assert_eq!(g.tensor_zm(3), AbelianGroupDescriptor::elementary(3, 2));
        assert_eq!(AbelianGroupDescriptor::from_orders(0, &v(&[6, 1, 0])).to_string(), "Z + Z_6");
        assert_eq!(AbelianGroupDescriptor::zero().to_string(), "0");
    }

    #[test]
    fn subgroup_machinery() {
        // G = Z + Z_4
        let orders = v(&[0, 4]);
        let gens = vec![v(&[0, 2])];
        assert!(contains(&orders, &gens, &v(&[0, 6])));
        assert!(!contains(&orders, &gens, &v(&[0, 1])));
        assert_eq!(subgroup_descriptor(&orders, &gens), AbelianGroupDescriptor::from_orders(0, &v(&[2])));
        assert_eq!(quotient_descriptor(&orders, &gens), AbelianGroupDescriptor::from_orders(1, &v(&[2])));
        // multiplication by 2 on Z_4 has kernel {0, 2}
        let f = IntMatrix::from_rows(&[[2]]);
        let k = kernel(&f, &v(&[4]), &v(&[4]));
        assert!(subgroups_equal(&v(&[4]), &k, &[v(&[2])]));
    }
}
