//! Homology and cohomology of the tuple complexes.
//!
//! Integer homology with explicit generators comes from two Smith normal
//! forms. With `B = d_n` and `A = d_{n+1}`, the trailing columns `K` of the
//! right transform of `B` span the cycles; writing boundaries in those
//! coordinates gives `M`, and the left transform `P` of `M` turns `K P^{-1}`
//! into generators whose orders are the diagonal of `M`'s normal form.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::abgroup::{self, AbelianGroupDescriptor};
use crate::chain::{Chain, ChainComplex, TupleBasis};
use crate::error::{Error, Result};
use crate::int::Int;
use crate::matrix::{IntMatrix, SparseMatrix};
use crate::modp::{kernel_mod_p, rank_mod_p, reduce_vec, Span};
use crate::quandle::QuandleHom;
use crate::chain::ComplexKind;
use crate::snf::{smith_with, Transforms};

/// Coefficient group for homology and cohomology.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Coeffs {
    Z,
    /// `Z_m`, `m >= 2`.
    Mod(u64),
}

impl Coeffs {
    /// The modulus, `0` for the integers.
    pub fn modulus(self) -> u64 {
        match self {
            Coeffs::Z => 0,
            Coeffs::Mod(m) => m,
        }
    }
}

impl fmt::Display for Coeffs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeffs::Z => f.write_str("Z"),
            Coeffs::Mod(m) => write!(f, "Z{m}"),
        }
    }
}

impl FromStr for Coeffs {
    type Err = Error;

    /// Accepts `Z`, `Z2`, `Z_2`, `Z/2`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "Z" || t == "z" {
            return Ok(Coeffs::Z);
        }
        let rest = t
            .strip_prefix('Z')
            .or_else(|| t.strip_prefix('z'))
            .ok_or_else(|| Error::InvalidArgument(format!("bad coefficient group {s:?}")))?;
        let rest = rest.trim_start_matches(['_', '/']);
        let m: u64 = rest.parse().map_err(|_| Error::InvalidArgument(format!("bad coefficient group {s:?}")))?;
        if m < 2 {
            return Err(Error::InvalidArgument(format!("coefficient modulus {m} must be at least 2")));
        }
        Ok(Coeffs::Mod(m))
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Integer homology `H_n` with generators and a class map.
#[derive(Clone, Debug)]
pub struct Homology {
    pub degree: usize,
    pub descriptor: AbelianGroupDescriptor,
    /// Generator cycles as vectors in the degree-`n` basis; torsion first.
    pub generators: Vec<Vec<Int>>,
    /// Order of each generator, `0` for infinite order.
    pub orders: Vec<Int>,
    basis: TupleBasis,
    boundary: SparseMatrix,
    v_inv_tail: IntMatrix,
    p: IntMatrix,
    skip: usize,
}

impl Homology {
    pub fn basis(&self) -> &TupleBasis {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn is_cycle(&self, z: &[Int]) -> bool {
        self.boundary.mul_int_vec(z).iter().all(Int::is_zero)
    }

    /// Coordinates of the class of the cycle `z` on the generators, torsion
    /// entries reduced into `[0, d)`.
    pub fn class_of(&self, z: &[Int]) -> Result<Vec<Int>> {
        if z.len() != self.basis.len() {
            return Err(Error::InvalidArgument(format!("vector of length {} in a basis of {}", z.len(), self.basis.len())));
        }
        if !self.is_cycle(z) {
            return Err(Error::NotACycle);
        }
        let c = self.v_inv_tail.mul_vec(z);
        let y = self.p.mul_vec(&c);
        Ok(abgroup::reduce(&self.orders, &y[self.skip..]))
    }

    pub fn class_of_chain(&self, c: &Chain) -> Result<Vec<Int>> {
        self.class_of(&c.to_vector(&self.basis)?)
    }

    /// Whether the cycle `z` is a boundary.
    pub fn is_boundary(&self, z: &[Int]) -> Result<bool> {
        Ok(self.class_of(z)?.iter().all(Int::is_zero))
    }

    pub fn generator_chain(&self, i: usize) -> Chain {
        Chain::from_vector(&self.basis, &self.generators[i])
    }
}

/// `H_n` of the complex with integer coefficients, with generators.
pub fn homology(cx: &ChainComplex, n: usize) -> Result<Homology> {
    let basis = cx.basis(n)?;
    let b = cx.boundary(n)?;
    let a = cx.boundary(n + 1)?;
    let c = basis.len();
    let sb = smith_with(&b.to_dense(), Transforms::RIGHT);
    let r = sb.rank();
    let v = sb.v.expect("right transform");
    let v_inv = sb.v_inv.expect("right transform");
    let k = c - r;
    let v_inv_tail = v_inv.rows_from(r);
    let kmat = v.cols_from(r);
    let m = v_inv_tail.mul_sparse(&a);
    let sm = smith_with(&m, Transforms::LEFT);
    let p = sm.u.clone().expect("left transform");
    let p_inv = sm.u_inv.clone().expect("left transform");
    let diag = sm.diagonal();
    let skip = diag.iter().take_while(|d| d.is_one()).count();
    let gens_all = kmat.mul(&p_inv);
    let mut generators = Vec::with_capacity(k - skip);
    let mut orders = Vec::with_capacity(k - skip);
    for i in skip..k {
        generators.push(gens_all.column(i));
        orders.push(diag.get(i).cloned().unwrap_or(Int::ZERO));
    }
    let descriptor = AbelianGroupDescriptor { free_rank: k - diag.len(), torsion: diag[skip..].to_vec() };
    Ok(Homology { degree: n, descriptor, generators, orders, basis, boundary: b, v_inv_tail, p, skip })
}

/// Rank and invariant factors of a boundary matrix.
fn rank_and_factors(m: &SparseMatrix) -> (usize, Vec<Int>) {
    if m.rows() == 0 || m.cols() == 0 || m.is_zero() {
        return (0, Vec::new());
    }
    let s = smith_with(&m.to_dense(), Transforms::NONE);
    (s.rank(), s.invariant_factors())
}

fn z_m_descriptor(m: u64, free: usize, factor_lists: &[&[Int]]) -> AbelianGroupDescriptor {
    let mm = Int::from(m);
    let mut orders = vec![mm.clone(); free];
    for list in factor_lists {
        orders.extend(list.iter().map(|d| d.gcd(&mm)));
    }
    AbelianGroupDescriptor::from_orders(0, &orders)
}

/// `H_n` as a descriptor, without generators.
///
/// Prime moduli use ranks over the field; composite moduli reduce the integer
/// invariant factors.
pub fn homology_descriptor(cx: &ChainComplex, n: usize, coeffs: Coeffs) -> Result<AbelianGroupDescriptor> {
    let c = cx.basis(n)?.len();
    let b = cx.boundary(n)?;
    let a = cx.boundary(n + 1)?;
    match coeffs {
        Coeffs::Mod(p) if is_prime(p) => {
            let dim = c - rank_mod_p(&b, p) - rank_mod_p(&a, p);
            Ok(AbelianGroupDescriptor::elementary(p, dim))
        }
        Coeffs::Z => {
            let (rb, _) = rank_and_factors(&b);
            let (ra, fa) = rank_and_factors(&a);
            Ok(AbelianGroupDescriptor { free_rank: c - rb - ra, torsion: fa })
        }
        Coeffs::Mod(m) => {
            let (rb, fb) = rank_and_factors(&b);
            let (ra, fa) = rank_and_factors(&a);
            Ok(z_m_descriptor(m, c - rb - ra, &[&fa, &fb]))
        }
    }
}

/// `H^n` as a descriptor, computed from the transposed boundaries.
pub fn cohomology(cx: &ChainComplex, n: usize, coeffs: Coeffs) -> Result<AbelianGroupDescriptor> {
    let c = cx.basis(n)?.len();
    // delta^{n-1} = d_n^T, delta^n = d_{n+1}^T
    let d_prev = cx.boundary(n)?.transpose();
    let d_next = cx.boundary(n + 1)?.transpose();
    match coeffs {
        Coeffs::Mod(p) if is_prime(p) => {
            let dim = c - rank_mod_p(&d_prev, p) - rank_mod_p(&d_next, p);
            Ok(AbelianGroupDescriptor::elementary(p, dim))
        }
        Coeffs::Z => {
            let (rp, fp) = rank_and_factors(&d_prev);
            let (rn, _) = rank_and_factors(&d_next);
            Ok(AbelianGroupDescriptor { free_rank: c - rp - rn, torsion: fp })
        }
        Coeffs::Mod(m) => {
            let (rp, fp) = rank_and_factors(&d_prev);
            let (rn, fn_) = rank_and_factors(&d_next);
            Ok(z_m_descriptor(m, c - rp - rn, &[&fp, &fn_]))
        }
    }
}

/// Homology with coefficients predicted from integral `H_n` and `H_{n-1}`:
/// `H_n (x) G + Tor(H_{n-1}, G)`.
pub fn uct_homology(h_n: &AbelianGroupDescriptor, h_nm1: &AbelianGroupDescriptor, coeffs: Coeffs) -> AbelianGroupDescriptor {
    let m = coeffs.modulus();
    h_n.tensor_zm(m).sum(&h_nm1.tor_zm(m))
}

/// Cohomology predicted from integral homology: `Hom(H_n, G) + Ext(H_{n-1}, G)`.
pub fn uct_cohomology(h_n: &AbelianGroupDescriptor, h_nm1: &AbelianGroupDescriptor, coeffs: Coeffs) -> AbelianGroupDescriptor {
    let m = coeffs.modulus();
    h_n.hom_zm(m).sum(&h_nm1.ext_zm(m))
}

/// Homology over `F_p` with cycle representatives.
#[derive(Clone, Debug)]
pub struct ModPHomology {
    pub p: u64,
    pub degree: usize,
    pub dim: usize,
    pub generators: Vec<Vec<u64>>,
    basis: TupleBasis,
    boundary: SparseMatrix,
    boundaries: Span,
}

impl ModPHomology {
    pub fn basis(&self) -> &TupleBasis {
        &self.basis
    }

    pub fn is_cycle(&self, z: &[u64]) -> bool {
        let p = self.p;
        let mut acc = vec![0u64; self.boundary.rows()];
        for (j, &zj) in z.iter().enumerate() {
            if zj == 0 {
                continue;
            }
            for &(i, v) in self.boundary.column(j) {
                let v = (v as i128).rem_euclid(p as i128) as u64;
                acc[i] = (acc[i] + v * zj) % p;
            }
        }
        acc.iter().all(|&x| x == 0)
    }

    pub fn is_boundary(&self, z: &[u64]) -> bool {
        self.boundaries.contains(z)
    }

    /// Whether the chain is a cycle representing a nonzero class.
    pub fn is_nonzero_class(&self, c: &Chain) -> Result<bool> {
        let z = reduce_vec(&c.to_vector(&self.basis)?, self.p);
        if !self.is_cycle(&z) {
            return Err(Error::NotACycle);
        }
        Ok(!self.is_boundary(&z))
    }
}

pub fn homology_mod_p(cx: &ChainComplex, n: usize, p: u64) -> Result<ModPHomology> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    let basis = cx.basis(n)?;
    let b = cx.boundary(n)?;
    let a = cx.boundary(n + 1)?;
    let boundaries = Span::column_space(&a, p);
    let mut extended = boundaries.clone();
    let mut generators = Vec::new();
    for z in kernel_mod_p(&b, p) {
        if extended.insert(z.clone()) {
            generators.push(z);
        }
    }
    Ok(ModPHomology { p, degree: n, dim: generators.len(), generators, basis, boundary: b, boundaries })
}

/// A homomorphism between homology groups in generator coordinates.
#[derive(Clone, Debug)]
pub struct HomologyClassMap {
    pub source: AbelianGroupDescriptor,
    pub target: AbelianGroupDescriptor,
    pub source_orders: Vec<Int>,
    pub target_orders: Vec<Int>,
    /// Column `j` is the class of the image of source generator `j`.
    pub matrix: IntMatrix,
}

impl HomologyClassMap {
    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn kernel(&self) -> Vec<Vec<Int>> {
        abgroup::kernel(&self.matrix, &self.source_orders, &self.target_orders)
    }

    pub fn image(&self) -> Vec<Vec<Int>> {
        abgroup::image(&self.matrix, &self.target_orders)
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().is_empty()
    }

    pub fn is_surjective(&self) -> bool {
        abgroup::quotient_descriptor(&self.target_orders, &self.image()).is_zero()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    pub fn cokernel(&self) -> AbelianGroupDescriptor {
        abgroup::quotient_descriptor(&self.target_orders, &self.image())
    }
}

/// The map on homology induced by a chain-level map on generator chains.
pub fn map_on_homology(src: &Homology, dst: &Homology, mut f: impl FnMut(&Chain) -> Result<Chain>) -> Result<HomologyClassMap> {
    let cols: Vec<Vec<Int>> = (0..src.rank())
        .map(|j| {
            let image = f(&src.generator_chain(j))?;
            dst.class_of_chain(&image)
        })
        .collect::<Result<_>>()?;
    Ok(HomologyClassMap {
        source: src.descriptor.clone(),
        target: dst.descriptor.clone(),
        source_orders: src.orders.clone(),
        target_orders: dst.orders.clone(),
        matrix: IntMatrix::from_columns(dst.rank(), &cols),
    })
}

/// `f_*` on `H_n` of the given kind, integer coefficients.
pub fn induced_on_homology(f: &QuandleHom, n: usize, kind: ComplexKind) -> Result<HomologyClassMap> {
    let src = homology(&ChainComplex::new(f.source(), kind)?, n)?;
    let dst = homology(&ChainComplex::new(f.target(), kind)?, n)?;
    map_on_homology(&src, &dst, |c| {
        let img = c.push_forward(f);
        Ok(if kind.is_quotient() { img.project(kind) } else { img })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quandle::FiniteQuandle;

    fn h(x: &FiniteQuandle, kind: ComplexKind, n: usize) -> AbelianGroupDescriptor {
        homology(&ChainComplex::new(x, kind).unwrap(), n).unwrap().descriptor
    }

    #[test]
    fn dihedral_quandle_homology() {
        let r3 = FiniteQuandle::dihedral(3);
        assert_eq!(h(&r3, ComplexKind::Q, 1), AbelianGroupDescriptor::free(1));
        assert_eq!(h(&r3, ComplexKind::Q, 2), AbelianGroupDescriptor::zero());
        let r4 = FiniteQuandle::dihedral(4);
        assert_eq!(h(&r4, ComplexKind::Q, 2), AbelianGroupDescriptor::from_orders(2, &[Int::from(2), Int::from(2)]));
    }

    #[test]
    fn generators_have_stated_orders() {
        let r4 = FiniteQuandle::dihedral(4);
        let cx = ChainComplex::new(&r4, ComplexKind::Q).unwrap();
        let hq = homology(&cx, 2).unwrap();
        assert_eq!(hq.rank(), 4);
        for (i, g) in hq.generators.iter().enumerate() {
            let mut e = vec![Int::ZERO; hq.rank()];
            e[i] = Int::ONE;
            assert_eq!(hq.class_of(g).unwrap(), e);
            if !hq.orders[i].is_zero() {
                let scaled: Vec<Int> = g.iter().map(|x| x.mul(&hq.orders[i])).collect();
                assert!(hq.is_boundary(&scaled).unwrap());
            }
        }
    }

    #[test]
    fn fast_descriptor_agrees() {
        let r4 = FiniteQuandle::dihedral(4);
        for kind in [ComplexKind::R, ComplexKind::D, ComplexKind::Q] {
            let cx = ChainComplex::new(&r4, kind).unwrap();
            for n in 1..=3 {
                assert_eq!(homology_descriptor(&cx, n, Coeffs::Z).unwrap(), homology(&cx, n).unwrap().descriptor);
            }
        }
    }

    #[test]
    fn cohomology_examples() {
        let r4 = FiniteQuandle::dihedral(4);
        let cx = ChainComplex::new(&r4, ComplexKind::Q).unwrap();
        assert_eq!(cohomology(&cx, 2, Coeffs::Mod(2)).unwrap(), AbelianGroupDescriptor::elementary(2, 4));
        assert_eq!(cohomology(&cx, 2, Coeffs::Mod(3)).unwrap(), AbelianGroupDescriptor::elementary(3, 2));
        assert_eq!(cohomology(&cx, 2, Coeffs::Mod(9)).unwrap(), AbelianGroupDescriptor::elementary(9, 2));
        let h2 = homology_descriptor(&cx, 2, Coeffs::Z).unwrap();
        let h1 = homology_descriptor(&cx, 1, Coeffs::Z).unwrap();
        for m in [2, 3, 4, 6] {
            assert_eq!(cohomology(&cx, 2, Coeffs::Mod(m)).unwrap(), uct_cohomology(&h2, &h1, Coeffs::Mod(m)));
            assert_eq!(homology_descriptor(&cx, 2, Coeffs::Mod(m)).unwrap(), uct_homology(&h2, &h1, Coeffs::Mod(m)));
        }
    }

    #[test]
    fn coefficient_parsing() {
        assert_eq!("Z".parse::<Coeffs>().unwrap(), Coeffs::Z);
        assert_eq!("Z_2".parse::<Coeffs>().unwrap(), Coeffs::Mod(2));
        assert_eq!("Z3".parse::<Coeffs>().unwrap(), Coeffs::Mod(3));
        assert!("Z1".parse::<Coeffs>().is_err());
    }

    #[test]
    fn induced_isomorphisms() {
        let r4 = FiniteQuandle::dihedral(4);
        let pi = QuandleHom::orbit_projection(&r4);
        assert!(induced_on_homology(&pi, 1, ComplexKind::R).unwrap().is_isomorphism());
        assert!(induced_on_homology(&pi, 2, ComplexKind::D).unwrap().is_isomorphism());
        let id = QuandleHom::identity(&r4);
        let m = induced_on_homology(&id, 2, ComplexKind::Q).unwrap();
        assert_eq!(m.matrix, IntMatrix::identity(4));
    }

    #[test]
    fn mod_p_homology_matches_dimension() {
        let r3 = FiniteQuandle::dihedral(3);
        let cx = ChainComplex::new(&r3, ComplexKind::R).unwrap();
        let hp = homology_mod_p(&cx, 3, 3).unwrap();
        let d = homology_descriptor(&cx, 3, Coeffs::Mod(3)).unwrap();
        assert_eq!(AbelianGroupDescriptor::elementary(3, hp.dim), d);
    }
}
