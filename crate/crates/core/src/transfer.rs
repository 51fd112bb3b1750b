//! Transfer chains in homology: Betti lower bounds and the cokernel of the
//! projection onto the orbit quandle.

use alloc::vec;
use alloc::vec::Vec;

use crate::abgroup::AbelianGroupDescriptor;
use crate::chain::{decode, transfer_chain, Chain, ChainComplex, ComplexKind, TransferVariant};
use crate::error::{Error, Result};
use crate::int::Int;
use crate::matrix::IntMatrix;
use crate::quandle::{FiniteQuandle, OrbitDecomposition, QuandleHom};
use crate::snf::{smith_with, Transforms};

/// Lower bound for `beta_n^W` from the transfer chains: `a_n`, `m^n` or `b_n`
/// for `D`, `R`, `Q`, with `m` the number of orbits.
pub fn betti_lower_bound(m: usize, n: usize, kind: ComplexKind) -> Result<u128> {
    ChainComplex::new(&FiniteQuandle::trivial(m), kind)?.rank(n)
}

/// `pi_#` of the given transfer chain is this multiple of `omega`.
pub fn transfer_factor(orbits: &OrbitDecomposition, omega: &[usize], variant: TransferVariant) -> Int {
    let size = |w: usize| Int::from(orbits.orbits[w].len() as u64);
    let n = omega.len();
    let upto = match variant {
        TransferVariant::R | TransferVariant::D { .. } => n,
        TransferVariant::RPointed { .. } | TransferVariant::DPointed { .. } => n - 1,
    };
    let mut f = (0..upto).fold(Int::ONE, |acc, j| acc.mul(&size(omega[j])));
    if let TransferVariant::D { i0 } | TransferVariant::DPointed { i0, .. } = variant {
        if i0 < upto {
            f = f.div_exact(&size(omega[i0])).expect("factor divides");
        }
    }
    f
}

/// All transfer cycles used for the bound of the given kind, as chains on
/// the complex of that kind.
pub fn transfer_cycles(x: &FiniteQuandle, n: usize, kind: ComplexKind) -> Result<Vec<Chain>> {
    let orbits = x.orbits();
    let m = orbits.count();
    let total = (m as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if total > crate::chain::DEFAULT_CAP {
        return Err(Error::DegreeTooLarge { generators: total, cap: crate::chain::DEFAULT_CAP });
    }
    let mut out = Vec::new();
    for code in 0..total as u64 {
        let omega = decode(code, m, n);
        match kind {
            ComplexKind::R => out.push(transfer_chain(x, &orbits, &omega, TransferVariant::R)?),
            ComplexKind::Q => {
                if ComplexKind::Q.contains(&omega) {
                    out.push(transfer_chain(x, &orbits, &omega, TransferVariant::R)?.project(ComplexKind::Q));
                }
            }
            ComplexKind::D => {
                for i0 in 0..n.saturating_sub(1) {
                    if omega[i0] == omega[i0 + 1] {
                        out.push(transfer_chain(x, &orbits, &omega, TransferVariant::D { i0 })?);
                    }
                }
            }
            _ => return Err(Error::InvalidArgument("transfer chains are defined for R, D and Q".into())),
        }
    }
    Ok(out)
}

/// Rank of the subgroup of `H_n^W` generated by the transfer cycles:
/// `rank [B | Z] - rank B` with `B` the boundaries.
pub fn transfer_rank(x: &FiniteQuandle, n: usize, kind: ComplexKind) -> Result<usize> {
    let cx = ChainComplex::new(x, kind)?;
    let basis = cx.basis(n)?;
    let a = cx.boundary(n + 1)?.to_dense();
    let zs: Vec<Vec<Int>> = transfer_cycles(x, n, kind)?.iter().map(|c| c.to_vector(&basis)).collect::<Result<_>>()?;
    let rank = |m: &IntMatrix| if m.cols() == 0 || m.rows() == 0 { 0 } else { smith_with(m, Transforms::NONE).rank() };
    let z = IntMatrix::from_columns(basis.len(), &zs);
    Ok(rank(&a.hstack(&z)) - rank(&a))
}

/// Order of one basis tuple of the orbit complex in the cokernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorOrder {
    pub omega: Vec<usize>,
    /// `0` for infinite order.
    pub order: Int,
    /// The bound the order must divide.
    pub bound: Int,
}

impl GeneratorOrder {
    pub fn divides_bound(&self) -> bool {
        !self.order.is_zero() && self.order.divides(&self.bound)
    }
}

#[derive(Clone, Debug)]
pub struct CokernelReport {
    pub kind: ComplexKind,
    pub degree: usize,
    pub cokernel: AbelianGroupDescriptor,
    pub generators: Vec<GeneratorOrder>,
}

impl CokernelReport {
    pub fn bounds_hold(&self) -> bool {
        self.generators.iter().all(GeneratorOrder::divides_bound)
    }
}

/// Bound on the order of `omega` in the cokernel: `prod_{j<n} |omega_j|`,
/// divided by `|omega_i|` for the smallest `i < n-1` with `omega_i = omega_{i+1}`
/// when there is one. Every such `i` gives a bound; the gcd is reported.
pub fn cokernel_bound(orbits: &OrbitDecomposition, omega: &[usize]) -> Int {
    let n = omega.len();
    let size = |w: usize| Int::from(orbits.orbits[w].len() as u64);
    let prod = (0..n - 1).fold(Int::ONE, |acc, j| acc.mul(&size(omega[j])));
    let mut bound: Option<Int> = None;
    for i in 0..n - 1 {
        if omega[i] == omega[i + 1] {
            let b = prod.div_exact(&size(omega[i])).expect("factor divides");
            bound = Some(match bound {
                None => b,
                Some(g) => g.gcd(&b),
            });
        }
    }
    bound.unwrap_or(prod)
}

/// `Coker[pi_* : H_n^W(X) -> H_n^W(T_m)]`, with the order of each basis tuple.
///
/// The target is free on its basis tuples, so the image is spanned by the
/// projections of a basis of cycles.
pub fn cokernel_of_projection(x: &FiniteQuandle, n: usize, kind: ComplexKind) -> Result<CokernelReport> {
    let pi = QuandleHom::orbit_projection(x);
    let orbits = x.orbits();
    let src = ChainComplex::new(x, kind)?;
    let dst = ChainComplex::new(pi.target(), kind)?;
    let sbasis = src.basis(n)?;
    let tbasis = dst.basis(n)?;
    let b = src.boundary(n)?;
    let cycles: Vec<Vec<Int>> = if b.rows() == 0 || b.is_zero() {
        (0..sbasis.len())
            .map(|i| {
                let mut e = vec![Int::ZERO; sbasis.len()];
                e[i] = Int::ONE;
                e
            })
            .collect()
    } else {
        smith_with(&b.to_dense(), Transforms::RIGHT).kernel_basis()
    };
    let images: Vec<Vec<Int>> = cycles
        .iter()
        .map(|z| {
            let c = Chain::from_vector(&sbasis, z).push_forward(&pi);
            let c = if kind.is_quotient() { c.project(kind) } else { c };
            c.to_vector(&tbasis)
        })
        .collect::<Result<_>>()?;
    let k = tbasis.len();
    if images.is_empty() {
        let generators = tbasis
            .tuples()
            .map(|omega| GeneratorOrder { bound: cokernel_bound(&orbits, &omega), omega, order: Int::ZERO })
            .collect();
        return Ok(CokernelReport { kind, degree: n, cokernel: AbelianGroupDescriptor::free(k), generators });
    }
    let s = smith_with(&IntMatrix::from_columns(k, &images), Transforms::LEFT);
    let u = s.u.as_ref().expect("left transform");
    let r = s.rank();
    let diag = s.diagonal();
    let cokernel = AbelianGroupDescriptor::from_orders(k - r, &s.invariant_factors());
    let generators = tbasis
        .tuples()
        .enumerate()
        .map(|(col, omega)| {
            // k e_col lies in the image iff d_i | k U_{i,col} (i < r) and U_{i,col} = 0 (i >= r)
            let infinite = (r..k).any(|i| !u.get(i, col).is_zero());
            let order = if infinite {
                Int::ZERO
            } else {
                (0..r).fold(Int::ONE, |acc, i| {
                    let d = &diag[i];
                    let need = d.div_exact(&d.gcd(u.get(i, col))).expect("gcd divides");
                    lcm(&acc, &need)
                })
            };
            GeneratorOrder { bound: cokernel_bound(&orbits, &omega), omega, order }
        })
        .collect();
    Ok(CokernelReport { kind, degree: n, cokernel, generators })
}

fn lcm(a: &Int, b: &Int) -> Int {
    if a.is_zero() || b.is_zero() {
        return Int::ZERO;
    }
    a.mul(b).div_exact(&a.gcd(b)).expect("gcd divides").abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn r4_cokernels() {
        let r4 = FiniteQuandle::dihedral(4);
        let z2 = AbelianGroupDescriptor::elementary(2, 2);
        let d = cokernel_of_projection(&r4, 2, ComplexKind::D).unwrap();
        assert!(d.cokernel.is_zero());
        let r = cokernel_of_projection(&r4, 2, ComplexKind::R).unwrap();
        assert_eq!(r.cokernel, z2);
        let q = cokernel_of_projection(&r4, 2, ComplexKind::Q).unwrap();
        assert_eq!(q.cokernel, z2);
        for rep in [&d, &r, &q] {
            assert!(rep.bounds_hold(), "{rep:?}");
        }
    }

    #[test]
    fn trivial_quandle_cokernel_vanishes() {
        let t3 = FiniteQuandle::trivial(3);
        for kind in [ComplexKind::R, ComplexKind::D, ComplexKind::Q] {
            assert!(cokernel_of_projection(&t3, 3, kind).unwrap().cokernel.is_zero());
        }
    }

    #[test]
    fn transfer_ranks_meet_bounds() {
        let t2 = FiniteQuandle::trivial(2);
        for kind in [ComplexKind::R, ComplexKind::D, ComplexKind::Q] {
            for n in 1..=4 {
                assert_eq!(transfer_rank(&t2, n, kind).unwrap() as u128, betti_lower_bound(2, n, kind).unwrap());
            }
        }
        let r4 = FiniteQuandle::dihedral(4);
        assert_eq!(transfer_rank(&r4, 2, ComplexKind::Q).unwrap(), 2);
        assert!(transfer_rank(&FiniteQuandle::dihedral(3), 2, ComplexKind::R).unwrap() >= 1);
    }

    #[test]
    fn transfer_factors() {
        let r4 = FiniteQuandle::dihedral(4);
        let o = r4.orbits();
        let pi = QuandleHom::orbit_projection(&r4);
        for variant in [
            TransferVariant::R,
            TransferVariant::D { i0: 0 },
            TransferVariant::RPointed { last: 1 },
            TransferVariant::DPointed { i0: 1, last: 1 },
        ] {
            let omega = [1, 1, 1];
            let c = transfer_chain(&r4, &o, &omega, variant).unwrap().push_forward(&pi);
            assert_eq!(c.coefficient(&omega), transfer_factor(&o, &omega, variant));
            assert_eq!(c.len(), 1);
        }
    }
}
