//! Shadow colorings of closed classical braids.
//!
//! The braid is closed on the right, so the region left of the first strand
//! is the unbounded one and keeps a single color `O`. Reading left to right,
//! crossing an arc colored `c` (its normal points right) acts by `c`, so the
//! region left of position `p` has color `O * c_1 * ... * c_{p-1}`.

use alloc::format;
use alloc::vec::Vec;

use super::coloring::{enumerate_colorings, Coloring};
use super::diagram::{Event, Letter, VirtualLinkDiagram};
use crate::chain::Chain;
use crate::error::{Error, Result};
use crate::int::Int;
use crate::quandle::FiniteQuandle;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShadowColoring {
    pub coloring: Coloring,
    /// Color of the unbounded region.
    pub outer: usize,
}

fn check_supported(d: &VirtualLinkDiagram) -> Result<()> {
    if !d.loops().is_empty() || d.word().letters().iter().any(|l| !l.is_real()) {
        return Err(Error::UnsupportedDiagram(format!(
            "region colors are only available for closed classical braids, not {}",
            d.word()
        )));
    }
    Ok(())
}

pub fn enumerate_shadow_colorings(d: &VirtualLinkDiagram, x: &FiniteQuandle) -> Result<Vec<ShadowColoring>> {
    check_supported(d)?;
    let mut out = Vec::new();
    for c in enumerate_colorings(d, x)? {
        for outer in 0..x.size() {
            out.push(ShadowColoring { coloring: c.clone(), outer });
        }
    }
    Ok(out)
}

/// `sum_tau eps(tau) (r, x, y)`, with `r` the color of the region left of the
/// crossing, from which both normals point away.
pub fn shadow_cycle(d: &VirtualLinkDiagram, x: &FiniteQuandle, sc: &ShadowColoring) -> Result<Chain> {
    check_supported(d)?;
    let mut cur = sc.coloring.top.clone();
    let mut z = Chain::zero(x.size(), 3);
    for e in d.events() {
        let Event::Letter(Letter::Sigma { i, sign }) = e else { unreachable!("checked above") };
        let r = cur[..i - 1].iter().fold(sc.outer, |acc, &c| x.op(acc, c));
        let (a, b) = (cur[i - 1], cur[i]);
        if sign > 0 {
            z.add_term(&[r, a, b], &Int::ONE);
            cur[i - 1] = b;
            cur[i] = x.op(a, b);
        } else {
            let nb = x.op_inv(b, a);
            z.add_term(&[r, nb, a], &Int::from(-1));
            cur[i - 1] = nb;
            cur[i] = a;
        }
    }
    Ok(z)
}

#[cfg(test)]
mod tests {
    use super::super::diagram::VirtualBraidWord;
    use super::*;
    use crate::chain::{ChainComplex, ComplexKind};

    #[test]
    fn trefoil_h0() {
        let x = FiniteQuandle::dihedral(3);
        let d = VirtualLinkDiagram::closure(VirtualBraidWord::trefoil());
        let sc = ShadowColoring { coloring: Coloring { top: alloc::vec![0, 2], loops: alloc::vec![] }, outer: 2 };
        let h0 = shadow_cycle(&d, &x, &sc).unwrap();
        let expected = Chain::from_terms(3, 3, [(alloc::vec![2, 0, 2], 1), (alloc::vec![2, 2, 1], 1), (alloc::vec![2, 1, 0], 1)]);
        assert_eq!(h0, expected);
    }

    #[test]
    fn shadow_cycles_are_cycles() {
        let x = FiniteQuandle::dihedral(3);
        let r = ChainComplex::new(&x, ComplexKind::R).unwrap();
        for w in ["s1 s1 s1", "s1 s2^-1 s1 s2^-1", "s1^-1 s1^-1 s1^-1"] {
            let d = VirtualLinkDiagram::closure(VirtualBraidWord::parse(w, None).unwrap());
            for sc in enumerate_shadow_colorings(&d, &x).unwrap() {
                assert!(r.boundary_of(&shadow_cycle(&d, &x, &sc).unwrap()).is_zero());
            }
        }
        let v = VirtualLinkDiagram::closure(VirtualBraidWord::parse("s1 v1", None).unwrap());
        assert!(matches!(enumerate_shadow_colorings(&v, &x), Err(Error::UnsupportedDiagram(_))));
    }
}
