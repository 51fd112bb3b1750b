//! Constructed families: links colored by Alexander quandles with `h(1) = 0`,
//! and the loop gadget that lifts colorings along a surjection.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::coloring::{propagate, Coloring};
use super::diagram::{prescribed_vlk_link, VirtualBraidWord, VirtualLinkDiagram, VirtualLoop};
use crate::alexander::AlexanderQuandle;
use crate::error::{Error, Result};
use crate::int::Int;
use crate::poly::LaurentPoly;
use crate::quandle::{InnerWord, QuandleHom};

/// The link `K_0 u K_1 u ... u K_k` built from `h`, with its symbolic colors.
#[derive(Clone, Debug)]
pub struct Fig5 {
    pub diagram: VirtualLinkDiagram,
    /// `h` shifted to start at `T^0`.
    pub h: LaurentPoly,
    /// `c_0, c_1, ..., c_k`.
    pub coefficients: Vec<Int>,
    /// `m_1 < ... < m_k`.
    pub exponents: Vec<i64>,
    /// `n_1, ..., n_k` with `vlk(K_i, K_0) = n_i`.
    pub linking: Vec<i64>,
    /// `b_0, ..., b_k`, the color of `K_i` (and the starting color of `K_0`).
    pub colors: Vec<LaurentPoly>,
}

pub fn fig5_family(h: &LaurentPoly) -> Result<Fig5> {
    if h.is_zero() || !h.eval_at_one().is_zero() {
        return Err(Error::BadPolynomial(format!("{h} does not vanish at T = 1")));
    }
    let h = h.laurent_normalized();
    let modulus = h.modulus();
    let mut coefficients = vec![h.coeff(0)];
    let mut exponents = Vec::new();
    for (e, c) in h.terms() {
        if e > 0 {
            coefficients.push(c.clone());
            exponents.push(e);
        }
    }
    let k = exponents.len();
    let mut linking = vec![0i64; k];
    linking[k - 1] = exponents[0];
    for i in 1..k {
        linking[k - 1 - i] = exponents[i] - exponents[i - 1];
    }
    // b_{k-j} = c_0 + ... + c_j
    let mut colors = vec![LaurentPoly::zero(modulus); k + 1];
    let mut acc = Int::ZERO;
    for j in 0..k {
        acc = acc.add(&coefficients[j]);
        colors[k - j] = LaurentPoly::new(modulus, 0, vec![acc.clone()]);
    }
    let mut n = vec![vec![0i64; k + 1]; k + 1];
    for i in 1..=k {
        n[i][0] = linking[i - 1];
    }
    let diagram = prescribed_vlk_link(&n)?;
    Ok(Fig5 { diagram, h, coefficients, exponents, linking, colors })
}

impl Fig5 {
    /// `b_0^{(k)}` from `b_0^{(i)} = T^{n_i} b_0^{(i-1)} + (1 - T^{n_i}) b_i`,
    /// starting at `b_0^{(0)} = b_0`.
    pub fn final_color(&self) -> LaurentPoly {
        let modulus = self.h.modulus();
        let one = LaurentPoly::one(modulus);
        let mut b = self.colors[0].clone();
        for (i, &n) in self.linking.iter().enumerate() {
            let tn = LaurentPoly::monomial(modulus, 1, n);
            b = tn.mul(&b).add(&one.sub(&tn).mul(&self.colors[i + 1]));
        }
        b
    }

    /// Whether the recursion closes up to `h` exactly, before any quotient.
    pub fn identity_holds(&self) -> bool {
        self.final_color().sub(&self.h).is_zero()
    }

    /// Top colors in `X`: strand `i` carries `b_i`.
    pub fn coloring(&self, x: &AlexanderQuandle) -> Coloring {
        Coloring { top: self.colors.iter().map(|b| x.element_of(b)).collect(), loops: Vec::new() }
    }
}

/// Adds loops at the bottom of strand `i` colored by the letters of `w_i`,
/// so that the colors `c'_i` reached at the bottom return to `c_i`. Every
/// letter must lie in the fiber of `f` through `c_i`.
pub fn attach_virtual_loops(
    word: &VirtualBraidWord,
    top: &[usize],
    f: &QuandleHom,
    words: &[InnerWord],
) -> Result<(VirtualLinkDiagram, Coloring)> {
    let x = f.source();
    if top.len() != word.strands() || words.len() != word.strands() {
        return Err(Error::InvalidArgument("need one top color and one word per strand".into()));
    }
    if let Some(&a) = top.iter().find(|&&a| a >= x.size()) {
        return Err(Error::InvalidArgument(format!("color {a} is not an element of {}", x.label())));
    }
    let base = VirtualLinkDiagram::closure(word.clone());
    let bottom = propagate(&base, x, &Coloring { top: top.to_vec(), loops: Vec::new() }).0;
    let mut loops = Vec::new();
    let mut colors = Vec::new();
    for (i, w) in words.iter().enumerate() {
        if let Some(&(b, _)) = w.letters.iter().find(|&&(b, _)| b >= x.size() || f.apply(b) != f.apply(top[i])) {
            return Err(Error::WordOutsideFiber { strand: i + 1, letter: b });
        }
        if x.apply_inner_word(bottom[i], w) != top[i] {
            return Err(Error::WordMismatch { strand: i + 1 });
        }
        for &(b, s) in &w.letters {
            loops.push(VirtualLoop { position: i + 1, pos: word.len(), sign: s, color: Some(b) });
            colors.push(b);
        }
    }
    let d = VirtualLinkDiagram::new(word.clone(), loops)?;
    Ok((d, Coloring { top: top.to_vec(), loops: colors }))
}

#[cfg(test)]
mod tests {
    use super::super::coloring::{coloring_weight, enumerate_colorings, is_coloring};
    use super::*;
    use crate::cocycle::Cocycle2;
    use crate::quandle::FiniteQuandle;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn square_of_t_minus_one() {
        let f5 = fig5_family(&p("T^2-2T+1")).unwrap();
        assert!(f5.identity_holds());
        assert_eq!(f5.linking, vec![1, 1]);
        assert_eq!(f5.colors, vec![p("0"), p("-1"), p("1")]);
        let vlk = f5.diagram.vlk();
        assert_eq!((vlk[1][0], vlk[2][0], vlk[0][1]), (1, 1, 0));

        let x = AlexanderQuandle::new(3, &p("T^2-2T+1")).unwrap();
        let c = f5.coloring(&x);
        assert!(is_coloring(&f5.diagram, x.quandle(), &c));
        assert!(enumerate_colorings(&f5.diagram, x.quandle()).unwrap().contains(&c));

        let ev = x.evaluation_at_one().unwrap();
        let b1 = ev.apply(c.top[1]);
        let psi = Cocycle2::characteristic(ev.target(), 0, &[(0, b1)]).unwrap();
        let phi = psi.pullback(&ev).unwrap();
        assert_eq!(coloring_weight(&f5.diagram, x.quandle(), &phi, &c), vec![f5.linking[0]]);
    }

    #[test]
    fn rejects_h_not_vanishing_at_one() {
        assert!(matches!(fig5_family(&p("T^2+1")), Err(Error::BadPolynomial(_))));
        assert!(fig5_family(&p("3T^5-T^2-2")).unwrap().identity_holds());
        assert!(fig5_family(&p("T^-2-T^3")).unwrap().identity_holds());
    }

    #[test]
    fn loops_restore_trefoil_colors() {
        let big = AlexanderQuandle::new(4, &p("T^2-T-1")).unwrap();
        let small = AlexanderQuandle::new(2, &p("T^2+T+1")).unwrap();
        let f = big.quotient_hom(&small).unwrap();
        let w = VirtualBraidWord::trefoil();
        let top = vec![big.element_of(&p("0")), big.element_of(&p("1"))];
        let words = [
            InnerWord::new(vec![(big.element_of(&p("2T+2")), 1)]),
            InnerWord::new(vec![(big.element_of(&p("-4T-1")), 1)]),
        ];
        let (d, c) = attach_virtual_loops(&w, &top, &f, &words).unwrap();
        assert!(is_coloring(&d, big.quandle(), &c));
        assert_eq!(d.component_count(), 3);

        let psi = Cocycle2::characteristic(small.quandle(), 2, &[(0, 1), (0, 3), (1, 0), (1, 3), (3, 0), (3, 1)]).unwrap();
        let phi = psi.pullback(&f).unwrap();
        let base = Coloring { top: top.iter().map(|&a| f.apply(a)).collect(), loops: vec![] };
        assert_eq!(
            coloring_weight(&d, big.quandle(), &phi, &c),
            coloring_weight(&VirtualLinkDiagram::closure(w.clone()), small.quandle(), &psi, &base)
        );

        let bad = [InnerWord::new(vec![(big.element_of(&p("1")), 1)]), InnerWord::default()];
        assert!(matches!(attach_virtual_loops(&w, &top, &f, &bad), Err(Error::WordOutsideFiber { strand: 1, .. })));
        let mismatch = [InnerWord::default(), InnerWord::default()];
        assert!(matches!(attach_virtual_loops(&w, &top, &f, &mismatch), Err(Error::WordMismatch { strand: 1 })));
    }

    #[test]
    fn empty_words_keep_closed_braid() {
        let x = FiniteQuandle::dihedral(3);
        let f = QuandleHom::identity(&x);
        let w = VirtualBraidWord::trefoil();
        let (d, c) = attach_virtual_loops(&w, &[0, 0], &f, &[InnerWord::default(), InnerWord::default()]).unwrap();
        assert_eq!(d, VirtualLinkDiagram::closure(w));
        assert!(c.loops.is_empty());
    }
}
