//! Quandle colorings, Boltzmann weights and the state-sum.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::diagram::{Event, Letter, VirtualLinkDiagram};
use crate::chain::Chain;
use crate::cocycle::{Cocycle2, CyclicGroup};
use crate::error::{Error, Result};
use crate::int::Int;
use crate::quandle::FiniteQuandle;

/// Default bound on the number of candidate assignments tried.
pub const SEARCH_CAP: u128 = 10_000_000;

/// Colors of the top strands and of the loops; all other arcs follow.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coloring {
    pub top: Vec<usize>,
    pub loops: Vec<usize>,
}

/// A real crossing of a colored diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColoredCrossing {
    /// Under-arc color on the side the over-arc's normal points away from.
    pub x: usize,
    /// Over-arc color.
    pub y: usize,
    pub sign: i8,
    /// 1-based position of the crossing (left strand for braid letters).
    pub position: usize,
    /// Index of the crossing in the walk down the diagram.
    pub level: usize,
}

/// Runs the colors through the diagram. Returns the bottom colors and the
/// crossings met on the way.
pub fn propagate(d: &VirtualLinkDiagram, x: &FiniteQuandle, c: &Coloring) -> (Vec<usize>, Vec<ColoredCrossing>) {
    let mut cur = c.top.clone();
    let mut crossings = Vec::new();
    for (level, e) in d.events().into_iter().enumerate() {
        match e {
            Event::Letter(Letter::Sigma { i, sign }) => {
                let (a, b) = (cur[i - 1], cur[i]);
                if sign > 0 {
                    // (a, b) -> (b, a*b)
                    crossings.push(ColoredCrossing { x: a, y: b, sign, position: i, level });
                    cur[i - 1] = b;
                    cur[i] = x.op(a, b);
                } else {
                    // (a, b) -> (b /* a, a)
                    let nb = x.op_inv(b, a);
                    crossings.push(ColoredCrossing { x: nb, y: a, sign, position: i, level });
                    cur[i - 1] = nb;
                    cur[i] = a;
                }
            }
            Event::Letter(Letter::Virtual { i }) => cur.swap(i - 1, i),
            Event::Loop(k) => {
                let lp = &d.loops()[k];
                let p = lp.position - 1;
                let y = c.loops[k];
                let a = cur[p];
                let out = x.act(a, y, lp.sign);
                let xx = if lp.sign > 0 { a } else { out };
                crossings.push(ColoredCrossing { x: xx, y, sign: lp.sign, position: lp.position, level });
                cur[p] = out;
            }
        }
    }
    (cur, crossings)
}

/// Whether the coloring closes up.
pub fn is_coloring(d: &VirtualLinkDiagram, x: &FiniteQuandle, c: &Coloring) -> bool {
    c.top.len() == d.strands()
        && c.loops.len() == d.loops().len()
        && c.top.iter().chain(&c.loops).all(|&a| a < x.size())
        && d.loops().iter().zip(&c.loops).all(|(l, &col)| l.color.is_none_or(|f| f == col))
        && propagate(d, x, c).0 == c.top
}

/// All colorings. Loop colors range over `loop_candidates` when given, else
/// over the fixed loop color or all of `X`.
pub fn enumerate_colorings_with(
    d: &VirtualLinkDiagram,
    x: &FiniteQuandle,
    loop_candidates: Option<&[Vec<usize>]>,
    cap: u128,
) -> Result<Vec<Coloring>> {
    let m = x.size();
    let all: Vec<usize> = (0..m).collect();
    let slots: Vec<Vec<usize>> = (0..d.loops().len())
        .map(|k| match (loop_candidates, d.loops()[k].color) {
            (Some(c), _) => c[k].clone(),
            (None, Some(f)) => vec![f],
            (None, None) => all.clone(),
        })
        .collect();
    let mut total: u128 = (m as u128).checked_pow(d.strands() as u32).unwrap_or(u128::MAX);
    for s in &slots {
        total = total.saturating_mul(s.len() as u128);
    }
    if total > cap {
        return Err(Error::SearchTooLarge { candidates: total, cap });
    }
    let mut out = Vec::new();
    let n = d.strands();
    let mut top = vec![0usize; n];
    let mut loop_idx = vec![0usize; slots.len()];
    if slots.iter().any(Vec::is_empty) {
        return Ok(out);
    }
    'outer: loop {
        let c = Coloring { top: top.clone(), loops: loop_idx.iter().zip(&slots).map(|(&i, s)| s[i]).collect() };
        if propagate(d, x, &c).0 == c.top {
            out.push(c);
        }
        for k in 0..slots.len() {
            loop_idx[k] += 1;
            if loop_idx[k] < slots[k].len() {
                continue 'outer;
            }
            loop_idx[k] = 0;
        }
        for k in (0..n).rev() {
            top[k] += 1;
            if top[k] < m {
                continue 'outer;
            }
            top[k] = 0;
        }
        break;
    }
    Ok(out)
}

pub fn enumerate_colorings(d: &VirtualLinkDiagram, x: &FiniteQuandle) -> Result<Vec<Coloring>> {
    enumerate_colorings_with(d, x, None, SEARCH_CAP)
}

/// A finitely supported map `G -> N`, written multiplicatively in `t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupRingValue {
    group: CyclicGroup,
    terms: BTreeMap<Vec<i64>, u64>,
}

impl GroupRingValue {
    pub fn zero(group: CyclicGroup) -> Self {
        GroupRingValue { group, terms: BTreeMap::new() }
    }

    pub fn group(&self) -> &CyclicGroup {
        &self.group
    }

    pub fn add_term(&mut self, mut g: Vec<i64>, k: u64) {
        if k == 0 {
            return;
        }
        self.group.reduce(&mut g);
        *self.terms.entry(g).or_insert(0) += k;
    }

    pub fn merge(&mut self, other: &GroupRingValue) {
        for (g, &k) in &other.terms {
            self.add_term(g.clone(), k);
        }
    }

    pub fn coefficient(&self, g: &[i64]) -> u64 {
        self.terms.get(g).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, u64)> {
        self.terms.iter().map(|(g, &k)| (g, k))
    }

    /// Total mass, the number of colorings for a state-sum.
    pub fn mass(&self) -> u64 {
        self.terms.values().sum()
    }

    /// Mass away from the identity element.
    pub fn nontrivial_mass(&self) -> u64 {
        self.terms.iter().filter(|(g, _)| g.iter().any(|&v| v != 0)).map(|(_, &k)| k).sum()
    }

    /// Name of a group element: `0` for the identity, `t`, `t^3`, or
    /// `t1^a t2^b` with several factors.
    pub fn element_name(&self, g: &[i64]) -> String {
        if g.iter().all(|&v| v == 0) {
            return String::from("0");
        }
        let single = g.len() == 1;
        let mut parts = Vec::new();
        for (i, &v) in g.iter().enumerate() {
            if v == 0 {
                continue;
            }
            let base = if single { String::from("t") } else { format!("t{}", i + 1) };
            parts.push(if v == 1 { base } else { format!("{base}^{v}") });
        }
        parts.join(" ")
    }
}

impl fmt::Display for GroupRingValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (g, k)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let name = self.element_name(g);
            match (*k, name.as_str()) {
                (k, "0") => write!(f, "{k}")?,
                (1, n) => f.write_str(n)?,
                (k, n) => write!(f, "{k}{n}")?,
            }
        }
        Ok(())
    }
}

/// The weight `sum_tau eps(tau) phi(x, y)` of one coloring, in `G`.
pub fn coloring_weight(d: &VirtualLinkDiagram, x: &FiniteQuandle, phi: &Cocycle2, c: &Coloring) -> Vec<i64> {
    let g = phi.group();
    let mut acc = g.zero();
    for t in propagate(d, x, c).1 {
        g.add_scaled(&mut acc, phi.value(t.x, t.y), t.sign as i64);
    }
    acc
}

/// `sum_C prod_tau B(tau, C)` in `N[G]`.
pub fn state_sum_over(d: &VirtualLinkDiagram, x: &FiniteQuandle, phi: &Cocycle2, colorings: &[Coloring]) -> GroupRingValue {
    let mut v = GroupRingValue::zero(phi.group().clone());
    for c in colorings {
        v.add_term(coloring_weight(d, x, phi, c), 1);
    }
    v
}

pub fn state_sum(d: &VirtualLinkDiagram, x: &FiniteQuandle, phi: &Cocycle2) -> Result<GroupRingValue> {
    if phi.size() != x.size() {
        return Err(Error::InvalidArgument("cocycle and quandle sizes differ".into()));
    }
    Ok(state_sum_over(d, x, phi, &enumerate_colorings(d, x)?))
}

/// The 2-chain `sum_tau eps(tau) (x, y)` of a colored diagram.
pub fn cycle_from_coloring(d: &VirtualLinkDiagram, x: &FiniteQuandle, c: &Coloring) -> Chain {
    let mut z = Chain::zero(x.size(), 2);
    for t in propagate(d, x, c).1 {
        z.add_term(&[t.x, t.y], &Int::from(t.sign as i64));
    }
    z
}

/// The state-sum over a trivial quandle from linking numbers alone: colors
/// are constant on components, and component `j` over component `i`
/// contributes `vlk(j, i) phi(c_i, c_j)`.
pub fn trivial_quandle_statesum_formula(d: &VirtualLinkDiagram, x: &FiniteQuandle, phi: &Cocycle2) -> Result<GroupRingValue> {
    let k = x.size();
    if (0..k).any(|a| (0..k).any(|b| x.op(a, b) != a)) {
        return Err(Error::InvalidArgument("the closed form needs a trivial quandle".into()));
    }
    let vlk = d.vlk();
    let comps = vlk.len();
    let total = (k as u128).checked_pow(comps as u32).unwrap_or(u128::MAX);
    if total > SEARCH_CAP {
        return Err(Error::SearchTooLarge { candidates: total, cap: SEARCH_CAP });
    }
    let g = phi.group();
    let mut out = GroupRingValue::zero(g.clone());
    let mut c = vec![0usize; comps];
    loop {
        let mut acc = g.zero();
        for i in 0..comps {
            for j in 0..comps {
                if i != j && vlk[j][i] != 0 {
                    g.add_scaled(&mut acc, phi.value(c[i], c[j]), vlk[j][i]);
                }
            }
        }
        out.add_term(acc, 1);
        let mut k_ = comps;
        loop {
            if k_ == 0 {
                return Ok(out);
            }
            k_ -= 1;
            c[k_] += 1;
            if c[k_] < k {
                break;
            }
            c[k_] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::diagram::{virtual_hopf, VirtualBraidWord};
    use super::*;
    use crate::alexander::AlexanderQuandle;
    use crate::chain::ChainComplex;
    use crate::chain::ComplexKind;

    fn s4() -> FiniteQuandle {
        AlexanderQuandle::new(2, &"T^2+T+1".parse().unwrap()).unwrap().into_quandle()
    }

    fn s4_phi(x: &FiniteQuandle) -> Cocycle2 {
        Cocycle2::characteristic(x, 2, &[(0, 1), (0, 3), (1, 0), (1, 3), (3, 0), (3, 1)]).unwrap()
    }

    #[test]
    fn trefoil_colorings() {
        let t = VirtualLinkDiagram::closure(VirtualBraidWord::trefoil());
        assert_eq!(enumerate_colorings(&t, &FiniteQuandle::dihedral(3)).unwrap().len(), 9);
        let x = s4();
        let cs = enumerate_colorings(&t, &x).unwrap();
        let phi = s4_phi(&x);
        let c = Coloring { top: vec![0, 1], loops: vec![] };
        assert!(cs.contains(&c));
        assert_eq!(coloring_weight(&t, &x, &phi, &c), vec![1]);
        let ss = state_sum(&t, &x, &phi).unwrap();
        assert_eq!(ss.mass(), cs.len() as u64);
        assert!(ss.nontrivial_mass() > 0);
    }

    #[test]
    fn colored_diagrams_are_cycles() {
        let x = FiniteQuandle::dihedral(3);
        let d = VirtualLinkDiagram::closure(VirtualBraidWord::parse("s1 s2^-1 v1 s1 s2 v2 s1^-1", None).unwrap());
        let r = ChainComplex::new(&x, ComplexKind::R).unwrap();
        for c in enumerate_colorings(&d, &x).unwrap() {
            assert!(r.boundary_of(&cycle_from_coloring(&d, &x, &c)).is_zero());
        }
    }

    #[test]
    fn trivial_formula_on_hopf() {
        let t3 = FiniteQuandle::trivial(3);
        let phi = Cocycle2::characteristic(&t3, 2, &[(0, 1), (2, 1), (1, 0)]).unwrap();
        for s in [1, -1] {
            let h = virtual_hopf(s);
            assert_eq!(state_sum(&h, &t3, &phi).unwrap(), trivial_quandle_statesum_formula(&h, &t3, &phi).unwrap());
        }
    }

    #[test]
    fn rendering() {
        let mut v = GroupRingValue::zero(CyclicGroup::cyclic(4));
        v.add_term(vec![0], 3);
        v.add_term(vec![1], 1);
        v.add_term(vec![6], 2);
        assert_eq!(alloc::string::ToString::to_string(&v), "3 + t + 2t^2");
    }
}
