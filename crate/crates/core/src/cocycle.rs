//! Quandle 2-cocycles with values in a finite product of cyclic groups.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::chain::{ChainComplex, ComplexKind};
use crate::error::{Error, Result};
use crate::int::Int;
use crate::matrix::SparseMatrix;
use crate::quandle::{FiniteQuandle, QuandleHom};
use crate::snf::{smith_with, SmithDecomposition, Transforms};

/// A group `Z_{d_1} x ... x Z_{d_k}`; an order of `0` stands for `Z`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicGroup {
    pub orders: Vec<u64>,
}

impl CyclicGroup {
    pub fn new(orders: Vec<u64>) -> Result<Self> {
        if orders.iter().any(|&d| d == 1) {
            return Err(Error::InvalidArgument("cyclic factor of order 1".into()));
        }
        Ok(CyclicGroup { orders })
    }

    pub fn cyclic(d: u64) -> Self {
        CyclicGroup { orders: vec![d] }
    }

    pub fn factors(&self) -> usize {
        self.orders.len()
    }

    pub fn zero(&self) -> Vec<i64> {
        vec![0; self.orders.len()]
    }

    pub fn reduce(&self, v: &mut [i64]) {
        for (x, &d) in v.iter_mut().zip(&self.orders) {
            if d != 0 {
                *x = x.rem_euclid(d as i64);
            }
        }
    }

    pub fn add_scaled(&self, acc: &mut [i64], v: &[i64], k: i64) {
        for ((a, &b), &d) in acc.iter_mut().zip(v).zip(&self.orders) {
            *a += k * b;
            if d != 0 {
                *a = a.rem_euclid(d as i64);
            }
        }
    }
}

/// A function `X x X -> G` with `phi(x, x) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle2 {
    size: usize,
    group: CyclicGroup,
    values: Vec<Vec<i64>>,
}

impl Cocycle2 {
    pub fn zero(x: &FiniteQuandle, group: CyclicGroup) -> Self {
        let m = x.size();
        Cocycle2 { size: m, values: vec![group.zero(); m * m], group }
    }

    /// From a table `values[x][y]`, reduced into `G`.
    pub fn from_table(x: &FiniteQuandle, group: CyclicGroup, table: Vec<Vec<Vec<i64>>>) -> Result<Self> {
        let m = x.size();
        if table.len() != m || table.iter().any(|r| r.len() != m) {
            return Err(Error::InvalidArgument(format!("cocycle table must be {m} x {m}")));
        }
        let mut values = Vec::with_capacity(m * m);
        for row in table {
            for mut v in row {
                if v.len() != group.factors() {
                    return Err(Error::InvalidArgument("value has the wrong number of coordinates".into()));
                }
                group.reduce(&mut v);
                values.push(v);
            }
        }
        let c = Cocycle2 { size: m, group, values };
        if (0..m).any(|a| c.value(a, a).iter().any(|&v| v != 0)) {
            return Err(Error::InvalidArgument("phi(x, x) must vanish".into()));
        }
        Ok(c)
    }

    /// `sum k * chi_{(a, b)}` over a cyclic group `Z_d`.
    pub fn characteristic(x: &FiniteQuandle, d: u64, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut c = Cocycle2::zero(x, CyclicGroup::cyclic(d));
        for &(a, b) in pairs {
            if a >= c.size || b >= c.size {
                return Err(Error::InvalidArgument(format!("pair ({a}, {b}) out of range")));
            }
            if a == b {
                return Err(Error::InvalidArgument("chi_(a, a) is not a quandle cochain".into()));
            }
            let g = c.group.clone();
            g.add_scaled(&mut c.values[a * c.size + b], &[1], 1);
        }
        Ok(c)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn group(&self) -> &CyclicGroup {
        &self.group
    }

    pub fn value(&self, a: usize, b: usize) -> &[i64] {
        &self.values[a * self.size + b]
    }

    pub fn table(&self) -> Vec<Vec<Vec<i64>>> {
        (0..self.size).map(|a| (0..self.size).map(|b| self.value(a, b).to_vec()).collect()).collect()
    }

    pub fn add(&self, other: &Cocycle2) -> Cocycle2 {
        assert_eq!(self.group, other.group, "group mismatch");
        let mut out = self.clone();
        for (a, b) in out.values.iter_mut().zip(&other.values) {
            self.group.add_scaled(a, b, 1);
        }
        out
    }

    /// `phi(x, z) - phi(x*y, z) - phi(x, y) + phi(x*z, y*z)`, the value of
    /// `phi` on the boundary of `(x, y, z)`.
    pub fn coboundary_at(&self, x: &FiniteQuandle, a: usize, b: usize, c: usize) -> Vec<i64> {
        let mut acc = self.group.zero();
        self.group.add_scaled(&mut acc, self.value(a, c), 1);
        self.group.add_scaled(&mut acc, self.value(x.op(a, b), c), -1);
        self.group.add_scaled(&mut acc, self.value(a, b), -1);
        self.group.add_scaled(&mut acc, self.value(x.op(a, c), x.op(b, c)), 1);
        acc
    }

    pub fn is_cocycle(&self, x: &FiniteQuandle) -> bool {
        let m = self.size;
        x.size() == m
            && (0..m).all(|a| self.value(a, a).iter().all(|&v| v == 0))
            && (0..m).all(|a| (0..m).all(|b| (0..m).all(|c| self.coboundary_at(x, a, b, c).iter().all(|&v| v == 0))))
    }

    /// `(delta psi)(x, y) = psi(x) - psi(x*y)` for a 1-cochain `psi`.
    pub fn coboundary_of(x: &FiniteQuandle, group: CyclicGroup, psi: &[Vec<i64>]) -> Cocycle2 {
        let m = x.size();
        let mut c = Cocycle2::zero(x, group);
        for a in 0..m {
            for b in 0..m {
                let mut v = psi[a].clone();
                c.group.add_scaled(&mut v, &psi[x.op(a, b)], -1);
                c.values[a * m + b] = v;
            }
        }
        c
    }

    /// `(f^# phi)(x, y) = phi(f(x), f(y))` for `phi` on the target of `f`.
    pub fn pullback(&self, f: &QuandleHom) -> Result<Cocycle2> {
        if f.target().size() != self.size {
            return Err(Error::InvalidArgument("cocycle lives on a different quandle".into()));
        }
        let m = f.source().size();
        let values = (0..m * m).map(|k| self.value(f.apply(k / m), f.apply(k % m)).to_vec()).collect();
        Ok(Cocycle2 { size: m, group: self.group.clone(), values })
    }

    /// Whether `phi = delta psi` for some 1-cochain `psi`.
    pub fn is_coboundary(&self, x: &FiniteQuandle) -> Result<bool> {
        let space = CocycleSpace::new(x, self.group.clone())?;
        Ok(space.is_coboundary(self))
    }
}

/// `Z^2_Q(X; G)` and `B^2_Q(X; G)` in coordinates on the pairs `x != y`.
#[derive(Clone, Debug)]
pub struct CocycleSpace {
    quandle: FiniteQuandle,
    group: CyclicGroup,
    /// Generating cocycles for each cyclic factor of `G`.
    pub generators: Vec<Cocycle2>,
    pairs: Vec<Vec<usize>>,
    delta1: SmithDecomposition,
}

impl CocycleSpace {
    pub fn new(x: &FiniteQuandle, group: CyclicGroup) -> Result<Self> {
        let q = ChainComplex::new(x, ComplexKind::Q)?;
        let basis2 = q.basis(2)?;
        let pairs: Vec<Vec<usize>> = basis2.tuples().collect();
        // delta^2 = (d_3)^T, delta^1 = (d_2)^T
        let delta2: SparseMatrix = q.boundary(3)?.transpose();
        let delta1 = smith_with(&q.boundary(2)?.transpose().to_dense(), Transforms::LEFT);
        let s2 = smith_with(&delta2.to_dense(), Transforms::RIGHT);
        let v = s2.v.as_ref().expect("right transform");
        let r = s2.rank();
        let mut generators = Vec::new();
        for (f, &d) in group.orders.iter().enumerate() {
            for j in 0..pairs.len() {
                // column j of V solves the system scaled by d/gcd(d_j, d)
                let scale = if j < r {
                    if d == 0 {
                        continue;
                    }
                    let dj = &s2.diagonal()[j];
                    let g = dj.gcd(&Int::from(d));
                    let sc = Int::from(d).div_exact(&g).expect("gcd divides");
                    if sc.rem_euclid_u64(d) == 0 {
                        continue;
                    }
                    sc
                } else {
                    Int::ONE
                };
                let mut c = Cocycle2::zero(x, group.clone());
                for (i, t) in pairs.iter().enumerate() {
                    let val = v.get(i, j).mul(&scale);
                    let val = if d == 0 { val.to_i64().expect("cocycle coefficient fits") } else { val.rem_euclid_u64(d) as i64 };
                    c.values[t[0] * x.size() + t[1]][f] = val;
                }
                if c.values.iter().any(|v| v.iter().any(|&k| k != 0)) {
                    generators.push(c);
                }
            }
        }
        Ok(CocycleSpace { quandle: x.clone(), group, generators, pairs, delta1 })
    }

    pub fn quandle(&self) -> &FiniteQuandle {
        &self.quandle
    }

    pub fn group(&self) -> &CyclicGroup {
        &self.group
    }

    fn coordinates(&self, phi: &Cocycle2, f: usize) -> Vec<Int> {
        self.pairs.iter().map(|t| Int::from(phi.value(t[0], t[1])[f])).collect()
    }

    pub fn is_coboundary(&self, phi: &Cocycle2) -> bool {
        (0..self.group.factors()).all(|f| self.delta1.in_image_mod(&self.coordinates(phi, f), self.group.orders[f]))
    }

    /// The cocycle `sum k_i g_i` for coefficients on the generators.
    pub fn combination(&self, coeffs: &[i64]) -> Cocycle2 {
        let mut c = Cocycle2::zero(&self.quandle, self.group.clone());
        for (g, &k) in self.generators.iter().zip(coeffs) {
            for (a, b) in c.values.iter_mut().zip(&g.values) {
                self.group.add_scaled(a, b, k);
            }
        }
        c
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alexander::AlexanderQuandle;

    #[test]
    fn s4_cocycle_is_essential() {
        let s4 = AlexanderQuandle::new(2, &"T^2+T+1".parse().unwrap()).unwrap().into_quandle();
        // 0, 1, T, T+1 are 0, 1, 2, 3
        let phi = Cocycle2::characteristic(&s4, 2, &[(0, 1), (0, 3), (1, 0), (1, 3), (3, 0), (3, 1)]).unwrap();
        assert!(phi.is_cocycle(&s4));
        assert!(!phi.is_coboundary(&s4).unwrap());
        let zero = Cocycle2::zero(&s4, CyclicGroup::cyclic(2));
        assert!(zero.is_cocycle(&s4) && zero.is_coboundary(&s4).unwrap());
    }

    #[test]
    fn generators_are_cocycles() {
        let r4 = FiniteQuandle::dihedral(4);
        for d in [0, 2, 3, 4] {
            let space = CocycleSpace::new(&r4, CyclicGroup::cyclic(d)).unwrap();
            assert!(!space.generators.is_empty());
            for g in &space.generators {
                assert!(g.is_cocycle(&r4));
            }
        }
    }

    #[test]
    fn coboundaries_and_pullbacks() {
        let r4 = FiniteQuandle::dihedral(4);
        let g = CyclicGroup::cyclic(4);
        let psi: Vec<Vec<i64>> = (0..4).map(|k| vec![k * k]).collect();
        let d = Cocycle2::coboundary_of(&r4, g.clone(), &psi);
        assert!(d.is_cocycle(&r4) && d.is_coboundary(&r4).unwrap());
        let pi = QuandleHom::orbit_projection(&r4);
        let t2 = pi.target().clone();
        let chi = Cocycle2::characteristic(&t2, 0, &[(0, 1)]).unwrap();
        assert!(chi.is_cocycle(&t2));
        let pulled = chi.pullback(&pi).unwrap();
        assert!(pulled.is_cocycle(&r4));
        assert_eq!(pulled.value(2, 3), &[1]);
        let id = QuandleHom::identity(&r4);
        assert_eq!(d.pullback(&id).unwrap(), d);
    }
}
