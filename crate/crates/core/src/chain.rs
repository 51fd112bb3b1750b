//! Tuple bases, boundary matrices and chain maps for rack and quandle chain
//! complexes.
//!
//! Tuples `(x_1, ..., x_n)` are encoded by their lexicographic rank
//! `sum x_i m^(n-i)` in the full rack basis. Every basis keeps its tuples in
//! increasing code order, so bases of subcomplexes and quotients are
//! subsequences of the rack basis.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::int::Int;
use crate::matrix::SparseMatrix;
use crate::quandle::{FiniteQuandle, OrbitDecomposition, QuandleHom};

/// Default cap on the number of rack generators `m^n`.
pub const DEFAULT_CAP: u128 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ComplexKind {
    /// All tuples.
    R,
    /// Tuples with `x_i = x_{i+1}` for some `i`.
    D,
    /// Quotient `R / D`, on tuples with no two equal neighbours.
    Q,
    /// Tuples with `x_1 = x_2`.
    DD,
    /// Quotient `D / DD`, on degenerate tuples with `x_1 != x_2`.
    DoverDD,
}

impl ComplexKind {
    pub const ALL: [ComplexKind; 5] = [ComplexKind::R, ComplexKind::D, ComplexKind::Q, ComplexKind::DD, ComplexKind::DoverDD];

    /// Whether the tuple lies in this kind's basis.
    pub fn contains(self, t: &[usize]) -> bool {
        let degenerate = t.windows(2).any(|w| w[0] == w[1]);
        let dd = t.len() >= 2 && t[0] == t[1];
        match self {
            ComplexKind::R => true,
            ComplexKind::D => degenerate,
            ComplexKind::Q => !degenerate,
            ComplexKind::DD => dd,
            ComplexKind::DoverDD => degenerate && !dd,
        }
    }

    /// Quotient kinds drop boundary terms that leave the basis.
    pub fn is_quotient(self) -> bool {
        matches!(self, ComplexKind::Q | ComplexKind::DoverDD)
    }

    pub fn needs_quandle(self) -> bool {
        self != ComplexKind::R
    }

    pub fn name(self) -> &'static str {
        match self {
            ComplexKind::R => "R",
            ComplexKind::D => "D",
            ComplexKind::Q => "Q",
            ComplexKind::DD => "DD",
            ComplexKind::DoverDD => "D/DD",
        }
    }
}

impl fmt::Display for ComplexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ComplexKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "R" | "r" => Ok(ComplexKind::R),
            "D" | "d" => Ok(ComplexKind::D),
            "Q" | "q" => Ok(ComplexKind::Q),
            "DD" | "dd" => Ok(ComplexKind::DD),
            "D/DD" | "DoverDD" | "doverdd" | "d/dd" => Ok(ComplexKind::DoverDD),
            _ => Err(Error::InvalidArgument(format!("unknown complex kind {s:?}"))),
        }
    }
}

/// Encodes a tuple over an `m`-element set.
pub fn encode(t: &[usize], m: usize) -> u64 {
    t.iter().fold(0u64, |acc, &x| acc * m as u64 + x as u64)
}

/// Decodes a tuple of length `n`.
pub fn decode(mut code: u64, m: usize, n: usize) -> Vec<usize> {
    let mut t = vec![0; n];
    for slot in t.iter_mut().rev() {
        *slot = (code % m as u64) as usize;
        code /= m as u64;
    }
    t
}

fn generator_count(m: usize, n: usize) -> u128 {
    (m as u128).checked_pow(n as u32).unwrap_or(u128::MAX)
}

/// Ordered basis of `C_n` for one complex kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TupleBasis {
    m: usize,
    n: usize,
    kind: ComplexKind,
    codes: Vec<u64>,
}

impl TupleBasis {
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> ComplexKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    pub fn codes(&self) -> &[u64] {
        &self.codes
    }

    pub fn tuple(&self, i: usize) -> Vec<usize> {
        decode(self.codes[i], self.m, self.n)
    }

    pub fn tuples(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        self.codes.iter().map(move |&c| decode(c, self.m, self.n))
    }

    pub fn index_of_code(&self, code: u64) -> Option<usize> {
        if self.kind == ComplexKind::R {
            return ((code as usize) < self.codes.len()).then_some(code as usize);
        }
        self.codes.binary_search(&code).ok()
    }

    pub fn index_of(&self, t: &[usize]) -> Option<usize> {
        if t.len() != self.n || t.iter().any(|&x| x >= self.m) {
            return None;
        }
        self.index_of_code(encode(t, self.m))
    }
}

/// A sparse integer chain on rack tuples of fixed length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    m: usize,
    n: usize,
    terms: BTreeMap<u64, Int>,
}

impl Chain {
    pub fn zero(m: usize, n: usize) -> Self {
        Chain { m, n, terms: BTreeMap::new() }
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<usize>, i64)>>(m: usize, n: usize, terms: I) -> Self {
        let mut c = Chain::zero(m, n);
        for (t, k) in terms {
            c.add_term(&t, &Int::from(k));
        }
        c
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn add_code(&mut self, code: u64, k: &Int) {
        if k.is_zero() {
            return;
        }
        let e = self.terms.entry(code).or_insert(Int::ZERO);
        *e = e.add(k);
        if e.is_zero() {
            self.terms.remove(&code);
        }
    }

    pub fn add_term(&mut self, t: &[usize], k: &Int) {
        assert_eq!(t.len(), self.n, "tuple length");
        self.add_code(encode(t, self.m), k);
    }

    pub fn coefficient(&self, t: &[usize]) -> Int {
        self.terms.get(&encode(t, self.m)).cloned().unwrap_or(Int::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(tuple, coefficient)` pairs in lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (Vec<usize>, &Int)> + '_ {
        self.terms.iter().map(move |(&c, k)| (decode(c, self.m, self.n), k))
    }

    pub fn code_terms(&self) -> impl Iterator<Item = (u64, &Int)> + '_ {
        self.terms.iter().map(|(&c, k)| (c, k))
    }

    pub fn add(&self, other: &Chain) -> Chain {
        assert_eq!((self.m, self.n), (other.m, other.n), "chain shapes differ");
        let mut r = self.clone();
        for (&c, k) in &other.terms {
            r.add_code(c, k);
        }
        r
    }

    pub fn scale(&self, k: &Int) -> Chain {
        let mut r = Chain::zero(self.m, self.n);
        for (&c, v) in &self.terms {
            r.add_code(c, &v.mul(k));
        }
        r
    }

    /// The rack boundary.
    pub fn boundary(&self, x: &FiniteQuandle) -> Chain {
        assert_eq!(x.size(), self.m, "chain over a different quandle");
        let mut r = Chain::zero(self.m, self.n.saturating_sub(1));
        if self.n <= 1 {
            return r;
        }
        let mut buf = Vec::new();
        for (&c, k) in &self.terms {
            buf.clear();
            rack_boundary_terms(x, &decode(c, self.m, self.n), &mut buf);
            for &(code, s) in &buf {
                r.add_code(code, &k.mul(&Int::from(s)));
            }
        }
        r
    }

    /// Keeps only the terms lying in `kind`'s basis.
    pub fn project(&self, kind: ComplexKind) -> Chain {
        let mut r = Chain::zero(self.m, self.n);
        for (&c, k) in &self.terms {
            if kind.contains(&decode(c, self.m, self.n)) {
                r.terms.insert(c, k.clone());
            }
        }
        r
    }

    /// Coordinates in `basis`. Fails if a term lies outside it.
    pub fn to_vector(&self, basis: &TupleBasis) -> Result<Vec<Int>> {
        let mut v = vec![Int::ZERO; basis.len()];
        for (&c, k) in &self.terms {
            let i = basis
                .index_of_code(c)
                .ok_or_else(|| Error::InvalidArgument(format!("chain term {:?} outside the {} basis", decode(c, self.m, self.n), basis.kind)))?;
            v[i] = k.clone();
        }
        Ok(v)
    }

    pub fn from_vector(basis: &TupleBasis, v: &[Int]) -> Chain {
        assert_eq!(v.len(), basis.len(), "vector length");
        let mut c = Chain::zero(basis.m, basis.n);
        for (i, k) in v.iter().enumerate() {
            c.add_code(basis.codes[i], k);
        }
        c
    }

    /// Image under a homomorphism, tuple by tuple.
    pub fn push_forward(&self, f: &QuandleHom) -> Chain {
        let t = f.target().size();
        let mut r = Chain::zero(t, self.n);
        for (tuple, k) in self.terms() {
            let img: Vec<usize> = tuple.iter().map(|&a| f.apply(a)).collect();
            r.add_term(&img, k);
        }
        r
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (t, k)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(if k.is_negative() { " - " } else { " + " })?;
            } else if k.is_negative() {
                f.write_str("-")?;
            }
            let a = k.abs();
            if !a.is_one() {
                write!(f, "{a}")?;
            }
            f.write_str("(")?;
            for (j, x) in t.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Appends the rack boundary of one tuple as `(code, coefficient)` pairs
/// (unmerged).
fn rack_boundary_terms(x: &FiniteQuandle, t: &[usize], out: &mut Vec<(u64, i64)>) {
    let n = t.len();
    let m = x.size();
    let mut face = Vec::with_capacity(n);
    for i in 1..n {
        // 0-based i corresponds to x_{i+1}; sign (-1)^{i+1}
        let sign = if i % 2 == 1 { 1 } else { -1 };
        face.clear();
        face.extend(t[..i].iter().copied());
        face.extend(t[i + 1..].iter().copied());
        out.push((encode(&face, m), sign));
        face.clear();
        face.extend(t[..i].iter().map(|&a| x.op(a, t[i])));
        face.extend(t[i + 1..].iter().copied());
        out.push((encode(&face, m), -sign));
    }
}

/// A quandle together with a complex kind and a generator cap.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    quandle: FiniteQuandle,
    kind: ComplexKind,
    cap: u128,
}

impl ChainComplex {
    pub fn new(quandle: &FiniteQuandle, kind: ComplexKind) -> Result<Self> {
        if kind.needs_quandle() && !quandle.is_quandle() {
            return Err(Error::KindUnavailable);
        }
        Ok(ChainComplex { quandle: quandle.clone(), kind, cap: DEFAULT_CAP })
    }

    /// Replaces the cap on `m^n`; `None` removes it.
    pub fn with_cap(mut self, cap: Option<u128>) -> Self {
        self.cap = cap.unwrap_or(u128::MAX);
        self
    }

    pub fn quandle(&self) -> &FiniteQuandle {
        &self.quandle
    }

    pub fn kind(&self) -> ComplexKind {
        self.kind
    }

    pub fn cap(&self) -> u128 {
        self.cap
    }

    pub fn same_quandle(&self, kind: ComplexKind) -> Result<ChainComplex> {
        Ok(ChainComplex::new(&self.quandle, kind)?.with_cap(Some(self.cap)))
    }

    fn check_cap(&self, n: usize) -> Result<()> {
        let g = generator_count(self.quandle.size(), n);
        if g > self.cap {
            return Err(Error::DegreeTooLarge { generators: g, cap: self.cap });
        }
        Ok(())
    }

    pub fn basis(&self, n: usize) -> Result<TupleBasis> {
        self.check_cap(n)?;
        let m = self.quandle.size();
        let total = generator_count(m, n) as u64;
        let codes = if self.kind == ComplexKind::R {
            (0..total).collect()
        } else {
            (0..total).filter(|&c| self.kind.contains(&decode(c, m, n))).collect()
        };
        Ok(TupleBasis { m, n, kind: self.kind, codes })
    }

    /// Rank of `C_n` without materialising the basis.
    pub fn rank(&self, n: usize) -> Result<u128> {
        self.check_cap(n)?;
        let m = self.quandle.size() as u128;
        let full = generator_count(self.quandle.size(), n);
        let q = if n == 0 { 1 } else { m * (m.saturating_sub(1)).pow(n as u32 - 1) };
        let dd = if n < 2 { 0 } else { generator_count(self.quandle.size(), n - 1) };
        Ok(match self.kind {
            ComplexKind::R => full,
            ComplexKind::Q => q,
            ComplexKind::D => full - q,
            ComplexKind::DD => dd,
            ComplexKind::DoverDD => full - q - dd,
        })
    }

    /// Boundary column of a basis tuple, merged and restricted to `target`.
    fn column(&self, t: &[usize], target: &TupleBasis, buf: &mut Vec<(u64, i64)>) -> Vec<(usize, i64)> {
        buf.clear();
        rack_boundary_terms(&self.quandle, t, buf);
        buf.sort_unstable();
        let mut col = Vec::with_capacity(buf.len());
        let mut k = 0;
        while k < buf.len() {
            let code = buf[k].0;
            let mut s = 0;
            while k < buf.len() && buf[k].0 == code {
                s += buf[k].1;
                k += 1;
            }
            if s == 0 {
                continue;
            }
            match target.index_of_code(code) {
                Some(i) => col.push((i, s)),
                None => assert!(
                    self.kind.is_quotient(),
                    "boundary of {t:?} leaves the {} subcomplex",
                    self.kind
                ),
            }
        }
        col
    }

    /// Matrix of `d_n : C_n -> C_{n-1}`.
    pub fn boundary(&self, n: usize) -> Result<SparseMatrix> {
        let source = self.basis(n)?;
        if n == 0 {
            return Ok(SparseMatrix::zeros(0, source.len()));
        }
        let target = self.basis(n - 1)?;
        let mut buf = Vec::new();
        let columns = source.tuples().map(|t| self.column(&t, &target, &mut buf)).collect();
        Ok(SparseMatrix::from_columns(target.len(), columns))
    }

    /// The boundary of a chain computed in this complex (projected for quotients).
    pub fn boundary_of(&self, c: &Chain) -> Chain {
        let b = c.boundary(&self.quandle);
        if self.kind.is_quotient() {
            b.project(self.kind)
        } else {
            b
        }
    }
}

/// Matrix sending each tuple of `from`'s basis to the same tuple in `to`'s
/// basis, or to zero when it is absent. Gives inclusions and projections.
pub fn basis_map(x: &FiniteQuandle, n: usize, from: ComplexKind, to: ComplexKind) -> Result<SparseMatrix> {
    let a = ChainComplex::new(x, from)?.basis(n)?;
    let b = ChainComplex::new(x, to)?.basis(n)?;
    let columns = a.codes().iter().map(|&c| b.index_of_code(c).map(|i| vec![(i, 1)]).unwrap_or_default()).collect();
    Ok(SparseMatrix::from_columns(b.len(), columns))
}

/// Matrix of `f_#` on `C_n` of the given kind.
pub fn induced_chain_map(f: &QuandleHom, n: usize, kind: ComplexKind) -> Result<SparseMatrix> {
    let src = ChainComplex::new(f.source(), kind)?.basis(n)?;
    let dst = ChainComplex::new(f.target(), kind)?.basis(n)?;
    let columns = src
        .tuples()
        .map(|t| {
            let img: Vec<usize> = t.iter().map(|&a| f.apply(a)).collect();
            match dst.index_of(&img) {
                Some(i) => vec![(i, 1)],
                None => {
                    assert!(kind.is_quotient(), "image of a {kind} tuple left the subcomplex");
                    Vec::new()
                }
            }
        })
        .collect();
    Ok(SparseMatrix::from_columns(dst.len(), columns))
}

/// `u_n : C_n^DD -> C_{n-1}^R`, `(x, x, x_3, ..., x_n) -> (x, x_3, ..., x_n)`.
pub fn u_map(x: &FiniteQuandle, n: usize) -> Result<SparseMatrix> {
    if n < 2 {
        return Err(Error::InvalidArgument("u_n needs n >= 2".into()));
    }
    let src = ChainComplex::new(x, ComplexKind::DD)?.basis(n)?;
    let dst = ChainComplex::new(x, ComplexKind::R)?.basis(n - 1)?;
    let columns = src
        .tuples()
        .map(|t| {
            let mut img = vec![t[0]];
            img.extend_from_slice(&t[2..]);
            vec![(dst.index_of(&img).expect("rack basis is complete"), 1)]
        })
        .collect();
    Ok(SparseMatrix::from_columns(dst.len(), columns))
}

/// `phi_n : C_n^{D/DD} -> C_{n-1}^{DD}`, the `DD` part of the boundary of the
/// canonical lift.
pub fn phi_map(x: &FiniteQuandle, n: usize) -> Result<SparseMatrix> {
    if n < 2 {
        return Err(Error::InvalidArgument("phi_n needs n >= 2".into()));
    }
    let src = ChainComplex::new(x, ComplexKind::DoverDD)?.basis(n)?;
    let dst = ChainComplex::new(x, ComplexKind::DD)?.basis(n - 1)?;
    let columns = src
        .tuples()
        .map(|t| {
            let mut c = Chain::zero(x.size(), n);
            c.add_term(&t, &Int::ONE);
            c.boundary(x)
                .project(ComplexKind::DD)
                .code_terms()
                .map(|(code, k)| (dst.index_of_code(code).expect("DD tuple"), k.to_i64().expect("small")))
                .collect()
        })
        .collect();
    Ok(SparseMatrix::from_columns(dst.len(), columns))
}

/// Which transfer chain to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TransferVariant {
    /// Sum over all tuples with `x_j` in `omega_j`.
    R,
    /// As `R`, constrained by `x_{i0} = x_{i0+1}` (0-based positions).
    D { i0: usize },
    /// As `R` with the last entry fixed.
    RPointed { last: usize },
    /// As `D` with the last entry fixed.
    DPointed { i0: usize, last: usize },
}

/// Transfer chain of an orbit tuple `omega` (orbit indices).
pub fn transfer_chain(x: &FiniteQuandle, orbits: &OrbitDecomposition, omega: &[usize], variant: TransferVariant) -> Result<Chain> {
    let n = omega.len();
    if let Some(&w) = omega.iter().find(|&&w| w >= orbits.count()) {
        return Err(Error::BadOrbitTuple(format!("orbit index {w} out of range")));
    }
    let (i0, last) = match variant {
        TransferVariant::R => (None, None),
        TransferVariant::D { i0 } => (Some(i0), None),
        TransferVariant::RPointed { last } => (None, Some(last)),
        TransferVariant::DPointed { i0, last } => (Some(i0), Some(last)),
    };
    if let Some(i) = i0 {
        if i + 1 >= n {
            return Err(Error::BadOrbitTuple(format!("position {i} has no right neighbour in a {n}-tuple")));
        }
        if omega[i] != omega[i + 1] {
            return Err(Error::BadOrbitTuple(format!("orbits at positions {i} and {} differ", i + 1)));
        }
    }
    if let Some(l) = last {
        if n == 0 || l >= x.size() || orbits.orbit_of[l] != omega[n - 1] {
            return Err(Error::BadOrbitTuple(format!("element {l} is not in the last orbit")));
        }
    }
    let mut choices: Vec<Vec<usize>> = omega.iter().map(|&w| orbits.orbits[w].clone()).collect();
    if let Some(l) = last {
        choices[n - 1] = vec![l];
    }
    if let Some(i) = i0 {
        if i + 1 == n - 1 && last.is_some() {
            choices[i] = choices[i + 1].clone();
        } else {
            // position i+1 copies position i
            choices[i + 1] = vec![usize::MAX];
        }
    }
    let mut chain = Chain::zero(x.size(), n);
    let mut t = vec![0usize; n];
    fn rec(k: usize, choices: &[Vec<usize>], t: &mut Vec<usize>, chain: &mut Chain) {
        if k == choices.len() {
            chain.add_term(t, &Int::ONE);
            return;
        }
        if choices[k] == [usize::MAX] {
            t[k] = t[k - 1];
            rec(k + 1, choices, t, chain);
            return;
        }
        for &c in &choices[k] {
            t[k] = c;
            rec(k + 1, choices, t, chain);
        }
    }
    rec(0, &choices, &mut t, &mut chain);
    Ok(chain)
}

/// Coefficient of the orbit tuple `omega` in the projection of `z` to the
/// orbit quandle.
pub fn orbit_writhe(orbits: &OrbitDecomposition, z: &Chain, omega: &[usize]) -> Int {
    let mut s = Int::ZERO;
    for (t, k) in z.terms() {
        if t.len() == omega.len() && t.iter().zip(omega).all(|(&a, &w)| orbits.orbit_of[a] == w) {
            s = s.add(k);
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_zero_product(a: &SparseMatrix, b: &SparseMatrix) -> bool {
        a.mul(b).is_zero()
    }

    #[test]
    fn basis_counts() {
        let t2 = FiniteQuandle::trivial(2);
        for n in 1..6 {
            let d = ChainComplex::new(&t2, ComplexKind::D).unwrap().basis(n).unwrap();
            let q = ChainComplex::new(&t2, ComplexKind::Q).unwrap().basis(n).unwrap();
            assert_eq!(d.len(), (1 << n) - 2);
            assert_eq!(q.len(), 2);
        }
        let r3 = FiniteQuandle::dihedral(3);
        for (kind, count) in [(ComplexKind::R, 9), (ComplexKind::Q, 6), (ComplexKind::D, 3)] {
            let c = ChainComplex::new(&r3, kind).unwrap();
            assert_eq!(c.basis(2).unwrap().len(), count);
            assert_eq!(c.rank(2).unwrap(), count as u128);
        }
    }

    #[test]
    fn small_boundaries() {
        let r3 = FiniteQuandle::dihedral(3);
        // d(x, y) = (x) - (x*y)
        let c = Chain::from_terms(3, 2, [(vec![0, 1], 1)]);
        assert_eq!(c.boundary(&r3), Chain::from_terms(3, 1, [(vec![0], 1), (vec![2], -1)]));
        // d(x, x, y) = -(x, x) + (x*y, x*y)
        let c = Chain::from_terms(3, 3, [(vec![0, 0, 1], 1)]);
        assert_eq!(c.boundary(&r3), Chain::from_terms(3, 2, [(vec![0, 0], -1), (vec![2, 2], 1)]));
    }

    #[test]
    fn boundary_squares_to_zero() {
        let r4 = FiniteQuandle::dihedral(4);
        for kind in ComplexKind::ALL {
            let c = ChainComplex::new(&r4, kind).unwrap();
            for n in 1..=5 {
                assert!(is_zero_product(&c.boundary(n - 1).unwrap(), &c.boundary(n).unwrap()), "{kind} n={n}");
            }
        }
    }

    #[test]
    fn u_and_phi_anticommute() {
        let r3 = FiniteQuandle::dihedral(3);
        let dd = ChainComplex::new(&r3, ComplexKind::DD).unwrap();
        let rr = ChainComplex::new(&r3, ComplexKind::R).unwrap();
        let q = ChainComplex::new(&r3, ComplexKind::DoverDD).unwrap();
        for n in 3..=5 {
            let lhs = u_map(&r3, n - 1).unwrap().mul(&dd.boundary(n).unwrap());
            let rhs = rr.boundary(n - 1).unwrap().mul(&u_map(&r3, n).unwrap());
            assert!(lhs.add(&rhs).is_zero(), "u at n={n}");
        }
        for n in 3..=5 {
            let lhs = dd.boundary(n - 1).unwrap().mul(&phi_map(&r3, n).unwrap());
            let rhs = phi_map(&r3, n - 1).unwrap().mul(&q.boundary(n).unwrap());
            assert!(lhs.add(&rhs).is_zero(), "phi at n={n}");
        }
    }

    #[test]
    fn phi4_values() {
        let r4 = FiniteQuandle::dihedral(4);
        let phi = phi_map(&r4, 4).unwrap();
        let src = ChainComplex::new(&r4, ComplexKind::DoverDD).unwrap().basis(4).unwrap();
        let dst = ChainComplex::new(&r4, ComplexKind::DD).unwrap().basis(3).unwrap();
        for (j, t) in src.tuples().enumerate() {
            let col = phi.column(j);
            if t[1] == t[2] {
                assert!(col.is_empty(), "{t:?}");
            } else if t[2] == t[3] {
                let x3 = t[2];
                let expect = (t[0] == x3) as i64 - (r4.op(t[0], t[1]) == x3) as i64;
                let want: Vec<(usize, i64)> =
                    if expect == 0 { vec![] } else { vec![(dst.index_of(&[x3, x3, x3]).unwrap(), expect)] };
                assert_eq!(col, want.as_slice(), "{t:?}");
            }
        }
    }

    #[test]
    fn transfer_chains_are_cycles() {
        let r4 = FiniteQuandle::dihedral(4);
        let orb = r4.orbits();
        let z = transfer_chain(&r4, &orb, &[0, 1, 1], TransferVariant::R).unwrap();
        assert_eq!(z.len(), 8);
        assert!(z.boundary(&r4).is_zero());
        assert_eq!(orbit_writhe(&orb, &z, &[0, 1, 1]), Int::from(8));
        assert_eq!(orbit_writhe(&orb, &z, &[0, 0, 1]), Int::ZERO);
        let zd = transfer_chain(&r4, &orb, &[0, 1, 1], TransferVariant::D { i0: 1 }).unwrap();
        assert!(zd.boundary(&r4).is_zero());
        assert!(transfer_chain(&r4, &orb, &[0, 1, 1], TransferVariant::D { i0: 0 }).is_err());
        let zp = transfer_chain(&r4, &orb, &[0, 1, 1], TransferVariant::RPointed { last: 3 }).unwrap();
        assert!(zp.boundary(&r4).is_zero());
    }

    #[test]
    fn degree_cap() {
        let r4 = FiniteQuandle::dihedral(4);
        let c = ChainComplex::new(&r4, ComplexKind::R).unwrap();
        assert!(matches!(c.basis(12), Err(Error::DegreeTooLarge { .. })));
        let rack = FiniteQuandle::validate_rack(vec![vec![1, 1], vec![0, 0]], "rack").unwrap();
        assert!(matches!(ChainComplex::new(&rack, ComplexKind::Q), Err(Error::KindUnavailable)));
        let rc = ChainComplex::new(&rack, ComplexKind::R).unwrap();
        assert!(rc.boundary(2).unwrap().mul(&rc.boundary(3).unwrap()).is_zero());
    }
}
