//! Finite quandles given by operation tables, their homomorphisms, orbits and
//! equalizers.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Largest size accepted by the brute-force isomorphism and automorphism helpers.
pub const BRUTE_FORCE_MAX: usize = 8;

/// A finite quandle (or rack) on `0..size`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteQuandle {
    size: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
    label: String,
    names: Vec<String>,
    idempotent: bool,
}

/// Checks axioms II and III (and I when `quandle` is set) on a square table.
fn check_axioms(table: &[Vec<usize>], quandle: bool) -> Result<()> {
    let m = table.len();
    if m == 0 {
        return Err(Error::InvalidTable("empty table".into()));
    }
    for (a, row) in table.iter().enumerate() {
        if row.len() != m {
            return Err(Error::InvalidTable(format!("row {a} has length {}, expected {m}", row.len())));
        }
        if let Some(&v) = row.iter().find(|&&v| v >= m) {
            return Err(Error::InvalidTable(format!("entry {v} in row {a} is out of range")));
        }
    }
    if quandle {
        if let Some(a) = (0..m).find(|&a| table[a][a] != a) {
            return Err(Error::AxiomViolation { axiom: 1, witness: [a, a, a] });
        }
    }
    for b in 0..m {
        let mut seen: Vec<Option<usize>> = vec![None; m];
        for a in 0..m {
            let c = table[a][b];
            if let Some(prev) = seen[c] {
                return Err(Error::AxiomViolation { axiom: 2, witness: [prev, a, b] });
            }
            seen[c] = Some(a);
        }
    }
    for a in 0..m {
        for b in 0..m {
            let ab = table[a][b];
            for c in 0..m {
                if table[ab][c] != table[table[a][c]][table[b][c]] {
                    return Err(Error::AxiomViolation { axiom: 3, witness: [a, b, c] });
                }
            }
        }
    }
    Ok(())
}

impl FiniteQuandle {
    /// Validates a quandle table.
    pub fn validate(table: Vec<Vec<usize>>, label: impl Into<String>) -> Result<Self> {
        check_axioms(&table, true)?;
        Ok(Self::from_checked(table, label.into(), true))
    }

    /// Validates a rack table (axioms II and III only).
    pub fn validate_rack(table: Vec<Vec<usize>>, label: impl Into<String>) -> Result<Self> {
        check_axioms(&table, false)?;
        let idempotent = (0..table.len()).all(|a| table[a][a] == a);
        Ok(Self::from_checked(table, label.into(), idempotent))
    }

    fn from_checked(table: Vec<Vec<usize>>, label: String, idempotent: bool) -> Self {
        let m = table.len();
        let mut flat = Vec::with_capacity(m * m);
        let mut inverse = vec![0; m * m];
        for (a, row) in table.iter().enumerate() {
            for (b, &c) in row.iter().enumerate() {
                flat.push(c);
                inverse[c * m + b] = a;
            }
        }
        let names = (0..m).map(|i| i.to_string()).collect();
        FiniteQuandle { size: m, table: flat, inverse, label, names, idempotent }
    }

    /// Replaces the display names of the elements.
    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.size {
            return Err(Error::InvalidArgument(format!(
                "{} names for {} elements",
                names.len(),
                self.size
            )));
        }
        self.names = names;
        Ok(self)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// The trivial quandle `T_m`: `a * b = a`.
    pub fn trivial(m: usize) -> Self {
        assert!(m >= 1, "trivial quandle needs at least one element");
        let table = (0..m).map(|a| vec![a; m]).collect();
        Self::from_checked(table, format!("T{m}"), true)
    }

    /// The dihedral quandle `R_k`: `i * j = 2j - i mod k`.
    pub fn dihedral(k: usize) -> Self {
        assert!(k >= 1, "dihedral quandle needs at least one element");
        let table = (0..k).map(|i| (0..k).map(|j| (2 * j + k - i) % k).collect()).collect();
        Self::from_checked(table, format!("R{k}"), true)
    }

    /// Conjugation quandle on the five non-identity permutations of three
    /// letters, `a * b = b^{-1} a b`. Transpositions come first.
    pub fn qs5() -> Self {
        // permutations as images of (0,1,2)
        let perms: [[usize; 3]; 5] = [[1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];
        let names = ["(12)", "(13)", "(23)", "(123)", "(132)"];
        let compose = |p: &[usize; 3], q: &[usize; 3]| -> [usize; 3] {
            // apply p first, then q
            [q[p[0]], q[p[1]], q[p[2]]]
        };
        let inverse = |p: &[usize; 3]| -> [usize; 3] {
            let mut r = [0; 3];
            for (i, &v) in p.iter().enumerate() {
                r[v] = i;
            }
            r
        };
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("conjugate of non-identity");
        let table = (0..5)
            .map(|a| (0..5).map(|b| index(compose(&compose(&inverse(&perms[b]), &perms[a]), &perms[b]))).collect())
            .collect();
        Self::from_checked(table, "QS5".into(), true)
            .with_names(names.iter().map(|s| s.to_string()).collect())
            .expect("five names")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Index of the element with the given display name.
    pub fn element_named(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Whether axiom I holds, i.e. this is a quandle and not only a rack.
    pub fn is_quandle(&self) -> bool {
        self.idempotent
    }

    /// `a * b`.
    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b]
    }

    /// `a *bar b`, the unique `c` with `c * b = a`.
    #[inline]
    pub fn op_inv(&self, a: usize, b: usize) -> usize {
        self.inverse[a * self.size + b]
    }

    /// `a S(b)^eps`.
    #[inline]
    pub fn act(&self, a: usize, b: usize, sign: i8) -> usize {
        if sign >= 0 {
            self.op(a, b)
        } else {
            self.op_inv(a, b)
        }
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.size).map(<[usize]>::to_vec).collect()
    }

    pub fn apply_inner_word(&self, a: usize, w: &InnerWord) -> usize {
        w.letters.iter().fold(a, |x, &(b, s)| self.act(x, b, s))
    }

    /// Orbits under the inner automorphism group, numbered by smallest member.
    pub fn orbits(&self) -> OrbitDecomposition {
        let m = self.size;
        let mut orbit_of = vec![usize::MAX; m];
        let mut orbits = Vec::new();
        for start in 0..m {
            if orbit_of[start] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            let mut class = vec![start];
            orbit_of[start] = id;
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for b in 0..m {
                    for y in [self.op(x, b), self.op_inv(x, b)] {
                        if orbit_of[y] == usize::MAX {
                            orbit_of[y] = id;
                            class.push(y);
                            queue.push_back(y);
                        }
                    }
                }
            }
            class.sort_unstable();
            orbits.push(class);
        }
        OrbitDecomposition { orbits, orbit_of }
    }

    /// Whether `map` is a homomorphism into `target`.
    pub fn check_hom(&self, target: &FiniteQuandle, map: &[usize]) -> Result<()> {
        if map.len() != self.size {
            return Err(Error::InvalidArgument(format!("map has length {}, expected {}", map.len(), self.size)));
        }
        if let Some(&v) = map.iter().find(|&&v| v >= target.size) {
            return Err(Error::InvalidArgument(format!("image {v} out of range")));
        }
        for a in 0..self.size {
            for b in 0..self.size {
                if map[self.op(a, b)] != target.op(map[a], map[b]) {
                    return Err(Error::NotAHomomorphism { a, b });
                }
            }
        }
        Ok(())
    }

    /// Restriction of the operation to a subset closed under `*` and `*bar`.
    pub fn subquandle(&self, elements: &[usize]) -> Result<Subquandle> {
        let mut pos = BTreeMap::new();
        for (i, &e) in elements.iter().enumerate() {
            pos.insert(e, i);
        }
        let mut table = Vec::with_capacity(elements.len());
        for &a in elements {
            let mut row = Vec::with_capacity(elements.len());
            for &b in elements {
                let c = self.op(a, b);
                let i = *pos
                    .get(&c)
                    .ok_or_else(|| Error::InvalidArgument(format!("subset not closed: {a} * {b} = {c}")))?;
                row.push(i);
            }
            table.push(row);
        }
        let names = elements.iter().map(|&e| self.names[e].clone()).collect();
        let q = if self.idempotent {
            FiniteQuandle::validate(table, format!("{}|sub", self.label))?
        } else {
            FiniteQuandle::validate_rack(table, format!("{}|sub", self.label))?
        };
        Ok(Subquandle { quandle: q.with_names(names)?, inclusion: elements.to_vec() })
    }

    /// Searches for an isomorphism `self -> other` by backtracking.
    pub fn find_isomorphism(&self, other: &FiniteQuandle) -> Result<Option<Vec<usize>>> {
        let n = self.size.max(other.size);
        if n > BRUTE_FORCE_MAX {
            return Err(Error::TooLargeForBruteForce { size: n, max: BRUTE_FORCE_MAX });
        }
        if self.size != other.size {
            return Ok(None);
        }
        let mut found = None;
        self.search_bijections(other, &mut |m| {
            found = Some(m.to_vec());
            true
        });
        Ok(found)
    }

    /// All automorphisms, for quandles of at most [`BRUTE_FORCE_MAX`] elements.
    pub fn automorphisms(&self) -> Result<Vec<Vec<usize>>> {
        if self.size > BRUTE_FORCE_MAX {
            return Err(Error::TooLargeForBruteForce { size: self.size, max: BRUTE_FORCE_MAX });
        }
        let mut all = Vec::new();
        self.search_bijections(self, &mut |m| {
            all.push(m.to_vec());
            false
        });
        Ok(all)
    }

    /// Orbits of the full automorphism group (brute force).
    pub fn weak_orbits(&self) -> Result<OrbitDecomposition> {
        let autos = self.automorphisms()?;
        let m = self.size;
        let mut orbit_of = vec![usize::MAX; m];
        let mut orbits = Vec::new();
        for a in 0..m {
            if orbit_of[a] != usize::MAX {
                continue;
            }
            let mut class: Vec<usize> = autos.iter().map(|f| f[a]).collect();
            class.sort_unstable();
            class.dedup();
            for &x in &class {
                orbit_of[x] = orbits.len();
            }
            orbits.push(class);
        }
        Ok(OrbitDecomposition { orbits, orbit_of })
    }

    /// Enumerates bijections that are homomorphisms; `visit` returns true to stop.
    fn search_bijections(&self, other: &FiniteQuandle, visit: &mut dyn FnMut(&[usize]) -> bool) {
        fn rec(
            x: &FiniteQuandle,
            y: &FiniteQuandle,
            map: &mut Vec<usize>,
            used: &mut Vec<bool>,
            visit: &mut dyn FnMut(&[usize]) -> bool,
        ) -> bool {
            let k = map.len();
            if k == x.size {
                return visit(map);
            }
            for cand in 0..y.size {
                if used[cand] {
                    continue;
                }
                map.push(cand);
                let ok = (0..=k).all(|a| {
                    (0..=k).all(|b| {
                        let c = x.op(a, b);
                        c > k || map[c] == y.op(map[a], map[b])
                    })
                });
                if ok {
                    used[cand] = true;
                    if rec(x, y, map, used, visit) {
                        return true;
                    }
                    used[cand] = false;
                }
                map.pop();
            }
            false
        }
        let mut map = Vec::with_capacity(self.size);
        let mut used = vec![false; other.size];
        rec(self, other, &mut map, &mut used, visit);
    }
}

/// A partition of the elements into orbits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitDecomposition {
    pub orbits: Vec<Vec<usize>>,
    pub orbit_of: Vec<usize>,
}

impl OrbitDecomposition {
    pub fn count(&self) -> usize {
        self.orbits.len()
    }
}

/// A word `b_1^{e_1} ... b_n^{e_n}` acting on the right by inner automorphisms.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct InnerWord {
    pub letters: Vec<(usize, i8)>,
}

impl InnerWord {
    pub fn new(letters: Vec<(usize, i8)>) -> Self {
        InnerWord { letters }
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The formal inverse: reversed letters with flipped signs.
    pub fn inverse(&self) -> InnerWord {
        InnerWord { letters: self.letters.iter().rev().map(|&(b, s)| (b, -s)).collect() }
    }

    pub fn concat(&self, other: &InnerWord) -> InnerWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        InnerWord { letters }
    }
}

/// A subquandle together with its inclusion into the ambient quandle.
#[derive(Clone, Debug)]
pub struct Subquandle {
    pub quandle: FiniteQuandle,
    pub inclusion: Vec<usize>,
}

/// A quandle homomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuandleHom {
    source: FiniteQuandle,
    target: FiniteQuandle,
    map: Vec<usize>,
}

/// Result of the local homogeneity test.
#[derive(Clone, Debug)]
pub struct Homogeneity {
    pub homogeneous: bool,
    /// For `(c, c2)` in a common fiber, a word `w` in that fiber with `c2 * w = c`.
    pub words: BTreeMap<(usize, usize), InnerWord>,
}

impl Homogeneity {
    pub fn word(&self, from: usize, to: usize) -> Option<&InnerWord> {
        self.words.get(&(to, from))
    }
}

impl QuandleHom {
    pub fn new(source: FiniteQuandle, target: FiniteQuandle, map: Vec<usize>) -> Result<Self> {
        source.check_hom(&target, &map)?;
        Ok(QuandleHom { source, target, map })
    }

    pub fn identity(x: &FiniteQuandle) -> Self {
        QuandleHom { source: x.clone(), target: x.clone(), map: (0..x.size()).collect() }
    }

    /// Projection onto the orbit quandle, a trivial quandle on the orbit indices.
    pub fn orbit_projection(x: &FiniteQuandle) -> Self {
        let orb = x.orbits();
        let target = FiniteQuandle::trivial(orb.count()).with_label(format!("Orb({})", x.label()));
        QuandleHom { source: x.clone(), target, map: orb.orbit_of }
    }

    pub fn source(&self) -> &FiniteQuandle {
        &self.source
    }

    pub fn target(&self) -> &FiniteQuandle {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn compose(&self, then: &QuandleHom) -> Result<QuandleHom> {
        if self.target != then.source {
            return Err(Error::InvalidArgument("composition of incompatible maps".into()));
        }
        let map = self.map.iter().map(|&a| then.map[a]).collect();
        Ok(QuandleHom { source: self.source.clone(), target: then.target.clone(), map })
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target.size()];
        for &v in &self.map {
            hit[v] = true;
        }
        hit.into_iter().all(|h| h)
    }

    /// The fiber `f^{-1}(f(x))` in increasing order.
    pub fn fiber(&self, x: usize) -> Vec<usize> {
        let fx = self.map[x];
        (0..self.source.size()).filter(|&a| self.map[a] == fx).collect()
    }

    /// The equalizer of `x` as a subquandle of the source.
    pub fn equalizer(&self, x: usize) -> Subquandle {
        self.source.subquandle(&self.fiber(x)).expect("fibers of a homomorphism are subquandles")
    }

    /// Tests whether every equalizer has a single orbit under its own inner
    /// automorphisms, recording witness words found by breadth-first search.
    pub fn local_homogeneity(&self) -> Homogeneity {
        let mut words = BTreeMap::new();
        let mut homogeneous = true;
        let mut done = vec![false; self.source.size()];
        for x in 0..self.source.size() {
            if done[x] {
                continue;
            }
            let fiber = self.fiber(x);
            for &a in &fiber {
                done[a] = true;
            }
            for &start in &fiber {
                let mut reached: BTreeMap<usize, InnerWord> = BTreeMap::new();
                reached.insert(start, InnerWord::default());
                let mut queue = VecDeque::from([start]);
                while let Some(c) = queue.pop_front() {
                    let w = reached[&c].clone();
                    for &d in &fiber {
                        for s in [1i8, -1] {
                            let next = self.source.act(c, d, s);
                            if !reached.contains_key(&next) {
                                let mut nw = w.clone();
                                nw.letters.push((d, s));
                                reached.insert(next, nw);
                                queue.push_back(next);
                            }
                        }
                    }
                }
                if reached.len() != fiber.len() {
                    homogeneous = false;
                }
                for (c, w) in reached {
                    words.insert((c, start), w);
                }
            }
        }
        Homogeneity { homogeneous, words }
    }

    pub fn is_locally_homogeneous(&self) -> bool {
        self.local_homogeneity().homogeneous
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation_examples() {
        assert!(FiniteQuandle::validate(vec![vec![0]], "T1").is_ok());
        let err = FiniteQuandle::validate(vec![vec![0, 0], vec![0, 1]], "bad").unwrap_err();
        assert!(matches!(err, Error::AxiomViolation { axiom: 2, .. }));
        let err = FiniteQuandle::validate(vec![vec![1, 1], vec![0, 0]], "rack").unwrap_err();
        assert!(matches!(err, Error::AxiomViolation { axiom: 1, .. }));
        assert!(FiniteQuandle::validate_rack(vec![vec![1, 1], vec![0, 0]], "rack").is_ok());
    }

    #[test]
    fn dihedral_values() {
        let r3 = FiniteQuandle::dihedral(3);
        assert_eq!(r3.op(0, 1), 2);
        assert_eq!(r3.apply_inner_word(0, &InnerWord::new(vec![(1, 1)])), 2);
        let r4 = FiniteQuandle::dihedral(4);
        assert_eq!(r4.orbits().orbits, vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(FiniteQuandle::dihedral(5).orbits().count(), 1);
    }

    #[test]
    fn qs5_orbits() {
        let q = FiniteQuandle::qs5();
        assert_eq!(q.size(), 5);
        assert_eq!(q.orbits().orbits, vec![vec![0, 1, 2], vec![3, 4]]);
        assert_eq!(q.name(3), "(123)");
    }

    #[test]
    fn projection_and_equalizer() {
        let r4 = FiniteQuandle::dihedral(4);
        let pi = QuandleHom::orbit_projection(&r4);
        assert_eq!(pi.map(), &[0, 1, 0, 1]);
        let e0 = pi.equalizer(0);
        assert_eq!(e0.inclusion, vec![0, 2]);
        assert_eq!(e0.quandle.table(), vec![vec![0, 0], vec![1, 1]]);
        assert!(e0.quandle.find_isomorphism(&pi.equalizer(1).quandle).unwrap().is_some());
        assert!(!pi.is_locally_homogeneous());
        assert!(QuandleHom::identity(&r4).is_locally_homogeneous());
    }

    #[test]
    fn isomorphism_and_weak_orbits() {
        let r3 = FiniteQuandle::dihedral(3);
        assert!(r3.find_isomorphism(&FiniteQuandle::trivial(3)).unwrap().is_none());
        assert_eq!(r3.automorphisms().unwrap().len(), 6);
        assert_eq!(FiniteQuandle::dihedral(4).weak_orbits().unwrap().count(), 1);
        assert!(FiniteQuandle::dihedral(9).automorphisms().is_err());
    }

    #[test]
    fn inverse_word_is_identity() {
        let q = FiniteQuandle::qs5();
        let w = InnerWord::new(vec![(0, 1), (3, -1), (2, 1)]);
        for a in 0..5 {
            assert_eq!(q.apply_inner_word(q.apply_inner_word(a, &w), &w.inverse()), a);
        }
    }
}
