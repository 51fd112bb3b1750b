//! Closed virtual braid words with attached virtual loops.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// One letter of a virtual braid word. Indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    /// `sigma_i^{sign}`.
    Sigma { i: usize, sign: i8 },
    /// `v_i`.
    Virtual { i: usize },
}

impl Letter {
    pub fn index(self) -> usize {
        match self {
            Letter::Sigma { i, .. } | Letter::Virtual { i } => i,
        }
    }

    pub fn inverse(self) -> Letter {
        match self {
            Letter::Sigma { i, sign } => Letter::Sigma { i, sign: -sign },
            v => v,
        }
    }

    pub fn is_real(self) -> bool {
        matches!(self, Letter::Sigma { .. })
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Sigma { i, sign } if *sign > 0 => write!(f, "s{i}"),
            Letter::Sigma { i, .. } => write!(f, "s{i}^-1"),
            Letter::Virtual { i } => write!(f, "v{i}"),
        }
    }
}

impl FromStr for Letter {
    type Err = Error;

    /// `s1`, `s1^-1`, `S1` (inverse), `v1`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("bad braid letter {s:?}"));
        let (head, rest) = s.split_at(s.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?);
        let (num, exp) = match rest.find('^') {
            Some(k) => (&rest[..k], Some(&rest[k + 1..])),
            None => (rest, None),
        };
        let i: usize = num.parse().map_err(|_| bad())?;
        if i == 0 {
            return Err(bad());
        }
        let exp: i8 = match exp {
            None => 1,
            Some(e) => e.trim_start_matches('+').parse().map_err(|_| bad())?,
        };
        match head {
            "s" | "sigma" if exp == 1 || exp == -1 => Ok(Letter::Sigma { i, sign: exp }),
            "S" if exp == 1 => Ok(Letter::Sigma { i, sign: -1 }),
            "v" if exp == 1 || exp == -1 => Ok(Letter::Virtual { i }),
            _ => Err(bad()),
        }
    }
}

/// A virtual braid word on `strands` strands.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VirtualBraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl VirtualBraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidArgument("a braid needs at least one strand".into()));
        }
        if let Some(l) = letters.iter().find(|l| l.index() == 0 || l.index() >= strands) {
            return Err(Error::InvalidArgument(format!("letter {l} does not fit on {strands} strands")));
        }
        Ok(VirtualBraidWord { strands, letters })
    }

    /// Parses whitespace-separated letters; the strand count is one more
    /// than the largest index unless given.
    pub fn parse(s: &str, strands: Option<usize>) -> Result<Self> {
        let letters: Vec<Letter> = s.split_whitespace().map(str::parse).collect::<Result<_>>()?;
        let min = letters.iter().map(|l| l.index() + 1).max().unwrap_or(1);
        Self::new(strands.unwrap_or(min), letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `(sigma_1^2 v_1)^k` and friends: the word repeated `k` times.
    pub fn power(&self, k: usize) -> VirtualBraidWord {
        let letters = (0..k).flat_map(|_| self.letters.iter().copied()).collect();
        VirtualBraidWord { strands: self.strands, letters }
    }

    pub fn trefoil() -> Self {
        Self::parse("s1 s1 s1", None).expect("valid word")
    }

    /// Strand at each bottom position, as a top position.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for l in &self.letters {
            let i = l.index() - 1;
            at.swap(i, i + 1);
        }
        at
    }
}

impl fmt::Display for VirtualBraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// A small closed loop that crosses over the strand at `position` once with
/// a real crossing and returns through a virtual one. It sits just before
/// letter `pos` of the word (`pos = len` puts it at the bottom).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VirtualLoop {
    /// 1-based strand position.
    pub position: usize,
    pub pos: usize,
    pub sign: i8,
    /// Fixed color, or `None` to range over the whole quandle.
    pub color: Option<usize>,
}

/// A closed virtual braid with attached loops.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VirtualLinkDiagram {
    word: VirtualBraidWord,
    loops: Vec<VirtualLoop>,
}

/// One real crossing: which components pass over and under, and its sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RealCrossing {
    pub over: usize,
    pub under: usize,
    pub sign: i8,
}

impl VirtualLinkDiagram {
    pub fn new(word: VirtualBraidWord, loops: Vec<VirtualLoop>) -> Result<Self> {
        for l in &loops {
            if l.position == 0 || l.position > word.strands() || l.pos > word.len() || (l.sign != 1 && l.sign != -1) {
                return Err(Error::InvalidArgument(format!("loop {l:?} does not fit the word")));
            }
        }
        let mut loops = loops;
        // stable: loops at the same slot keep their order
        loops.sort_by_key(|l| l.pos);
        Ok(VirtualLinkDiagram { word, loops })
    }

    pub fn closure(word: VirtualBraidWord) -> Self {
        VirtualLinkDiagram { word, loops: Vec::new() }
    }

    pub fn word(&self) -> &VirtualBraidWord {
        &self.word
    }

    pub fn loops(&self) -> &[VirtualLoop] {
        &self.loops
    }

    pub fn strands(&self) -> usize {
        self.word.strands()
    }

    /// Component of each top position; loops come after the braid components.
    pub fn strand_components(&self) -> (Vec<usize>, usize) {
        let perm = self.word.permutation();
        let n = self.strands();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut k = start;
            while comp[k] == usize::MAX {
                comp[k] = count;
                // the strand ending at bottom position k continues at top position k
                k = perm[k];
            }
            count += 1;
        }
        (comp, count)
    }

    pub fn component_count(&self) -> usize {
        self.strand_components().1 + self.loops.len()
    }

    /// Component label of the strand at every top position.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let (comp, count) = self.strand_components();
        let mut out = vec![Vec::new(); count];
        for (pos, &c) in comp.iter().enumerate() {
            out[c].push(pos);
        }
        out
    }

    /// Walks the diagram, reporting every real crossing in order: braid
    /// letters interleaved with loops.
    pub fn events(&self) -> Vec<Event> {
        let mut out = Vec::new();
        let mut li = 0;
        for (k, &letter) in self.word.letters().iter().enumerate() {
            while li < self.loops.len() && self.loops[li].pos == k {
                out.push(Event::Loop(li));
                li += 1;
            }
            out.push(Event::Letter(letter));
        }
        while li < self.loops.len() {
            out.push(Event::Loop(li));
            li += 1;
        }
        out
    }

    pub fn real_crossings(&self) -> Vec<RealCrossing> {
        let (comp, count) = self.strand_components();
        let mut at: Vec<usize> = (0..self.strands()).collect();
        let mut out = Vec::new();
        for e in self.events() {
            match e {
                Event::Letter(Letter::Sigma { i, sign }) => {
                    let (l, r) = (at[i - 1], at[i]);
                    let (over, under) = if sign > 0 { (r, l) } else { (l, r) };
                    out.push(RealCrossing { over: comp[over], under: comp[under], sign });
                    at.swap(i - 1, i);
                }
                Event::Letter(Letter::Virtual { i }) => at.swap(i - 1, i),
                Event::Loop(k) => {
                    let lp = &self.loops[k];
                    out.push(RealCrossing { over: count + k, under: comp[at[lp.position - 1]], sign: lp.sign });
                }
            }
        }
        out
    }

    /// `vlk[i][j]`: signed count of crossings where component `i` is over `j`.
    pub fn vlk(&self) -> Vec<Vec<i64>> {
        let c = self.component_count();
        let mut m = vec![vec![0i64; c]; c];
        for x in self.real_crossings() {
            m[x.over][x.under] += x.sign as i64;
        }
        m
    }

    /// Text form: the word on the first line, one `loop ...` line per loop.
    pub fn to_text(&self, name: impl Fn(usize) -> String) -> String {
        let mut s = format!("strands={} {}\n", self.strands(), self.word);
        for l in &self.loops {
            s += &format!("loop strand={} pos={} sign={:+}", l.position, l.pos, l.sign);
            if let Some(c) = l.color {
                s += &format!(" color={}", name(c));
            }
            s.push('\n');
        }
        s
    }

    /// Parses the text form. Loop colors are resolved with `color`.
    pub fn parse(text: &str, color: impl Fn(&str) -> Result<usize>) -> Result<Self> {
        let mut loops = Vec::new();
        let mut strands = None;
        let mut letters = String::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
            if let Some(rest) = line.strip_prefix("loop") {
                let mut lp = VirtualLoop { position: 0, pos: usize::MAX, sign: 1, color: None };
                for field in rest.split_whitespace() {
                    let (k, v) = field
                        .split_once('=')
                        .ok_or_else(|| Error::InvalidArgument(format!("bad loop field {field:?}")))?;
                    let num = |v: &str| v.trim_start_matches('+').parse::<i64>().map_err(|_| Error::InvalidArgument(format!("bad number {v:?}")));
                    match k {
                        "strand" => lp.position = num(v)? as usize,
                        "pos" => lp.pos = num(v)? as usize,
                        "sign" => lp.sign = num(v)? as i8,
                        "color" => lp.color = Some(color(v)?),
                        _ => return Err(Error::InvalidArgument(format!("unknown loop field {k:?}"))),
                    }
                }
                loops.push(lp);
            } else {
                for tok in line.split_whitespace() {
                    if let Some(n) = tok.strip_prefix("strands=") {
                        strands = Some(n.parse().map_err(|_| Error::InvalidArgument(format!("bad strand count {n:?}")))?);
                    } else {
                        letters.push_str(tok);
                        letters.push(' ');
                    }
                }
            }
        }
        let w = VirtualBraidWord::parse(&letters, strands)?;
        for lp in &mut loops {
            if lp.pos == usize::MAX {
                lp.pos = w.len();
            }
        }
        VirtualLinkDiagram::new(w, loops)
    }
}

/// A step of the walk down the diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Event {
    Letter(Letter),
    /// Index into the loop list.
    Loop(usize),
}

/// The virtual Hopf link `H_+` (sign `1`) or `H_-` (sign `-1`): component 0
/// passes over component 1 once.
pub fn virtual_hopf(sign: i8) -> VirtualLinkDiagram {
    let letters = if sign > 0 {
        vec![Letter::Virtual { i: 1 }, Letter::Sigma { i: 1, sign: 1 }]
    } else {
        vec![Letter::Sigma { i: 1, sign: -1 }, Letter::Virtual { i: 1 }]
    };
    VirtualLinkDiagram::closure(VirtualBraidWord::new(2, letters).expect("valid"))
}

/// Letters making the strand at position `a` cross over the one at `a + 1`
/// (`over_left`) or the reverse, with the given sign, leaving both in place.
fn clasp(a: usize, over_left: bool, sign: i8) -> [Letter; 2] {
    let s = Letter::Sigma { i: a, sign };
    let v = Letter::Virtual { i: a };
    match (over_left, sign > 0) {
        (true, true) => [v, s],
        (true, false) => [s, v],
        (false, true) => [s, v],
        (false, false) => [v, s],
    }
}

/// A link `K_0 u ... u K_{k-1}` with `vlk(K_i, K_j) = n[i][j]` off the
/// diagonal, one strand per component. Each unit of `n[i][j]` is a virtual
/// Hopf clasp; virtual crossings bring the two strands together and back.
pub fn prescribed_vlk_link(n: &[Vec<i64>]) -> Result<VirtualLinkDiagram> {
    let k = n.len();
    if k == 0 || n.iter().any(|r| r.len() != k) {
        return Err(Error::InvalidArgument("linking matrix must be square and nonempty".into()));
    }
    let mut letters = Vec::new();
    for i in 0..k {
        for j in 0..k {
            if i == j || n[i][j] == 0 {
                continue;
            }
            let (lo, hi) = (i.min(j), i.max(j));
            // move strand hi down to position lo + 1 with virtual crossings
            let approach: Vec<Letter> = (lo + 1..hi).rev().map(|p| Letter::Virtual { i: p + 1 }).collect();
            let sign: i8 = if n[i][j] > 0 { 1 } else { -1 };
            for _ in 0..n[i][j].unsigned_abs() {
                letters.extend(approach.iter().copied());
                letters.extend(clasp(lo + 1, i == lo, sign));
                letters.extend(approach.iter().rev().copied());
            }
        }
    }
    Ok(VirtualLinkDiagram::closure(VirtualBraidWord::new(k, letters)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn parsing() {
        let w = VirtualBraidWord::parse("s1 s1^-1 v2", None).unwrap();
        assert_eq!(w.strands(), 3);
        assert_eq!(w.to_string(), "s1 s1^-1 v2");
        assert!(VirtualBraidWord::parse("s0", None).is_err());
        assert!(VirtualBraidWord::parse("s3", Some(3)).is_err());
    }

    #[test]
    fn hopf_links() {
        assert_eq!(virtual_hopf(1).vlk(), vec![vec![0, 1], vec![0, 0]]);
        assert_eq!(virtual_hopf(-1).vlk(), vec![vec![0, -1], vec![0, 0]]);
        let unknot = VirtualLinkDiagram::closure(VirtualBraidWord::new(1, vec![]).unwrap());
        assert_eq!(unknot.vlk(), vec![vec![0]]);
    }

    #[test]
    fn prescribed_round_trip() {
        let n = vec![vec![0, -3, 2], vec![1, 0, 0], vec![0, -1, 0]];
        let d = prescribed_vlk_link(&n).unwrap();
        assert_eq!(d.component_count(), 3);
        assert_eq!(d.vlk(), n);
    }

    #[test]
    fn trefoil_components() {
        let t = VirtualLinkDiagram::closure(VirtualBraidWord::trefoil());
        assert_eq!(t.component_count(), 1);
        assert_eq!(t.vlk(), vec![vec![3]]);
    }

    #[test]
    fn loops_are_components() {
        let w = VirtualBraidWord::trefoil();
        let d = VirtualLinkDiagram::new(w, vec![VirtualLoop { position: 1, pos: 3, sign: -1, color: None }]).unwrap();
        let vlk = d.vlk();
        assert_eq!(vlk[1][0], -1);
        assert_eq!(vlk[0][1], 0);
        let text = d.to_text(|c| alloc::format!("{c}"));
        let back = VirtualLinkDiagram::parse(&text, |s| s.parse().map_err(|_| Error::InvalidArgument(s.into()))).unwrap();
        assert_eq!(back, d);
    }
}
