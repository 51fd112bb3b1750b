//! Random rewrites of virtual braid words that preserve the closed diagram
//! up to virtual equivalence.

use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use super::diagram::{Letter, VirtualBraidWord, VirtualLinkDiagram, VirtualLoop};

fn s(i: usize, sign: i8) -> Letter {
    Letter::Sigma { i, sign }
}

fn v(i: usize) -> Letter {
    Letter::Virtual { i }
}

/// A relator that acts trivially: one of `s_i s_i^-1`, `v_i v_i`, or the
/// braid, virtual and mixed relations written as `lhs rhs^-1`.
fn random_relator<R: Rng>(strands: usize, rng: &mut R) -> Vec<Letter> {
    let choices = if strands >= 3 { 5 } else { 2 };
    let kind = rng.gen_range(0..choices);
    let i = rng.gen_range(1..strands);
    match kind {
        0 => {
            let e: i8 = if rng.gen_bool(0.5) { 1 } else { -1 };
            vec![s(i, e), s(i, -e)]
        }
        1 => vec![v(i), v(i)],
        _ => {
            let i = rng.gen_range(1..strands - 1);
            let j = i + 1;
            match kind {
                2 => {
                    // s_i s_j s_i = s_j s_i s_j
                    let (a, b) = if rng.gen_bool(0.5) { (i, j) } else { (j, i) };
                    vec![s(a, 1), s(b, 1), s(a, 1), s(b, -1), s(a, -1), s(b, -1)]
                }
                3 => vec![v(i), v(j), v(i), v(j), v(i), v(j)],
                _ => {
                    // v_i s_j v_i = v_j s_i v_j
                    let e: i8 = if rng.gen_bool(0.5) { 1 } else { -1 };
                    vec![v(i), s(j, e), v(i), v(j), s(i, -e), v(j)]
                }
            }
        }
    }
}

/// Rewrites occurrences of `s_i s_j s_i` as `s_j s_i s_j` (|i - j| = 1), and
/// the virtual and mixed analogues, at the first match from `start`.
fn rewrite_once(letters: &[Letter], start: usize) -> Option<Vec<Letter>> {
    let n = letters.len();
    for k in (start..n.saturating_sub(2)).chain(0..start.min(n.saturating_sub(2))) {
        let (a, b, c) = (letters[k], letters[k + 1], letters[k + 2]);
        let rep = match (a, b, c) {
            (Letter::Sigma { i, sign: 1 }, Letter::Sigma { i: j, sign: 1 }, Letter::Sigma { i: i2, sign: 1 })
                if i == i2 && i.abs_diff(j) == 1 =>
            {
                Some([s(j, 1), s(i, 1), s(j, 1)])
            }
            (Letter::Virtual { i }, Letter::Virtual { i: j }, Letter::Virtual { i: i2 }) if i == i2 && i.abs_diff(j) == 1 => {
                Some([v(j), v(i), v(j)])
            }
            (Letter::Virtual { i }, Letter::Sigma { i: j, sign }, Letter::Virtual { i: i2 }) if i == i2 && i.abs_diff(j) == 1 => {
                Some([v(j), s(i, sign), v(j)])
            }
            _ => None,
        };
        if let Some(r) = rep {
            let mut out = letters.to_vec();
            out[k..k + 3].copy_from_slice(&r);
            return Some(out);
        }
    }
    None
}

/// Variants of the word: relators inserted at random positions, one
/// relation rewritten in place when a match exists, and a cyclic rotation.
pub fn move_variants<R: Rng>(w: &VirtualBraidWord, count: usize, rng: &mut R) -> Vec<VirtualBraidWord> {
    let mut out = Vec::with_capacity(count + 2);
    let strands = w.strands();
    if strands >= 2 {
        for _ in 0..count {
            let mut letters = w.letters().to_vec();
            let at = rng.gen_range(0..=letters.len());
            let rel = random_relator(strands, rng);
            letters.splice(at..at, rel);
            out.push(VirtualBraidWord::new(strands, letters).expect("indices in range"));
        }
    }
    if !w.is_empty() {
        let start = rng.gen_range(0..w.len());
        if let Some(r) = rewrite_once(w.letters(), start) {
            out.push(VirtualBraidWord::new(strands, r).expect("indices in range"));
        }
        let k = rng.gen_range(0..w.len());
        let mut rot = w.letters()[k..].to_vec();
        rot.extend_from_slice(&w.letters()[..k]);
        out.push(VirtualBraidWord::new(strands, rot).expect("indices in range"));
    }
    out
}

/// Inserts a trivial relator into a diagram's word, shifting loops below
/// the insertion point.
pub fn insert_relator<R: Rng>(d: &VirtualLinkDiagram, rng: &mut R) -> VirtualLinkDiagram {
    let w = d.word();
    if w.strands() < 2 {
        return d.clone();
    }
    let mut letters = w.letters().to_vec();
    let at = rng.gen_range(0..=letters.len());
    let rel = random_relator(w.strands(), rng);
    let len = rel.len();
    letters.splice(at..at, rel);
    let loops: Vec<VirtualLoop> =
        d.loops().iter().map(|l| VirtualLoop { pos: if l.pos > at { l.pos + len } else { l.pos }, ..l.clone() }).collect();
    VirtualLinkDiagram::new(VirtualBraidWord::new(w.strands(), letters).expect("indices in range"), loops).expect("loops fit")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn variants_keep_linking_numbers() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let w = VirtualBraidWord::parse("s1 v2 s2^-1 s1 v1", None).unwrap();
        let d = VirtualLinkDiagram::closure(w.clone());
        for v in move_variants(&w, 20, &mut rng) {
            let dv = VirtualLinkDiagram::closure(v);
            assert_eq!(dv.component_count(), d.component_count());
            assert_eq!(dv.vlk().len(), d.vlk().len());
        }
    }

    #[test]
    fn rewrite_finds_relations() {
        let w = VirtualBraidWord::parse("s1 s2 s1", None).unwrap();
        assert_eq!(rewrite_once(w.letters(), 0).unwrap(), VirtualBraidWord::parse("s2 s1 s2", None).unwrap().letters());
    }
}
