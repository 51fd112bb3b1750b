use proptest::prelude::*;
use quandle_core::chain::{Chain, ChainComplex, ComplexKind};
use quandle_core::cocycle::{Cocycle2, CocycleSpace, CyclicGroup};
use quandle_core::homology::{homology_descriptor, uct_cohomology, uct_homology, cohomology};
use quandle_core::poly::LaurentPoly;
use quandle_core::vknot::coloring::{cycle_from_coloring, enumerate_colorings, propagate, state_sum, trivial_quandle_statesum_formula};
use quandle_core::vknot::diagram::prescribed_vlk_link;
use quandle_core::vknot::moves::{insert_relator, move_variants};
use quandle_core::vknot::{enumerate_shadow_colorings, fig5_family, shadow_cycle, Letter, VirtualBraidWord, VirtualLinkDiagram, VirtualLoop};
use quandle_core::{Coeffs, FiniteQuandle, Int};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn s4() -> FiniteQuandle {
    let h: LaurentPoly = "T^2+T+1".parse().unwrap();
    quandle_core::alexander::AlexanderQuandle::new(2, &h).unwrap().into_quandle()
}

fn small_quandle(k: usize) -> FiniteQuandle {
    match k % 6 {
        0 => FiniteQuandle::dihedral(3),
        1 => FiniteQuandle::dihedral(4),
        2 => FiniteQuandle::dihedral(5),
        3 => FiniteQuandle::qs5(),
        4 => s4(),
        _ => FiniteQuandle::trivial(3),
    }
}

fn letter() -> impl Strategy<Value = (u8, usize, bool)> {
    (0u8..3, 1usize..3, any::<bool>())
}

fn word(strands: usize, raw: &[(u8, usize, bool)]) -> VirtualBraidWord {
    let letters = raw
        .iter()
        .map(|&(k, i, pos)| {
            let i = (i - 1) % (strands - 1) + 1;
            if k == 0 {
                Letter::Virtual { i }
            } else {
                Letter::Sigma { i, sign: if pos { 1 } else { -1 } }
            }
        })
        .collect();
    VirtualBraidWord::new(strands, letters).unwrap()
}

/// Equal up to relabelling components.
fn same_linking(a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for k in 0..n {
                let mut q = p.clone();
                q.insert(k, n - 1);
                out.push(q);
            }
        }
        out
    }
    a.len() == b.len()
        && perms(a.len()).into_iter().any(|p| (0..a.len()).all(|i| (0..a.len()).all(|j| a[i][j] == b[p[i]][p[j]])))
}

fn random_cocycle(x: &FiniteQuandle, group: CyclicGroup, seed: u64) -> Cocycle2 {
    let space = CocycleSpace::new(x, group).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coeffs: Vec<i64> = (0..space.generators.len()).map(|_| rand::Rng::gen_range(&mut rng, -2..3)).collect();
    space.combination(&coeffs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn boundary_squares_to_zero(k in 0usize..6, n in 2usize..5, terms in proptest::collection::vec((any::<u64>(), -3i64..4), 1..12)) {
        let x = small_quandle(k);
        let m = x.size();
        let mut c = Chain::zero(m, n);
        for (code, coef) in terms {
            let t: Vec<usize> = (0..n).map(|i| ((code >> (8 * i)) as usize) % m).collect();
            c.add_term(&t, &Int::from(coef));
        }
        for kind in [ComplexKind::R, ComplexKind::D, ComplexKind::Q] {
            let cx = ChainComplex::new(&x, kind).unwrap();
            let c = c.project(kind);
            prop_assert!(cx.boundary_of(&cx.boundary_of(&c)).is_zero());
        }
    }

    #[test]
    fn generator_counts(m in 1usize..6, n in 1usize..6) {
        let x = FiniteQuandle::trivial(m);
        let r = (m as u128).pow(n as u32);
        let q = m as u128 * ((m - 1) as u128).pow(n as u32 - 1);
        prop_assert_eq!(ChainComplex::new(&x, ComplexKind::R).unwrap().rank(n).unwrap(), r);
        prop_assert_eq!(ChainComplex::new(&x, ComplexKind::Q).unwrap().rank(n).unwrap(), q);
        prop_assert_eq!(ChainComplex::new(&x, ComplexKind::D).unwrap().rank(n).unwrap(), r - q);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn universal_coefficients(k in 0usize..6, n in 1usize..4, p in prop::sample::select(vec![2u64, 3, 4, 6])) {
        let x = small_quandle(k);
        for kind in [ComplexKind::R, ComplexKind::Q] {
            let cx = ChainComplex::new(&x, kind).unwrap();
            let hn = homology_descriptor(&cx, n, Coeffs::Z).unwrap();
            let hnm1 = homology_descriptor(&cx, n - 1, Coeffs::Z).unwrap();
            prop_assert_eq!(homology_descriptor(&cx, n, Coeffs::Mod(p)).unwrap(), uct_homology(&hn, &hnm1, Coeffs::Mod(p)));
            prop_assert_eq!(cohomology(&cx, n, Coeffs::Mod(p)).unwrap(), uct_cohomology(&hn, &hnm1, Coeffs::Mod(p)));
        }
    }

    #[test]
    fn state_sum_survives_moves(q in 0usize..3, strands in 2usize..4, raw in proptest::collection::vec(letter(), 0..7), seed in any::<u64>()) {
        let (x, group) = match q {
            0 => (FiniteQuandle::dihedral(3), CyclicGroup::cyclic(3)),
            1 => (s4(), CyclicGroup::cyclic(2)),
            _ => (FiniteQuandle::trivial(3), CyclicGroup::cyclic(0)),
        };
        let phi = random_cocycle(&x, group, seed);
        let w = word(strands, &raw);
        let d = VirtualLinkDiagram::closure(w.clone());
        let base = state_sum(&d, &x, &phi).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for v in move_variants(&w, 4, &mut rng) {
            let dv = VirtualLinkDiagram::closure(v);
            prop_assert_eq!(&state_sum(&dv, &x, &phi).unwrap(), &base);
            prop_assert!(same_linking(&dv.vlk(), &d.vlk()));
        }
    }

    #[test]
    fn state_sum_with_loops_survives_relators(raw in proptest::collection::vec(letter(), 1..6), at in 0usize..6, sign in any::<bool>(), seed in any::<u64>()) {
        let x = s4();
        let phi = random_cocycle(&x, CyclicGroup::cyclic(2), seed);
        let w = word(2, &raw);
        let lp = VirtualLoop { position: 1 + seed as usize % 2, pos: at % (w.len() + 1), sign: if sign { 1 } else { -1 }, color: None };
        let d = VirtualLinkDiagram::new(w, vec![lp]).unwrap();
        let base = state_sum(&d, &x, &phi).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let dv = insert_relator(&d, &mut rng);
        prop_assert_eq!(state_sum(&dv, &x, &phi).unwrap(), base);
    }

    #[test]
    fn cohomologous_cocycles_agree(q in 0usize..3, strands in 2usize..4, raw in proptest::collection::vec(letter(), 0..6), seed in any::<u64>(), psi in proptest::collection::vec(-3i64..4, 4)) {
        let (x, group) = match q {
            0 => (FiniteQuandle::dihedral(3), CyclicGroup::cyclic(3)),
            1 => (s4(), CyclicGroup::cyclic(2)),
            _ => (FiniteQuandle::trivial(3), CyclicGroup::cyclic(0)),
        };
        let phi = random_cocycle(&x, group.clone(), seed);
        let psi: Vec<Vec<i64>> = (0..x.size()).map(|a| vec![psi[a % psi.len()]]).collect();
        let shifted = phi.add(&Cocycle2::coboundary_of(&x, group, &psi));
        let d = VirtualLinkDiagram::closure(word(strands, &raw));
        prop_assert_eq!(state_sum(&d, &x, &phi).unwrap(), state_sum(&d, &x, &shifted).unwrap());
    }

    #[test]
    fn trivial_quandle_closed_form(strands in 2usize..4, raw in proptest::collection::vec(letter(), 0..8), seed in any::<u64>()) {
        let x = FiniteQuandle::trivial(2);
        let phi = random_cocycle(&x, CyclicGroup::cyclic(0), seed);
        let d = VirtualLinkDiagram::closure(word(strands, &raw));
        prop_assert_eq!(trivial_quandle_statesum_formula(&d, &x, &phi).unwrap(), state_sum(&d, &x, &phi).unwrap());
    }

    #[test]
    fn colorings_are_local_and_give_cycles(k in 0usize..6, strands in 2usize..4, raw in proptest::collection::vec(letter(), 0..7)) {
        let x = small_quandle(k);
        let d = VirtualLinkDiagram::closure(word(strands, &raw));
        let r2 = ChainComplex::new(&x, ComplexKind::R).unwrap();
        let colorings = enumerate_colorings(&d, &x).unwrap();
        prop_assert!(colorings.len() >= x.size());
        for c in &colorings {
            for t in propagate(&d, &x, c).1 {
                prop_assert!(t.x < x.size() && t.y < x.size());
            }
            prop_assert!(r2.boundary_of(&cycle_from_coloring(&d, &x, c)).is_zero());
        }
    }

    #[test]
    fn shadow_cycles_are_cycles(k in 0usize..6, raw in proptest::collection::vec((1usize..3, any::<bool>()), 0..6)) {
        let x = small_quandle(k);
        let letters = raw.iter().map(|&(i, s)| Letter::Sigma { i, sign: if s { 1 } else { -1 } }).collect();
        let d = VirtualLinkDiagram::closure(VirtualBraidWord::new(3, letters).unwrap());
        let r = ChainComplex::new(&x, ComplexKind::R).unwrap();
        for sc in enumerate_shadow_colorings(&d, &x).unwrap() {
            prop_assert!(r.boundary_of(&shadow_cycle(&d, &x, &sc).unwrap()).is_zero());
        }
    }

    #[test]
    fn prescribed_linking_round_trips(entries in proptest::collection::vec(-3i64..4, 9)) {
        let n: Vec<Vec<i64>> = (0..3).map(|i| (0..3).map(|j| if i == j { 0 } else { entries[3 * i + j] }).collect()).collect();
        let d = prescribed_vlk_link(&n).unwrap();
        prop_assert_eq!(d.vlk(), n);
    }

    #[test]
    fn fig5_identity(coeffs in proptest::collection::vec(-5i64..6, 1..7)) {
        // c_1 T + ... + c_6 T^6 - (c_1 + ... + c_6)
        let mut c = vec![-coeffs.iter().sum::<i64>()];
        c.extend(&coeffs);
        let h = LaurentPoly::from_coeffs(0, &c);
        prop_assume!(!h.is_zero());
        prop_assert!(fig5_family(&h).unwrap().identity_holds());
    }
}
