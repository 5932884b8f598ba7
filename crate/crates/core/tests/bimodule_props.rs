use homalt::algebra::{Element, HomAlgebra};
use homalt::bimodule::{
    bimodule_irreducibility, check_alternative_bimodule, direct_sum_bimodules, is_hom_bimodule,
    ker_im_subbimodules, subbimodule_spin, twist_bimodule, untwist_bimodule, BimoduleAxiom, HomBimodule,
    SlotPattern,
};
use homalt::cli::fixtures;
use homalt::constructions::untwist;
use homalt::error::Error;
use homalt::exactlin::{int, unit_vector, Matrix, Subspace};
use homalt::random::{hom_associative, random_vector, regular_bimodule, rng, Rng64};
use homalt::structure::{hom_ideal_closure, DEFAULT_BUDGET};
use proptest::prelude::*;

fn element(r: &mut Rng64, n: usize) -> Element {
    Element::new(random_vector(r, n, 3))
}

fn chain_vanishes_on_random_elements(bim: &HomBimodule, seed: u64, samples: usize) {
    let (n, m) = (bim.base().dim(), bim.dim());
    let mut r = rng(seed);
    for _ in 0..samples {
        let (a, b, v) = (element(&mut r, n), element(&mut r, n), element(&mut r, m));
        let ava = bim.module_hom_associator(SlotPattern::AVA, &a, &v, &b).unwrap();
        let vaa = bim.module_hom_associator(SlotPattern::VAA, &v, &a, &b).unwrap();
        let baav = bim.module_hom_associator(SlotPattern::AAV, &b, &a, &v).unwrap();
        let abv = bim.module_hom_associator(SlotPattern::AAV, &a, &b, &v).unwrap();
        assert!((&ava + &vaa).is_zero());
        assert!((&vaa + &baav).is_zero());
        assert!((&baav + &abv).is_zero());
    }
}

fn spin_laws(bim: &HomBimodule, r: &mut Rng64) {
    let m = bim.dim();
    let small = Subspace::canonicalize(&[random_vector(r, m, 2)], m).unwrap();
    let big = small.sum(&Subspace::canonicalize(&[random_vector(r, m, 2)], m).unwrap()).unwrap();
    let cs = subbimodule_spin(bim, &small).unwrap();
    assert!(cs.contains(&small).unwrap());
    assert!(subbimodule_spin(bim, &big).unwrap().contains(&cs).unwrap());
    assert_eq!(subbimodule_spin(bim, &cs).unwrap(), cs);
}

#[test]
fn regular_octonion_bimodule_checks() {
    let bim = HomBimodule::regular(&fixtures::oct_alpha());
    assert!(is_hom_bimodule(&bim).all_hold());
    chain_vanishes_on_random_elements(&bim, 1, 200);
    // A(x)V(x)A on the regular bimodule is the algebra associator.
    let alg = fixtures::oct_alpha();
    let (a, v, b) = (Element::basis(8, 1), Element::basis(8, 2), Element::basis(8, 3));
    let module = bim.module_hom_associator(SlotPattern::AVA, &a, &v, &b).unwrap();
    let algebra = alg.hom_associator(&a, &v, &b).unwrap();
    assert!(!algebra.is_zero());
    assert_eq!(module, algebra);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn basis_check_is_complete(seed in any::<u64>(), n in 1usize..=3, doubled in any::<bool>()) {
        let bim = regular_bimodule(seed, n, doubled);
        prop_assert!(is_hom_bimodule(&bim).all_hold());
        chain_vanishes_on_random_elements(&bim, seed, 200);
    }

    #[test]
    fn spin_is_a_closure_operator(seed in any::<u64>(), n in 1usize..=3, doubled in any::<bool>()) {
        let bim = regular_bimodule(seed, n, doubled);
        spin_laws(&bim, &mut rng(seed));
    }

    #[test]
    fn regular_spin_is_ideal_closure(seed in any::<u64>(), n in 1usize..=4) {
        let alg = hom_associative(seed, n, false);
        let bim = HomBimodule::regular(&alg);
        let s = Subspace::canonicalize(&[random_vector(&mut rng(seed), n, 2)], n).unwrap();
        prop_assert_eq!(subbimodule_spin(&bim, &s).unwrap(), hom_ideal_closure(&alg, &s).unwrap());
    }

    #[test]
    fn twist_untwist_round_trip(seed in any::<u64>(), n in 1usize..=3) {
        let bim = HomBimodule::regular(&hom_associative(seed, n, true));
        let induced = untwist(bim.base()).unwrap().induced;
        let plain = untwist_bimodule(&bim, &induced).unwrap();
        prop_assert!(plain.twist().is_identity());
        // Identity-twist specialization: both checkers agree.
        prop_assert_eq!(is_hom_bimodule(&plain).flags(), check_alternative_bimodule(&plain).flags());
        prop_assert!(check_alternative_bimodule(&plain).all_hold());
        let back = twist_bimodule(&plain, bim.base().twist(), bim.twist()).unwrap();
        prop_assert_eq!(back, bim);
    }

    #[test]
    fn corrupted_actions_are_caught(seed in any::<u64>(), n in 2usize..=3) {
        let bim = regular_bimodule(seed, n, false);
        let mut left = bim.left_constants().to_vec();
        let idx = (seed as usize) % left.len();
        left[idx] += int(1);
        let bad = HomBimodule::new("bad", bim.base().clone(), bim.twist().clone(), left, bim.right_constants().to_vec()).unwrap();
        // Some perturbations land on another bimodule; failures must re-verify.
        let report = is_hom_bimodule(&bad);
        for axiom in BimoduleAxiom::ALL {
            if let Some(w) = report.witness(axiom) {
                prop_assert_eq!(&bad.witness_defect(axiom, &w.indices).unwrap(), &w.defect);
                prop_assert!(w.defect.iter().any(|x| x != &int(0)));
            }
        }
    }

    #[test]
    fn kernel_flag_always_holds(seed in any::<u64>(), n in 1usize..=4) {
        let bim = regular_bimodule(seed, n, seed % 2 == 0);
        let ki = ker_im_subbimodules(&bim);
        prop_assert!(ki.kernel_is_subbimodule);
        if ki.image_asserted {
            prop_assert!(ki.image_is_subbimodule);
        }
    }
}

#[test]
fn untwisted_regular_modules_on_fixtures() {
    for name in fixtures::NAMES {
        let alg = fixtures::algebra(name).unwrap();
        let bim = HomBimodule::regular(&alg);
        let verdict = bimodule_irreducibility(&bim, 0, DEFAULT_BUDGET);
        if verdict.verdict.is_yes() {
            // Irreducible modules of nonzero dimension have invertible twist.
            assert!(bim.twist().is_invertible(), "{name}");
        }
        if !bim.twist().is_invertible() || !alg.check_identities().is_hom_alternative() {
            continue;
        }
        let induced = untwist(&alg).unwrap().induced;
        let plain = untwist_bimodule(&bim, &induced).unwrap();
        assert!(check_alternative_bimodule(&plain).all_hold(), "{name}");
        assert_eq!(twist_bimodule(&plain, alg.twist(), bim.twist()).unwrap(), bim, "{name}");
        if bimodule_irreducibility(&plain, 0, DEFAULT_BUDGET).verdict.is_yes() {
            assert!(verdict.verdict.is_yes(), "{name}");
        }
    }
}

#[test]
fn bimodule_examples() {
    let a7 = HomBimodule::regular(&fixtures::a7_3());
    for pattern in [SlotPattern::VAA, SlotPattern::AVA, SlotPattern::AAV] {
        assert!(a7.pattern_table(pattern).iter().all(|v| v.iter().all(|x| x == &int(0))));
    }
    let a3p = HomBimodule::regular(&fixtures::a3p_3());
    assert!(is_hom_bimodule(&a3p).all_hold());
    let e1 = Subspace::canonicalize(&[unit_vector(3, 0)], 3).unwrap();
    assert_eq!(subbimodule_spin(&a3p, &e1).unwrap(), Subspace::coordinate(3, &[0, 2]).unwrap());
    let oct = HomBimodule::regular(&fixtures::oct_alpha());
    let e5 = Subspace::canonicalize(&[unit_vector(8, 5)], 8).unwrap();
    assert!(subbimodule_spin(&oct, &e5).unwrap().is_full());

    // Pattern arguments in the wrong slots are refused.
    let bad = a3p.module_hom_associator(SlotPattern::VAA, &Element::zero(2), &Element::zero(3), &Element::zero(3));
    assert!(matches!(bad, Err(Error::PatternMismatch(_))));

    // Regular bimodule of mu(e, e) = e.
    let line = HomAlgebra::from_entries("line", vec!["e".into()], &[(0, 0, 0, int(1))], Matrix::identity(1)).unwrap();
    let reg = HomBimodule::regular(&line);
    assert_eq!(reg.left_constants(), &[int(1)]);
    assert_eq!(reg.right_constants(), &[int(1)]);
    assert!(reg.twist().is_identity());

    // Zero module: vacuous associators and conventional irreducibility.
    let zero = HomBimodule::new("zero", line.clone(), Matrix::zeros(0, 0), Vec::new(), Vec::new()).unwrap();
    assert!(is_hom_bimodule(&zero).all_hold());
    assert!(bimodule_irreducibility(&zero, 0, DEFAULT_BUDGET).verdict.is_yes());

    // Split fixture: Ker(alpha_V) = span(e2).
    let split = ker_im_subbimodules(&HomBimodule::regular(&fixtures::split2()));
    assert_eq!(split.kernel, Subspace::coordinate(2, &[1]).unwrap());
    assert!(split.kernel_is_subbimodule);
    assert!(!split.image_asserted);

    // Random compatibility candidate refused.
    let plain = HomBimodule::regular(&fixtures::oct());
    let random = Matrix::new(8, 8, random_vector(&mut rng(9), 64, 2)).unwrap();
    assert!(matches!(
        twist_bimodule(&plain, &Matrix::identity(8), &random),
        Err(Error::Incompatible(_))
    ));
    let doubled = direct_sum_bimodules(&a3p, &a3p).unwrap();
    assert_eq!(doubled.dim(), 6);
    assert!(is_hom_bimodule(&doubled).all_hold());
}

#[test]
fn corrupted_octonion_action_fails_with_replayable_witness() {
    let bim = HomBimodule::regular(&fixtures::oct_alpha());
    let mut left = bim.left_constants().to_vec();
    left[(1 * 8 + 2) * 8 + 3] += int(1);
    let bad = HomBimodule::new("bad", bim.base().clone(), bim.twist().clone(), left, bim.right_constants().to_vec()).unwrap();
    let report = is_hom_bimodule(&bad);
    assert!(!report.all_hold());
    let failing: Vec<_> = BimoduleAxiom::ALL.into_iter().filter(|a| !report.holds(*a)).collect();
    assert!(!failing.is_empty());
    for axiom in failing {
        let w = report.witness(axiom).unwrap();
        assert_eq!(bad.witness_defect(axiom, &w.indices).unwrap(), w.defect);
    }
}

#[test]
fn kernel_flag_is_conditional_on_the_axioms() {
    // Base span(a) with mu = 0 and alpha_A = 0; V = span(v1, v2) with
    // rho_l(a, v1) = v2 and alpha_V the projection on v2. Intertwining
    // fails, and Ker(alpha_V) = span(v1) is not closed.
    let base = HomAlgebra::from_entries("null", vec!["a".into()], &[], Matrix::zeros(1, 1)).unwrap();
    let twist = Matrix::from_i64_rows(&[&[0, 0], &[0, 1]]);
    let bim = HomBimodule::from_entries("v", base, twist, &[(0, 0, 1, int(1))], &[]).unwrap();
    assert!(!is_hom_bimodule(&bim).holds(BimoduleAxiom::LeftIntertwining));
    let ki = ker_im_subbimodules(&bim);
    assert_eq!(ki.kernel, Subspace::coordinate(2, &[0]).unwrap());
    assert!(!ki.kernel_is_subbimodule);
    assert!(!ki.image_asserted);
}
