use bettiforge::aci::link_betti;
use bettiforge::exact::Poly;
use bettiforge::multiset::IntMultiset;
use bettiforge::structure::{
    build_aci_complex, random_graded_alternating, verify_complex, AlternatingPresentation,
    GradedComplex,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn generic(seed: u64, degrees: &[i64], g: [usize; 3], nvars: usize) -> AlternatingPresentation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = random_graded_alternating(&mut rng, degrees, nvars).unwrap();
    AlternatingPresentation::new(m, g, degrees.to_vec()).unwrap()
}

fn twists(cx: &GradedComplex) -> [IntMultiset; 3] {
    [
        cx.modules[1].multiset(),
        cx.modules[2].multiset(),
        cx.modules[3].multiset(),
    ]
}

fn check_against_link(pres: &AlternatingPresentation) {
    let cx = build_aci_complex(pres).unwrap();
    let report = verify_complex(&cx);
    assert!(report.all_ok(), "{report:?}");
    assert_eq!(cx.modules[0].twists, vec![0]);

    let gens = IntMultiset::from(pres.slot_degrees.as_slice());
    let ci = pres.g_slots.map(|i| pres.slot_degrees[i]);
    let mut sorted = ci;
    sorted.sort();
    let link = link_betti(&gens, pres.theta_g().unwrap(), sorted, &IntMultiset::new()).unwrap();
    assert_eq!(twists(&cx), link.resolution);
}

#[test]
fn five_by_five_matches_link_bookkeeping() {
    for (degrees, g) in [
        (vec![2; 5], [0, 1, 2]),
        (vec![2; 5], [4, 2, 0]),
        (vec![2, 2, 3, 3, 4], [0, 1, 4]),
        (vec![2, 2, 3, 3, 4], [2, 3, 4]),
        (vec![3, 3, 3, 3, 4], [1, 2, 4]),
    ] {
        check_against_link(&generic(11, &degrees, g, 3));
    }
}

#[test]
fn seven_by_seven_matches_link_bookkeeping() {
    for (degrees, g) in [
        (vec![3; 7], [0, 1, 2]),
        (vec![3, 3, 3, 3, 4, 4, 4], [0, 4, 6]),
    ] {
        check_against_link(&generic(12, &degrees, g, 3));
    }
}

#[test]
fn ranks_and_degrees_of_the_generic_five() {
    let pres = generic(1, &[2; 5], [0, 1, 2], 3);
    let cx = build_aci_complex(&pres).unwrap();
    let report = verify_complex(&cx);
    assert_eq!(report.ranks, vec![1, 4, 5, 2]);
    assert_eq!(report.rank_alternating_sum, 0);
    // d0 = θ_Z - θ_G = 6 - 5
    assert_eq!(
        twists(&cx),
        [
            IntMultiset::from([1, 2, 2, 2]),
            IntMultiset::from([3, 3, 3, 3, 3]),
            IntMultiset::from([4, 4]),
        ]
    );
}

#[test]
fn colon_certificates_on_seven() {
    let bl = generic(5, &[3; 7], [1, 3, 5], 3).blocks().unwrap();
    for (k, c) in bl.colon_certificates().unwrap().iter().enumerate() {
        let lhs: Poly = c.iter().zip(&bl.pf_psi).map(|(a, b)| a * b).sum();
        assert_eq!(lhs, &bl.p * &bl.sigma[k]);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn generic_fives_are_complexes(seed in any::<u64>(), a in 0usize..5, b in 0usize..5, c in 0usize..5) {
        prop_assume!(a != b && b != c && a != c);
        let pres = generic(seed, &[1, 1, 2, 2, 2], [a, b, c], 3);
        prop_assert!(verify_complex(&build_aci_complex(&pres).unwrap()).all_ok());
        prop_assert_eq!(pres.blocks().unwrap().lifted_psi().unwrap(), pres.blocks().unwrap().psi().matrix().clone());
    }
}
