use bettiforge::aci::{
    check_betti, decompose, enumerate, link_betti, AciBetti, EnumerationBounds, Rejection,
    Stage3Failure,
};
use bettiforge::gorenstein::sample_admissible;
use bettiforge::multiset::IntMultiset;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn ms(v: &[i64]) -> IntMultiset {
    IntMultiset::from(v)
}

fn betti(d: &[i64], e: &[i64], f: &[i64]) -> AciBetti {
    AciBetti::new(ms(d), ms(e), ms(f)).unwrap()
}

fn example(n: usize) -> AciBetti {
    match n {
        1 => betti(
            &[3, 6, 6, 6],
            &[8, 8, 8, 10, 10, 10, 12, 12, 12, 12],
            &[9, 11, 11, 11, 13, 13, 13],
        ),
        2 => betti(
            &[2, 5, 5, 7],
            &[7, 7, 7, 9, 9, 9, 10, 11],
            &[8, 10, 10, 10, 12],
        ),
        3 => betti(&[4, 5, 5, 9], &[9, 9, 9, 11, 11, 11, 13], &[12, 12, 12, 14]),
        4 => betti(
            &[4, 5, 5, 9],
            &[9, 9, 9, 10, 11, 11, 11, 13],
            &[10, 12, 12, 12, 14],
        ),
        _ => unreachable!(),
    }
}

#[test]
fn first_example_fails_dominance() {
    let b = example(1);
    let dec = decompose(&b).unwrap();
    assert_eq!((dec.theta_z, dec.theta_g, dec.d), (18, 15, 21));
    assert_eq!(dec.s, ms(&[6, 6, 6]));
    let v = check_betti(&b);
    assert!(!v.admissible);
    assert_eq!(v.stage, Some(3));
    let g = v.beta_g.as_ref().unwrap();
    assert_eq!(*g.gens(), ms(&[5, 5, 5, 7, 7, 7, 9]));
    assert_eq!(g.syzygies(), ms(&[6, 8, 8, 8, 10, 10, 10]));
    assert_eq!(v.mci.unwrap().degrees, [5, 5, 7]);
    assert_eq!(v.witness, "(6,6,6) \u{2271} (5,5,7)");
}

#[test]
fn second_example_fails_strictness() {
    let b = example(2);
    let dec = decompose(&b).unwrap();
    assert_eq!((dec.theta_z, dec.theta_g, dec.d), (17, 15, 19));
    assert_eq!(dec.s, ms(&[7]));
    let v = check_betti(&b);
    assert_eq!(v.stage, Some(3));
    assert_eq!(
        *v.beta_g.as_ref().unwrap().gens(),
        ms(&[5, 5, 5, 7, 7, 7, 9])
    );
    assert_eq!(
        v.rejection,
        Some(Rejection::Stage3(Stage3Failure::Strictness {
            s: 7,
            i: 3,
            d_i: 7,
            e_i: 7
        }))
    );
}

#[test]
fn third_and_fourth_examples_are_admissible() {
    for n in [3, 4] {
        let v = check_betti(&example(n));
        assert!(v.admissible, "example {n}: {}", v.witness);
        assert_eq!(v.stage, None);
    }
    let dec = decompose(&example(4)).unwrap();
    assert_eq!(dec.s, ms(&[9]));
    assert_eq!(dec.dbar, ms(&[5, 5]));
    assert_eq!(dec.ehat, ms(&[9, 9, 10]));
}

#[test]
fn verdict_json_shape() {
    let v = serde_json::to_value(check_betti(&example(1))).unwrap();
    assert_eq!(v["admissible"], false);
    assert_eq!(v["stage"], 3);
    assert_eq!(v["mci"], serde_json::json!([5, 5, 7]));
    assert_eq!(v["beta_G"]["G0"], serde_json::json!([5, 5, 5, 7, 7, 7, 9]));
    assert_eq!(v["beta_G"]["G2"], serde_json::json!([15]));
    let v = serde_json::to_value(check_betti(&example(3))).unwrap();
    assert_eq!(v["admissible"], true);
    assert!(v["stage"].is_null());
}

#[test]
fn decomposition_invariants_hold_on_enumerated_sequences() {
    for b in enumerate(EnumerationBounds {
        max_degree: 10,
        max_f: 4,
    }) {
        let dec = decompose(&b).unwrap();
        assert_eq!(dec.s.sum(&dec.dbar), dec.dstar);
        assert_eq!(b.f().reflect(dec.d).sum(&dec.ehat), *b.e());
        let g = check_betti(&b).beta_g.unwrap();
        assert_eq!(g.syzygies().reflect(dec.theta_g), *g.gens());
    }
}

#[test]
fn verdict_is_independent_of_input_order() {
    let b = example(2);
    let shuffled: AciBetti =
        serde_json::from_str(r#"{"D":[7,5,2,5],"E":[11,9,7,10,9,7,9,7],"F":[12,10,8,10,10]}"#)
            .unwrap();
    assert_eq!(shuffled, b);
    assert_eq!(check_betti(&shuffled).witness, check_betti(&b).witness);
}

fn all_multisets(card: usize, lo: i64, hi: i64) -> Vec<IntMultiset> {
    if card == 0 {
        return vec![IntMultiset::new()];
    }
    let mut out = Vec::new();
    for first in lo..=hi {
        for rest in all_multisets(card - 1, first, hi) {
            let mut m = rest;
            m.insert(first, 1);
            out.push(m);
        }
    }
    out
}

#[test]
fn enumerator_matches_brute_force_on_tiny_bounds() {
    let bounds = EnumerationBounds {
        max_degree: 6,
        max_f: 2,
    };
    let mut brute = Vec::new();
    for d in all_multisets(4, 1, 6) {
        for f in all_multisets(2, 1, 6) {
            for e in all_multisets(5, 1, 6) {
                let b = AciBetti::new(d.clone(), e, f.clone()).unwrap();
                if check_betti(&b).admissible {
                    brute.push(b);
                }
            }
        }
    }
    brute.sort_by(|a, b| {
        (a.d().norm(), a.d(), a.f(), a.e()).cmp(&(b.d().norm(), b.d(), b.f(), b.e()))
    });
    assert_eq!(enumerate(bounds), brute);
}

#[test]
fn enumerator_matches_restricted_brute_force() {
    // every admissible sequence has d - F ⊆ E, so scanning E ⊇ d - F only
    // loses nothing
    let bounds = EnumerationBounds {
        max_degree: 8,
        max_f: 3,
    };
    let mut brute = Vec::new();
    for d in all_multisets(4, 1, 8) {
        let dn = d.norm();
        for p in 2..=3 {
            for f in all_multisets(p, 1, 8) {
                let forced = f.reflect(dn);
                if forced.iter().any(|e| !(1..=8).contains(&e)) {
                    continue;
                }
                for rest in all_multisets(3, 1, 8) {
                    let b = AciBetti::new(d.clone(), forced.sum(&rest), f.clone()).unwrap();
                    if check_betti(&b).admissible {
                        brute.push(b);
                    }
                }
            }
        }
    }
    brute.sort_by(|a, b| {
        (a.d().norm(), a.d(), a.f(), a.e()).cmp(&(b.d().norm(), b.d(), b.f(), b.e()))
    });
    brute.dedup();
    let found = enumerate(bounds);
    assert!(!found.is_empty());
    assert_eq!(found, brute);
}

#[test]
fn enumerator_reaches_third_example() {
    let found = enumerate(EnumerationBounds {
        max_degree: 14,
        max_f: 7,
    });
    assert!(found.contains(&example(3)));
    assert!(!found.contains(&example(1)));
    assert!(found.iter().all(|b| check_betti(b).admissible));
    let mut sorted = found.clone();
    sorted.dedup();
    assert_eq!(sorted.len(), found.len());
}

#[test]
fn link_outputs_pass_the_decision_procedure() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut checked = 0;
    while checked < 300 {
        let g = sample_admissible(&mut rng, 4, 10);
        let mci = g.mci().degrees;
        let gens = g.gens().to_sorted_vec();
        // a complete intersection of minimal generators dominating mci
        let mut pick = gens.clone();
        pick.shuffle(&mut rng);
        let mut ci = [pick[0], pick[1], pick[2]];
        ci.sort();
        if (0..3).any(|i| ci[i] < mci[i]) {
            continue;
        }
        let Ok(r) = link_betti(g.gens(), g.theta(), ci, &IntMultiset::new()) else {
            continue;
        };
        let v = check_betti(&r.minimal);
        assert!(v.admissible, "{g} via {ci:?}: {} {}", r.minimal, v.witness);
        checked += 1;
    }
}
