mod common;

use common::*;
use parknot::moves::random::{random_gauss, random_surface};
use parknot::ring::{det, parse_poly, Integers, Matrix, Ring};
use parknot::{
    apply, compare, nprime_invariant, parse_surface, s_invariant, DiagramCode, GaussDiagram, Move, QuotientRing,
    Strand, Token,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[test]
fn oracle_ideal_test_is_not_vacuous() {
    let ring = QuotientRing::g(1);
    let vars = ring.vars_with_q();
    let gen = parse_poly(vars, "p^2 - p - t*p + t").unwrap(); // (p-1)(p-t)
    assert!(!in_hidden_ideal(&to_sparse(&gen, vars)));
    let full = parse_poly(vars, "t*p^2 - t*p - t^2*p + t^2 - p^2 + p + t*p - t").unwrap();
    assert!(in_hidden_ideal(&to_sparse(&full, vars)));
    let shifted = full.shift(&[(parknot::ring::Var::X(1), -2), (parknot::ring::Var::P, -3)]);
    assert!(in_hidden_ideal(&to_sparse(&shifted, vars)));
}

#[test]
fn cofactor_oracle_on_integers() {
    let m = Matrix::from_rows(vec![
        vec![3.into(), 1.into(), 4.into()],
        vec![1.into(), 5.into(), 9.into()],
        vec![2.into(), 6.into(), 5.into()],
    ]);
    assert_eq!(cofactor_det(&Integers, &m), (-90).into());
    assert_eq!(det(&Integers, &m).unwrap(), (-90).into());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn surface_codes_round_trip(seed in any::<u64>(), n in 0usize..7, g in 0u32..3) {
        let d = random_surface(&mut seeded(seed), n, g).with_name("k");
        let back = parse_surface(&d.to_string(), 0).unwrap();
        prop_assert_eq!(back, d);
    }

    #[test]
    fn relabeling_keeps_both_invariants(seed in any::<u64>(), n in 1usize..7, g in 0u32..3, rot in 1usize..40) {
        let d = random_surface(&mut seeded(seed), n, g);
        let len = d.tokens().len();
        let e = apply(&d, &Move::Relabel { rotation: rot % len }).unwrap();
        prop_assert!(compare(&s_invariant(&d), &s_invariant(&e)).unwrap().is_equivalent());
        prop_assert!(compare(&nprime_invariant(&d), &nprime_invariant(&e)).unwrap().is_equivalent());
    }

    #[test]
    fn unit_normalization_is_idempotent_and_shift_blind(seed in any::<u64>(), a in -3i32..4, b in -3i32..4) {
        let ring = QuotientRing::g(2);
        let x = ring.normalize(&random_raw(&mut seeded(seed), &ring, 5)).unwrap();
        let (c, _) = ring.normalize_units(&x);
        prop_assert_eq!(&ring.normalize_units(&c).0, &c);
        let moved = ring.mul(&x, &ring.monomial(-1, &[(parknot::ring::Var::T, a), (parknot::ring::Var::P, b)]));
        prop_assert_eq!(ring.normalize_units(&moved).0, c);
    }

    #[test]
    fn normal_form_matches_rewrite_oracle_in_r_prime(seed in any::<u64>()) {
        let ring = QuotientRing::r_prime();
        let raw = random_raw(&mut seeded(seed), &ring, 6);
        let (a, b) = ring.representative(&ring.normalize(&raw).unwrap());
        let (oa, ob) = rewrite_to_fixpoint(&to_sparse(&raw, ring.vars_with_q()));
        prop_assert_eq!(to_sparse(&b, ring.vars_with_q()), ob);
        prop_assert!(in_hidden_ideal(&sub(&oa, &to_sparse(&a, ring.vars_with_q()))));
    }

    #[test]
    fn berkowitz_matches_cofactor_on_integers(entries in proptest::collection::vec(-5i64..6, 0..=25)) {
        let n = (entries.len() as f64).sqrt() as usize;
        let m = Matrix::from_rows((0..n).map(|i| (0..n).map(|j| entries[i * n + j].into()).collect()).collect());
        prop_assert_eq!(det(&Integers, &m).unwrap(), cofactor_det(&Integers, &m));
    }

    #[test]
    fn swapping_crossing_ids_keeps_both_invariants(seed in any::<u64>(), n in 2usize..7) {
        let d = random_gauss(&mut seeded(seed), n);
        let swap = |k: u32| if k == 1 { n as u32 } else if k == n as u32 { 1 } else { k };
        let tokens: Vec<Token> = d
            .tokens()
            .iter()
            .map(|t| match t.passage() {
                Some(p) if p.strand == Strand::Over => Token::over(swap(p.crossing.0), p.sign),
                Some(p) => Token::under(swap(p.crossing.0), p.sign),
                None => *t,
            })
            .collect();
        let e = GaussDiagram::new("swapped", tokens).unwrap();
        prop_assert_ne!(e.tokens(), d.tokens());
        prop_assert_eq!(s_invariant(&d).canonical, s_invariant(&e).canonical);
        prop_assert_eq!(nprime_invariant(&d).canonical, nprime_invariant(&e).canonical);
    }
}

#[test]
fn fixtures_parse() {
    assert_eq!(torus("1.12").crossing_count(), 4);
    assert_eq!(torus("1.13bar").crossing_count(), 5);
    assert_eq!(virtual_knot("trefoil").crossing_count(), 3);
    let ring = QuotientRing::g(1);
    assert!(Ring::is_zero(&ring, &ring.zero()));
}
