mod common;

use wsd_core::closure::{flatten_restricted, lie_closure, run_closure, FieldChoice, Scalars};
use wsd_core::exact_arith::{prime_below, PrimeField, Q};
use wsd_core::exterior::Form;
use wsd_core::hw_bases::{HwBases, HwKind};
use wsd_core::operators::GENERATOR_NAMES;
use wsd_core::suites::{self, Context};
use wsd_core::{Canonical, GaussRational, Operator};

fn comm(a: &Operator, b: &Operator) -> Operator {
    a.compose(b).sub(&b.compose(a))
}

#[test]
fn su_nn_oracle_small_cases() {
    assert_eq!(common::su_nn_dimension(1), 3);
    assert_eq!(common::su_nn_dimension(2), 15);
}

#[test]
fn block_dimensions_follow_the_su_nn_formula() {
    // the oracle fixes the formula at n = 1, 2; it then predicts the large blocks
    for n in 1..=2 {
        assert_eq!(common::su_nn_dimension(n), 4 * n * n - 1);
    }
    let predicted: Vec<usize> = [20, 36, 20].iter().map(|n| 4 * n * n - 1).collect();
    assert_eq!(predicted, suites::BLOCK_DIMENSIONS[..3].to_vec());
    let bound: usize = [20, 36, 20, 4].iter().map(|n| 4 * n * n - 1).sum();
    assert_eq!(bound, suites::INVARIANT_BOUND);
}

#[test]
fn cartan_action_on_v_and_a() {
    let c = Canonical::get();
    for j in 0..3 {
        for m in 0..3 {
            let w = if j == m { 0 } else { 3 };
            assert_eq!(
                comm(&c.h[j], &c.v[m]),
                c.v[m].scale(&GaussRational::from_int(w)),
                "H{j} V{m}"
            );
            assert_eq!(
                comm(&c.h[j], &c.a[m]),
                c.a[m].scale(&GaussRational::from_int(-w)),
                "H{j} A{m}"
            );
        }
    }
}

#[test]
fn serre_weights_of_distinguished_vectors() {
    let c = Canonical::get();
    let w = |j| Form::w(j).unwrap();
    let cases = [
        (w(0), [-1, 0, -2]),
        (w(0).wedge(&w(1)), [0, -1, -1]),
        (w(0).wedge(&w(1)).wedge(&w(2)), [0, 0, -1]),
    ];
    for (x, weights) in cases {
        for (k, w) in weights.into_iter().enumerate() {
            assert_eq!(
                c.serre_h[k].apply(&x),
                x.scale(&GaussRational::from_int(w)),
                "h{k}"
            );
        }
    }
}

#[test]
fn highest_weight_spaces_are_invariant() {
    let c = Canonical::get();
    let hb = HwBases::get();
    for k in HwKind::ALL {
        for (g, n) in c.generators.iter().zip(GENERATOR_NAMES) {
            assert!(hb.restrict(k, g).is_ok(), "{n} leaves {}", k.name());
        }
        let star = hb.restrict(k, &c.hodge).unwrap();
        assert!(!star.is_zero());
    }
}

#[test]
fn flatten_examples() {
    let zero = flatten_restricted(&Operator::zero(), &HwKind::ALL).unwrap();
    assert_eq!(zero.len(), 16896);
    assert!(zero
        .iter()
        .all(|x| *x == num_rational::BigRational::from_integer(0.into())));
    let k01 = flatten_restricted(&Canonical::get().k[0][1], &HwKind::ALL).unwrap();
    let (hw0, rest) = k01.split_at(2 * 1600);
    let (_, rest) = rest.split_at(2 * 5184);
    let (hw2, _) = rest.split_at(2 * 1600);
    assert!(hw0
        .iter()
        .any(|x| *x != num_rational::BigRational::from_integer(0.into())));
    assert!(hw2
        .iter()
        .all(|x| *x == num_rational::BigRational::from_integer(0.into())));
    assert!(flatten_restricted(&Canonical::get().e[0][0], &HwKind::ALL).is_err());
}

#[test]
fn exact_and_modular_agree_on_small_closures() {
    let c = Canonical::get();
    let gens = &c.generators;
    let exact = run_closure(FieldChoice::Exact, Scalars::Real, gens, &[HwKind::HW3]).unwrap();
    for p in wsd_core::exact_arith::DEFAULT_PRIMES {
        let m = run_closure(FieldChoice::Modular(p), Scalars::Real, gens, &[HwKind::HW3]).unwrap();
        assert_eq!(m.dimension, exact.dimension);
    }
    assert_eq!(exact.dimension, 15);
    let even = c.even_generators();
    let on_blocks = run_closure(FieldChoice::Exact, Scalars::Real, even, &[HwKind::HW3]).unwrap();
    assert_eq!(on_blocks.dimension, 15);
    let complex = run_closure(FieldChoice::Exact, Scalars::Complex, gens, &[HwKind::HW3]).unwrap();
    assert_eq!(complex.dimension, 15);
}

#[test]
fn closure_is_deterministic() {
    let gens = &Canonical::get().generators;
    let p = wsd_core::exact_arith::DEFAULT_PRIMES[0];
    let a = run_closure(FieldChoice::Modular(p), Scalars::Real, gens, &[HwKind::HW0]).unwrap();
    let b = run_closure(FieldChoice::Modular(p), Scalars::Real, gens, &[HwKind::HW0]).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.dimension, 1599);
}

#[test]
fn structure_checks_detect_violations() {
    // the parity operator has supertrace 8 on hw3; it is skew for the pairing, which
    // only couples opposite parities. The identity is traceless but not skew.
    let field = PrimeField::new(wsd_core::exact_arith::DEFAULT_PRIMES[0]).unwrap();
    let p = lie_closure(
        field,
        Scalars::Real,
        &[Canonical::get().parity.clone()],
        &[HwKind::HW3],
    )
    .unwrap();
    assert_eq!(p.dimension(), 1);
    assert_eq!(p.supertrace_violations().len(), 1);
    assert_eq!(p.pairing_violations().unwrap(), 0);
    let id = lie_closure(
        field,
        Scalars::Real,
        &[Operator::identity()],
        &[HwKind::HW3],
    )
    .unwrap();
    assert!(id.supertrace_violations().is_empty());
    assert_eq!(id.pairing_violations().unwrap(), 1);
    assert!(!p.contains(&Operator::identity()).unwrap());
    let exact = lie_closure(
        Q,
        Scalars::Real,
        &Canonical::get().generators,
        &[HwKind::HW3],
    )
    .unwrap();
    assert!(exact.supertrace_violations().is_empty());
    assert_eq!(exact.pairing_violations().unwrap(), 0);
}

#[test]
fn corrupted_operator_names_the_failing_identity() {
    let bad = suites::corrupted_canonical("E21").unwrap();
    let ctx = Context {
        canonical: &bad,
        primes: vec![],
    };
    let r = suites::relations(&ctx);
    assert!(!r.passed);
    let failing: Vec<_> = r.checks.iter().filter(|c| !c.passed).collect();
    assert!(failing
        .iter()
        .any(|c| c.detail.contains("E(2,1)I(2,1) + I(2,1)E(2,1) = Id")));
    assert!(suites::corrupted_canonical("X00").is_err());
}

#[test]
fn prime_helpers() {
    assert_eq!(prime_below(2013265921).map(|q| q % 4), Some(1));
    assert_eq!(prime_below(14), Some(13));
    assert_eq!(prime_below(5), None);
    assert_eq!(suites::parse_primes("13, 17").unwrap(), vec![13, 17]);
    assert!(suites::parse_primes("7").is_err());
    assert!(suites::parse_primes("").is_err());
}

#[test]
fn generators_dump_round_trip() {
    for g in &Canonical::get().generators {
        assert_eq!(&Operator::parse_dump(&g.dump()).unwrap(), g);
    }
}
