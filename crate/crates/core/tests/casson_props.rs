mod common;

use casson_core::casson::{
    delta_from_leaves, delta_multi, delta_single, delta_single_lescop, delta_single_recursive,
    delta_single_recursive_ordered, fti_bracket, johannes_delta, kirby_reduce, mazur_family, pairwise_correction,
    rochlin_delta, BorromeanConfig, CassonError, CrossLinkMatrix, CrossMatrices, Lemma, Ordering,
    TwoComponentSurgeryData,
};
use casson_core::diagram::LeafTriple;
use casson_core::fixtures;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn config(r: i64) -> impl Strategy<Value = BorromeanConfig> {
    (prop::array::uniform3(-r..=r), prop::array::uniform3(-r..=r), -r..=r)
        .prop_map(|(f, l, mu)| BorromeanConfig::new(f, l, mu))
}

fn matrix(r: i64) -> impl Strategy<Value = CrossLinkMatrix> {
    prop::array::uniform3(prop::array::uniform3(-r..=r)).prop_map(CrossLinkMatrix)
}

fn oracle(c: &BorromeanConfig) -> BigInt {
    BigInt::from(common::closed_form(c.f, c.l, c.mu123))
}

fn rows(m: &CrossLinkMatrix) -> Vec<Vec<i64>> {
    m.0.iter().map(|r| r.to_vec()).collect()
}

fn pairs(n: usize, ms: &[CrossLinkMatrix]) -> CrossMatrices {
    let mut out = CrossMatrices::new();
    let mut it = ms.iter();
    for k in 0..n {
        for l in k + 1..n {
            out.insert((k, l), *it.next().unwrap());
        }
    }
    out
}

proptest! {
    #[test]
    fn routes_agree_with_oracle(c in config(40)) {
        let expected = oracle(&c);
        prop_assert_eq!(delta_single(&c), expected.clone());
        prop_assert_eq!(delta_single_lescop(&c), expected.clone());
        let (v, trace) = delta_single_recursive(&c);
        prop_assert_eq!(v, expected);
        let steps: i64 = c.f.iter().chain(c.l.iter()).map(|x| x.abs()).sum();
        prop_assert_eq!(trace.len() as i64, steps);
        let sum: BigInt = trace.iter().map(|s| s.increment.clone()).sum();
        prop_assert_eq!(sum - 2 * BigInt::from(c.mu123), delta_single(&c));
        for s in &trace {
            prop_assert_eq!((s.from - s.to).abs(), 1);
            prop_assert_eq!(s.to.abs() + 1, s.from.abs());
        }
        let framing_steps = trace.iter().take_while(|s| s.lemma == Lemma::Framing).count();
        prop_assert!(trace[framing_steps..].iter().all(|s| s.lemma == Lemma::Clasp));
    }

    #[test]
    fn every_order_gives_the_same_value(c in config(6)) {
        let expected = oracle(&c);
        for order in Ordering::all() {
            prop_assert_eq!(delta_single_recursive_ordered(&c, order, None), expected.clone());
        }
    }

    #[test]
    fn parity_is_the_framing_product(c in config(1000)) {
        let p = i128::from(c.f[0]) * i128::from(c.f[1]) * i128::from(c.f[2]);
        prop_assert_eq!((oracle(&c) - BigInt::from(p)) % 2, BigInt::from(0));
        prop_assert_eq!(rochlin_delta(&[c]), (p.rem_euclid(2)) as u8);
    }

    #[test]
    fn degree_two_vanishing(
        base in -5i64..=5,
        configs in prop::collection::vec(config(2), 3..=4),
        ms in prop::collection::vec(matrix(2), 6),
    ) {
        let cross = pairs(configs.len(), &ms);
        prop_assert_eq!(fti_bracket(&BigInt::from(base), &configs, &cross).unwrap(), BigInt::from(0));
    }

    #[test]
    fn bracket_of_two_is_the_pair_term(base in -5i64..=5, a in config(3), b in config(3), m in matrix(3)) {
        let cross = pairs(2, &[m]);
        let expected = -2 * common::cofactor_det(&rows(&m));
        prop_assert_eq!(fti_bracket(&BigInt::from(base), &[a, b], &cross).unwrap(), BigInt::from(expected));
    }

    #[test]
    fn correction_is_minus_twice_the_determinant(m in matrix(5), a in 0usize..3, b in 0usize..3) {
        let d = common::cofactor_det(&rows(&m));
        prop_assert_eq!(pairwise_correction(&m), BigInt::from(-2 * d));
        prop_assume!(a != b);
        let mut swapped = m;
        swapped.0.swap(a, b);
        prop_assert_eq!(pairwise_correction(&swapped), BigInt::from(2 * d));
        let mut repeated = m;
        repeated.0[b] = repeated.0[a];
        prop_assert_eq!(pairwise_correction(&repeated), BigInt::from(0));
    }

    #[test]
    fn multi_matches_oracle(configs in prop::collection::vec(config(4), 1..=4), ms in prop::collection::vec(matrix(3), 6)) {
        let cross = pairs(configs.len(), &ms);
        let mut expected: i128 = configs.iter().map(|c| common::closed_form(c.f, c.l, c.mu123)).sum();
        for m in cross.values() {
            expected -= 2 * common::cofactor_det(&rows(m));
        }
        prop_assert_eq!(delta_multi(&configs, &cross).unwrap(), BigInt::from(expected));
    }

    #[test]
    fn johannes_matches_fraction_oracle(e in prop::array::uniform6(-6i64..=6)) {
        let [f1, f2, l12, l_ab, l_a2, l_b2] = e;
        let d = TwoComponentSurgeryData { f1, f2, l12, l_ab, l_a2, l_b2 };
        let den = f1 * f2 - l12 * l12;
        if den == 0 {
            prop_assert_eq!(johannes_delta(&d), Err(CassonError::Singular));
        } else {
            let (p, q) = common::reduced(f2 * l_ab - l_a2 * l_b2, den);
            let v = johannes_delta(&d).unwrap();
            prop_assert_eq!(v.numer(), &BigInt::from(p));
            prop_assert_eq!(v.denom(), &BigInt::from(q));
            if den.abs() == 1 {
                prop_assert!(v.is_integer());
            }
        }
    }

    #[test]
    fn kirby_facts_hold(c in config(100)) {
        let k = kirby_reduce(&c);
        prop_assert_eq!((k.components, k.linking, k.determinant), (2, 1, -1));
        prop_assert_eq!(common::cofactor_det(&[vec![0, 1], vec![1, c.f[0]]]), -1);
    }
}

#[test]
fn routes_handle_values_beyond_machine_words() {
    let c = BorromeanConfig::new([i64::MAX, i64::MAX, -7], [i64::MIN, 3, i64::MAX], i64::MIN);
    let [f1, f2, f3] = c.f.map(BigInt::from);
    let [l12, l13, l23] = c.l.map(BigInt::from);
    let expected = -(&f1 * &f2 * &f3) - 2 * &l12 * &l13 * &l23 - 2 * BigInt::from(c.mu123)
        + &l23 * (&l23 + 1) * &f1
        + &l13 * (&l13 + 1) * &f2
        + &l12 * (&l12 + 1) * &f3;
    assert_eq!(delta_single(&c), expected);
    assert_eq!(delta_single_lescop(&c), expected);
}

fn c(f: [i64; 3], l: [i64; 3], mu: i64) -> BorromeanConfig {
    BorromeanConfig::new(f, l, mu)
}

#[test]
fn single_examples() {
    for (cfg, value) in [
        (c([0; 3], [0; 3], 0), 0),
        (c([0; 3], [0; 3], 3), -6),
        (c([0; 3], [0; 3], -2), 4),
        (c([1, 1, 1], [0; 3], 0), -1),
        (c([1, 0, 0], [0, 0, 1], 0), 2),
        (c([0; 3], [1, 1, 1], 0), -2),
        (c([2, 0, 0], [0; 3], 0), 0),
    ] {
        assert_eq!(oracle(&cfg), BigInt::from(value));
        assert_eq!(delta_single(&cfg), BigInt::from(value));
        assert_eq!(delta_single_recursive(&cfg).0, BigInt::from(value));
        assert_eq!(delta_single_lescop(&cfg), BigInt::from(value));
    }
    let (_, trace) = delta_single_recursive(&c([0; 3], [1, 1, 1], 0));
    let incs: Vec<i64> = trace.iter().map(|s| i64::try_from(&s.increment).unwrap()).collect();
    assert_eq!(incs, [-2, 0, 0]);
    assert!(delta_single_recursive(&c([0; 3], [0; 3], 0)).1.is_empty());
}

#[test]
fn multi_examples() {
    let zero = c([0; 3], [0; 3], 0);
    let one = c([1, -1, 2], [0, 1, 1], 1);
    assert_eq!(delta_multi(&[one], &CrossMatrices::new()).unwrap(), delta_single(&one));
    let id = pairs(2, &[CrossLinkMatrix::IDENTITY]);
    assert_eq!(delta_multi(&[zero, zero], &id).unwrap(), BigInt::from(-2));
    let z = pairs(2, &[CrossLinkMatrix::default()]);
    assert_eq!(delta_multi(&[zero, zero], &z).unwrap(), BigInt::from(0));
    assert_eq!(delta_multi(&[zero, zero, zero], &id), Err(CassonError::MissingCross(0, 2)));
}

#[test]
fn correction_examples() {
    assert_eq!(pairwise_correction(&CrossLinkMatrix::IDENTITY), BigInt::from(-2));
    assert_eq!(pairwise_correction(&CrossLinkMatrix::default()), BigInt::from(0));
    let m = CrossLinkMatrix([[1, 1, 0], [0, 1, 1], [0, 0, 1]]);
    assert_eq!(common::cofactor_det(&rows(&m)), 1);
    assert_eq!(pairwise_correction(&m), BigInt::from(-2));
}

#[test]
fn rochlin_examples() {
    let odd = c([1, 1, 1], [0; 3], 0);
    assert_eq!(rochlin_delta(&[odd]), 1);
    assert_eq!(rochlin_delta(&[c([3, 2, 5], [1; 3], 1)]), 0);
    assert_eq!(rochlin_delta(&[odd, odd]), 0);
}

#[test]
fn johannes_examples() {
    let d = |f1, f2, l12, l_ab, l_a2, l_b2| TwoComponentSurgeryData { f1, f2, l12, l_ab, l_a2, l_b2 };
    let int = |x: i64| BigRational::from_integer(BigInt::from(x));
    for (f1, f2, l12) in [(1, 1, 0), (2, 3, 1), (0, 5, 2)] {
        assert_eq!(johannes_delta(&d(f1, f2, l12, 0, 0, 0)).unwrap(), int(0));
    }
    // Framing step data with f_k = 1, l_jk = 0.
    let (fk, ljk) = (1, 0);
    assert_eq!(common::reduced(-fk - (1 + ljk) * -ljk, -1), (1, 1));
    assert_eq!(johannes_delta(&d(0, 1, 1, -fk, 1 + ljk, -ljk)).unwrap(), int(1));
    assert_eq!(johannes_delta(&d(1, 1, 0, 1, 1, 1)).unwrap(), int(0));
}

#[test]
fn bracket_examples() {
    let base = BigInt::from(11);
    assert_eq!(fti_bracket(&base, &[], &CrossMatrices::new()).unwrap(), base);
    let zero = c([0; 3], [0; 3], 0);
    let m = CrossLinkMatrix([[0, 2, 1], [1, 1, 0], [2, 0, 1]]);
    let det = common::cofactor_det(&rows(&m));
    assert_eq!(fti_bracket(&base, &[zero, zero], &pairs(2, &[m])).unwrap(), BigInt::from(-2 * det));
}

#[test]
fn mazur_examples() {
    for (n, lambda) in [(0, 0), (1, -2), (-3, 6)] {
        let m = mazur_family(n);
        assert_eq!(m.expected, BigInt::from(lambda));
        assert_eq!(delta_single(&m.config), BigInt::from(lambda));
        assert_eq!(m.config.f, [0; 3]);
        assert_eq!(m.config.l, [0; 3]);
        assert_eq!(m.presentation.linking.abs(), 1);
        assert_eq!(m.presentation.components, 2);
    }
}

#[test]
fn leaves_examples() {
    let report = delta_from_leaves(&LeafTriple::in_order(fixtures::unlink(3)).unwrap()).unwrap();
    assert!(report.routes_agree());
    assert_eq!(report.closed_form, BigInt::from(0));

    let b = fixtures::borromean_rings();
    let report = delta_from_leaves(&LeafTriple::in_order(b.clone()).unwrap()).unwrap();
    assert_eq!(report.config, c([0; 3], [0; 3], 1));
    assert_eq!(report.closed_form, BigInt::from(-2));
    assert!(report.routes_agree());

    let kinked = b.add_kink(b.components()[0][0], 1).unwrap();
    let report = delta_from_leaves(&LeafTriple::in_order(kinked).unwrap()).unwrap();
    assert_eq!(report.config, c([1, 0, 0], [0; 3], 1));
    assert_eq!(report.closed_form, BigInt::from(-2));
    assert_eq!(report.mod2, 0);
}

#[test]
fn mirrored_leaves_negate_framings_and_linkings_only() {
    let b = fixtures::borromean_rings();
    let mut d = b.add_kink(b.components()[0][0], 1).unwrap();
    d = d.add_kink(d.components()[2][0], -1).unwrap();
    d = d.add_kink(d.components()[2][0], -1).unwrap();
    let site = d.faces().into_iter().find_map(|f| {
        let on = |k: usize| f.darts.iter().find(|t| d.component_of(t.arc) == Some(k)).map(|t| t.arc);
        Some((on(0)?, on(1)?))
    });
    let (a, e) = site.unwrap();
    d = d.insert_clasp(a, e, 1).unwrap();
    let leaves = LeafTriple::in_order(d.clone()).unwrap();
    let mirrored = LeafTriple::in_order(d.mirror()).unwrap();
    let r = delta_from_leaves(&leaves).unwrap();
    let m = delta_from_leaves(&mirrored).unwrap();
    assert_eq!(r.config.f, [1, 0, -2]);
    assert_eq!(r.config.l, [1, 0, 0]);
    assert_eq!(m.config, r.config.mirror());
    assert_eq!(m.closed_form, oracle(&r.config.mirror()));
    assert!(m.routes_agree());
}
