mod common;

use casson_core::alexander::alexander_from_seifert;
use casson_core::diagram::{parse_pd, seifert_matrix, DiagramError, PdDocument};
use casson_core::fixtures;
use common::random;
use num_bigint::BigInt;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn linking_is_symmetric(seed in any::<u64>()) {
        let d = random::diagram(seed);
        let n = d.num_components();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    prop_assert_eq!(d.linking_number(i, j).unwrap(), d.linking_number(j, i).unwrap());
                }
            }
        }
        let m = d.linking_matrix();
        for (i, row) in m.iter().enumerate() {
            prop_assert_eq!(row[i], d.framing(i).unwrap());
        }
    }

    #[test]
    fn crossing_change_is_an_involution(seed in any::<u64>(), pick in any::<prop::sample::Index>()) {
        let d = random::diagram(seed);
        prop_assume!(d.num_crossings() > 0);
        let c = pick.index(d.num_crossings());
        let e = d.crossing_change(c).unwrap();
        prop_assert_eq!(e.crossing_change(c).unwrap(), d.clone());

        let old = d.crossings()[c].sign as i64;
        let (a, b) = d.crossing_components(c);
        let n = d.num_components();
        for i in 0..n {
            let expected = if a == b && a == i { d.framing(i).unwrap() - 2 * old } else { d.framing(i).unwrap() };
            prop_assert_eq!(e.framing(i).unwrap(), expected);
            for j in i + 1..n {
                let joined = (a, b) == (i, j) || (a, b) == (j, i);
                let before = d.linking_number(i, j).unwrap();
                let after = e.linking_number(i, j).unwrap();
                prop_assert_eq!(after, if joined { before - old } else { before });
            }
        }
    }

    #[test]
    fn smoothing_drops_one_crossing_and_keeps_distant_linking(seed in any::<u64>(), pick in any::<prop::sample::Index>()) {
        let d = random::diagram(seed);
        prop_assume!(d.num_crossings() > 0);
        let c = pick.index(d.num_crossings());
        let s = d.smooth_crossing(c).unwrap();
        prop_assert_eq!(s.num_crossings(), d.num_crossings() - 1);
        let (a, b) = d.crossing_components(c);
        let far: Vec<usize> = (0..d.num_components()).filter(|&k| k != a && k != b).collect();
        let image = |k: usize| s.component_of(d.components()[k][0]).unwrap();
        for (x, &i) in far.iter().enumerate() {
            for &j in &far[x + 1..] {
                prop_assert_eq!(
                    s.linking_number(image(i), image(j)).unwrap(),
                    d.linking_number(i, j).unwrap()
                );
            }
        }
    }

    #[test]
    fn pd_round_trip(seed in any::<u64>()) {
        let d = random::diagram(seed);
        let text = PdDocument::from_diagram(&d).to_json();
        let back = parse_pd(&text).unwrap();
        prop_assert_eq!(back.canonical(), d.canonical());
        prop_assert_eq!(parse_pd(&back.to_json()).unwrap().canonical(), d.canonical());
    }
}

#[test]
fn seifert_determinant_is_a_unit_at_one() {
    for d in [fixtures::unknot(), fixtures::kink_unknot(), fixtures::trefoil(), fixtures::figure_eight()] {
        let delta = alexander_from_seifert(&seifert_matrix(&d).unwrap()).unwrap();
        let v = delta.eval_ones();
        assert!(v == BigInt::from(1) || v == BigInt::from(-1));
    }
}

fn json(name: &str) -> serde_json::Value {
    let text = fixtures::ALL.iter().find(|(n, _)| *n == name).unwrap().1;
    serde_json::from_str(text).unwrap()
}

#[test]
fn parse_examples() {
    let u = fixtures::unknot();
    assert_eq!((u.num_components(), u.num_crossings()), (1, 0));

    let h = fixtures::hopf();
    assert_eq!(h.num_components(), 2);
    assert_eq!(h.linking_number(0, 1).unwrap(), common::pd_linking(&json("hopf"), 0, 1));
    assert_eq!(h.linking_number(0, 1).unwrap(), 1);

    let t = fixtures::trefoil();
    assert_eq!(t.num_components(), 1);
    assert_eq!(t.writhe(), common::pd_writhe(&json("trefoil")));
    assert_eq!(t.writhe(), 3);
}

#[test]
fn parse_errors_name_the_crossing() {
    let bad_sign = r#"{"components":[[1,2]],"crossings":[{"arcs":[1,1,2,2],"sign":-1}]}"#;
    assert_eq!(parse_pd(bad_sign), Err(DiagramError::SignMismatch { crossing: 0 }));
    let twice = r#"{"components":[[1,2]],"crossings":[{"arcs":[1,1,2,1],"sign":1}]}"#;
    assert!(matches!(parse_pd(twice), Err(DiagramError::ArcCount { crossing: 0, arc: 1, count: 3 })));
    let open = r#"{"components":[[1,2],[3,4]],"crossings":[{"arcs":[1,3,4,2],"sign":1},{"arcs":[3,1,2,4],"sign":1}]}"#;
    assert_eq!(parse_pd(open), Err(DiagramError::NotClosed { crossing: 0 }));
    let doubled = r#"{"components":[[1,2],[3,4]],"crossings":[{"arcs":[1,3,2,4],"sign":1},{"arcs":[4,1,3,2],"sign":1}]}"#;
    assert_eq!(parse_pd(doubled), Err(DiagramError::RepeatedPassage { crossing: 1, arc: 4 }));
    assert!(matches!(parse_pd("{\"components\": ["), Err(DiagramError::Syntax(_))));
    let sign2 = r#"{"components":[[1,2]],"crossings":[{"arcs":[1,1,2,2],"sign":2}]}"#;
    assert_eq!(parse_pd(sign2), Err(DiagramError::BadSign { crossing: 0, sign: 2 }));
}

#[test]
fn linking_examples() {
    let u = fixtures::unlink(2);
    assert_eq!(u.linking_number(0, 1).unwrap(), 0);
    assert_eq!(fixtures::hopf().linking_number(1, 0).unwrap(), 1);
    let b = fixtures::borromean_rings();
    let doc = json("borromean_rings");
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        assert_eq!(b.linking_number(i, j).unwrap(), 0);
        assert_eq!(common::pd_linking(&doc, i, j), 0);
    }
    assert_eq!(b.linking_number(1, 1), Err(DiagramError::SameComponent(1)));
    assert!(matches!(b.linking_number(0, 3), Err(DiagramError::ComponentIndex { .. })));
}

#[test]
fn framing_examples() {
    assert_eq!(fixtures::unknot().framing(0).unwrap(), 0);
    assert_eq!(fixtures::kink_unknot().framing(0).unwrap(), 1);
    assert_eq!(fixtures::trefoil().framing(0).unwrap(), 3);
    assert!(fixtures::unknot().framing(1).is_err());
}

#[test]
fn crossing_change_and_smoothing_examples() {
    let k = fixtures::kink_unknot();
    assert_eq!(k.crossing_change(0).unwrap().writhe(), -1);

    let s = fixtures::hopf().smooth_crossing(1).unwrap();
    assert_eq!(s.num_components(), 1);

    let split = k.smooth_crossing(0).unwrap();
    assert_eq!(split.num_components(), 2);
    assert_eq!(split.linking_number(0, 1).unwrap(), 0);
}

#[test]
fn seifert_examples() {
    assert!(seifert_matrix(&fixtures::unknot()).unwrap().is_empty());
    assert!(seifert_matrix(&fixtures::hopf()).is_err());
    for (d, expected) in [(fixtures::trefoil(), [1i64, -1, 1]), (fixtures::figure_eight(), [-1, 3, -1])] {
        let v = seifert_matrix(&d).unwrap();
        assert_eq!(v.len(), 2);
        let p = common::seifert_poly_2x2([[v[0][0], v[0][1]], [v[1][0], v[1][1]]]);
        // Equal up to sign; both are palindromic of degree 2.
        let s = p[0].signum() * expected[0].signum();
        assert_eq!(p.map(|c| c * s), expected);
    }
}
