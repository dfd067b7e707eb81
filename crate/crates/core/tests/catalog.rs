use e8jacobi::catalog::{
    build, holomorphic_subspace, info, verify_free_module, weak_generators, FormName, ALL_FORMS,
};
use e8jacobi::invring::{display_string, eval_zero, parse_display};
use e8jacobi::jacobi::hecke_t_minus_to;
use e8jacobi::qseries::dim_modular;
use e8jacobi::rational::int;
use e8jacobi::Error;
use num_traits::Zero;

#[test]
fn every_name_parses_back() {
    for &n in ALL_FORMS {
        assert_eq!(n.to_string().parse::<FormName>().unwrap(), n);
        assert_eq!(info(n).to_json()["name"], n.to_string());
    }
    assert!(matches!("phi_1_1".parse::<FormName>(), Err(Error::UnknownForm(_))));
}

#[test]
fn declared_form_is_not_built() {
    assert!(matches!(build(FormName::B(6), 1), Err(Error::NotConstructible(_))));
}

#[test]
fn cached_forms_truncate_consistently() {
    let hi = build(FormName::Phi(0, 3), 3).unwrap();
    let lo = build(FormName::Phi(0, 3), 1).unwrap();
    assert_eq!(hi.truncate(1).unwrap(), *lo);
}

#[test]
fn negative_weight_forms_vanish_at_zero_on_q0() {
    for &n in ALL_FORMS {
        let m = info(n);
        if m.weight < 0 {
            assert!(eval_zero(build(n, 0).unwrap().term(0)).is_zero(), "{n}");
        }
    }
}

#[test]
fn weight4_holomorphic_forms() {
    let a2 = holomorphic_subspace(4, 2, 3).unwrap();
    assert_eq!(a2.len(), 1);
    assert_eq!(a2[0], *build(FormName::A(2), 3).unwrap());
    let b4 = holomorphic_subspace(4, 4, 3).unwrap();
    assert_eq!(b4.len(), 2);
    assert_eq!(eval_zero(b4[0].term(0)), int(1));
    assert!(eval_zero(b4[1].term(0)).is_zero());
}

#[test]
fn weight6_index3_holomorphic_form() {
    let b = holomorphic_subspace(6, 3, 3).unwrap();
    assert_eq!(b.len(), 1);
    let want = parse_display("−(7/20)Σ_6 − (27/20)Σ_4 − (9/20)Σ_2 + 12").unwrap();
    assert_eq!(b[0].term(1), &want, "{}", display_string(b[0].term(1)));
    assert!(holomorphic_subspace(6, 1, 3).unwrap().is_empty());
}

#[test]
fn holomorphy_needs_enough_order() {
    match holomorphic_subspace(6, 3, 0) {
        Err(Error::InsufficientOrder { required, available }) => assert_eq!((required, available), (1, 0)),
        other => panic!("{other:?}"),
    }
}

#[test]
fn free_module_examples() {
    let r2 = verify_free_module(2, 0, 3).unwrap();
    assert_eq!(r2.weights.last().unwrap().predicted, 2);
    let r3 = verify_free_module(3, -8, 3).unwrap();
    assert_eq!(r3.weights[0].rank, 1);
    let r1 = verify_free_module(1, 20, 3).unwrap();
    for w in &r1.weights {
        assert_eq!(w.rank, dim_modular((w.weight - 4) as i64));
    }
    assert!(r1.ok() && r2.ok() && r3.ok());
}

#[test]
fn generator_counts() {
    let counts: Vec<usize> = (1..=4).map(|t| weak_generators(t).unwrap().len()).collect();
    assert_eq!(counts, [1, 3, 5, 10]);
}

#[test]
fn index4_chain_in_order() {
    let want = [
        "Σ_16' − 2Σ_14' − 14Σ_12 + 70Σ_10 − 28Σ_8'' − 112Σ_8' + 154Σ_6 − 98Σ_4 + 34Σ_2 − 1200",
        "Σ_14' − 4Σ_12 + 3Σ_10 + 2Σ_8'' + 8Σ_8' − 25Σ_6 + 24Σ_4 − 11Σ_2 + 480",
        "Σ_12 − 4Σ_10 + Σ_8'' + 4Σ_8' − 5Σ_4 + 4Σ_2 − 240",
        "Σ_10 − (7/10)Σ_8'' − (28/10)Σ_8' + 4Σ_6 − Σ_4 − Σ_2 + 120",
        "Σ_8'' + 4Σ_8' − 14Σ_6 + 12Σ_4 − 2Σ_2 − 240",
        "Σ_6 − 2Σ_4 + Σ_2",
        "−7Σ_4 + 8Σ_2 − 240",
        "2Σ_2 − 120",
    ];
    for (k, s) in (0..8).map(|i| -14 + 2 * i).zip(want) {
        let f = build(FormName::Phi(k, 4), 0).unwrap();
        assert_eq!(f.term(0), &parse_display(s).unwrap(), "weight {k}");
    }
}

#[test]
fn index_raising_to_insufficient_order_fails() {
    let th = build(FormName::Theta, 2).unwrap();
    assert!(matches!(hecke_t_minus_to(&th, 2, 2), Err(Error::InsufficientOrder { .. })));
}
