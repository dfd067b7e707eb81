use e8jacobi::catalog::solve_cascade;
use e8jacobi::e8::{coset_min_norm, dominant_reduce, orbit, orbit_size, reflect_fw, DominantWeight, E8Vector};
use e8jacobi::invring::{display_string, eval_zero, inv_mul, parse_display, pullback, InvariantElement};
use e8jacobi::jacobi::{heat, JacobiQExpansion};
use e8jacobi::linalg::{nullspace, rank, Matrix};
use e8jacobi::qseries::{series_div, series_mul, ModularQSeries};
use e8jacobi::rational::{frac, int, parse, to_string, Rational};
use num_traits::Zero;
use proptest::prelude::*;

fn fw_vector() -> impl Strategy<Value = [i32; 8]> {
    prop::array::uniform8(-3i32..=3)
}

/// Dominant weights with orbits small enough to enumerate quickly.
fn small_dominant() -> impl Strategy<Value = DominantWeight> {
    prop::array::uniform8(prop_oneof![6 => Just(0i32), 2 => Just(1), 1 => Just(2)])
        .prop_map(|fw| DominantWeight::from_fw(fw).unwrap())
        .prop_filter("orbit too large", |m| orbit_size(m) <= 250_000)
}

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=12).prop_map(|(p, q)| frac(p, q))
}

fn element() -> impl Strategy<Value = InvariantElement> {
    let reps = prop_oneof![
        Just([0, 0, 0, 0, 0, 0, 0, 0]),
        Just([0, 0, 0, 0, 0, 0, 0, 1]),
        Just([1, 0, 0, 0, 0, 0, 0, 0]),
        Just([0, 0, 0, 0, 0, 0, 1, 0]),
        Just([0, 0, 0, 0, 0, 0, 0, 2]),
    ];
    prop::collection::vec((reps, rational()), 0..4).prop_map(|terms| {
        let mut x = InvariantElement::zero();
        for (fw, c) in terms {
            x.add_term(DominantWeight::from_fw(fw).unwrap(), c);
        }
        x
    })
}

fn modular(weight: i32) -> impl Strategy<Value = ModularQSeries> {
    prop::collection::vec(rational(), 4).prop_map(move |c| ModularQSeries::new(weight, c).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dominant_reduce_is_a_norm_preserving_projection(fw in fw_vector(), walk in prop::collection::vec(0usize..8, 0..30)) {
        let v = E8Vector::from_fw(&fw);
        let d = dominant_reduce(&v);
        prop_assert!(d.fw().iter().all(|&x| x >= 0));
        prop_assert_eq!(d.norm(), v.norm());
        prop_assert_eq!(dominant_reduce(&d.vector()), d);
        let mut y = fw;
        for i in walk {
            reflect_fw(&mut y, i);
        }
        prop_assert_eq!(dominant_reduce(&E8Vector::from_fw(&y)), d);
    }

    #[test]
    fn orbit_size_formula_matches_enumeration(m in small_dominant()) {
        let o = orbit(&m).unwrap();
        prop_assert_eq!(o.len() as u64, orbit_size(&m));
        prop_assert!(o.iter().all(|v| v.norm() == m.norm()));
    }

    #[test]
    fn coset_minimum_is_a_class_invariant(fw in fw_vector(), t in 1u32..=4, shift in fw_vector(), walk in prop::collection::vec(0usize..8, 0..20)) {
        let l = E8Vector::from_fw(&fw);
        let base = coset_min_norm(&l, t).unwrap();
        prop_assert!(base <= l.norm());
        prop_assert!(base >= 0);
        let moved = l + (t as i32) * E8Vector::from_fw(&shift);
        prop_assert_eq!(coset_min_norm(&moved, t).unwrap(), base);
        let mut y = fw;
        for i in walk {
            reflect_fw(&mut y, i);
        }
        prop_assert_eq!(coset_min_norm(&E8Vector::from_fw(&y), t).unwrap(), base);
    }

    #[test]
    fn orbit_products_are_commutative_and_respect_evaluation(x in element(), y in element()) {
        let xy = inv_mul(&x, &y).unwrap();
        prop_assert_eq!(&xy, &inv_mul(&y, &x).unwrap());
        prop_assert_eq!(eval_zero(&xy), eval_zero(&x) * eval_zero(&y));
    }

    #[test]
    fn pullback_is_multiplicative(x in element(), y in element(), fw in prop::array::uniform8(-1i32..=1)) {
        let v = E8Vector::from_fw(&fw);
        let xy = inv_mul(&x, &y).unwrap();
        prop_assert_eq!(pullback(&xy, &v).unwrap(), pullback(&x, &v).unwrap().mul(&pullback(&y, &v).unwrap()));
        prop_assert!(pullback(&x, &v).unwrap().is_palindromic());
    }

    #[test]
    fn display_round_trip(x in element(), extra in small_dominant(), c in rational()) {
        let mut x = x;
        x.add_term(extra, c);
        prop_assert_eq!(parse_display(&display_string(&x)).unwrap(), x);
    }

    #[test]
    fn rational_round_trip(r in rational()) {
        prop_assert_eq!(parse(&to_string(&r)).unwrap(), r);
    }

    #[test]
    fn series_division_inverts_multiplication(a in modular(4), b in modular(6), c0 in 1i64..5) {
        let mut cb: Vec<Rational> = b.coeffs().to_vec();
        cb[0] = int(c0);
        let b = ModularQSeries::new(6, cb).unwrap();
        prop_assert_eq!(series_div(&series_mul(&a, &b), &b).unwrap(), a);
    }

    #[test]
    fn json_round_trips(x in element(), y in element(), a in modular(12), k in -8i32..=8, t in 1u32..=4) {
        prop_assert_eq!(InvariantElement::from_json(&x.to_json()).unwrap(), x.clone());
        prop_assert_eq!(ModularQSeries::from_json(&a.to_json()).unwrap(), a);
        let f = JacobiQExpansion::new(2 * k, t, vec![x, y]).unwrap();
        let s = serde_json::to_string(&f.to_json()).unwrap();
        prop_assert_eq!(JacobiQExpansion::from_json(&serde_json::from_str(&s).unwrap()).unwrap(), f);
    }

    #[test]
    fn heat_raises_weight_and_is_linear(x in element(), y in element(), k in -8i32..=4, t in 1u32..=4, c in rational()) {
        let f = JacobiQExpansion::new(2 * k, t, vec![x.clone(), y.clone()]).unwrap();
        let g = JacobiQExpansion::new(2 * k, t, vec![y, x]).unwrap();
        let h = heat(&f).unwrap();
        prop_assert_eq!(h.weight, f.weight + 2);
        let lhs = heat(&f.add(&g.scale(&c)).unwrap()).unwrap();
        let rhs = h.add(&heat(&g).unwrap().scale(&c)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn nullspace_vectors_are_annihilated(rows in prop::collection::vec(prop::collection::vec(-4i64..=4, 6), 1..6)) {
        let m: Matrix = rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        let ns = nullspace(&m, 6);
        prop_assert_eq!(rank(&m) + ns.len(), 6);
        for v in &ns {
            for r in &m {
                let s: Rational = r.iter().zip(v).map(|(a, b)| a * b).sum();
                prop_assert!(s.is_zero());
            }
        }
    }

    #[test]
    fn cascade_solutions_solve_the_system(t in 1u32..=4, w in 1i32..=10, k in 1i64..=8) {
        let norms: Vec<i64> = (0..=k).map(|j| 2 * j).collect();
        let s = solve_cascade(t, -2 * w, &norms).unwrap();
        prop_assert_eq!(s.matrix.len() as i32, w + 1);
        for v in &s.nullspace {
            for r in &s.matrix {
                let x: Rational = r.iter().zip(v).map(|(a, b)| a * b).sum();
                prop_assert!(x.is_zero());
            }
        }
    }
}
