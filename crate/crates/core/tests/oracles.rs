//! Independent recomputations of derived quantities.

use e8jacobi::catalog::{dimension_bound_table, pullback_max_table, rank_series};
use e8jacobi::e8::{coset_min_norm, orbit, pairing, DominantWeight, E8Vector};
use e8jacobi::invring::SIGMA_DICTIONARY;
use e8jacobi::qseries::dim_modular;
use e8jacobi::verify::compare_product;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Local descent over the 2400 Voronoi-relevant vectors of E8 (norms 2 and 4); a point with
/// no improving step is in the Voronoi cell of tE8, so the descent ends at the coset minimum.
fn descent_min(l: E8Vector, t: i32, relevant: &[E8Vector]) -> i64 {
    let mut x = l;
    loop {
        let best = relevant.iter().map(|r| x + t * *r).min_by_key(|y| y.norm()).expect("nonempty");
        if best.norm() >= x.norm() {
            return x.norm();
        }
        x = best;
    }
}

#[test]
fn coset_minima_against_voronoi_descent() {
    let mut relevant = orbit(&DominantWeight::w(8)).unwrap();
    relevant.extend(orbit(&DominantWeight::w(1)).unwrap());
    assert_eq!(relevant.len(), 2400);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for t in 1..=4u32 {
        for _ in 0..250 {
            let fw: [i32; 8] = std::array::from_fn(|_| rng.gen_range(-6..=6));
            let l = E8Vector::from_fw(&fw);
            assert_eq!(coset_min_norm(&l, t).unwrap(), descent_min(l, t as i32, &relevant), "l = {l}, t = {t}");
        }
    }
}

#[test]
fn pullback_maxima_against_full_shell() {
    let shell4 = orbit(&DominantWeight::w(1)).unwrap();
    assert_eq!(shell4.len(), 2160);
    for ((label, fw), (l2, got)) in SIGMA_DICTIONARY.iter().zip(pullback_max_table().unwrap()) {
        assert_eq!(*label, l2);
        let m = DominantWeight::from_fw(*fw).unwrap().vector();
        let brute = shell4.iter().map(|v| pairing(&m, v)).max().unwrap();
        assert_eq!(got, brute, "{label}");
    }
}

#[test]
fn rank_series_against_exponent_enumeration() {
    let degrees = [1usize, 2, 2, 3, 3, 4, 4, 5, 6];
    fn count(d: &[usize], t: usize) -> u64 {
        match d.split_first() {
            None => u64::from(t == 0),
            Some((&k, rest)) => (0..=t / k).map(|a| count(rest, t - a * k)).sum(),
        }
    }
    let r = rank_series(14);
    for (t, &rt) in r.iter().enumerate() {
        assert_eq!(rt, count(&degrees, t), "t = {t}");
    }
}

#[test]
fn dimension_bounds_against_direct_sum() {
    let gens: [&[i32]; 5] = [&[0], &[4], &[-4, -2, 0], &[-8, -6, -4, -2, 0], &[-16, -14, -12, -10, -8, -8, -6, -4, -2, 0]];
    for row in dimension_bound_table(40).unwrap() {
        let k = row.weight;
        let mut sum = 0;
        for r in 0..=(k / 7) {
            let w = k - 12 * r;
            sum += match r {
                0..=4 => gens[r as usize].iter().map(|g| dim_modular((w - g) as i64)).sum::<usize>(),
                _ => {
                    assert!(w <= -20);
                    0
                }
            };
        }
        let want = if k == 6 { 0 } else { sum };
        assert_eq!(row.upper_bound, want, "weight {k}");
    }
}

#[test]
fn small_orbit_products_against_brute_force() {
    let reps = [[0, 0, 0, 0, 0, 0, 0, 1], [1, 0, 0, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, 0, 0, 2], [0, 0, 0, 0, 0, 0, 1, 0]];
    for a in reps {
        for b in reps {
            let (a, b) = (DominantWeight::from_fw(a).unwrap(), DominantWeight::from_fw(b).unwrap());
            assert_eq!(compare_product(&a, &b).unwrap(), None);
        }
    }
}
