use super::{E8Vector, SIMPLE_ROOTS};
use crate::error::{Error, Result};

/// min Σ(a_i + 2t·z_i)² over z ∈ ℤ⁸ with Σz even.
fn d8_min(a: &[i64; 8], t: i64) -> i64 {
    let m = 2 * t;
    let mut total = 0;
    let mut parity = 0;
    let mut best_flip = i64::MAX;
    for &ai in a {
        // r ≡ a (mod 2t), r ∈ [−t, t)
        let r = (ai + t).rem_euclid(m) - t;
        let z = (r - ai) / m;
        parity ^= z & 1;
        total += r * r;
        // next-best residue r ∓ 2t; exact, so the r = −t tie costs nothing
        best_flip = best_flip.min(4 * t * t - 4 * t * r.abs());
    }
    if parity != 0 {
        total += best_flip;
    }
    total
}

/// min{(v,v) : v ∈ ℓ + tE8}.
///
/// Writes v = ℓ + t·u with u either in D8 or in D8 + (½,…,½) and decodes each
/// case coordinate-wise with a parity fix-up.
pub fn coset_min_norm(l: &E8Vector, t: u32) -> Result<i64> {
    if t == 0 {
        return Err(Error::InvalidArgument("t must be positive".into()));
    }
    Ok(coset_min_norm_raw(l.doubled(), t as i64))
}

fn coset_min_norm_raw(d: &[i32; 8], t: i64) -> i64 {
    let a: [i64; 8] = d.map(|x| x as i64);
    let b: [i64; 8] = a.map(|x| x + t);
    let s = d8_min(&a, t).min(d8_min(&b, t));
    debug_assert_eq!(s % 4, 0);
    s / 4
}

/// Maximum of the coset minimum over all tⁿ cosets of E8/tE8, with
/// representatives Σ a_i α_i, 0 ≤ a_i < t.
pub fn max_coset_min_norm(t: u32) -> Result<i64> {
    if t == 0 {
        return Err(Error::InvalidArgument("t must be positive".into()));
    }
    let t = t as i64;
    let mut best = 0;
    let mut a = [0i64; 8];
    let mut d = [0i32; 8];
    loop {
        best = best.max(coset_min_norm_raw(&d, t));
        // odometer step, keeping d = Σ a_i α_i in sync
        let mut i = 0;
        loop {
            if i == 8 {
                return Ok(best);
            }
            a[i] += 1;
            for (dk, rk) in d.iter_mut().zip(&SIMPLE_ROOTS[i]) {
                *dk += rk;
            }
            if a[i] < t {
                break;
            }
            for (dk, rk) in d.iter_mut().zip(&SIMPLE_ROOTS[i]) {
                *dk -= (t as i32) * rk;
            }
            a[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::e8::{dominant_shell, orbit, DominantWeight};

    /// Minimum over v = ℓ + t·u with u in the ball of norm ≤ bound.
    fn brute(l: &E8Vector, t: i32, ball: &[E8Vector]) -> i64 {
        ball.iter().map(|u| (*l + t * *u).norm()).min().unwrap()
    }

    fn ball(max_norm: u64) -> Vec<E8Vector> {
        let mut out = vec![E8Vector::ZERO];
        for two_n in (2..=max_norm).step_by(2) {
            for m in dominant_shell(two_n).unwrap() {
                out.extend(orbit(&m).unwrap());
            }
        }
        out
    }

    #[test]
    fn examples() {
        assert_eq!(coset_min_norm(&E8Vector::ZERO, 3).unwrap(), 0);
        assert_eq!(coset_min_norm(&DominantWeight::w(8).vector(), 2).unwrap(), 2);
        assert_eq!(coset_min_norm(&DominantWeight::w(1).vector(), 2).unwrap(), 4);
        assert_eq!(coset_min_norm(&DominantWeight::w(1).vector(), 1).unwrap(), 0);
    }

    #[test]
    fn small_maxima() {
        assert_eq!(max_coset_min_norm(1).unwrap(), 0);
        assert_eq!(max_coset_min_norm(2).unwrap(), 4);
        assert_eq!(max_coset_min_norm(3).unwrap(), 8);
    }

    #[test]
    fn decoder_matches_brute_force_on_short_vectors() {
        // (ℓ,ℓ) ≤ N and t ≥ 2 put the minimiser's u inside norm 4N/t² ≤ 8
        let b = ball(8);
        for (t, n) in [(2, 8u64), (3, 18), (4, 32)] {
            for two_n in (0..=n).step_by(2).filter(|x| *x <= 12) {
                for m in dominant_shell(two_n).unwrap() {
                    let l = m.vector();
                    assert_eq!(coset_min_norm(&l, t as u32).unwrap(), brute(&l, t, &b), "{m} mod {t}");
                }
            }
        }
    }
}
