use super::{check_budget, pairing, weight_gram, weyl::orbit_size, weyl::reduce_fw, DominantWeight, E8Vector};
use crate::error::{Error, Result};
use crate::qseries::sigma;
use std::collections::BTreeMap;

/// |R_{2n}| = 240·σ₃(n) for n ≥ 1.
pub fn shell_size(two_n: u64) -> u64 {
    if two_n == 0 {
        1
    } else {
        240 * u64::try_from(sigma(3, two_n / 2)).expect("fits in u64")
    }
}

fn check_even(two_n: u64) -> Result<()> {
    if !two_n.is_multiple_of(2) {
        Err(Error::InvalidArgument(format!("E8 has no vectors of odd norm {two_n}")))
    } else {
        Ok(())
    }
}

/// Every d ∈ ℤ⁸ of fixed parity with Σd² = target, handed to `f`.
fn enumerate_doubled(target: i64, odd: bool, f: &mut impl FnMut(&[i32; 8])) {
    fn rec(i: usize, rem: i64, odd: bool, d: &mut [i32; 8], f: &mut impl FnMut(&[i32; 8])) {
        if i == 8 {
            if rem == 0 {
                f(d);
            }
            return;
        }
        let slots = (8 - i) as i64;
        if odd && rem < slots {
            return;
        }
        let mut x = if odd { 1 } else { 0 };
        while (x as i64) * (x as i64) <= rem {
            for s in if x == 0 { &[1][..] } else { &[1, -1][..] } {
                d[i] = s * x;
                rec(i + 1, rem - (x as i64) * (x as i64), odd, d, f);
            }
            x += 2;
        }
    }
    let mut d = [0i32; 8];
    rec(0, target, odd, &mut d, f);
}

/// Orbit decomposition of R_{2n} by exhaustive enumeration of its points.
pub fn shell(two_n: u64) -> Result<Vec<(DominantWeight, u64)>> {
    check_even(two_n)?;
    check_budget(shell_size(two_n) as usize)?;
    let mut counts: BTreeMap<[i32; 8], u64> = BTreeMap::new();
    let target = 4 * two_n as i64;
    for odd in [false, true] {
        enumerate_doubled(target, odd, &mut |d| {
            if d.iter().map(|&x| x as i64).sum::<i64>().rem_euclid(4) == 0 {
                let v = E8Vector::from_doubled_unchecked(*d);
                *counts.entry(reduce_fw(v.fw())).or_default() += 1;
            }
        });
    }
    let mut out: Vec<(DominantWeight, u64)> = counts
        .into_iter()
        .map(|(fw, c)| {
            let m = DominantWeight::from_fw_unchecked(fw);
            debug_assert_eq!(c, orbit_size(&m));
            (m, c)
        })
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// Dominant weights of norm 2n, found by solving xᵀGx = 2n over ℕ⁸ directly.
/// Unlike [`shell`] this never touches the non-dominant points.
pub fn dominant_shell(two_n: u64) -> Result<Vec<DominantWeight>> {
    check_even(two_n)?;
    let g = weight_gram();
    let target = two_n as i64;
    let mut out = Vec::new();
    // all Gram entries are positive, so the partial form only grows
    fn rec(i: usize, x: &mut [i32; 8], val: i64, target: i64, g: &[[i64; 8]; 8], out: &mut Vec<DominantWeight>) {
        if i == 8 {
            if val == target {
                out.push(DominantWeight::from_fw_unchecked(*x));
            }
            return;
        }
        let mut c = 0i32;
        let mut v = val;
        loop {
            x[i] = c;
            rec(i + 1, x, v, target, g, out);
            // value after raising x_i by one: cross terms with fixed coordinates plus diagonal growth
            let cross: i64 = (0..i).map(|j| 2 * g[i][j] * x[j] as i64).sum();
            v += cross + g[i][i] * (2 * c as i64 + 1);
            c += 1;
            if v > target {
                break;
            }
        }
        x[i] = 0;
    }
    let mut x = [0i32; 8];
    rec(0, &mut x, 0, target, &g, &mut out);
    out.sort_unstable();
    Ok(out)
}

/// max{(m, ℓ) : (ℓ,ℓ) = 2n}. For dominant m and λ, (m, σλ) ≤ (m, λ), so only
/// the dominant representatives of the shell need to be compared.
pub fn max_pairing(m: &DominantWeight, two_n: u64) -> Result<i64> {
    let reps = shell(two_n)?;
    Ok(reps.iter().map(|(r, _)| pairing(&m.vector(), &r.vector())).max().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::e8::orbit;

    fn reps(two_n: u64) -> Vec<[i32; 8]> {
        shell(two_n).unwrap().iter().map(|(m, _)| *m.fw()).collect()
    }

    #[test]
    fn small_shells() {
        assert_eq!(shell(0).unwrap(), vec![(DominantWeight::ZERO, 1)]);
        assert_eq!(reps(2), vec![[0, 0, 0, 0, 0, 0, 0, 1]]);
        let mut r8 = reps(8);
        r8.sort();
        assert_eq!(r8, vec![[0, 0, 0, 0, 0, 0, 0, 2], [0, 1, 0, 0, 0, 0, 0, 0]]);
        assert!(shell(3).is_err());
    }

    #[test]
    fn sizes_match_divisor_sums() {
        for two_n in (2..=12).step_by(2) {
            let total: u64 = shell(two_n).unwrap().iter().map(|(_, c)| c).sum();
            assert_eq!(total, shell_size(two_n));
        }
    }

    #[test]
    fn dominant_shell_agrees_with_enumeration() {
        for two_n in (0..=24).step_by(2) {
            let a: Vec<DominantWeight> = shell(two_n).unwrap().into_iter().map(|(m, _)| m).collect();
            assert_eq!(a, dominant_shell(two_n).unwrap(), "norm {two_n}");
        }
    }

    #[test]
    fn pairing_maxima() {
        assert_eq!(max_pairing(&DominantWeight::w(1), 4).unwrap(), 4);
        assert_eq!(max_pairing(&DominantWeight::w(4), 4).unwrap(), 10);
        assert_eq!(max_pairing(&DominantWeight::ZERO, 4).unwrap(), 0);
    }

    #[test]
    fn pairing_maxima_brute_force() {
        let r4 = orbit(&DominantWeight::w(1)).unwrap();
        for fw in [[0, 0, 0, 0, 0, 0, 1, 0], [0, 1, 0, 0, 0, 0, 0, 0], [1, 0, 0, 0, 0, 0, 0, 2]] {
            let m = DominantWeight::from_fw(fw).unwrap();
            let brute = r4.iter().map(|l| pairing(&m.vector(), l)).max().unwrap();
            assert_eq!(max_pairing(&m, 4).unwrap(), brute);
        }
    }
}
