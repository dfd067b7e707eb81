use crate::e8::{orbit_size, reduce_fw, DominantWeight, SIMPLE_ROOTS};
use crate::error::{Error, Result};
use crate::invring::{sigma, to_display, DisplayLabel, InvariantElement};
use crate::jacobi::{jf_div_modular, JacobiQExpansion};
use crate::qseries::{delta, series_mul};
use crate::rational::{int, Rational};
use std::collections::HashMap;

/// Terms of θ(τ,u)²θ(τ,v)² / q^{1/2}: (relative q power j, exponent of u, exponent of v, coefficient),
/// with θ(τ,z) = Σ (−1)ⁿ q^{(n+½)²/2} ζ^{n+½}.
fn theta_square(max_j: usize) -> Vec<(usize, i32, i64)> {
    // odd h = 2n+1 contributes q^{h²/8}; θ² picks two of them
    let mut hs: Vec<(i32, i64)> = Vec::new();
    let mut h = 1i32;
    while ((h * h - 1) / 8) as usize <= max_j {
        let n_pos = (h - 1) / 2;
        let n_neg = -(h + 1) / 2;
        hs.push((h, if n_pos % 2 == 0 { 1 } else { -1 }));
        hs.push((-h, if n_neg.rem_euclid(2) == 0 { 1 } else { -1 }));
        h += 2;
    }
    let mut acc: HashMap<(usize, i32), i64> = HashMap::new();
    for &(h1, s1) in &hs {
        for &(h2, s2) in &hs {
            // (h1² + h2²)/8 = 1/4 + j
            let j = ((h1 * h1 + h2 * h2 - 2) / 8) as usize;
            if j <= max_j {
                *acc.entry((j, (h1 + h2) / 2)).or_default() += s1 * s2;
            }
        }
    }
    let mut out: Vec<(usize, i32, i64)> = acc.into_iter().filter(|(_, c)| *c != 0).map(|((j, a), c)| (j, a, c)).collect();
    out.sort_unstable();
    out
}

/// One pair block θ(z1+z2)²θ(z1−z2)² / q^{1/2}: (j, exponent of z1, exponent of z2, coefficient).
fn pair_block(max_j: usize) -> Vec<Vec<(i32, i32, i64)>> {
    let sq = theta_square(max_j);
    let mut acc: Vec<HashMap<(i32, i32), i64>> = vec![HashMap::new(); max_j + 1];
    for &(j1, a, c1) in &sq {
        for &(j2, b, c2) in &sq {
            if j1 + j2 <= max_j {
                *acc[j1 + j2].entry((a + b, a - b)).or_default() += c1 * c2;
            }
        }
    }
    acc.into_iter()
        .map(|m| {
            let mut v: Vec<(i32, i32, i64)> = m.into_iter().filter(|(_, c)| *c != 0).map(|((x, y), c)| (x, y, c)).collect();
            v.sort_unstable();
            v
        })
        .collect()
}

/// The weight −16 index 4 weak form obtained by symmetrising
/// Δ⁻² ∏_{i=1}^{4} θ(z_{2i−1}+z_{2i})²θ(z_{2i−1}−z_{2i})² over W(E8),
/// normalised so that Σ_16' has coefficient 1 in the q⁰ term.
pub fn build_phi16_4(order: usize) -> Result<JacobiQExpansion> {
    if order > 3 {
        return Err(Error::InvalidArgument(format!("theta quotient is limited to order 3, got {order}")));
    }
    let block = pair_block(order);
    // fw coordinate contribution of a unit exponent in coordinate k: (α_i, e_k) = A_i[k]/2
    let unit: [[i32; 8]; 8] = std::array::from_fn(|k| std::array::from_fn(|i| SIMPLE_ROOTS[i][k]));
    let mut sums: Vec<HashMap<[i32; 8], i64>> = vec![HashMap::new(); order + 1];
    let contrib = |x: &mut [i32; 8], k: usize, e: i32| {
        for i in 0..8 {
            x[i] += e * unit[k][i];
        }
    };
    for j0 in 0..=order {
        for j1 in 0..=(order - j0) {
            for j2 in 0..=(order - j0 - j1) {
                for j3 in 0..=(order - j0 - j1 - j2) {
                    let acc = &mut sums[j0 + j1 + j2 + j3];
                    for &(a0, b0, c0) in &block[j0] {
                        let mut x0 = [0i32; 8];
                        contrib(&mut x0, 0, a0);
                        contrib(&mut x0, 1, b0);
                        for &(a1, b1, c1) in &block[j1] {
                            let mut x1 = x0;
                            contrib(&mut x1, 2, a1);
                            contrib(&mut x1, 3, b1);
                            let c01 = c0 * c1;
                            for &(a2, b2, c2) in &block[j2] {
                                let mut x2 = x1;
                                contrib(&mut x2, 4, a2);
                                contrib(&mut x2, 5, b2);
                                let c012 = c01 * c2;
                                for &(a3, b3, c3) in &block[j3] {
                                    let mut x3 = x2;
                                    contrib(&mut x3, 6, a3);
                                    contrib(&mut x3, 7, b3);
                                    // doubled fw pairings; every exponent vector must lie in D8 ⊂ E8
                                    assert!(x3.iter().all(|v| v % 2 == 0), "raw exponent outside E8");
                                    let fw = reduce_fw(x3.map(|v| v / 2));
                                    *acc.entry(fw).or_default() += c012 * c3;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let mut terms = vec![InvariantElement::zero(), InvariantElement::zero()];
    for s in sums {
        let mut t = InvariantElement::zero();
        for (fw, total) in s {
            let m = DominantWeight::from_fw_unchecked(fw);
            t.add_term(m, Rational::new(total.into(), (orbit_size(&m) as i64).into()));
        }
        terms.push(t);
    }
    let numerator = JacobiQExpansion::new(8, 4, terms)?;
    let d = delta(order + 2);
    let h = jf_div_modular(&numerator, &series_mul(&d, &d))?;
    let s16 = sigma("Σ_16'").expect("in dictionary");
    let lead = to_display(h.term(0))
        .into_iter()
        .find(|(l, _)| *l == DisplayLabel::Named("Σ_16'"))
        .map(|(_, c)| c)
        .ok_or_else(|| Error::Unresolved(format!("theta quotient has no {} term", s16)))?;
    Ok(h.scale(&(int(1) / lead)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invring::display_string;

    #[test]
    fn theta_square_leading_terms() {
        // θ² = q^{1/4}(ζ − 2 + ζ⁻¹) + …
        let sq = theta_square(0);
        assert_eq!(sq, vec![(0, -1, 1), (0, 0, -2), (0, 1, 1)]);
    }

    #[test]
    fn q0_term() {
        let phi = build_phi16_4(0).unwrap();
        let expect = crate::invring::parse_display(
            "Σ_16' − 8Σ_14' + 28Σ_12 − 56Σ_10 + 14Σ_8'' + 56Σ_8' − 56Σ_6 + 28Σ_4 − 8Σ_2 + 240",
        )
        .unwrap();
        assert_eq!(phi.term(0), &expect, "{}", display_string(phi.term(0)));
        assert_eq!((phi.weight, phi.index), (-16, 4));
    }
}
