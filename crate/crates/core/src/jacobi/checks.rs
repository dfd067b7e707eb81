use super::JacobiQExpansion;
use crate::e8::{coset_min_norm, orbit, orbit_size, pairing, reflect_fw, DominantWeight, E8Vector};
use crate::error::{Error, Result};
use crate::invring::eval_zero;
use crate::rational::int;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Weak,
    Holomorphic,
    Cusp,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Weak => "weak",
            Kind::Holomorphic => "holomorphic",
            Kind::Cusp => "cusp",
        })
    }
}

/// Verdict on the stored coefficients, valid up to `order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub kind: Kind,
    pub order: usize,
    /// First coefficient ruling out the next stronger kind.
    pub witness: Option<(usize, DominantWeight)>,
}

/// Compares 2nt − (ℓ,ℓ) with 0 over the stored coefficients.
pub fn classify(a: &JacobiQExpansion) -> Result<Classification> {
    if a.index == 0 {
        return Err(Error::InvalidArgument("classification needs index >= 1".into()));
    }
    let t = a.index as i64;
    let mut boundary = None;
    for (n, term) in a.terms().iter().enumerate() {
        let mut support: Vec<&DominantWeight> = term.terms().keys().collect();
        support.sort_by_key(|m| (m.norm(), **m));
        for m in support {
            let d = 2 * n as i64 * t - m.norm();
            if d < 0 {
                return Ok(Classification { kind: Kind::Weak, order: a.order(), witness: Some((n, *m)) });
            }
            if d == 0 && boundary.is_none() {
                boundary = Some((n, *m));
            }
        }
    }
    let kind = if boundary.is_some() { Kind::Holomorphic } else { Kind::Cusp };
    Ok(Classification { kind, order: a.order(), witness: boundary })
}

/// 2t·Σ f(0,ℓ) = 3·Σ f(0,ℓ)(ℓ,ℓ) for a weight-0 form.
pub fn weight0_identity(a: &JacobiQExpansion) -> Result<bool> {
    if a.weight != 0 {
        return Err(Error::InvalidArgument(format!("weight-0 identity applies to weight 0, not {}", a.weight)));
    }
    let q0 = a.term(0);
    let lhs = eval_zero(q0) * int(2 * a.index as i64);
    let rhs: crate::Rational =
        q0.terms().iter().map(|(m, c)| c * int(orbit_size(m) as i64 * m.norm())).sum::<crate::Rational>() * int(3);
    Ok(lhs == rhs)
}

/// Nonzero f(n, ℓ) forces 2nt − (ℓ,ℓ) ≥ −min{(v,v) : v ∈ ℓ + tE8}. Returns the first violation.
pub fn coefficient_bound_check(a: &JacobiQExpansion) -> Result<Option<(usize, DominantWeight)>> {
    if a.index == 0 {
        return Ok(None);
    }
    let t = a.index as i64;
    for (n, term) in a.terms().iter().enumerate() {
        for m in term.terms().keys() {
            let lhs = 2 * n as i64 * t - m.norm();
            if lhs < -coset_min_norm(&m.vector(), a.index)? {
                return Ok(Some((n, *m)));
            }
        }
    }
    Ok(None)
}

/// Samples (n, ℓ) with f(n, ℓ) ≠ 0, then a shift v among those keeping
/// n' = n + (ℓ,v) + t(v,v)/2 within the truncation, and checks f(n, ℓ) = f(n', ℓ + tv).
/// Any shift with n' < 0 is a counterexample. Returns the number of checked triples,
/// or a description of the first counterexample.
pub fn quasi_periodicity_check(a: &JacobiQExpansion, samples: usize, seed: u64) -> Result<std::result::Result<usize, String>> {
    let t = a.index as i64;
    let support: Vec<(usize, DominantWeight)> =
        a.terms().iter().enumerate().flat_map(|(n, term)| term.terms().keys().map(move |m| (n, *m))).collect();
    if support.is_empty() || t == 0 {
        return Ok(Ok(0));
    }
    let mut shifts: Vec<E8Vector> = Vec::new();
    for i in [8, 1, 7] {
        shifts.extend(orbit(&DominantWeight::w(i))?);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0;
    for _ in 0..samples * 100 {
        if checked == samples {
            break;
        }
        let (n, m) = support[rng.gen_range(0..support.len())];
        let mut x = *m.fw();
        for _ in 0..rng.gen_range(0..40) {
            reflect_fw(&mut x, rng.gen_range(0..8));
        }
        let l = E8Vector::from_fw(&x);
        let c = a.coefficient(n, &l).expect("n is stored");
        let mut in_range = Vec::new();
        for v in &shifts {
            let n2 = n as i64 + pairing(&l, v) + t * v.norm() / 2;
            if n2 < 0 {
                return Ok(Err(format!("f({n}, {l}) = {c} is nonzero but shifting by {v} reaches q^{n2}")));
            }
            if n2 as usize <= a.order() {
                in_range.push((n2 as usize, *v));
            }
        }
        if in_range.is_empty() {
            continue;
        }
        let (n2, v) = in_range[rng.gen_range(0..in_range.len())];
        let l2 = l + (t as i32) * v;
        let c2 = a.coefficient(n2, &l2).expect("within order");
        if c != c2 {
            return Ok(Err(format!("f({n}, {l}) = {c} but f({n2}, {l2}) = {c2}")));
        }
        debug_assert!(!c.is_zero());
        checked += 1;
    }
    Ok(Ok(checked))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invring::parse_display;
    use crate::jacobi::theta_e8;

    fn q0(weight: i32, index: u32, s: &str) -> JacobiQExpansion {
        JacobiQExpansion::new(weight, index, vec![parse_display(s).unwrap()]).unwrap()
    }

    #[test]
    fn weak_witness() {
        let c = classify(&q0(-4, 2, "2Σ_2 − Σ_4 − 240")).unwrap();
        assert_eq!(c.kind, Kind::Weak);
        assert_eq!(c.witness, Some((0, DominantWeight::w(8))));
    }

    #[test]
    fn theta_is_holomorphic() {
        let c = classify(&theta_e8(3).unwrap()).unwrap();
        assert_eq!(c.kind, Kind::Holomorphic);
        assert_eq!(c.witness, Some((0, DominantWeight::ZERO)));
    }

    #[test]
    fn weight_zero_examples() {
        assert!(weight0_identity(&q0(0, 2, "Σ_2 + 120")).unwrap());
        assert!(weight0_identity(&q0(0, 4, "2Σ_2 − 120")).unwrap());
        assert!(weight0_identity(&JacobiQExpansion::zero(0, 3, 1)).unwrap());
        assert!(!weight0_identity(&q0(0, 2, "Σ_2 + 100")).unwrap());
        assert!(weight0_identity(&q0(-2, 2, "Σ_2")).is_err());
    }

    #[test]
    fn theta_quasi_periodicity() {
        let th = theta_e8(4).unwrap();
        assert_eq!(quasi_periodicity_check(&th, 100, 7).unwrap(), Ok(100));
        assert_eq!(coefficient_bound_check(&th).unwrap(), None);
    }

    #[test]
    fn broken_form_is_caught() {
        // a lone orb(w_8) at q^0 cannot be a weak form of index 1
        let x = q0(4, 1, "Σ_2");
        assert!(coefficient_bound_check(&x).unwrap().is_some());
        let th = theta_e8(2).unwrap();
        let mut terms = th.terms().to_vec();
        terms[1] = terms[1].scale(&int(2));
        let bad = JacobiQExpansion::new(4, 1, terms).unwrap();
        assert!(quasi_periodicity_check(&bad, 100, 1).unwrap().is_err());
    }
}
