use super::JacobiQExpansion;
use crate::e8::dominant_shell;
use crate::error::{Error, Result};
use crate::invring::{inv_mul, InvariantElement};
use crate::qseries::{eisenstein, ModularQSeries};
use crate::rational::{frac, int, pow_int, Rational};
use num_traits::Zero;

/// θ_E8 = Σ_ℓ q^{(ℓ,ℓ)/2} ζ^ℓ: weight 4, index 1.
pub fn theta_e8(order: usize) -> Result<JacobiQExpansion> {
    let mut terms = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut t = InvariantElement::zero();
        for m in dominant_shell(2 * n as u64)? {
            t.add_term(m, int(1));
        }
        terms.push(t);
    }
    JacobiQExpansion::new(4, 1, terms)
}

/// Product of forms; weights and indices add.
pub fn jf_mul(a: &JacobiQExpansion, b: &JacobiQExpansion) -> Result<JacobiQExpansion> {
    let n = a.order().min(b.order());
    let mut terms = vec![InvariantElement::zero(); n + 1];
    for i in 0..=n {
        if a.terms[i].is_zero() {
            continue;
        }
        for j in 0..=(n - i) {
            if !b.terms[j].is_zero() {
                terms[i + j] = terms[i + j].add(&inv_mul(&a.terms[i], &b.terms[j])?);
            }
        }
    }
    Ok(JacobiQExpansion { weight: a.weight + b.weight, index: a.index + b.index, terms })
}

/// f·a for a modular form f.
pub fn jf_scale(a: &JacobiQExpansion, f: &ModularQSeries) -> JacobiQExpansion {
    let n = a.order().min(f.order());
    let mut terms = vec![InvariantElement::zero(); n + 1];
    for (j, fj) in f.coeffs().iter().enumerate().take(n + 1) {
        if fj.is_zero() {
            continue;
        }
        for i in 0..=(n - j) {
            if !a.terms[i].is_zero() {
                terms[i + j] = terms[i + j].add(&a.terms[i].scale(fj));
            }
        }
    }
    JacobiQExpansion { weight: a.weight + f.weight, index: a.index, terms }
}

/// Exact quotient a/f; fails unless the first val(f) terms of a vanish.
pub fn jf_div_modular(a: &JacobiQExpansion, f: &ModularQSeries) -> Result<JacobiQExpansion> {
    let v = f.valuation().ok_or_else(|| Error::InvalidArgument("division by the zero series".into()))?;
    let n = a.order().min(f.order());
    if n < v {
        return Err(Error::InsufficientOrder { required: v, available: n });
    }
    if let Some(i) = a.terms[..v].iter().position(|t| !t.is_zero()) {
        return Err(Error::NotDivisible(format!("q^{i} term of the dividend is nonzero, divisor has valuation {v}")));
    }
    let g0 = f.coeff(v).clone();
    let out = n - v;
    let mut b: Vec<InvariantElement> = Vec::with_capacity(out + 1);
    for k in 0..=out {
        let mut s = a.terms[k + v].clone();
        for j in 1..=k {
            let g = f.coeff(v + j);
            if !g.is_zero() {
                s = s.sub(&b[k - j].scale(g));
            }
        }
        b.push(s.scale(&g0.recip()));
    }
    Ok(JacobiQExpansion { weight: a.weight - f.weight, index: a.index, terms: b })
}

/// H_k(φ) = H(φ) + ((4−k)/12)·E2·φ, where H multiplies f(n, ℓ) by n − (ℓ,ℓ)/(2t).
pub fn heat(a: &JacobiQExpansion) -> Result<JacobiQExpansion> {
    if a.index == 0 {
        return Err(Error::InvalidArgument("the heat operator needs index >= 1".into()));
    }
    let two_t = 2 * a.index as i64;
    let mut h = a.clone();
    for (n, t) in h.terms.iter_mut().enumerate() {
        *t = t.map_coeffs(|m| int(n as i64) - frac(m.norm(), two_t));
    }
    let e2 = eisenstein(2, a.order())?;
    let corr = jf_scale(a, &e2).scale(&frac(4 - a.weight as i64, 12));
    let mut out = h.add(&JacobiQExpansion { weight: h.weight, index: h.index, terms: corr.terms })?;
    out.weight = a.weight + 2;
    Ok(out)
}

/// Index raising: g(n, ℓ) = Σ_{d | (n, ℓ, s)} d^{k−1} f(ns/d², ℓ/d), to order ⌊order/s⌋.
pub fn hecke_t_minus(a: &JacobiQExpansion, s: u32) -> Result<JacobiQExpansion> {
    if s == 0 {
        return Err(Error::InvalidArgument("s must be positive".into()));
    }
    hecke_t_minus_to(a, s, a.order() / s as usize)
}

/// [`hecke_t_minus`] to an explicit output order, which needs input order s·order.
pub fn hecke_t_minus_to(a: &JacobiQExpansion, s: u32, order: usize) -> Result<JacobiQExpansion> {
    if s == 0 {
        return Err(Error::InvalidArgument("s must be positive".into()));
    }
    let s = s as usize;
    let required = s * order;
    if a.order() < required {
        return Err(Error::InsufficientOrder { required, available: a.order() });
    }
    let divisors: Vec<usize> = (1..=s).filter(|d| s.is_multiple_of(*d)).collect();
    let mut terms = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut t = InvariantElement::zero();
        for &d in &divisors {
            if n % d != 0 {
                continue;
            }
            let src = n * s / (d * d);
            let w: Rational = pow_int(d as i64, a.weight - 1);
            for (m, c) in a.terms[src].terms() {
                t.add_term(m.scaled(d as i32), c * &w);
            }
        }
        terms.push(t);
    }
    Ok(JacobiQExpansion { weight: a.weight, index: a.index * s as u32, terms })
}

/// φ(τ, c·z): orb(m) ↦ orb(c·m), index multiplied by c².
pub fn rescale_z(a: &JacobiQExpansion, c: u32) -> Result<JacobiQExpansion> {
    if c == 0 {
        return Err(Error::InvalidArgument("c must be positive".into()));
    }
    let terms = a
        .terms
        .iter()
        .map(|t| {
            let mut o = InvariantElement::zero();
            for (m, x) in t.terms() {
                o.add_term(m.scaled(c as i32), x.clone());
            }
            o
        })
        .collect();
    Ok(JacobiQExpansion { weight: a.weight, index: a.index * c * c, terms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::e8::DominantWeight;
    use crate::invring::{display_string, parse_display};
    use crate::qseries::{delta, eisenstein};

    #[test]
    fn theta_terms() {
        let th = theta_e8(6).unwrap();
        assert_eq!(th.term(0), &InvariantElement::constant(int(1)));
        assert_eq!(display_string(th.term(1)), "Σ_2");
        assert_eq!(th.at_zero(), eisenstein(4, 6).unwrap());
    }

    #[test]
    fn products() {
        let th = theta_e8(3).unwrap();
        let one = JacobiQExpansion::from_modular(&ModularQSeries::one(3));
        assert_eq!(jf_mul(&th, &one).unwrap(), th);
        let sq = jf_mul(&th, &th).unwrap();
        assert_eq!((sq.weight, sq.index), (8, 2));
        assert_eq!(sq.term(1), &InvariantElement::orb(DominantWeight::w(8)).scale(&int(2)));
    }

    #[test]
    fn scaling_and_division() {
        let th = theta_e8(4).unwrap();
        assert_eq!(jf_scale(&th, &ModularQSeries::one(4)), th);
        let d = delta(4);
        let back = jf_div_modular(&jf_scale(&th, &d), &d).unwrap();
        assert_eq!(back, th.truncate(3).unwrap());
        let sq = jf_mul(&th, &th).unwrap();
        assert!(matches!(jf_div_modular(&sq, &d), Err(Error::NotDivisible(_))));
        let e4 = JacobiQExpansion::from_modular(&eisenstein(4, 3).unwrap());
        assert_eq!(e4.at_zero(), eisenstein(4, 3).unwrap());
    }

    #[test]
    fn index_raising() {
        let th = theta_e8(6).unwrap();
        assert_eq!(hecke_t_minus(&th, 1).unwrap(), th);
        let t2 = hecke_t_minus(&th, 2).unwrap();
        assert_eq!((t2.index, t2.order()), (2, 3));
        assert_eq!(t2.term(0), &InvariantElement::constant(int(9)));
        let a2 = t2.scale(&frac(1, 9));
        assert_eq!(display_string(a2.term(1)), "Σ_4");
        assert!(matches!(hecke_t_minus_to(&th, 2, 4), Err(Error::InsufficientOrder { required: 8, available: 6 })));
    }

    #[test]
    fn index_raising_at_zero_is_proportional_to_e4() {
        let th = theta_e8(12).unwrap();
        for s in 2..=4u32 {
            let x = hecke_t_minus(&th, s).unwrap().at_zero();
            let c = x.coeff(0).clone();
            let e4 = eisenstein(4, x.order()).unwrap().scale(&c);
            assert_eq!(x, e4, "s = {s}");
        }
    }

    #[test]
    fn rescaling() {
        let th = theta_e8(2).unwrap();
        assert_eq!(rescale_z(&th, 1).unwrap(), th);
        let a4 = rescale_z(&th, 2).unwrap();
        assert_eq!(a4.index, 4);
        assert_eq!(display_string(a4.term(1)), "Σ_8''");
    }

    #[test]
    fn heat_basics() {
        let z = JacobiQExpansion::zero(-4, 2, 2);
        let h = heat(&z).unwrap();
        assert!(h.is_zero());
        assert_eq!(h.weight, -2);
        let e4 = JacobiQExpansion::from_modular(&eisenstein(4, 2).unwrap());
        assert!(heat(&e4).is_err());
        let x = JacobiQExpansion::new(-4, 2, vec![parse_display("2Σ_2 − Σ_4 − 240").unwrap()]).unwrap();
        let y = heat(&x).unwrap().scale(&int(3));
        assert_eq!(display_string(y.term(0)), "Σ_2 + Σ_4 − 480");
    }
}
