//! Truncated q-series for level-one modular forms.

use crate::error::{Error, Result};
use crate::rational::{int, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// Coefficients of q^0..q^order of a modular form of the given weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularQSeries {
    pub weight: i32,
    coeffs: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    coeffs: Vec<String>,
    order: usize,
    weight: i32,
}

impl ModularQSeries {
    pub fn new(weight: i32, coeffs: Vec<Rational>) -> Result<Self> {
        if weight % 2 != 0 {
            return Err(Error::InvalidArgument(format!("odd weight {weight}")));
        }
        if coeffs.is_empty() {
            return Err(Error::InvalidArgument("empty coefficient list".into()));
        }
        Ok(Self { weight, coeffs })
    }

    pub fn one(order: usize) -> Self {
        Self::constant(0, int(1), order)
    }

    pub fn constant(weight: i32, c: Rational, order: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); order + 1];
        coeffs[0] = c;
        Self { weight, coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coeffs[n]
    }

    /// Index of the first nonzero coefficient, `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        Self { weight: self.weight, coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { weight: self.weight, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Sum of two series of equal weight, truncated to the smaller order.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.weight != other.weight {
            return Err(Error::InvalidArgument(format!(
                "weight mismatch {} vs {}",
                self.weight, other.weight
            )));
        }
        let n = self.order().min(other.order());
        let coeffs = (0..=n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect();
        Ok(Self { weight: self.weight, coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let j = SeriesJson {
            coeffs: self.coeffs.iter().map(crate::rational::to_string).collect(),
            order: self.order(),
            weight: self.weight,
        };
        serde_json::to_value(j).expect("series serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let j: SeriesJson = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let coeffs = j.coeffs.iter().map(|s| crate::rational::parse(s)).collect::<Result<Vec<_>>>()?;
        if coeffs.len() != j.order + 1 {
            return Err(Error::Parse("order does not match coefficient count".into()));
        }
        Self::new(j.weight, coeffs)
    }
}

/// Bernoulli numbers B_0..B_n with B_1 = −1/2.
pub fn bernoulli(n: usize) -> Vec<Rational> {
    let mut b = vec![Rational::zero(); n + 1];
    b[0] = Rational::one();
    for m in 1..=n {
        // Σ_{j<m} C(m+1, j) B_j + (m+1) B_m = 0
        let mut s = Rational::zero();
        let mut binom = BigInt::one();
        for (j, bj) in b.iter().enumerate().take(m) {
            s += Rational::from_integer(binom.clone()) * bj;
            binom = binom * BigInt::from(m + 1 - j) / BigInt::from(j + 1);
        }
        b[m] = -s / int(m as i64 + 1);
    }
    b
}

/// σ_k(n) = Σ_{d | n} d^k.
pub fn sigma(k: u32, n: u64) -> BigInt {
    let mut s = BigInt::zero();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            s += BigInt::from(d).pow(k);
            let e = n / d;
            if e != d {
                s += BigInt::from(e).pow(k);
            }
        }
        d += 1;
    }
    s
}

/// E_k = 1 − (2k/B_k) Σ σ_{k−1}(n) qⁿ, for even k ≥ 2.
pub fn eisenstein(k: i32, order: usize) -> Result<ModularQSeries> {
    if k < 2 || k % 2 != 0 {
        return Err(Error::InvalidArgument(format!("Eisenstein series needs even k >= 2, got {k}")));
    }
    let bk = bernoulli(k as usize)[k as usize].clone();
    let factor = -int(2 * k as i64) / bk;
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(Rational::one());
    for n in 1..=order {
        coeffs.push(&factor * Rational::from_integer(sigma(k as u32 - 1, n as u64)));
    }
    ModularQSeries::new(k, coeffs)
}

/// Δ = q ∏(1 − qⁿ)^24 via the pentagonal-number series of η.
pub fn delta(order: usize) -> ModularQSeries {
    // ∏(1 − qⁿ) = Σ_k (−1)^k q^{k(3k−1)/2}, k ∈ ℤ
    let len = order; // need the product to q^{order-1}
    let mut euler = vec![BigInt::zero(); len.max(1)];
    euler[0] = BigInt::one();
    let mut k = 1usize;
    while k * (3 * k - 1) / 2 < euler.len() {
        let sign = if k.is_multiple_of(2) { 1 } else { -1 };
        for e in [k * (3 * k - 1) / 2, k * (3 * k + 1) / 2] {
            if e < euler.len() {
                euler[e] += sign;
            }
        }
        k += 1;
    }
    let mul = |a: &[BigInt], b: &[BigInt]| -> Vec<BigInt> {
        let n = a.len();
        let mut c = vec![BigInt::zero(); n];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate().take(n - i) {
                c[i + j] += ai * bj;
            }
        }
        c
    };
    // 24th power by squaring: 24 = 16 + 8
    let p2 = mul(&euler, &euler);
    let p4 = mul(&p2, &p2);
    let p8 = mul(&p4, &p4);
    let p16 = mul(&p8, &p8);
    let p24 = mul(&p16, &p8);
    let mut coeffs = vec![Rational::zero(); order + 1];
    for n in 1..=order {
        coeffs[n] = Rational::from_integer(p24[n - 1].clone());
    }
    ModularQSeries { weight: 12, coeffs }
}

/// Cauchy product truncated to the smaller order; weights add.
pub fn series_mul(a: &ModularQSeries, b: &ModularQSeries) -> ModularQSeries {
    let n = a.order().min(b.order());
    let mut coeffs = vec![Rational::zero(); n + 1];
    for i in 0..=n {
        if a.coeffs[i].is_zero() {
            continue;
        }
        for j in 0..=(n - i) {
            if !b.coeffs[j].is_zero() {
                coeffs[i + j] += &a.coeffs[i] * &b.coeffs[j];
            }
        }
    }
    ModularQSeries { weight: a.weight + b.weight, coeffs }
}

/// Exact quotient a/b. The result is known to order min(order_a, order_b) − val(b).
pub fn series_div(a: &ModularQSeries, b: &ModularQSeries) -> Result<ModularQSeries> {
    let v = b.valuation().ok_or_else(|| Error::InvalidArgument("division by the zero series".into()))?;
    let n = a.order().min(b.order());
    if n < v {
        return Err(Error::InsufficientOrder { required: v, available: n });
    }
    if let Some(i) = a.coeffs[..v].iter().position(|c| !c.is_zero()) {
        return Err(Error::NotDivisible(format!("coefficient of q^{i} is nonzero, divisor has valuation {v}")));
    }
    let out = n - v;
    let g0 = b.coeffs[v].clone();
    let mut c: Vec<Rational> = Vec::with_capacity(out + 1);
    for k in 0..=out {
        let mut s = a.coeffs[k + v].clone();
        for j in 1..=k {
            let g = &b.coeffs[v + j];
            if !g.is_zero() {
                s -= g * &c[k - j];
            }
        }
        c.push(s / &g0);
    }
    Ok(ModularQSeries { weight: a.weight - b.weight, coeffs: c })
}

/// dim M_k(SL₂(ℤ)).
pub fn dim_modular(k: i64) -> usize {
    if k < 0 || k % 2 != 0 {
        return 0;
    }
    let base = (k / 12) as usize;
    if k % 12 == 2 {
        base
    } else {
        base + 1
    }
}

/// Exponents (a, b) with 4a + 6b = k, ordered by increasing b.
pub fn monomial_exponents(k: i64) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    if k < 0 {
        return out;
    }
    let mut b = 0;
    while 6 * b <= k {
        let r = k - 6 * b;
        if r % 4 == 0 {
            out.push(((r / 4) as usize, b as usize));
        }
        b += 1;
    }
    out
}

/// E4^a E6^b for every monomial of weight k; a basis of M_k.
pub fn modular_basis(k: i64, order: usize) -> Vec<ModularQSeries> {
    let e4 = eisenstein(4, order).expect("valid weight");
    let e6 = eisenstein(6, order).expect("valid weight");
    monomial_exponents(k)
        .into_iter()
        .map(|(a, b)| {
            let mut m = ModularQSeries::one(order);
            for _ in 0..a {
                m = series_mul(&m, &e4);
            }
            for _ in 0..b {
                m = series_mul(&m, &e6);
            }
            m
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn ints(s: &ModularQSeries) -> Vec<i64> {
        s.coeffs().iter().map(|c| i64::try_from(c.to_integer()).unwrap()).collect()
    }

    #[test]
    fn e2_e4_leading_terms() {
        assert_eq!(ints(&eisenstein(2, 2).unwrap()), vec![1, -24, -72]);
        assert_eq!(ints(&eisenstein(4, 0).unwrap()), vec![1]);
        assert_eq!(ints(&eisenstein(4, 3).unwrap()), vec![1, 240, 2160, 6720]);
        assert_eq!(ints(&eisenstein(6, 2).unwrap()), vec![1, -504, -16632]);
        assert!(eisenstein(3, 2).is_err());
        assert!(eisenstein(0, 2).is_err());
    }

    #[test]
    fn bernoulli_values() {
        let b = bernoulli(8);
        assert_eq!(b[1], frac(-1, 2));
        assert_eq!(b[2], frac(1, 6));
        assert_eq!(b[4], frac(-1, 30));
        assert_eq!(b[6], frac(1, 42));
        assert_eq!(b[8], frac(-1, 30));
    }

    #[test]
    fn delta_expansion() {
        assert_eq!(ints(&delta(0)), vec![0]);
        assert_eq!(ints(&delta(2)), vec![0, 1, -24]);
        assert_eq!(ints(&delta(6)), vec![0, 1, -24, 252, -1472, 4830, -6048]);
    }

    #[test]
    fn delta_from_eisenstein() {
        let n = 15;
        let e4 = eisenstein(4, n).unwrap();
        let e6 = eisenstein(6, n).unwrap();
        let lhs = series_mul(&series_mul(&e4, &e4), &e4).sub(&series_mul(&e6, &e6)).unwrap();
        assert_eq!(lhs.scale(&frac(1, 1728)).coeffs(), delta(n).coeffs());
    }

    #[test]
    fn products_and_quotients() {
        let one = ModularQSeries::one(3);
        assert_eq!(series_mul(&one, &one), one);
        let e4 = eisenstein(4, 5).unwrap();
        assert_eq!(series_mul(&e4, &e4).coeff(1), &int(480));
        let d = delta(5);
        let de4 = series_mul(&d, &e4);
        assert_eq!(de4.valuation(), Some(1));
        let back = series_div(&de4, &d).unwrap();
        assert_eq!(back, e4.truncate(4));
        let dd = series_div(&d, &d).unwrap();
        assert_eq!(ints(&dd), vec![1, 0, 0, 0, 0]);
        assert!(matches!(series_div(&e4, &d), Err(Error::NotDivisible(_))));
    }

    #[test]
    fn dimensions() {
        assert_eq!(dim_modular(0), 1);
        assert_eq!(dim_modular(2), 0);
        assert_eq!(dim_modular(16), 2);
        assert_eq!(dim_modular(-4), 0);
        assert_eq!(dim_modular(7), 0);
        for k in (0..=60).step_by(2) {
            assert_eq!(dim_modular(k), monomial_exponents(k).len(), "k = {k}");
        }
    }

    #[test]
    fn json_round_trip() {
        let s = eisenstein(6, 3).unwrap();
        let j = s.to_json();
        assert_eq!(j.to_string(), r#"{"coeffs":["1","-504","-16632","-122976"],"order":3,"weight":6}"#);
        assert_eq!(ModularQSeries::from_json(&j).unwrap(), s);
    }
}
