//! Truncated q-expansions of W(E8)-invariant Jacobi forms and the operators acting on them.

mod checks;
mod ops;

pub use checks::{
    classify, coefficient_bound_check, quasi_periodicity_check, weight0_identity, Classification, Kind,
};
pub use ops::{heat, hecke_t_minus, hecke_t_minus_to, jf_div_modular, jf_mul, jf_scale, rescale_z, theta_e8};

use crate::e8::{dominant_reduce, E8Vector};
use crate::error::{Error, Result};
use crate::invring::{display_string, InvariantElement};
use crate::qseries::ModularQSeries;
use crate::rational::Rational;
use serde_json::json;

/// Σ_{n ≤ order} terms[n]·qⁿ, a form of the given weight and index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiQExpansion {
    pub weight: i32,
    pub index: u32,
    terms: Vec<InvariantElement>,
}

impl JacobiQExpansion {
    pub fn new(weight: i32, index: u32, terms: Vec<InvariantElement>) -> Result<Self> {
        if weight % 2 != 0 {
            return Err(Error::InvalidArgument(format!("odd weight {weight}")));
        }
        if terms.is_empty() {
            return Err(Error::InvalidArgument("a q-expansion needs at least the q^0 term".into()));
        }
        if index == 0 && terms.iter().any(|t| t.terms().keys().any(|m| !m.is_zero())) {
            return Err(Error::InvalidArgument("index-0 forms are constant in z".into()));
        }
        Ok(Self { weight, index, terms })
    }

    pub fn zero(weight: i32, index: u32, order: usize) -> Self {
        Self { weight, index, terms: vec![InvariantElement::zero(); order + 1] }
    }

    /// A modular form viewed as a Jacobi form of index 0.
    pub fn from_modular(f: &ModularQSeries) -> Self {
        let terms = f.coeffs().iter().map(|c| InvariantElement::constant(c.clone())).collect();
        Self { weight: f.weight, index: 0, terms }
    }

    pub fn order(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn terms(&self) -> &[InvariantElement] {
        &self.terms
    }

    pub fn term(&self, n: usize) -> &InvariantElement {
        &self.terms[n]
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(|t| t.is_zero())
    }

    /// f(n, ℓ); `None` past the truncation.
    pub fn coefficient(&self, n: usize, l: &E8Vector) -> Option<Rational> {
        self.terms.get(n).map(|t| t.coeff(&dominant_reduce(l)))
    }

    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::InsufficientOrder { required: order, available: self.order() });
        }
        Ok(Self { weight: self.weight, index: self.index, terms: self.terms[..=order].to_vec() })
    }

    fn check_same_space(&self, o: &Self) -> Result<()> {
        if self.weight != o.weight || self.index != o.index {
            return Err(Error::InvalidArgument(format!(
                "cannot add forms of (weight, index) ({}, {}) and ({}, {})",
                self.weight, self.index, o.weight, o.index
            )));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check_same_space(o)?;
        let n = self.order().min(o.order());
        let terms = (0..=n).map(|i| self.terms[i].add(&o.terms[i])).collect();
        Ok(Self { weight: self.weight, index: self.index, terms })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.scale(&-Rational::from_integer(1.into())))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { weight: self.weight, index: self.index, terms: self.terms.iter().map(|t| t.scale(c)).collect() }
    }

    /// Value at z = 0 as a q-series.
    pub fn at_zero(&self) -> ModularQSeries {
        let coeffs = self.terms.iter().map(crate::invring::eval_zero).collect();
        ModularQSeries::new(self.weight, coeffs).expect("weight is even")
    }

    /// One line per power of q in Σ notation.
    pub fn display(&self) -> String {
        self.terms
            .iter()
            .enumerate()
            .map(|(n, t)| format!("q^{n}: {}", display_string(t)))
            .collect::<Vec<_>>()
            .join("\n")
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "index": self.index,
            "order": self.order(),
            "terms": self.terms.iter().map(|t| t.to_json()).collect::<Vec<_>>(),
            "weight": self.weight,
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let bad = |f: &str| Error::Parse(format!("missing or invalid field {f}"));
        let weight = v.get("weight").and_then(|x| x.as_i64()).ok_or_else(|| bad("weight"))? as i32;
        let index = v.get("index").and_then(|x| x.as_u64()).ok_or_else(|| bad("index"))? as u32;
        let order = v.get("order").and_then(|x| x.as_u64()).ok_or_else(|| bad("order"))? as usize;
        let terms = v
            .get("terms")
            .and_then(|x| x.as_array())
            .ok_or_else(|| bad("terms"))?
            .iter()
            .map(InvariantElement::from_json)
            .collect::<Result<Vec<_>>>()?;
        if terms.len() != order + 1 {
            return Err(Error::Parse("order does not match the number of terms".into()));
        }
        Self::new(weight, index, terms)
    }
}
