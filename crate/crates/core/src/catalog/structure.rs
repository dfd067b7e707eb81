//! Free-module structure: weak generators, holomorphic subspaces, ranks and dimension bounds.

use super::{build, FormName};
use crate::e8::{max_pairing, DominantWeight};
use crate::error::{Error, Result};
use crate::invring::{eval_zero, SIGMA_DICTIONARY};
use crate::jacobi::{jf_scale, JacobiQExpansion};
use crate::linalg::{nullspace, rank, rref, transpose, Matrix};
use crate::qseries::{dim_modular, modular_basis};
use crate::rational::{int, Rational};
use num_traits::Zero;
use serde_json::json;
use std::collections::BTreeSet;

/// Largest minimal coset norm min{(ℓ+tv, ℓ+tv)} over ℓ ∈ E8, for t = 1..4.
pub const HOLOMORPHIC_MAX_COSET_MIN: [i64; 4] = [0, 4, 8, 16];

/// Generators of the weak module of index t over M_*, ordered by weight.
pub fn weak_generators(t: u32) -> Result<Vec<FormName>> {
    use FormName::*;
    Ok(match t {
        1 => vec![Theta],
        2 => vec![Phi(-4, 2), Phi(-2, 2), Phi(0, 2)],
        3 => vec![Phi(-8, 3), Phi(-6, 3), Phi(-4, 3), Phi(-2, 3), Phi(0, 3)],
        4 => vec![
            Phi(-16, 4),
            Phi(-14, 4),
            Phi(-12, 4),
            Phi(-10, 4),
            Phi(-8, 4),
            Psi8x4,
            Phi(-6, 4),
            Phi(-4, 4),
            Phi(-2, 4),
            Phi(0, 4),
        ],
        _ => return Err(Error::InvalidArgument(format!("weak generators are known for index 1..4, not {t}"))),
    })
}

fn generator_weights(t: u32) -> Result<Vec<i32>> {
    Ok(weak_generators(t)?.iter().map(|g| super::info(*g).weight).collect())
}

/// Every E4^a E6^b · g of the given weight, labelled "E4^a E6^b g".
fn weak_spanning_set(weight: i32, t: u32, order: usize) -> Result<Vec<(String, JacobiQExpansion)>> {
    let mut out = Vec::new();
    for g in weak_generators(t)? {
        let wg = super::info(g).weight;
        let mods = modular_basis((weight - wg) as i64, order);
        if mods.is_empty() {
            continue;
        }
        let f = build(g, order)?;
        let exps = crate::qseries::monomial_exponents((weight - wg) as i64);
        for ((a, b), m) in exps.into_iter().zip(mods) {
            out.push((format!("E4^{a} E6^{b} {g}"), jf_scale(&f, &m)));
        }
    }
    Ok(out)
}

/// Coefficient vectors of the forms over a common list of (n, orbit) keys.
fn coefficient_matrix(forms: &[&JacobiQExpansion], upto: usize) -> Matrix {
    let mut keys: BTreeSet<(usize, DominantWeight)> = BTreeSet::new();
    for f in forms {
        for n in 0..=upto.min(f.order()) {
            keys.extend(f.term(n).terms().keys().map(|m| (n, *m)));
        }
    }
    forms
        .iter()
        .map(|f| keys.iter().map(|(n, m)| if *n <= f.order() { f.term(*n).coeff(m) } else { Rational::zero() }).collect())
        .collect()
}

fn combine(forms: &[&JacobiQExpansion], c: &[Rational], weight: i32, index: u32, order: usize) -> Result<JacobiQExpansion> {
    let mut acc = JacobiQExpansion::zero(weight, index, order);
    for (f, x) in forms.iter().zip(c) {
        if !x.is_zero() {
            acc = acc.add(&f.scale(x))?;
        }
    }
    Ok(acc)
}

/// Highest q-power at which holomorphy has to be imposed for index t.
pub fn holomorphy_order(t: u32) -> Result<usize> {
    let m = *HOLOMORPHIC_MAX_COSET_MIN
        .get(t.wrapping_sub(1) as usize)
        .ok_or_else(|| Error::InvalidArgument(format!("index must be 1..4, got {t}")))?;
    Ok(if m == 0 { 0 } else { ((m - 1) / (2 * t as i64)) as usize })
}

/// Basis of the holomorphic forms of the given weight and index t, to the given order.
///
/// A single solution of weight 4 or 6 is scaled to take the value E4 or E6 at z = 0. With
/// several solutions the first one with nonzero value at z = 0 is scaled that way and the
/// others are made to vanish at z = 0.
pub fn holomorphic_subspace(weight: i32, t: u32, order: usize) -> Result<Vec<JacobiQExpansion>> {
    let need = holomorphy_order(t)?;
    if order < need {
        return Err(Error::InsufficientOrder { required: need, available: order });
    }
    let span = weak_spanning_set(weight, t, order)?;
    let forms: Vec<&JacobiQExpansion> = span.iter().map(|(_, f)| f).collect();
    let mut constraints: BTreeSet<(usize, DominantWeight)> = BTreeSet::new();
    for f in &forms {
        for n in 0..=need {
            for m in f.term(n).terms().keys() {
                if 2 * n as i64 * t as i64 - m.norm() < 0 {
                    constraints.insert((n, *m));
                }
            }
        }
    }
    let system: Matrix = constraints.iter().map(|(n, m)| forms.iter().map(|f| f.term(*n).coeff(m)).collect()).collect();
    let sols = if system.is_empty() {
        (0..forms.len())
            .map(|i| (0..forms.len()).map(|j| if i == j { int(1) } else { Rational::zero() }).collect())
            .collect()
    } else {
        nullspace(&system, forms.len())
    };
    let mut basis = Vec::new();
    for c in &sols {
        basis.push(combine(&forms, c, weight, t, order)?);
    }
    let basis = independent(basis, order)?;
    normalize_at_zero(basis)
}

/// Drop forms whose coefficient vectors depend on earlier ones.
fn independent(forms: Vec<JacobiQExpansion>, order: usize) -> Result<Vec<JacobiQExpansion>> {
    let refs: Vec<&JacobiQExpansion> = forms.iter().collect();
    let mut m = transpose(&coefficient_matrix(&refs, order));
    if m.is_empty() {
        return Ok(Vec::new());
    }
    let pivots = rref(&mut m);
    Ok(forms.into_iter().enumerate().filter(|(i, _)| pivots.contains(i)).map(|(_, f)| f).collect())
}

fn normalize_at_zero(mut basis: Vec<JacobiQExpansion>) -> Result<Vec<JacobiQExpansion>> {
    let Some(p) = basis.iter().position(|f| !eval_zero(f.term(0)).is_zero()) else {
        return Ok(basis);
    };
    let c = eval_zero(basis[p].term(0));
    let lead = basis[p].scale(&(int(1) / c));
    for (i, f) in basis.iter_mut().enumerate() {
        if i != p {
            let v = eval_zero(f.term(0));
            if !v.is_zero() {
                *f = f.sub(&lead.scale(&v))?;
            }
        }
    }
    basis[p] = lead;
    basis.swap(0, p);
    Ok(basis)
}

#[derive(Debug, Clone)]
pub struct WeightReport {
    pub weight: i32,
    pub count: usize,
    pub rank: usize,
    pub predicted: usize,
    /// A vanishing combination of the spanning set when rank < count.
    pub relation: Option<Vec<(String, Rational)>>,
}

impl WeightReport {
    pub fn ok(&self) -> bool {
        self.rank == self.count && self.count == self.predicted
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "count": self.count,
            "ok": self.ok(),
            "predicted": self.predicted,
            "rank": self.rank,
            "relation": self.relation.as_ref().map(|r| r.iter().map(|(l, c)| json!({"coeff": crate::rational::to_string(c), "form": l})).collect::<Vec<_>>()),
            "weight": self.weight,
        })
    }
}

#[derive(Debug, Clone)]
pub struct FreeModuleReport {
    pub index: u32,
    pub order: usize,
    pub generators: Vec<(String, i32)>,
    pub weights: Vec<WeightReport>,
}

impl FreeModuleReport {
    pub fn ok(&self) -> bool {
        self.weights.iter().all(WeightReport::ok)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "generators": self.generators.iter().map(|(n, w)| json!({"name": n, "weight": w})).collect::<Vec<_>>(),
            "index": self.index,
            "ok": self.ok(),
            "order": self.order,
            "weights": self.weights.iter().map(WeightReport::to_json).collect::<Vec<_>>(),
        })
    }
}

/// For each even weight from the lowest generator weight up to max_weight, the rank of the
/// M_*-monomial multiples of the weak generators against the predicted dimension.
pub fn verify_free_module(t: u32, max_weight: i32, order: usize) -> Result<FreeModuleReport> {
    let gens = weak_generators(t)?;
    let weights = generator_weights(t)?;
    let lowest = *weights.iter().min().expect("nonempty");
    let mut reports = Vec::new();
    let mut w = lowest;
    while w <= max_weight {
        let span = weak_spanning_set(w, t, order)?;
        let forms: Vec<&JacobiQExpansion> = span.iter().map(|(_, f)| f).collect();
        let predicted: usize = weights.iter().map(|wg| dim_modular((w - wg) as i64)).sum();
        let m = coefficient_matrix(&forms, order);
        let r = if m.is_empty() { 0 } else { rank(&m) };
        let relation = if r < forms.len() {
            let ns = nullspace(&transpose(&m), forms.len());
            ns.first().map(|c| {
                let c = crate::rational::primitive(c);
                span.iter().zip(c).filter(|(_, x)| !x.is_zero()).map(|((l, _), x)| (l.clone(), x)).collect()
            })
        } else {
            None
        };
        reports.push(WeightReport { weight: w, count: forms.len(), rank: r, predicted, relation });
        w += 2;
    }
    Ok(FreeModuleReport {
        index: t,
        order,
        generators: gens.iter().zip(&weights).map(|(g, w)| (g.to_string(), *w)).collect(),
        weights: reports,
    })
}

/// Coefficients r(0..=t_max) of 1/((1−x)(1−x²)²(1−x³)²(1−x⁴)²(1−x⁵)(1−x⁶)).
pub fn rank_series(t_max: usize) -> Vec<u64> {
    let mut r = vec![0u64; t_max + 1];
    r[0] = 1;
    for (d, mult) in [(1, 1), (2, 2), (3, 2), (4, 2), (5, 1), (6, 1)] {
        for _ in 0..mult {
            for i in d..=t_max {
                r[i] += r[i - d];
            }
        }
    }
    r
}

fn dim_weak(w: i32, r: u32) -> Result<usize> {
    match r {
        0 => Ok(dim_modular(w as i64)),
        1..=4 => Ok(generator_weights(r)?.iter().map(|g| dim_modular((w - g) as i64)).sum()),
        // Weak forms of index 5 vanish for weight ≤ −20; weight −18 is open.
        5 if w <= -20 => Ok(0),
        _ => Err(Error::Unresolved(format!("dimension of weak forms of weight {w} and index {r} is not known"))),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundRow {
    pub weight: i32,
    pub upper_bound: usize,
    pub notes: String,
}

/// Upper bounds Σ_{0 ≤ r ≤ k/7} dim J^w_{k−12r, r} for the orthogonal modular forms of weight k,
/// k = 4, 6, …, k_max.
pub fn dimension_bound_table(k_max: i32) -> Result<Vec<BoundRow>> {
    if k_max > 40 {
        return Err(Error::Unresolved(format!(
            "weight {k_max} needs the dimension of weak forms of weight -18 and index 5, which is open"
        )));
    }
    let mut rows = Vec::new();
    let mut k = 4;
    while k <= k_max {
        let mut sum = 0;
        let mut parts = Vec::new();
        for r in 0..=(k / 7) as u32 {
            let d = dim_weak(k - 12 * r as i32, r)?;
            if d > 0 {
                parts.push(format!("r={r}:{d}"));
            }
            sum += d;
        }
        let (upper, notes) = if k == 6 {
            (0, format!("formula gives {sum}; set to 0 since there is no holomorphic form of weight 6 and index 1"))
        } else {
            (sum, parts.join(" "))
        };
        rows.push(BoundRow { weight: k, upper_bound: upper, notes });
        k += 2;
    }
    Ok(rows)
}

/// max (m, v) over norm-4 vectors v, for every named orbit.
pub fn pullback_max_table() -> Result<Vec<(&'static str, i64)>> {
    SIGMA_DICTIONARY
        .iter()
        .map(|(l, fw)| Ok((*l, max_pairing(&DominantWeight::from_fw(*fw)?, 4)?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_series_values() {
        let r = rank_series(14);
        assert_eq!(r, vec![1, 1, 3, 5, 10, 15, 27, 39, 63, 90, 135, 187, 270, 364, 505]);
    }

    #[test]
    fn bound_table() {
        let rows = dimension_bound_table(40).unwrap();
        let got: Vec<usize> = rows.iter().map(|r| r.upper_bound).collect();
        assert_eq!(got, vec![1, 0, 1, 1, 2, 1, 3, 2, 4, 4, 6, 5, 9, 8, 12, 13, 17, 17, 24]);
        assert!(dimension_bound_table(42).is_err());
    }

    #[test]
    fn holomorphy_orders() {
        let v: Vec<usize> = (1..=4).map(|t| holomorphy_order(t).unwrap()).collect();
        assert_eq!(v, vec![0, 0, 1, 1]);
    }

    #[test]
    fn pullback_values() {
        let want = [2, 4, 4, 5, 4, 6, 6, 7, 6, 8, 7, 8, 6, 8, 8, 9, 8, 8, 9, 10, 9, 10, 10, 11, 10, 12];
        let got: Vec<i64> = pullback_max_table().unwrap().iter().map(|(_, v)| *v).collect();
        assert_eq!(got, want);
    }
}
