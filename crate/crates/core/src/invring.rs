//! Finite W(E8)-invariant Fourier sums Σ c(m)·orb(m).

use crate::e8::{orbit_fw, orbit_size, reduce_fw, weight_gram, DominantWeight};
use crate::error::{Error, Result};
use crate::rational::{int, Rational};
use num_traits::{One, Zero};
use serde_json::json;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, LazyLock, Mutex};

/// Σ c(m)·orb(m) over dominant weights m, with plain (unnormalised) orbit sums.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct InvariantElement {
    terms: BTreeMap<DominantWeight, Rational>,
}

impl InvariantElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(DominantWeight::ZERO, c)
    }

    pub fn orb(m: DominantWeight) -> Self {
        Self::term(m, Rational::one())
    }

    pub fn term(m: DominantWeight, c: Rational) -> Self {
        let mut x = Self::zero();
        x.add_term(m, c);
        x
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<DominantWeight, Rational> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &DominantWeight) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: DominantWeight, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    /// Multiply the coefficient of each orbit by f(m).
    pub fn map_coeffs(&self, f: impl Fn(&DominantWeight) -> Rational) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, c * f(m));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<_> = self
            .terms
            .iter()
            .map(|(m, c)| json!({"coeff": crate::rational::to_string(c), "fw": m.fw()}))
            .collect();
        json!({"terms": terms})
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid invariant element {v}"));
        let mut out = Self::zero();
        for t in v.get("terms").and_then(|t| t.as_array()).ok_or_else(bad)? {
            let c = crate::rational::parse(t.get("coeff").and_then(|c| c.as_str()).ok_or_else(bad)?)?;
            let fw: Vec<i32> = serde_json::from_value(t.get("fw").cloned().ok_or_else(bad)?)
                .map_err(|e| Error::Parse(e.to_string()))?;
            let fw: [i32; 8] = fw.try_into().map_err(|_| bad())?;
            out.add_term(DominantWeight::from_fw(fw)?, c);
        }
        Ok(out)
    }
}

type Product = Arc<Vec<(DominantWeight, u64)>>;
static PRODUCTS: LazyLock<Mutex<HashMap<(DominantWeight, DominantWeight), Product>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// orb(m1)·orb(m2) = Σ n_m orb(m) with n_m = |orb(m2)|·U_m/|orb(m)|,
/// U_m = #{a ∈ orb(m1) : a + m2 ~ m}. Loops over the smaller orbit.
pub fn orbit_product(m1: &DominantWeight, m2: &DominantWeight) -> Result<Product> {
    let (a, b) = if (orbit_size(m1), m1) <= (orbit_size(m2), m2) { (*m1, *m2) } else { (*m2, *m1) };
    if let Some(p) = PRODUCTS.lock().unwrap().get(&(a, b)) {
        return Ok(p.clone());
    }
    let orb = orbit_fw(&a)?;
    let shift = *b.fw();
    let mut counts: HashMap<[i32; 8], u64> = HashMap::new();
    for x in orb.iter() {
        let mut y = *x;
        for (yi, si) in y.iter_mut().zip(shift) {
            *yi += si;
        }
        *counts.entry(reduce_fw(y)).or_default() += 1;
    }
    let nb = orbit_size(&b);
    let mut out: Vec<(DominantWeight, u64)> = counts
        .into_iter()
        .map(|(fw, u)| {
            let m = DominantWeight::from_fw_unchecked(fw);
            let num = nb as u128 * u as u128;
            let den = orbit_size(&m) as u128;
            debug_assert_eq!(num % den, 0);
            (m, (num / den) as u64)
        })
        .collect();
    out.sort_unstable();
    let arc = Arc::new(out);
    PRODUCTS.lock().unwrap().insert((a, b), arc.clone());
    Ok(arc)
}

pub fn inv_add(x: &InvariantElement, y: &InvariantElement) -> InvariantElement {
    x.add(y)
}

pub fn inv_scale(x: &InvariantElement, c: &Rational) -> InvariantElement {
    x.scale(c)
}

pub fn inv_mul(x: &InvariantElement, y: &InvariantElement) -> Result<InvariantElement> {
    let mut acc: BTreeMap<DominantWeight, Rational> = BTreeMap::new();
    for (m1, c1) in &x.terms {
        for (m2, c2) in &y.terms {
            let c = c1 * c2;
            if m1.is_zero() || m2.is_zero() {
                let m = if m1.is_zero() { *m2 } else { *m1 };
                *acc.entry(m).or_insert_with(Rational::zero) += c;
                continue;
            }
            for (m, n) in orbit_product(m1, m2)?.iter() {
                *acc.entry(*m).or_insert_with(Rational::zero) += &c * int(*n as i64);
            }
        }
    }
    acc.retain(|_, c| !c.is_zero());
    Ok(InvariantElement { terms: acc })
}

/// Value at z = 0: Σ c(m)·|orb(m)|.
pub fn eval_zero(x: &InvariantElement) -> Rational {
    x.terms.iter().map(|(m, c)| c * int(orbit_size(m) as i64)).sum()
}

/// (label, dominant representative in fw coordinates) for the named 240-normalised orbit sums.
pub const SIGMA_DICTIONARY: [(&str, [i32; 8]); 26] = [
    ("Σ_2", [0, 0, 0, 0, 0, 0, 0, 1]),
    ("Σ_4", [1, 0, 0, 0, 0, 0, 0, 0]),
    ("Σ_6", [0, 0, 0, 0, 0, 0, 1, 0]),
    ("Σ_8'", [0, 1, 0, 0, 0, 0, 0, 0]),
    ("Σ_8''", [0, 0, 0, 0, 0, 0, 0, 2]),
    ("Σ_10", [1, 0, 0, 0, 0, 0, 0, 1]),
    ("Σ_12", [0, 0, 0, 0, 0, 1, 0, 0]),
    ("Σ_14'", [0, 0, 1, 0, 0, 0, 0, 0]),
    ("Σ_14''", [0, 0, 0, 0, 0, 0, 1, 1]),
    ("Σ_16'", [2, 0, 0, 0, 0, 0, 0, 0]),
    ("Σ_16''", [0, 1, 0, 0, 0, 0, 0, 1]),
    ("Σ_18'", [1, 0, 0, 0, 0, 0, 1, 0]),
    ("Σ_18''", [0, 0, 0, 0, 0, 0, 0, 3]),
    ("Σ_20'", [0, 0, 0, 0, 1, 0, 0, 0]),
    ("Σ_20''", [1, 0, 0, 0, 0, 0, 0, 2]),
    ("Σ_22'", [1, 1, 0, 0, 0, 0, 0, 0]),
    ("Σ_22''", [0, 0, 0, 0, 0, 1, 0, 1]),
    ("Σ_24'", [0, 0, 0, 0, 0, 0, 2, 0]),
    ("Σ_24''", [0, 0, 1, 0, 0, 0, 0, 1]),
    ("Σ_26'", [2, 0, 0, 0, 0, 0, 0, 1]),
    ("Σ_26''", [0, 1, 0, 0, 0, 0, 1, 0]),
    ("Σ_28'", [1, 0, 0, 0, 0, 1, 0, 0]),
    ("Σ_30'", [0, 0, 0, 1, 0, 0, 0, 0]),
    ("Σ_32'", [1, 0, 1, 0, 0, 0, 0, 0]),
    ("Σ_32''", [0, 2, 0, 0, 0, 0, 0, 0]),
    ("Σ_36'", [3, 0, 0, 0, 0, 0, 0, 0]),
];

pub fn sigma(label: &str) -> Option<DominantWeight> {
    SIGMA_DICTIONARY
        .iter()
        .find(|(l, _)| *l == label)
        .map(|(_, fw)| DominantWeight::from_fw_unchecked(*fw))
}

pub fn sigma_label(m: &DominantWeight) -> Option<&'static str> {
    SIGMA_DICTIONARY.iter().find(|(_, fw)| fw == m.fw()).map(|(l, _)| *l)
}

/// Σ_label = (|orb|/240)·orb, as an element.
pub fn sigma_element(label: &str) -> Option<InvariantElement> {
    let m = sigma(label)?;
    Some(InvariantElement::term(m, Rational::new(240.into(), (orbit_size(&m) as i64).into())))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DisplayLabel {
    Constant,
    Named(&'static str),
    /// Orbit outside the dictionary, shown through its fw coordinates.
    Orbit(DominantWeight),
}

impl std::fmt::Display for DisplayLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DisplayLabel::Constant => write!(f, "1"),
            DisplayLabel::Named(s) => write!(f, "{s}"),
            DisplayLabel::Orbit(m) => write!(f, "Σ[{m}]"),
        }
    }
}

fn display_rank(m: &DominantWeight) -> (i64, usize, DominantWeight) {
    let pos = SIGMA_DICTIONARY.iter().position(|(_, fw)| fw == m.fw()).unwrap_or(usize::MAX);
    (m.norm(), pos, *m)
}

/// Terms in the 240-normalised Σ notation: ascending norm, constant last.
pub fn to_display(x: &InvariantElement) -> Vec<(DisplayLabel, Rational)> {
    let mut keys: Vec<&DominantWeight> = x.terms.keys().filter(|m| !m.is_zero()).collect();
    keys.sort_by_key(|m| display_rank(m));
    let mut out: Vec<(DisplayLabel, Rational)> = keys
        .into_iter()
        .map(|m| {
            let c = &x.terms[m] * Rational::new((orbit_size(m) as i64).into(), 240.into());
            let label = match sigma_label(m) {
                Some(l) => DisplayLabel::Named(l),
                None => DisplayLabel::Orbit(*m),
            };
            (label, c)
        })
        .collect();
    if let Some(c) = x.terms.get(&DominantWeight::ZERO) {
        out.push((DisplayLabel::Constant, c.clone()));
    }
    out
}

/// Inverse of [`to_display`].
pub fn from_display(terms: &[(DisplayLabel, Rational)]) -> Result<InvariantElement> {
    let mut out = InvariantElement::zero();
    for (label, c) in terms {
        let m = match label {
            DisplayLabel::Constant => {
                out.add_term(DominantWeight::ZERO, c.clone());
                continue;
            }
            DisplayLabel::Named(l) => sigma(l).ok_or_else(|| Error::Parse(format!("unknown label {l}")))?,
            DisplayLabel::Orbit(m) => *m,
        };
        out.add_term(m, c * Rational::new(240.into(), (orbit_size(&m) as i64).into()));
    }
    Ok(out)
}

fn fmt_coeff(c: &Rational, with_label: bool) -> String {
    let a = num_traits::abs(c.clone());
    if with_label && a.is_one() {
        String::new()
    } else if a.is_integer() {
        a.numer().to_string()
    } else if with_label {
        format!("({}/{})", a.numer(), a.denom())
    } else {
        format!("{}/{}", a.numer(), a.denom())
    }
}

/// Σ-notation text, e.g. "2Σ_2 − Σ_4 − 240".
pub fn display_string(x: &InvariantElement) -> String {
    let terms = to_display(x);
    if terms.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (i, (label, c)) in terms.iter().enumerate() {
        let neg = c < &Rational::zero();
        if i == 0 {
            if neg {
                s.push('−');
            }
        } else {
            s.push_str(if neg { " − " } else { " + " });
        }
        match label {
            DisplayLabel::Constant => s.push_str(&fmt_coeff(c, false)),
            _ => {
                s.push_str(&fmt_coeff(c, true));
                s.push_str(&label.to_string());
            }
        }
    }
    s
}

/// Parse the output of [`display_string`].
pub fn parse_display(s: &str) -> Result<InvariantElement> {
    let s = s.trim();
    if s == "0" {
        return Ok(InvariantElement::zero());
    }
    let norm = s.replace('−', "-");
    let mut parts: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    let mut depth = 0;
    for ch in norm.chars() {
        match ch {
            '(' | '[' => {
                depth += 1;
                cur.push(ch);
            }
            ')' | ']' => {
                depth -= 1;
                cur.push(ch);
            }
            '+' | '-' if depth == 0 && cur.trim().is_empty() && parts.is_empty() && ch == '-' => neg = true,
            '+' | '-' if depth == 0 && !cur.trim().is_empty() => {
                parts.push((neg, std::mem::take(&mut cur)));
                neg = ch == '-';
            }
            _ => cur.push(ch),
        }
    }
    parts.push((neg, cur));
    let mut terms = Vec::new();
    for (neg, p) in parts {
        let p = p.trim();
        let (coeff, label) = match p.find('Σ') {
            None => (p, None),
            Some(i) => (&p[..i], Some(&p[i..])),
        };
        let coeff = coeff.trim().trim_start_matches('(').trim_end_matches(')');
        let mut c = if coeff.is_empty() { Rational::one() } else { crate::rational::parse(coeff)? };
        if neg {
            c = -c;
        }
        let label = match label {
            None => DisplayLabel::Constant,
            Some(l) if l.starts_with("Σ[") => DisplayLabel::Orbit(parse_fw_sum(&l["Σ[".len()..l.len() - 1])?),
            Some(l) => DisplayLabel::Named(
                SIGMA_DICTIONARY
                    .iter()
                    .find(|(x, _)| *x == l)
                    .map(|(x, _)| *x)
                    .ok_or_else(|| Error::Parse(format!("unknown label {l}")))?,
            ),
        };
        terms.push((label, c));
    }
    from_display(&terms)
}

fn parse_fw_sum(s: &str) -> Result<DominantWeight> {
    let mut fw = [0i32; 8];
    for part in s.split('+') {
        let (k, i) = part.split_once('w').ok_or_else(|| Error::Parse(format!("bad weight {s}")))?;
        let k: i32 = if k.is_empty() { 1 } else { k.parse().map_err(|_| Error::Parse(s.into()))? };
        let i: usize = i.parse().map_err(|_| Error::Parse(s.into()))?;
        if !(1..=8).contains(&i) {
            return Err(Error::Parse(format!("bad weight index in {s}")));
        }
        fw[i - 1] += k;
    }
    DominantWeight::from_fw(fw)
}

/// Every support point has T(m) ≤ t; returns the offenders otherwise.
pub fn t_support_check(x: &InvariantElement, t: i64) -> (bool, Vec<DominantWeight>) {
    let bad: Vec<DominantWeight> = x.terms.keys().filter(|m| m.t_statistic() > t).copied().collect();
    (bad.is_empty(), bad)
}

/// Laurent polynomial Σ c_e ζ^e.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    pub coeffs: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn coeff(&self, e: i64) -> Rational {
        self.coeffs.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().all(|(e, c)| self.coeff(-e) == *c)
    }

    fn add_term(&mut self, e: i64, c: Rational) {
        let x = self.coeffs.entry(e).or_insert_with(Rational::zero);
        *x += c;
        if x.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::default();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &o.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

/// Restriction of x to the line z·v: Σ_m c(m) Σ_{a ∈ orb(m)} ζ^{(a,v)}.
///
/// Σ_{a∈orb(m)} ζ^{(a,v)} = (|orb m|/|orb v|)·Σ_{b∈orb v} ζ^{(m,b)}, so the loop
/// runs over whichever orbit is smaller.
pub fn pullback(x: &InvariantElement, v: &crate::e8::E8Vector) -> Result<LaurentPoly> {
    let g = weight_gram();
    let vd = crate::e8::dominant_reduce(v);
    let mut out = LaurentPoly::default();
    for (m, c) in &x.terms {
        // loop over the smaller orbit; the other side enters through G·fw
        let (looped, other, scale) = if orbit_size(&vd) <= orbit_size(m) {
            (vd, *m.fw(), Rational::new((orbit_size(m) as i64).into(), (orbit_size(&vd) as i64).into()))
        } else {
            (*m, v.fw(), Rational::one())
        };
        let fixed: [i64; 8] = std::array::from_fn(|i| (0..8).map(|j| g[i][j] * other[j] as i64).sum());
        let mut hist: BTreeMap<i64, i64> = BTreeMap::new();
        for a in orbit_fw(&looped)?.iter() {
            let e: i64 = a.iter().zip(fixed).map(|(ai, fi)| *ai as i64 * fi).sum();
            *hist.entry(e).or_default() += 1;
        }
        let k = c * scale;
        for (e, n) in hist {
            out.add_term(e, &k * int(n));
        }
    }
    Ok(out)
}
