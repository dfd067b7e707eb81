//! Named forms, their construction recipes, and the structure computations built on them.

mod cascade;
mod structure;
mod theta_quotient;

pub use cascade::{solve_cascade, CascadeSystem};
pub use structure::{
    dimension_bound_table, holomorphic_subspace, holomorphy_order, pullback_max_table, rank_series, verify_free_module,
    weak_generators, BoundRow, FreeModuleReport, WeightReport, HOLOMORPHIC_MAX_COSET_MIN,
};
pub use theta_quotient::build_phi16_4;

use crate::error::{Error, Result};
use crate::invring::{sigma, to_display, DisplayLabel};
use crate::jacobi::{
    heat, hecke_t_minus_to, jf_div_modular, jf_mul, jf_scale, rescale_z, theta_e8, JacobiQExpansion, Kind,
};
use crate::qseries::{delta, eisenstein, series_mul, ModularQSeries};
use crate::rational::{frac, int, Rational};
use num_traits::Zero;
use serde_json::json;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, LazyLock, Mutex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FormName {
    Theta,
    /// A_1, A_2, A_3, A_5 = X_t; A_4 = θ(τ, 2z).
    A(u32),
    X(u32),
    B(u32),
    /// φ_{k,t}
    Phi(i32, u32),
    Psi8x4,
    Bm2x3,
    A0x3,
    U(i32, u32),
    V(i32, u32),
    W16x2,
    C8x4,
    /// Cusp forms of index 4 with the q²Σ_16' term cancelled.
    Cusp4(i32),
    ThetaSq,
    A2Theta,
    B2Theta,
    ThetaCube,
}

use FormName::*;

pub const ALL_FORMS: &[FormName] = &[
    Theta,
    A(1),
    A(2),
    A(3),
    A(4),
    A(5),
    X(1),
    X(2),
    X(3),
    X(4),
    X(5),
    X(6),
    B(2),
    B(3),
    B(4),
    B(6),
    ThetaSq,
    Phi(-4, 2),
    Phi(-2, 2),
    Phi(0, 2),
    U(12, 2),
    V(14, 2),
    W16x2,
    A2Theta,
    B2Theta,
    ThetaCube,
    Bm2x3,
    Phi(-4, 3),
    A0x3,
    Phi(-2, 3),
    Phi(0, 3),
    Phi(-8, 3),
    Phi(-6, 3),
    U(10, 3),
    U(12, 3),
    V(12, 3),
    U(14, 3),
    U(16, 3),
    Phi(-16, 4),
    Phi(-14, 4),
    Phi(-12, 4),
    Phi(-10, 4),
    Phi(-8, 4),
    Phi(-6, 4),
    Phi(-4, 4),
    Phi(-2, 4),
    Phi(0, 4),
    Psi8x4,
    C8x4,
    U(10, 4),
    U(12, 4),
    Cusp4(8),
    Cusp4(10),
    Cusp4(12),
];

impl fmt::Display for FormName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Theta => write!(f, "theta_e8"),
            A(t) => write!(f, "A{t}"),
            X(t) => write!(f, "X_{t}"),
            B(t) => write!(f, "B{t}"),
            Phi(k, t) => write!(f, "phi_{k}_{t}"),
            Psi8x4 => write!(f, "psi_-8_4"),
            Bm2x3 => write!(f, "B_-2_3"),
            A0x3 => write!(f, "A_0_3"),
            U(k, t) => write!(f, "U_{k}_{t}"),
            V(k, t) => write!(f, "V_{k}_{t}"),
            W16x2 => write!(f, "W_16_2"),
            C8x4 => write!(f, "C_8_4"),
            Cusp4(k) => write!(f, "cusp_{k}_4"),
            ThetaSq => write!(f, "theta_sq"),
            A2Theta => write!(f, "A2_theta"),
            B2Theta => write!(f, "B2_theta"),
            ThetaCube => write!(f, "theta_cube"),
        }
    }
}

impl FromStr for FormName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let aliases = [("theta", Theta), ("A_2", A(2)), ("A_3", A(3)), ("A_4", A(4)), ("A_1", A(1)), ("A_5", A(5))];
        if let Some((_, n)) = aliases.iter().find(|(a, _)| *a == s) {
            return Ok(*n);
        }
        ALL_FORMS.iter().find(|n| n.to_string() == s).copied().ok_or_else(|| Error::UnknownForm(s.to_string()))
    }
}

/// Registry entry for a named form.
#[derive(Debug, Clone)]
pub struct FormInfo {
    pub name: FormName,
    pub weight: i32,
    pub index: u32,
    pub recipe: &'static str,
    pub normalization: &'static str,
    pub kind: Kind,
    /// Known leading terms as (power of q, Σ-notation).
    pub expected: &'static [(usize, &'static str)],
    pub constructible: bool,
}

impl FormInfo {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "constructible": self.constructible,
            "expected_display": self.expected.iter().map(|(n, s)| format!("q^{n}: {s}")).collect::<Vec<_>>(),
            "index": self.index,
            "kind": self.kind.to_string(),
            "name": self.name.to_string(),
            "normalization": self.normalization,
            "recipe": self.recipe,
            "weight": self.weight,
        })
    }
}

const NORM_E4: &str = "value at z=0 equals E4";
const NORM_E6: &str = "value at z=0 equals E6";
const NORM_FIXED: &str = "fixed by the recipe constants";
const NORM_CANCEL: &str = "* cancels the q^2 Σ_16' coefficient";

pub fn info(name: FormName) -> FormInfo {
    let (weight, index, recipe, normalization, kind, expected): (i32, u32, &str, &str, Kind, &[(usize, &str)]) =
        match name {
            Theta | A(1) | X(1) => (4, 1, "theta series of E8", "constant term 1", Kind::Holomorphic, &[(0, "1"), (1, "Σ_2")]),
            A(2) | X(2) => (4, 2, "(1/9) θ|T-(2)", NORM_E4, Kind::Holomorphic, &[(0, "1"), (1, "Σ_4")]),
            A(3) | X(3) => (4, 3, "(1/28) θ|T-(3)", NORM_E4, Kind::Holomorphic, &[(0, "1"), (1, "Σ_6")]),
            A(4) => (4, 4, "θ(τ, 2z)", "constant term 1", Kind::Holomorphic, &[(0, "1"), (1, "Σ_8''")]),
            X(4) => (4, 4, "(1/73) θ|T-(4)", NORM_E4, Kind::Holomorphic, &[(0, "1")]),
            A(5) | X(5) => (4, 5, "(1/126) θ|T-(5)", NORM_E4, Kind::Holomorphic, &[(0, "1")]),
            X(6) => (4, 6, "(1/252) θ|T-(6)", NORM_E4, Kind::Holomorphic, &[(0, "1")]),
            B(2) => (
                6,
                2,
                "(1/1080)(3 E6 φ_{0,2} − E4 E6 φ_{-4,2} − E4² φ_{-2,2})",
                NORM_E6,
                Kind::Holomorphic,
                &[
                    (0, "1"),
                    (1, "−(8/5)Σ_2 − (3/5)Σ_4 + 24"),
                    (2, "Σ_8'' − (24/5)Σ_8' − (224/5)Σ_6 − (72/5)Σ_4 − (32/5)Σ_2 + 24"),
                ],
            ),
            B(3) => (
                6,
                3,
                "unique holomorphic form of weight 6 and index 3",
                NORM_E6,
                Kind::Holomorphic,
                &[(0, "1"), (1, "−(7/20)Σ_6 − (27/20)Σ_4 − (9/20)Σ_2 + 12")],
            ),
            B(4) => (
                6,
                4,
                "(1/33) B2|T-(2) + (2/55) Δ φ_{-6,4}",
                NORM_E6,
                Kind::Holomorphic,
                &[(0, "1"), (1, "(1/15)Σ_8'' − (28/15)Σ_6 − (4/15)Σ_2 − 8")],
            ),
            B(6) => (6, 6, "trace construction on a congruence subgroup (not implemented)", NORM_E6, Kind::Holomorphic, &[]),
            ThetaSq => (8, 2, "θ·θ", NORM_FIXED, Kind::Holomorphic, &[(0, "1"), (1, "2Σ_2")]),
            Phi(-4, 2) => (-4, 2, "(θ² − (1/9) E4 θ|T-(2)) / Δ", NORM_FIXED, Kind::Weak, &[(0, "2Σ_2 − Σ_4 − 240")]),
            Phi(-2, 2) => (-2, 2, "3 H(φ_{-4,2})", NORM_FIXED, Kind::Weak, &[(0, "Σ_2 + Σ_4 − 480")]),
            Phi(0, 2) => (0, 2, "(1/2) E4 φ_{-4,2} − H(φ_{-2,2})", NORM_FIXED, Kind::Weak, &[(0, "Σ_2 + 120")]),
            U(12, 2) => (12, 2, "Δ φ_{0,2}", NORM_FIXED, Kind::Cusp, &[(0, "0"), (1, "Σ_2 + 120")]),
            V(14, 2) => (14, 2, "(1/3) Δ (E6 φ_{-4,2} + E4 φ_{-2,2})", NORM_FIXED, Kind::Cusp, &[(0, "0"), (1, "Σ_2 − 240")]),
            W16x2 => (16, 2, "(1/3) Δ (E4² φ_{-4,2} + E6 φ_{-2,2})", NORM_FIXED, Kind::Cusp, &[(0, "0"), (1, "Σ_2 − 240")]),
            A2Theta => (8, 3, "A2·θ", NORM_FIXED, Kind::Holomorphic, &[(0, "1"), (1, "Σ_2 + Σ_4")]),
            B2Theta => (10, 3, "B2·θ", NORM_FIXED, Kind::Holomorphic, &[(0, "1"), (1, "−(3/5)Σ_2 − (3/5)Σ_4 + 24")]),
            ThetaCube => (12, 3, "θ³", NORM_FIXED, Kind::Holomorphic, &[(0, "1"), (1, "3Σ_2")]),
            Bm2x3 => (
                -2,
                3,
                "−5 (θ B2 − (1/28) E6 θ|T-(3)) / Δ",
                NORM_FIXED,
                Kind::Weak,
                &[(0, "3Σ_2 + 3Σ_4 + 5Σ_6 − 2640")],
            ),
            Phi(-4, 3) => (-4, 3, "(θ A2 − (1/28) E4 θ|T-(3)) / Δ", NORM_FIXED, Kind::Weak, &[(0, "Σ_2 + Σ_4 − Σ_6 − 240")]),
            A0x3 => (0, 3, "θ φ_{-4,2}", NORM_FIXED, Kind::Weak, &[(0, "2Σ_2 − Σ_4 − 240")]),
            Phi(-2, 3) => (-2, 3, "3 H(φ_{-4,3})", NORM_FIXED, Kind::Weak, &[(0, "Σ_2 + Σ_6 − 480")]),
            Phi(0, 3) => (0, 3, "(3/8)(A_{0,3} + E4 φ_{-4,3} − 2 H(φ_{-2,3}))", NORM_FIXED, Kind::Weak, &[(0, "Σ_2")]),
            Phi(-8, 3) => (
                -8,
                3,
                "* (E4² φ_{-4,3} + 6 E6 φ_{-2,3} − 2 E4 A_{0,3} − E6 B_{-2,3}) / Δ",
                "coefficient of Σ_8' in the q^0 term is 1",
                Kind::Weak,
                &[(0, "Σ_8' − 4Σ_6 + 6Σ_4 − 4Σ_2 + 240")],
            ),
            Phi(-6, 3) => (-6, 3, "−3 H(φ_{-8,3})", NORM_FIXED, Kind::Weak, &[(0, "Σ_8' − 6Σ_4 + 8Σ_2 − 720")]),
            U(10, 3) => (
                10,
                3,
                "−(35/54) E6 A3 − (50/27) E4 B3 + (5/2) B2 θ",
                NORM_FIXED,
                Kind::Cusp,
                &[(0, "0"), (1, "Σ_4 − (2/3)Σ_2 − 80")],
            ),
            U(12, 3) => (12, 3, "E4 A2 θ − θ³", NORM_FIXED, Kind::Cusp, &[(0, "0"), (1, "Σ_4 − 2Σ_2 + 240")]),
            V(12, 3) => (12, 3, "Δ φ_{0,3}", NORM_FIXED, Kind::Cusp, &[(0, "0"), (1, "Σ_2")]),
            U(14, 3) => (14, 3, "Δ (E4 φ_{-2,3} + E6 φ_{-4,3})", NORM_FIXED, Kind::Cusp, &[(0, "0"), (1, "Σ_4 + 2Σ_2 − 720")]),
            U(16, 3) => (16, 3, "Δ² φ_{-8,3}", NORM_FIXED, Kind::Cusp, &[(0, "0"), (1, "0")]),
            Phi(-16, 4) => (
                -16,
                4,
                "W(E8)-symmetrisation of Δ^-2 ∏ θ(z_{2i-1}+z_{2i})² θ(z_{2i-1}−z_{2i})²",
                "coefficient of Σ_16' in the q^0 term is 1",
                Kind::Weak,
                &[(0, "Σ_16' − 8Σ_14' + 28Σ_12 − 56Σ_10 + 14Σ_8'' + 56Σ_8' − 56Σ_6 + 28Σ_4 − 8Σ_2 + 240")],
            ),
            Phi(-14, 4) => (
                -14,
                4,
                "−3 H(φ_{-16,4})",
                NORM_FIXED,
                Kind::Weak,
                &[(0, "Σ_16' − 2Σ_14' − 14Σ_12 + 70Σ_10 − 28Σ_8'' − 112Σ_8' + 154Σ_6 − 98Σ_4 + 34Σ_2 − 1200")],
            ),
            Phi(-12, 4) => (
                -12,
                4,
                "−(2/7) H(φ_{-14,4}) − (1/7) E4 φ_{-16,4}",
                NORM_FIXED,
                Kind::Weak,
                &[(0, "Σ_14' − 4Σ_12 + 3Σ_10 + 2Σ_8'' + 8Σ_8' − 25Σ_6 + 24Σ_4 − 11Σ_2 + 480")],
            ),
            Phi(-10, 4) => (
                -10,
                4,
                "−(4/9) H(φ_{-12,4}) − (5/162)(E4 φ_{-14,4} − E6 φ_{-16,4})",
                NORM_FIXED,
                Kind::Weak,
                &[(0, "Σ_12 − 4Σ_10 + Σ_8'' + 4Σ_8' − 5Σ_4 + 4Σ_2 − 240")],
            ),
            Phi(-8, 4) => (
                -8,
                4,
                "−(3/5) H(φ_{-10,4}) − (1/15) E4 φ_{-12,4} + (1/90) E6 φ_{-14,4} − (1/90) E4² φ_{-16,4}",
                NORM_FIXED,
                Kind::Weak,
                &[(0, "Σ_10 − (7/10)Σ_8'' − (28/10)Σ_8' + 4Σ_6 − Σ_4 − Σ_2 + 120")],
            ),
            Phi(-6, 4) => (
                -6,
                4,
                "−(1/2) E4 φ_{-10,4} + (1/6) E6 φ_{-12,4} − (1/36)(E4² φ_{-14,4} − E4 E6 φ_{-16,4}) − 4 H(φ_{-8,4})",
                NORM_FIXED,
                Kind::Weak,
                &[(0, "Σ_8'' + 4Σ_8' − 14Σ_6 + 12Σ_4 − 2Σ_2 − 240")],
            ),
            Phi(-4, 4) => (
                -4,
                4,
                "−(10/81) E4 φ_{-8,4} + (5/81) E6 φ_{-10,4} + (5/1458)(E4 E6 φ_{-14,4} − E4³ φ_{-16,4}) − (5/243) E4² φ_{-12,4} − (2/9) H(φ_{-6,4})",
                NORM_FIXED,
                Kind::Weak,
                &[(0, "Σ_6 − 2Σ_4 + Σ_2")],
            ),
            Phi(-2, 4) => (
                -2,
                4,
                "−(5/9) E6 φ_{-8,4} + (5/18) E4² φ_{-10,4} + (5/324)(E4³ φ_{-14,4} − E4² E6 φ_{-16,4}) − (5/54) E4 E6 φ_{-12,4} + (1/6) E4 φ_{-6,4} + 12 H(φ_{-4,4})",
                NORM_FIXED,
                Kind::Weak,
                &[(0, "−7Σ_4 + 8Σ_2 − 240")],
            ),
            Phi(0, 4) => (0, 4, "H(φ_{-2,4})", NORM_FIXED, Kind::Weak, &[(0, "2Σ_2 − 120")]),
            Psi8x4 => (
                -8,
                4,
                "(73/72)((1/73) θ|T-(4) − θ(τ, 2z)) / Δ",
                NORM_FIXED,
                Kind::Weak,
                &[(0, "Σ_8' − Σ_8''")],
            ),
            C8x4 => (
                8,
                4,
                "(1/54) Δ (E4³ φ_{-16,4} − E4 E6 φ_{-14,4} + 6 E4² φ_{-12,4} − 18 E6 φ_{-10,4} + 36 E4 φ_{-8,4})",
                NORM_FIXED,
                Kind::Holomorphic,
                &[(0, "0"), (1, "(1/5)Σ_8'' + (4/5)Σ_8' − 4Σ_6 + 6Σ_4 − 4Σ_2 + 240")],
            ),
            U(10, 4) => (
                10,
                4,
                "−(5/324) Δ (E4² E6 φ_{-16,4} − E4³ φ_{-14,4} + 6 E4 E6 φ_{-12,4} − 18 E4² φ_{-10,4} + 36 E6 φ_{-8,4} − (54/5) E4 φ_{-6,4}) − * Δ² φ_{-14,4}",
                NORM_CANCEL,
                Kind::Cusp,
                &[(0, "0"), (1, "Σ_6 − 3Σ_4 + 3Σ_2 − 240")],
            ),
            U(12, 4) => (
                12,
                4,
                "−(5/324) Δ (E4 E6² φ_{-16,4} − E4² E6 φ_{-14,4} + 6 E6² φ_{-12,4} − 18 E4 E6 φ_{-10,4} + 36 E4² φ_{-8,4} − (54/5) E6 φ_{-6,4}) − * Δ² E4 φ_{-16,4}",
                NORM_CANCEL,
                Kind::Cusp,
                &[(0, "0"), (1, "Σ_6 − 3Σ_4 + 3Σ_2 − 240")],
            ),
            Cusp4(8) => (8, 4, "Δ φ_{-4,4} − * Δ² φ_{-16,4}", NORM_CANCEL, Kind::Cusp, &[(0, "0"), (1, "Σ_6 − 2Σ_4 + Σ_2")]),
            Cusp4(10) => (10, 4, "Δ φ_{-2,4} − * Δ² φ_{-14,4}", NORM_CANCEL, Kind::Cusp, &[(0, "0"), (1, "−7Σ_4 + 8Σ_2 − 240")]),
            Cusp4(12) => (12, 4, "Δ φ_{0,4} − * Δ² E4 φ_{-16,4}", NORM_CANCEL, Kind::Cusp, &[(0, "0"), (1, "2Σ_2 − 120")]),
            other => unreachable!("{other} is not in the registry"),
        };
    FormInfo { name, weight, index, recipe, normalization, kind, expected, constructible: name != B(6) }
}

/// Default truncation: 3 for index ≤ 3, 2 above.
pub fn default_order(name: FormName) -> usize {
    if info(name).index <= 3 {
        3
    } else {
        2
    }
}

type Cache = Mutex<HashMap<FormName, Arc<JacobiQExpansion>>>;
static CACHE: LazyLock<Cache> = LazyLock::new(|| Mutex::new(HashMap::new()));

/// The named form to the requested order (memoised; a higher-order cached copy is truncated).
pub fn build(name: FormName, order: usize) -> Result<Arc<JacobiQExpansion>> {
    if let Some(f) = CACHE.lock().unwrap().get(&name) {
        if f.order() >= order {
            return Ok(if f.order() == order { f.clone() } else { Arc::new(f.truncate(order)?) });
        }
    }
    let f = Arc::new(construct(name, order)?);
    debug_assert_eq!(f.order(), order, "{name}");
    let mut cache = CACHE.lock().unwrap();
    let keep = cache.get(&name).is_none_or(|g| g.order() < order);
    if keep {
        cache.insert(name, f.clone());
    }
    Ok(f)
}

fn e(k: i32, n: usize) -> ModularQSeries {
    eisenstein(k, n).expect("valid weight")
}

fn e4e4(n: usize) -> ModularQSeries {
    series_mul(&e(4, n), &e(4, n))
}

fn get(name: FormName, order: usize) -> Result<JacobiQExpansion> {
    Ok((*build(name, order)?).clone())
}

/// Σ c_i·f_i·g_i for modular f_i, forms g_i of a common weight and index.
fn combo(parts: &[(Rational, &ModularQSeries, &JacobiQExpansion)]) -> Result<JacobiQExpansion> {
    let mut acc: Option<JacobiQExpansion> = None;
    for (c, f, g) in parts {
        let x = jf_scale(g, f).scale(c);
        acc = Some(match acc {
            None => x,
            Some(a) => a.add(&x)?,
        });
    }
    acc.ok_or_else(|| Error::InvalidArgument("empty combination".into()))
}

fn q0_sigma_coeff(f: &JacobiQExpansion, n: usize, label: &'static str) -> Rational {
    to_display(f.term(n))
        .into_iter()
        .find(|(l, _)| *l == DisplayLabel::Named(label))
        .map(|(_, c)| c)
        .unwrap_or_else(Rational::zero)
}

/// x − *·y with * chosen to kill the q²Σ_16' coefficient.
fn cancel_sigma16(x: &JacobiQExpansion, y: &JacobiQExpansion) -> Result<JacobiQExpansion> {
    let cy = q0_sigma_coeff(y, 2, "Σ_16'");
    if cy.is_zero() {
        return Err(Error::Unresolved("the correction term has no q^2 Σ_16' coefficient".into()));
    }
    let star = q0_sigma_coeff(x, 2, "Σ_16'") / cy;
    x.sub(&y.scale(&star))
}

/// θ|T₋(t) scaled to have value E4 at z = 0.
fn x_family(t: u32, n: usize) -> Result<JacobiQExpansion> {
    let th = theta_e8(t as usize * n)?;
    let raw = hecke_t_minus_to(&th, t, n)?;
    let c = crate::invring::eval_zero(raw.term(0));
    Ok(raw.scale(&(int(1) / c)))
}

fn construct(name: FormName, n: usize) -> Result<JacobiQExpansion> {
    let dn = delta(n);
    let e4 = e(4, n);
    let e6 = e(6, n);
    let one = int(1);
    Ok(match name {
        Theta | A(1) | X(1) => theta_e8(n)?,
        A(2) | X(2) => x_family(2, n)?,
        A(3) | X(3) => x_family(3, n)?,
        A(5) | X(5) => x_family(5, n)?,
        X(4) => x_family(4, n)?,
        X(6) => x_family(6, n)?,
        A(4) => rescale_z(&theta_e8(n)?, 2)?,
        B(6) => return Err(Error::NotConstructible(name.to_string())),
        ThetaSq => {
            let th = get(Theta, n)?;
            jf_mul(&th, &th)?
        }
        Phi(-4, 2) => {
            let m = n + 1;
            let th = theta_e8(2 * m)?;
            let sq = jf_mul(&th.truncate(m)?, &th.truncate(m)?)?;
            let t2 = hecke_t_minus_to(&th, 2, m)?;
            let num = sq.sub(&jf_scale(&t2, &e(4, m)).scale(&frac(1, 9)))?;
            jf_div_modular(&num, &delta(m))?
        }
        Phi(-2, 2) => heat(&get(Phi(-4, 2), n)?)?.scale(&int(3)),
        Phi(0, 2) => {
            let a = jf_scale(&get(Phi(-4, 2), n)?, &e4).scale(&frac(1, 2));
            a.sub(&heat(&get(Phi(-2, 2), n)?)?)?
        }
        B(2) => {
            let (p4, p2, p0) = (get(Phi(-4, 2), n)?, get(Phi(-2, 2), n)?, get(Phi(0, 2), n)?);
            combo(&[
                (int(3), &e6, &p0),
                (int(-1), &series_mul(&e4, &e6), &p4),
                (int(-1), &e4e4(n), &p2),
            ])?
            .scale(&frac(1, 1080))
        }
        U(12, 2) => jf_scale(&get(Phi(0, 2), n)?, &dn),
        V(14, 2) => {
            let x = combo(&[(one.clone(), &e6, &get(Phi(-4, 2), n)?), (one, &e4, &get(Phi(-2, 2), n)?)])?;
            jf_scale(&x, &dn).scale(&frac(1, 3))
        }
        W16x2 => {
            let x = combo(&[(one.clone(), &e4e4(n), &get(Phi(-4, 2), n)?), (one, &e6, &get(Phi(-2, 2), n)?)])?;
            jf_scale(&x, &dn).scale(&frac(1, 3))
        }
        A2Theta => jf_mul(&get(A(2), n)?, &get(Theta, n)?)?,
        B2Theta => jf_mul(&get(B(2), n)?, &get(Theta, n)?)?,
        ThetaCube => jf_mul(&get(ThetaSq, n)?, &get(Theta, n)?)?,
        Bm2x3 | Phi(-4, 3) => {
            let m = n + 1;
            let th = theta_e8(3 * m)?;
            let t3 = hecke_t_minus_to(&th, 3, m)?;
            let (partner, f, c) = if name == Bm2x3 { (get(B(2), m)?, e(6, m), int(-5)) } else { (get(A(2), m)?, e(4, m), int(1)) };
            let num = jf_mul(&th.truncate(m)?, &partner)?.sub(&jf_scale(&t3, &f).scale(&frac(1, 28)))?;
            jf_div_modular(&num, &delta(m))?.scale(&c)
        }
        A0x3 => jf_mul(&get(Theta, n)?, &get(Phi(-4, 2), n)?)?,
        Phi(-2, 3) => heat(&get(Phi(-4, 3), n)?)?.scale(&int(3)),
        Phi(0, 3) => {
            let a = get(A0x3, n)?.add(&jf_scale(&get(Phi(-4, 3), n)?, &e4))?;
            a.sub(&heat(&get(Phi(-2, 3), n)?)?.scale(&int(2)))?.scale(&frac(3, 8))
        }
        Phi(-8, 3) => {
            let m = n + 1;
            let (e4m, e6m) = (e(4, m), e(6, m));
            let num = combo(&[
                (int(1), &e4e4(m), &get(Phi(-4, 3), m)?),
                (int(6), &e6m, &get(Phi(-2, 3), m)?),
                (int(-2), &e4m, &get(A0x3, m)?),
                (int(-1), &e6m, &get(Bm2x3, m)?),
            ])?;
            let raw = jf_div_modular(&num, &delta(m))?;
            let c = q0_sigma_coeff(&raw, 0, "Σ_8'");
            if c.is_zero() {
                return Err(Error::Unresolved("φ_{-8,3} numerator has no Σ_8' term".into()));
            }
            raw.scale(&(int(1) / c))
        }
        Phi(-6, 3) => heat(&get(Phi(-8, 3), n)?)?.scale(&int(-3)),
        B(3) => {
            let basis = holomorphic_subspace(6, 3, n)?;
            if basis.len() != 1 {
                return Err(Error::Unresolved(format!("expected one holomorphic form of weight 6, found {}", basis.len())));
            }
            basis.into_iter().next().expect("one element")
        }
        U(10, 3) => {
            let b2t = get(B2Theta, n)?;
            combo(&[
                (frac(-35, 54), &e6, &get(A(3), n)?),
                (frac(-50, 27), &e4, &get(B(3), n)?),
                (frac(5, 2), &ModularQSeries::one(n), &b2t),
            ])?
        }
        U(12, 3) => jf_scale(&get(A2Theta, n)?, &e4).sub(&get(ThetaCube, n)?)?,
        V(12, 3) => jf_scale(&get(Phi(0, 3), n)?, &dn),
        U(14, 3) => {
            let x = combo(&[(one.clone(), &e4, &get(Phi(-2, 3), n)?), (one, &e6, &get(Phi(-4, 3), n)?)])?;
            jf_scale(&x, &dn)
        }
        U(16, 3) => jf_scale(&get(Phi(-8, 3), n)?, &series_mul(&dn, &dn)),
        Phi(-16, 4) => build_phi16_4(n)?,
        Phi(-14, 4) => heat(&get(Phi(-16, 4), n)?)?.scale(&int(-3)),
        Phi(-12, 4) => {
            let h = heat(&get(Phi(-14, 4), n)?)?.scale(&frac(-2, 7));
            h.sub(&jf_scale(&get(Phi(-16, 4), n)?, &e4).scale(&frac(1, 7)))?
        }
        Phi(-10, 4) => {
            let h = heat(&get(Phi(-12, 4), n)?)?.scale(&frac(-4, 9));
            let x = combo(&[(one.clone(), &e4, &get(Phi(-14, 4), n)?), (-one, &e6, &get(Phi(-16, 4), n)?)])?;
            h.sub(&x.scale(&frac(5, 162)))?
        }
        Phi(-8, 4) => {
            let h = heat(&get(Phi(-10, 4), n)?)?.scale(&frac(-3, 5));
            h.add(&combo(&[
                (frac(-1, 15), &e4, &get(Phi(-12, 4), n)?),
                (frac(1, 90), &e6, &get(Phi(-14, 4), n)?),
                (frac(-1, 90), &e4e4(n), &get(Phi(-16, 4), n)?),
            ])?)?
        }
        Phi(-6, 4) => {
            let h = heat(&get(Phi(-8, 4), n)?)?.scale(&int(-4));
            h.add(&combo(&[
                (frac(-1, 2), &e4, &get(Phi(-10, 4), n)?),
                (frac(1, 6), &e6, &get(Phi(-12, 4), n)?),
                (frac(-1, 36), &e4e4(n), &get(Phi(-14, 4), n)?),
                (frac(1, 36), &series_mul(&e4, &e6), &get(Phi(-16, 4), n)?),
            ])?)?
        }
        Phi(-4, 4) => {
            let h = heat(&get(Phi(-6, 4), n)?)?.scale(&frac(-2, 9));
            let e4e6 = series_mul(&e4, &e6);
            let e4c = series_mul(&e4e4(n), &e4);
            h.add(&combo(&[
                (frac(-10, 81), &e4, &get(Phi(-8, 4), n)?),
                (frac(5, 81), &e6, &get(Phi(-10, 4), n)?),
                (frac(5, 1458), &e4e6, &get(Phi(-14, 4), n)?),
                (frac(-5, 1458), &e4c, &get(Phi(-16, 4), n)?),
                (frac(-5, 243), &e4e4(n), &get(Phi(-12, 4), n)?),
            ])?)?
        }
        Phi(-2, 4) => {
            let h = heat(&get(Phi(-4, 4), n)?)?.scale(&int(12));
            let e4e6 = series_mul(&e4, &e6);
            let e4c = series_mul(&e4e4(n), &e4);
            let e4e4e6 = series_mul(&e4e4(n), &e6);
            h.add(&combo(&[
                (frac(-5, 9), &e6, &get(Phi(-8, 4), n)?),
                (frac(5, 18), &e4e4(n), &get(Phi(-10, 4), n)?),
                (frac(5, 324), &e4c, &get(Phi(-14, 4), n)?),
                (frac(-5, 324), &e4e4e6, &get(Phi(-16, 4), n)?),
                (frac(-5, 54), &e4e6, &get(Phi(-12, 4), n)?),
                (frac(1, 6), &e4, &get(Phi(-6, 4), n)?),
            ])?)?
        }
        Phi(0, 4) => heat(&get(Phi(-2, 4), n)?)?,
        Psi8x4 => {
            let m = n + 1;
            let t4 = hecke_t_minus_to(&theta_e8(4 * m)?, 4, m)?;
            let num = t4.scale(&frac(1, 73)).sub(&rescale_z(&theta_e8(m)?, 2)?)?;
            jf_div_modular(&num, &delta(m))?.scale(&frac(73, 72))
        }
        B(4) => {
            let b2 = get(B(2), 2 * n)?;
            let t = crate::jacobi::hecke_t_minus_to(&b2, 2, n)?.scale(&frac(1, 33));
            t.add(&jf_scale(&get(Phi(-6, 4), n)?, &dn).scale(&frac(2, 55)))?
        }
        C8x4 => {
            let e4c = series_mul(&e4e4(n), &e4);
            let x = combo(&[
                (int(1), &e4c, &get(Phi(-16, 4), n)?),
                (int(-1), &series_mul(&e4, &e6), &get(Phi(-14, 4), n)?),
                (int(6), &e4e4(n), &get(Phi(-12, 4), n)?),
                (int(-18), &e6, &get(Phi(-10, 4), n)?),
                (int(36), &e4, &get(Phi(-8, 4), n)?),
            ])?;
            jf_scale(&x, &dn).scale(&frac(1, 54))
        }
        U(10, 4) | U(12, 4) | Cusp4(_) => {
            let m = n.max(2);
            let (dm, e4m, e6m) = (delta(m), e(4, m), e(6, m));
            let d2 = series_mul(&dm, &dm);
            let (x, y) = match name {
                U(10, 4) | U(12, 4) => {
                    let (f16, f14, f12, f10, f8, f6) = if name == U(10, 4) {
                        (series_mul(&e4e4(m), &e6m), series_mul(&e4e4(m), &e4m), series_mul(&e4m, &e6m), e4e4(m), e6m.clone(), e4m.clone())
                    } else {
                        (
                            series_mul(&e4m, &series_mul(&e6m, &e6m)),
                            series_mul(&e4e4(m), &e6m),
                            series_mul(&e6m, &e6m),
                            series_mul(&e4m, &e6m),
                            e4e4(m),
                            e6m.clone(),
                        )
                    };
                    let x = combo(&[
                        (int(1), &f16, &get(Phi(-16, 4), m)?),
                        (int(-1), &f14, &get(Phi(-14, 4), m)?),
                        (int(6), &f12, &get(Phi(-12, 4), m)?),
                        (int(-18), &f10, &get(Phi(-10, 4), m)?),
                        (int(36), &f8, &get(Phi(-8, 4), m)?),
                        (frac(-54, 5), &f6, &get(Phi(-6, 4), m)?),
                    ])?;
                    let x = jf_scale(&x, &dm).scale(&frac(-5, 324));
                    let y = if name == U(10, 4) {
                        jf_scale(&get(Phi(-14, 4), m)?, &d2)
                    } else {
                        jf_scale(&get(Phi(-16, 4), m)?, &series_mul(&d2, &e4m))
                    };
                    (x, y)
                }
                Cusp4(8) => (jf_scale(&get(Phi(-4, 4), m)?, &dm), jf_scale(&get(Phi(-16, 4), m)?, &d2)),
                Cusp4(10) => (jf_scale(&get(Phi(-2, 4), m)?, &dm), jf_scale(&get(Phi(-14, 4), m)?, &d2)),
                Cusp4(12) => (
                    jf_scale(&get(Phi(0, 4), m)?, &dm),
                    jf_scale(&get(Phi(-16, 4), m)?, &series_mul(&d2, &e4m)),
                ),
                _ => unreachable!(),
            };
            cancel_sigma16(&x, &y)?.truncate(n)?
        }
        other => return Err(Error::UnknownForm(other.to_string())),
    })
}

/// Check a built form against its registry display strings.
pub fn matches_expected(name: FormName, f: &JacobiQExpansion) -> Result<Vec<(usize, String, String)>> {
    let mut mismatches = Vec::new();
    for (n, s) in info(name).expected {
        if *n > f.order() {
            continue;
        }
        let want = crate::invring::parse_display(s)?;
        if f.term(*n) != &want {
            mismatches.push((*n, s.to_string(), crate::invring::display_string(f.term(*n))));
        }
    }
    Ok(mismatches)
}

/// Σ_16' as a dominant weight, exposed for callers checking the cancellation rule.
pub fn sigma16() -> crate::e8::DominantWeight {
    sigma("Σ_16'").expect("in dictionary")
}
