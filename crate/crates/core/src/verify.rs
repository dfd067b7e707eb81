//! Named verification suites. Every check recomputes its values and compares them with
//! fixed reference values.

use crate::catalog::{
    build, dimension_bound_table, holomorphic_subspace, info, matches_expected, pullback_max_table, rank_series,
    sigma16, solve_cascade, verify_free_module, FormName, ALL_FORMS,
};
use crate::e8::{max_coset_min_norm, orbit_fw, orbit_size, reduce_fw, shell, DominantWeight};
use crate::error::{Error, Result};
use crate::invring::{orbit_product, t_support_check, to_display, DisplayLabel, SIGMA_DICTIONARY};
use crate::jacobi::{
    classify, coefficient_bound_check, heat, jf_mul, jf_scale, quasi_periodicity_check, theta_e8, weight0_identity,
    JacobiQExpansion,
};
use crate::qseries::{delta, eisenstein, series_mul, sigma};
use crate::rational::{frac, int, Rational};
use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::json;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn to_json(&self) -> serde_json::Value {
        json!({"detail": self.detail, "name": self.name, "passed": self.passed})
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}: {}", if self.passed { "PASS" } else { "FAIL" }, self.name, self.detail)
    }
}

/// Ok(Ok(detail)) passes, Ok(Err(detail)) fails, Err is reported as a failure too.
type Outcome = Result<std::result::Result<String, String>>;

fn run(name: &str, f: impl FnOnce() -> Outcome) -> Check {
    let (passed, detail) = match f() {
        Ok(Ok(d)) => (true, d),
        Ok(Err(d)) => (false, d),
        Err(e) => (false, format!("error: {e}")),
    };
    Check { name: name.to_string(), passed, detail }
}

fn ensure(cond: bool, fail: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(fail())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Index2,
    Index3,
    Index4,
    Systems,
    Identities,
    Lf,
    Lattice,
    Bounds,
    Properties,
    All,
}

pub const SUITES: &[(&str, Suite)] = &[
    ("index2", Suite::Index2),
    ("index3", Suite::Index3),
    ("index4", Suite::Index4),
    ("systems", Suite::Systems),
    ("identities", Suite::Identities),
    ("lf", Suite::Lf),
    ("lattice", Suite::Lattice),
    ("bounds", Suite::Bounds),
    ("properties", Suite::Properties),
    ("all", Suite::All),
];

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SUITES
            .iter()
            .find(|(n, _)| *n == s)
            .map(|(_, x)| *x)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {s}")))
    }
}

pub fn run_suite(suite: Suite) -> Vec<Check> {
    match suite {
        Suite::Index2 => vec![index2_catalog()],
        Suite::Index3 => vec![index3_catalog()],
        Suite::Index4 => vec![index4_catalog()],
        Suite::Systems => vec![cascade_systems(), index2_cascade_matches_form(), structure_spot_checks()],
        Suite::Identities => vec![theta_square_relation(10)],
        Suite::Lf => vec![weight0_forms()],
        Suite::Lattice => vec![orbit_table(), shell_sizes(), coset_minima(), pullback_max(), inv_mul_oracle(10_000_000)],
        Suite::Bounds => vec![rank_table(), dimension_bounds()],
        Suite::Properties => vec![property_suites(100)],
        Suite::All => SUITES
            .iter()
            .filter(|(_, s)| *s != Suite::All)
            .flat_map(|(_, s)| run_suite(*s))
            .collect(),
    }
}

pub fn rank_table() -> Check {
    run("rank table", || {
        let want = [1u64, 1, 3, 5, 10, 15, 27, 39, 63, 90, 135, 187, 270, 364, 505];
        let got = rank_series(14);
        Ok(ensure(got == want, || format!("got {got:?}")).map(|_| format!("r(1..14) = {:?}", &got[1..])))
    })
}

/// Dominant representatives of the shells of norm 2..24.
pub const ORBIT_TABLE: [(u64, &[[i32; 8]]); 12] = [
    (2, &[[0, 0, 0, 0, 0, 0, 0, 1]]),
    (4, &[[1, 0, 0, 0, 0, 0, 0, 0]]),
    (6, &[[0, 0, 0, 0, 0, 0, 1, 0]]),
    (8, &[[0, 0, 0, 0, 0, 0, 0, 2], [0, 1, 0, 0, 0, 0, 0, 0]]),
    (10, &[[1, 0, 0, 0, 0, 0, 0, 1]]),
    (12, &[[0, 0, 0, 0, 0, 1, 0, 0]]),
    (14, &[[0, 0, 1, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, 0, 1, 1]]),
    (16, &[[2, 0, 0, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0, 0, 1]]),
    (18, &[[1, 0, 0, 0, 0, 0, 1, 0], [0, 0, 0, 0, 0, 0, 0, 3]]),
    (20, &[[0, 0, 0, 0, 1, 0, 0, 0], [1, 0, 0, 0, 0, 0, 0, 2]]),
    (22, &[[0, 0, 0, 0, 0, 1, 0, 1], [1, 1, 0, 0, 0, 0, 0, 0]]),
    (24, &[[0, 0, 0, 0, 0, 0, 2, 0], [0, 0, 1, 0, 0, 0, 0, 1]]),
];

pub fn orbit_table() -> Check {
    run("orbit decomposition of shells 2..24", || {
        for (two_n, reps) in ORBIT_TABLE {
            let mut got: Vec<[i32; 8]> = shell(two_n)?.iter().map(|(m, _)| *m.fw()).collect();
            let mut want = reps.to_vec();
            got.sort_unstable();
            want.sort_unstable();
            if got != want {
                return Ok(Err(format!("norm {two_n}: got {got:?}, expected {want:?}")));
            }
        }
        Ok(Ok("12 shells, 19 orbits".into()))
    })
}

pub fn shell_sizes() -> Check {
    run("shell sizes 240·σ3(n)", || {
        for n in 1..=12u64 {
            let count: u64 = shell(2 * n)?.iter().map(|(_, c)| c).sum();
            let want = sigma(3, n) * 240;
            if BigInt::from(count) != want {
                return Ok(Err(format!("norm {}: {count} vectors, expected {want}", 2 * n)));
            }
        }
        Ok(Ok("n = 1..12".into()))
    })
}

pub fn coset_minima() -> Check {
    run("maximal coset minima", || {
        let want = [4, 8, 16, 22, 36];
        let got = (2..=6).map(max_coset_min_norm).collect::<Result<Vec<i64>>>()?;
        Ok(ensure(got == want, || format!("got {got:?}")).map(|_| format!("t = 2..6: {got:?}")))
    })
}

pub fn pullback_max() -> Check {
    run("pullback maxima", || {
        let want = [2, 4, 4, 5, 4, 6, 6, 7, 6, 8, 7, 8, 6, 8, 8, 9, 8, 8, 9, 10, 9, 10, 10, 11, 10, 12];
        let got = pullback_max_table()?;
        for ((label, v), w) in got.iter().zip(want) {
            if *v != w {
                return Ok(Err(format!("{label}: got {v}, expected {w}")));
            }
        }
        Ok(Ok(format!("{} orbits", got.len())))
    })
}

pub fn dimension_bounds() -> Check {
    run("dimension bounds to weight 40", || {
        let want = [1, 0, 1, 1, 2, 1, 3, 2, 4, 4, 6, 5, 9, 8, 12, 13, 17, 17, 24];
        let got: Vec<usize> = dimension_bound_table(40)?.iter().map(|r| r.upper_bound).collect();
        if got != want {
            return Ok(Err(format!("got {got:?}")));
        }
        Ok(ensure(dimension_bound_table(42).is_err(), || "weight 42 should be unresolved".into())
            .map(|_| "weights 4..40; weight 42 unresolved".into()))
    })
}

/// Brute-force binning of a + b over both orbits against the orbit-product formula, for every
/// pair of named orbits with |O1|·|O2| ≤ limit.
pub fn inv_mul_oracle(limit: u64) -> Check {
    run("orbit products against brute force", || {
        let reps: Vec<DominantWeight> =
            SIGMA_DICTIONARY.iter().map(|(_, fw)| DominantWeight::from_fw(*fw)).collect::<Result<_>>()?;
        let mut pairs = 0;
        for (i, a) in reps.iter().enumerate() {
            for b in &reps[i..] {
                if orbit_size(a) * orbit_size(b) > limit {
                    continue;
                }
                if let Some(msg) = compare_product(a, b)? {
                    return Ok(Err(msg));
                }
                pairs += 1;
            }
        }
        Ok(Ok(format!("{pairs} pairs")))
    })
}

/// None when orbit_product(a, b) agrees with the double loop.
pub fn compare_product(a: &DominantWeight, b: &DominantWeight) -> Result<Option<String>> {
    let (oa, ob) = (orbit_fw(a)?, orbit_fw(b)?);
    let mut bins: HashMap<[i32; 8], u64> = HashMap::new();
    for x in oa.iter() {
        for y in ob.iter() {
            let mut s = *x;
            for (si, yi) in s.iter_mut().zip(y) {
                *si += yi;
            }
            *bins.entry(reduce_fw(s)).or_default() += 1;
        }
    }
    let mut brute: Vec<(DominantWeight, u64)> = Vec::new();
    for (fw, hits) in bins {
        let m = DominantWeight::from_fw(fw)?;
        let size = orbit_size(&m);
        if hits % size != 0 {
            return Ok(Some(format!("{a}·{b}: {hits} hits on orbit {m} of size {size}")));
        }
        brute.push((m, hits / size));
    }
    brute.sort_unstable();
    let formula = orbit_product(a, b)?;
    Ok((formula.as_slice() != brute.as_slice()).then(|| format!("{a}·{b}: formula {formula:?}, brute force {brute:?}")))
}

fn check_forms(names: &[FormName], order: usize) -> Outcome {
    let mut compared = 0;
    for &n in names {
        let f = build(n, order)?;
        let bad = matches_expected(n, &f)?;
        if let Some((q, want, got)) = bad.first() {
            return Ok(Err(format!("{n} q^{q}: expected {want}, got {got}")));
        }
        compared += info(n).expected.iter().filter(|(q, _)| *q <= order).count();
    }
    Ok(Ok(format!("{} forms, {compared} printed terms", names.len())))
}

pub fn index2_catalog() -> Check {
    use FormName::*;
    run("index 2 catalog", || check_forms(&[Phi(-4, 2), Phi(-2, 2), Phi(0, 2), A(2), B(2), U(12, 2), V(14, 2), W16x2], 2))
}

pub fn index3_catalog() -> Check {
    use FormName::*;
    let names = [
        Phi(-8, 3),
        Phi(-6, 3),
        Phi(-4, 3),
        Phi(-2, 3),
        Phi(0, 3),
        Bm2x3,
        A0x3,
        A(3),
        B(3),
        A2Theta,
        B2Theta,
        ThetaCube,
        U(10, 3),
        U(12, 3),
        V(12, 3),
        U(14, 3),
        U(16, 3),
    ];
    run("index 3 catalog", || check_forms(&names, 1))
}

pub fn index4_catalog() -> Check {
    use FormName::*;
    run("index 4 catalog", || {
        let mut names: Vec<FormName> = (0..=8).map(|k| Phi(-2 * k, 4)).collect();
        names.extend([Psi8x4, A(4), B(4), C8x4]);
        let cusp = [U(10, 4), U(12, 4), Cusp4(8), Cusp4(10), Cusp4(12)];
        names.extend(cusp);
        if let Err(e) = check_forms(&names, 2)? {
            return Ok(Err(e));
        }
        let s16 = sigma16();
        for n in cusp {
            let c = build(n, 2)?.term(2).coeff(&s16);
            if !c.is_zero() {
                return Ok(Err(format!("{n}: q^2 Σ_16' coefficient is {c}")));
            }
        }
        Ok(Ok(format!("{} forms; q^2 Σ_16' cancelled in {} cusp forms", names.len(), cusp.len())))
    })
}

pub fn cascade_systems() -> Check {
    run("cascade nullspaces", || {
        let even = |k: i64| (0..=k).map(|j| 2 * j).collect::<Vec<i64>>();
        let ints = |v: &[i64]| v.iter().map(|&x| int(x)).collect::<Vec<Rational>>();
        let cases: [(u32, i32, Vec<i64>, Vec<Vec<Rational>>); 6] = [
            (3, -8, even(4), vec![ints(&[1, -4, 6, -4, 1])]),
            (4, -16, even(8), vec![ints(&[1, -8, 28, -56, 70, -56, 28, -8, 1])]),
            (3, -10, even(4), vec![]),
            (3, -6, even(3), vec![]),
            (4, -18, even(8), vec![]),
            (4, -14, even(7), vec![]),
        ];
        for (t, w0, norms, want) in cases {
            let s = solve_cascade(t, w0, &norms)?;
            if s.nullspace != want {
                return Ok(Err(format!("({t}, {w0}): nullspace {:?}", s.nullspace)));
            }
        }
        Ok(Ok("6 systems".into()))
    })
}

/// The (t, w0) = (2, −4) nullspace against the q⁰ term of the built weight −4 form.
pub fn index2_cascade_matches_form() -> Check {
    run("index 2 cascade against the built form", || {
        let s = solve_cascade(2, -4, &[0, 2, 4])?;
        let f = build(FormName::Phi(-4, 2), 0)?;
        let d = to_display(f.term(0));
        let get = |l: DisplayLabel| d.iter().find(|(x, _)| *x == l).map(|(_, c)| c.clone()).unwrap_or_default();
        let c = vec![get(DisplayLabel::Constant) / int(240), get(DisplayLabel::Named("Σ_2")), get(DisplayLabel::Named("Σ_4"))];
        let want = crate::rational::primitive(&c);
        Ok(ensure(s.nullspace == vec![want.clone()], || format!("solver {:?}, form {want:?}", s.nullspace))
            .map(|_| format!("nullspace {:?}", want.iter().map(crate::rational::to_string).collect::<Vec<_>>())))
    })
}

pub fn structure_spot_checks() -> Check {
    run("holomorphic dimensions and free-module ranks", || {
        let dims = (1..=4).map(|t| holomorphic_subspace(4, t, 3).map(|b| b.len())).collect::<Result<Vec<_>>>()?;
        if dims != [1, 1, 1, 2] {
            return Ok(Err(format!("weight 4 holomorphic dimensions {dims:?}")));
        }
        let ranks = rank_series(4);
        for t in 1..=4u32 {
            let r = verify_free_module(t, 16, 3)?;
            if r.generators.len() as u64 != ranks[t as usize] {
                return Ok(Err(format!("index {t}: {} generators, rank series says {}", r.generators.len(), ranks[t as usize])));
            }
            if let Some(w) = r.weights.iter().find(|w| !w.ok()) {
                return Ok(Err(format!("index {t} weight {}: rank {} of {} (predicted {})", w.weight, w.rank, w.count, w.predicted)));
            }
        }
        Ok(Ok("weight 4 dims [1, 1, 1, 2]; generators 1/3/5/10 independent through weight 16".into()))
    })
}

/// θ² = (1/1080)E4(3E4φ_{0,2} − E4²φ_{-4,2} − E6φ_{-2,2}) + Δφ_{-4,2}.
pub fn theta_square_relation(order: usize) -> Check {
    use FormName::*;
    run(&format!("θ² relation through q^{order}"), || {
        let th = theta_e8(order)?;
        let lhs = jf_mul(&th, &th)?;
        let (e4, e6, d) = (eisenstein(4, order)?, eisenstein(6, order)?, delta(order));
        let (p4, p2, p0) = (build(Phi(-4, 2), order)?, build(Phi(-2, 2), order)?, build(Phi(0, 2), order)?);
        let inner = jf_scale(&p0, &e4)
            .scale(&int(3))
            .sub(&jf_scale(&p4, &series_mul(&e4, &e4)))?
            .sub(&jf_scale(&p2, &e6))?;
        let rhs = jf_scale(&inner, &e4).scale(&frac(1, 1080)).add(&jf_scale(&p4, &d))?;
        let diff = lhs.sub(&rhs)?;
        Ok(match diff.terms().iter().position(|t| !t.is_zero()) {
            None => Ok(format!("{} q-powers", order + 1)),
            Some(n) => Err(format!("differs at q^{n}")),
        })
    })
}

const WEIGHT0: [FormName; 4] = [FormName::Phi(0, 2), FormName::A0x3, FormName::Phi(0, 3), FormName::Phi(0, 4)];

pub fn weight0_forms() -> Check {
    run("weight 0 identity", || {
        for n in WEIGHT0 {
            let f = build(n, 1)?;
            if !weight0_identity(&f)? {
                return Ok(Err(format!("{n} fails the weight 0 identity")));
            }
            let h = heat(&f)?.at_zero();
            if h.coeffs().iter().any(|c| !c.is_zero()) {
                return Ok(Err(format!("heat of {n} does not vanish at z = 0")));
            }
        }
        Ok(Ok(format!("{} forms", WEIGHT0.len())))
    })
}

/// Quasi-periodicity, coefficient bound, support bound, weight 0 identity and classification
/// for one form.
pub fn form_properties(name: FormName, f: &JacobiQExpansion, samples: usize) -> Result<std::result::Result<(), String>> {
    let meta = info(name);
    match quasi_periodicity_check(f, samples, 0x5eed ^ name.to_string().len() as u64)? {
        Err(e) => return Ok(Err(format!("{name}: {e}"))),
        Ok(k) if k < samples => return Ok(Err(format!("{name}: only {k} of {samples} triples in range"))),
        Ok(_) => {}
    }
    if let Some((n, m)) = coefficient_bound_check(f)? {
        return Ok(Err(format!("{name}: coefficient at q^{n}, {m} breaks the coset bound")));
    }
    let (ok, bad) = t_support_check(f.term(0), f.index as i64);
    if !ok {
        return Ok(Err(format!("{name}: q^0 support exceeds index at {bad:?}")));
    }
    if f.weight == 0 && !weight0_identity(f)? {
        return Ok(Err(format!("{name}: weight 0 identity fails")));
    }
    let c = classify(f)?;
    if c.kind != meta.kind {
        return Ok(Err(format!("{name}: classified {} (witness {:?}), expected {}", c.kind, c.witness, meta.kind)));
    }
    Ok(Ok(()))
}

pub fn property_suites(samples: usize) -> Check {
    run("properties of every catalog form", || {
        let mut count = 0;
        for &n in ALL_FORMS {
            if !info(n).constructible {
                continue;
            }
            let f = build(n, crate::catalog::default_order(n))?;
            if let Err(e) = form_properties(n, &f, samples)? {
                return Ok(Err(e));
            }
            count += 1;
        }
        Ok(Ok(format!("{count} forms, {samples} quasi-periodicity triples each")))
    })
}
