//! The E8 lattice in doubled integer coordinates.

mod cvp;
mod shell;
mod weyl;

pub use cvp::{coset_min_norm, max_coset_min_norm};
pub use shell::{dominant_shell, max_pairing, shell, shell_size};
pub use weyl::{dominant_reduce, orbit, orbit_fw, orbit_size, reflect_fw, reduce_fw};

use crate::error::{Error, Result};
use serde_json::json;
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};

pub const DEFAULT_BUDGET: usize = 2_000_000;
static BUDGET: AtomicUsize = AtomicUsize::new(DEFAULT_BUDGET);

/// Maximum number of lattice points a single shell or orbit enumeration may touch.
pub fn budget() -> usize {
    BUDGET.load(Ordering::Relaxed)
}

pub fn set_budget(n: usize) {
    BUDGET.store(n, Ordering::Relaxed);
}

pub(crate) fn check_budget(needed: usize) -> Result<()> {
    let b = budget();
    if needed > b {
        Err(Error::BudgetExceeded { needed, budget: b })
    } else {
        Ok(())
    }
}

/// |W(E8)| = 2¹⁴·3⁵·5²·7.
pub const WEYL_ORDER: u64 = 696_729_600;

/// Simple roots, doubled.
pub const SIMPLE_ROOTS: [[i32; 8]; 8] = [
    [1, -1, -1, -1, -1, -1, -1, 1],
    [2, 2, 0, 0, 0, 0, 0, 0],
    [-2, 2, 0, 0, 0, 0, 0, 0],
    [0, -2, 2, 0, 0, 0, 0, 0],
    [0, 0, -2, 2, 0, 0, 0, 0],
    [0, 0, 0, -2, 2, 0, 0, 0],
    [0, 0, 0, 0, -2, 2, 0, 0],
    [0, 0, 0, 0, 0, -2, 2, 0],
];

/// Fundamental weights, doubled; dual to the simple roots.
pub const FUNDAMENTAL_WEIGHTS: [[i32; 8]; 8] = [
    [0, 0, 0, 0, 0, 0, 0, 4],
    [1, 1, 1, 1, 1, 1, 1, 5],
    [-1, 1, 1, 1, 1, 1, 1, 7],
    [0, 0, 2, 2, 2, 2, 2, 10],
    [0, 0, 0, 2, 2, 2, 2, 8],
    [0, 0, 0, 0, 2, 2, 2, 6],
    [0, 0, 0, 0, 0, 2, 2, 4],
    [0, 0, 0, 0, 0, 0, 2, 2],
];

/// Neighbours of each node in the Dynkin diagram (0-based).
pub const DYNKIN: [&[usize]; 8] = [&[2], &[3], &[0, 3], &[1, 2, 4], &[3, 5], &[4, 6], &[5, 7], &[6]];

/// Coefficients of the highest root (= w_8) in the simple roots; T(m) = (m, w_8).
pub const HIGHEST_ROOT: [i32; 8] = [2, 3, 4, 6, 5, 4, 3, 2];

/// Gram matrix (w_i, w_j) of the fundamental weights.
pub fn weight_gram() -> [[i64; 8]; 8] {
    let mut g = [[0i64; 8]; 8];
    for i in 0..8 {
        for j in 0..8 {
            g[i][j] = pair_raw(&FUNDAMENTAL_WEIGHTS[i], &FUNDAMENTAL_WEIGHTS[j]);
        }
    }
    g
}

fn pair_raw(a: &[i32; 8], b: &[i32; 8]) -> i64 {
    let s: i64 = a.iter().zip(b).map(|(x, y)| *x as i64 * *y as i64).sum();
    debug_assert_eq!(s % 4, 0);
    s / 4
}

/// A point of E8; `d[i]/2` is the i-th coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct E8Vector([i32; 8]);

impl E8Vector {
    pub const ZERO: E8Vector = E8Vector([0; 8]);

    pub fn from_doubled(d: [i32; 8]) -> Result<Self> {
        let p = d[0].rem_euclid(2);
        if d.iter().any(|x| x.rem_euclid(2) != p) {
            return Err(Error::InvalidArgument(format!("mixed parity coordinates {d:?}")));
        }
        if d.iter().map(|&x| x as i64).sum::<i64>().rem_euclid(4) != 0 {
            return Err(Error::InvalidArgument(format!("coordinate sum of {d:?} is not even")));
        }
        Ok(Self(d))
    }

    pub(crate) fn from_doubled_unchecked(d: [i32; 8]) -> Self {
        Self(d)
    }

    /// v = Σ x_i w_i.
    pub fn from_fw(x: &[i32; 8]) -> Self {
        let mut d = [0i32; 8];
        for (i, xi) in x.iter().enumerate() {
            if *xi != 0 {
                for (dk, wk) in d.iter_mut().zip(&FUNDAMENTAL_WEIGHTS[i]) {
                    *dk += xi * wk;
                }
            }
        }
        Self(d)
    }

    pub fn simple_root(i: usize) -> Self {
        Self(SIMPLE_ROOTS[i])
    }

    pub fn fundamental_weight(i: usize) -> Self {
        Self(FUNDAMENTAL_WEIGHTS[i])
    }

    pub fn doubled(&self) -> &[i32; 8] {
        &self.0
    }

    /// Pairings with the simple roots.
    pub fn fw(&self) -> [i32; 8] {
        let mut x = [0i32; 8];
        for (i, xi) in x.iter_mut().enumerate() {
            *xi = pair_raw(&SIMPLE_ROOTS[i], &self.0) as i32;
        }
        x
    }

    pub fn norm(&self) -> i64 {
        pair_raw(&self.0, &self.0)
    }

    pub fn is_zero(&self) -> bool {
        self.0 == [0; 8]
    }

    /// Some(v/c) when v/c lies in E8.
    pub fn div_exact(&self, c: i32) -> Option<Self> {
        if self.0.iter().any(|x| x % c != 0) {
            return None;
        }
        let mut d = self.0;
        for x in d.iter_mut() {
            *x /= c;
        }
        Self::from_doubled(d).ok()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({"coords": self.0, "doubled": true})
    }
}

pub fn pairing(a: &E8Vector, b: &E8Vector) -> i64 {
    pair_raw(&a.0, &b.0)
}

impl std::ops::Add for E8Vector {
    type Output = E8Vector;
    fn add(self, o: E8Vector) -> E8Vector {
        let mut d = self.0;
        for (x, y) in d.iter_mut().zip(o.0) {
            *x += y;
        }
        E8Vector(d)
    }
}

impl std::ops::Sub for E8Vector {
    type Output = E8Vector;
    fn sub(self, o: E8Vector) -> E8Vector {
        self + (-o)
    }
}

impl std::ops::Neg for E8Vector {
    type Output = E8Vector;
    fn neg(self) -> E8Vector {
        E8Vector(self.0.map(|x| -x))
    }
}

impl std::ops::Mul<E8Vector> for i32 {
    type Output = E8Vector;
    fn mul(self, v: E8Vector) -> E8Vector {
        E8Vector(v.0.map(|x| self * x))
    }
}

impl fmt::Display for E8Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if x % 2 == 0 {
                write!(f, "{}", x / 2)?;
            } else {
                write!(f, "{}/2", x)?;
            }
        }
        write!(f, ")")
    }
}

/// Orbit representative in the closed fundamental chamber. Ordered by doubled coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DominantWeight {
    v: E8Vector,
    fw: [i32; 8],
}

impl DominantWeight {
    pub const ZERO: DominantWeight = DominantWeight { v: E8Vector::ZERO, fw: [0; 8] };

    pub fn from_fw(fw: [i32; 8]) -> Result<Self> {
        if fw.iter().any(|&x| x < 0) {
            return Err(Error::InvalidArgument(format!("{fw:?} is not dominant")));
        }
        Ok(Self { v: E8Vector::from_fw(&fw), fw })
    }

    pub(crate) fn from_fw_unchecked(fw: [i32; 8]) -> Self {
        Self { v: E8Vector::from_fw(&fw), fw }
    }

    /// w_i for i in 1..=8.
    pub fn w(i: usize) -> Self {
        let mut fw = [0; 8];
        fw[i - 1] = 1;
        Self::from_fw_unchecked(fw)
    }

    pub fn vector(&self) -> E8Vector {
        self.v
    }

    pub fn fw(&self) -> &[i32; 8] {
        &self.fw
    }

    pub fn norm(&self) -> i64 {
        self.v.norm()
    }

    pub fn is_zero(&self) -> bool {
        self.fw == [0; 8]
    }

    /// T(m) = (m, w_8).
    pub fn t_statistic(&self) -> i64 {
        self.fw.iter().zip(HIGHEST_ROOT).map(|(x, h)| (*x * h) as i64).sum()
    }

    pub fn scaled(&self, c: i32) -> Self {
        Self { v: c * self.v, fw: self.fw.map(|x| c * x) }
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({"coords": self.v.0, "doubled": true, "fw": self.fw})
    }
}

impl std::ops::Add for DominantWeight {
    type Output = DominantWeight;
    fn add(self, o: DominantWeight) -> DominantWeight {
        let mut fw = self.fw;
        for (x, y) in fw.iter_mut().zip(o.fw) {
            *x += y;
        }
        DominantWeight { v: self.v + o.v, fw }
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, x) in self.fw.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            if *x == 1 {
                write!(f, "w{}", i + 1)?;
            } else {
                write!(f, "{}w{}", x, i + 1)?;
            }
        }
        Ok(())
    }
}
