//! Exact Gaussian elimination over the rationals.

use crate::rational::Rational;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Matrix = Vec<Vec<Rational>>;

fn height(x: &Rational) -> BigInt {
    (x.numer() * x.denom()).abs()
}

/// Reduced row echelon form in place; returns the pivot columns.
///
/// In each column the pivot is the nonzero entry of smallest |numerator·denominator|,
/// earliest row first, which keeps intermediate sizes small and the result deterministic.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).filter(|&i| !m[i][c].is_zero()).min_by_key(|&i| (height(&m[i][c]), i)) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &Matrix) -> usize {
    let mut a = m.clone();
    rref(&mut a).len()
}

/// Basis of {x : m·x = 0}, one vector per free column (that coordinate 1, other free ones 0).
pub fn nullspace(m: &Matrix, cols: usize) -> Vec<Vec<Rational>> {
    let mut a = m.clone();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -a[r][f].clone();
            }
            v
        })
        .collect()
}

/// Nullspace basis scaled to primitive integer vectors.
pub fn primitive_nullspace(m: &Matrix, cols: usize) -> Vec<Vec<Rational>> {
    nullspace(m, cols).iter().map(|v| crate::rational::primitive(v)).collect()
}

pub fn transpose(m: &Matrix) -> Matrix {
    let cols = m.first().map_or(0, |r| r.len());
    (0..cols).map(|c| m.iter().map(|r| r[c].clone()).collect()).collect()
}
