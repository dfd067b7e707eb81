use crate::error::{Error, Result};
use crate::linalg::{primitive_nullspace, Matrix};
use crate::rational::{frac, int, Rational};

/// q⁰ constraints obtained by pushing a weight-w0 weak form up to weight 0 with the heat
/// operator, one unknown per orbit norm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CascadeSystem {
    pub t: u32,
    pub w0: i32,
    pub norms: Vec<i64>,
    pub matrix: Matrix,
    pub nullspace: Vec<Vec<Rational>>,
}

/// Rows: z = 0 vanishing of the q⁰ term at weights w0, w0+2, …, −2, then the weight-0
/// identity Σ (2t − 3ν_j)·c_j = 0 on the weight-0 row. The row multipliers follow
/// m_{i,j} = ((4 − w_{i−1})/12 − ν_j/(2t))·m_{i−1,j}, m_{1,j} = 1.
pub fn solve_cascade(t: u32, w0: i32, norms: &[i64]) -> Result<CascadeSystem> {
    if t == 0 {
        return Err(Error::InvalidArgument("index must be positive".into()));
    }
    if w0 > -2 || w0 % 2 != 0 {
        return Err(Error::InvalidArgument(format!("start weight must be even and <= -2, got {w0}")));
    }
    if norms.first() != Some(&0) || norms.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument("norms must increase strictly from 0".into()));
    }
    let mut matrix: Matrix = Vec::new();
    let mut row: Vec<Rational> = vec![int(1); norms.len()];
    let mut w = w0;
    loop {
        if w == 0 {
            matrix.push(row.iter().zip(norms).map(|(m, nu)| m * int(2 * t as i64 - 3 * nu)).collect());
            break;
        }
        matrix.push(row.clone());
        row = row
            .iter()
            .zip(norms)
            .map(|(m, nu)| m * (frac(4 - w as i64, 12) - frac(*nu, 2 * t as i64)))
            .collect();
        w += 2;
    }
    let nullspace = primitive_nullspace(&matrix, norms.len());
    Ok(CascadeSystem { t, w0, norms: norms.to_vec(), matrix, nullspace })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn index_two() {
        let s = solve_cascade(2, -4, &[0, 2, 4]).unwrap();
        assert_eq!(s.nullspace, vec![ints(&[1, -2, 1])]);
        assert_eq!(s.matrix.len(), 3);
    }

    #[test]
    fn index_three() {
        let s = solve_cascade(3, -8, &[0, 2, 4, 6, 8]).unwrap();
        assert_eq!(s.nullspace, vec![ints(&[1, -4, 6, -4, 1])]);
        assert!(solve_cascade(3, -10, &[0, 2, 4, 6, 8]).unwrap().nullspace.is_empty());
        assert!(solve_cascade(3, -6, &[0, 2, 4, 6]).unwrap().nullspace.is_empty());
    }

    #[test]
    fn index_four() {
        let norms: Vec<i64> = (0..=8).map(|j| 2 * j).collect();
        let s = solve_cascade(4, -16, &norms).unwrap();
        assert_eq!(s.nullspace, vec![ints(&[1, -8, 28, -56, 70, -56, 28, -8, 1])]);
        assert!(solve_cascade(4, -18, &norms).unwrap().nullspace.is_empty());
        assert!(solve_cascade(4, -14, &norms[..8]).unwrap().nullspace.is_empty());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(solve_cascade(3, 0, &[0, 2]).is_err());
        assert!(solve_cascade(3, -4, &[2, 4]).is_err());
        assert!(solve_cascade(3, -4, &[0, 4, 2]).is_err());
    }
}
