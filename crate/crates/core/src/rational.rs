//! Exact rationals and their canonical string form.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Canonical "p/q" form, or "p" when the denominator is 1.
pub fn to_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let p: BigInt = p.trim().parse().map_err(|_| Error::Parse(s.to_string()))?;
    let q: BigInt = q.trim().parse().map_err(|_| Error::Parse(s.to_string()))?;
    if q.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s}")));
    }
    Ok(Rational::new(p, q))
}

/// d^e for an integer d ≥ 1 and any integer exponent.
pub fn pow_int(d: i64, e: i32) -> Rational {
    let base = int(d);
    if e >= 0 {
        num_traits::pow(base, e as usize)
    } else {
        num_traits::pow(base, (-e) as usize).recip()
    }
}

/// Smallest positive integer multiple of a rational vector that is integral and primitive,
/// with the first nonzero entry made positive.
pub fn primitive(v: &[Rational]) -> Vec<Rational> {
    use num_integer::Integer;
    let mut l = BigInt::one();
    for x in v {
        l = l.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Rational::from_integer(l.clone())).to_integer()).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return v.to_vec();
    }
    let sign = ints.iter().find(|x| !x.is_zero()).map(|x| x.is_negative()).unwrap_or(false);
    ints.into_iter()
        .map(|x| {
            let y = Rational::from_integer(x / &g);
            if sign {
                -y
            } else {
                y
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_strings() {
        assert_eq!(to_string(&frac(6, -4)), "-3/2");
        assert_eq!(to_string(&int(7)), "7");
        assert_eq!(parse("-3/2").unwrap(), frac(-3, 2));
        assert_eq!(parse("10/5").unwrap(), int(2));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }

    #[test]
    fn primitive_vectors() {
        let v = vec![frac(-1, 2), int(2), frac(-3, 2)];
        assert_eq!(primitive(&v), vec![int(1), int(-4), int(3)]);
    }

    #[test]
    fn negative_powers() {
        assert_eq!(pow_int(2, -3), frac(1, 8));
        assert_eq!(pow_int(3, 0), int(1));
    }
}
