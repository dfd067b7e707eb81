//! Closest-vector decoding in tE8: min (v,v) over v ∈ ℓ + tE8.

use e8jacobi::e8::{coset_min_norm, max_coset_min_norm, DominantWeight};

fn main() -> e8jacobi::Result<()> {
    let l = DominantWeight::w(1).scaled(3).vector();
    for t in 1..=4 {
        println!("t = {t}: min over 3w1 + {t}E8 is {}", coset_min_norm(&l, t)?);
    }
    for t in 1..=6 {
        println!("t = {t}: largest coset minimum {}", max_coset_min_norm(t)?);
    }
    Ok(())
}
