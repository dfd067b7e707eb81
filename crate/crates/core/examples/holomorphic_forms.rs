//! Holomorphic forms cut out of the weak module by exact linear algebra.

use e8jacobi::catalog::holomorphic_subspace;

fn main() -> e8jacobi::Result<()> {
    for (k, t) in [(4, 1), (4, 2), (4, 3), (4, 4), (6, 1), (6, 2), (6, 3), (6, 4), (8, 4)] {
        let basis = holomorphic_subspace(k, t, 3)?;
        println!("weight {k}, index {t}: dimension {}", basis.len());
    }
    let b3 = holomorphic_subspace(6, 3, 2)?;
    println!("weight 6, index 3:\n{}", b3[0].display());
    Ok(())
}
