//! The E8 theta series, the index-raising operator and the heat operator.

use e8jacobi::jacobi::{heat, hecke_t_minus_to, theta_e8};
use e8jacobi::rational::frac;

fn main() -> e8jacobi::Result<()> {
    let th = theta_e8(4)?;
    println!("θ:\n{}", th.truncate(2)?.display());

    let a2 = hecke_t_minus_to(&th, 2, 2)?.scale(&frac(1, 9));
    println!("(1/9) θ|T-(2):\n{}", a2.display());

    let h = heat(&th.truncate(2)?)?;
    println!("heat of θ, weight {}:\n{}", h.weight, h.display());
    Ok(())
}
