//! Products of Weyl orbit sums, Σ-notation and restriction to a line.

use e8jacobi::e8::E8Vector;
use e8jacobi::invring::{display_string, eval_zero, inv_mul, parse_display, pullback, sigma_element};

fn main() -> e8jacobi::Result<()> {
    let s2 = sigma_element("Σ_2").expect("named orbit");
    let sq = inv_mul(&s2, &s2)?;
    println!("Σ_2 · Σ_2 = {}", display_string(&sq));
    println!("value at z = 0: {}", eval_zero(&sq));

    let x = parse_display("2Σ_2 − Σ_4 − 240")?;
    let v = E8Vector::from_fw(&[0, 0, 0, 0, 0, 0, 0, 1]);
    let p = pullback(&x, &v)?;
    for (e, c) in &p.coeffs {
        println!("ζ^{e}: {c}");
    }
    Ok(())
}
