//! Level-one modular forms: Eisenstein series, Δ and dimensions.

use e8jacobi::qseries::{delta, dim_modular, eisenstein, series_mul};
use e8jacobi::rational::to_string;

fn show(name: &str, c: &[e8jacobi::Rational]) {
    let v: Vec<String> = c.iter().map(to_string).collect();
    println!("{name:<8} {}", v.join(" "));
}

fn main() -> e8jacobi::Result<()> {
    let n = 6;
    let (e4, e6, d) = (eisenstein(4, n)?, eisenstein(6, n)?, delta(n));
    show("E4", e4.coeffs());
    show("E6", e6.coeffs());
    show("Delta", d.coeffs());
    let e4cube = series_mul(&series_mul(&e4, &e4), &e4);
    let diff = e4cube.sub(&series_mul(&e6, &e6))?;
    show("E4³−E6²", diff.scale(&e8jacobi::rational::frac(1, 1728)).coeffs());
    let dims: Vec<usize> = (0..=30).step_by(2).map(dim_modular).collect();
    println!("dim M_k, k = 0, 2, ..., 30: {dims:?}");
    Ok(())
}
