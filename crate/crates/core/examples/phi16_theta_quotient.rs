//! The weight −16 index 4 form from a symmetrised product of Jacobi theta functions.

use e8jacobi::catalog::build_phi16_4;
use e8jacobi::invring::eval_zero;
use e8jacobi::jacobi::heat;
use e8jacobi::rational::int;

fn main() -> e8jacobi::Result<()> {
    let f = build_phi16_4(1)?;
    println!("q^0: {}", e8jacobi::invring::display_string(f.term(0)));
    println!("value at z = 0: {}", eval_zero(f.term(0)));
    let g = heat(&f)?.scale(&int(-3));
    println!("−3·heat, q^0: {}", e8jacobi::invring::display_string(g.term(0)));
    Ok(())
}
