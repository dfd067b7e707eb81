//! Upper bounds for dimensions of orthogonal modular forms from weak Jacobi forms.

use e8jacobi::catalog::dimension_bound_table;

fn main() -> e8jacobi::Result<()> {
    for row in dimension_bound_table(40)? {
        println!("{:>3} {:>3}  {}", row.weight, row.upper_bound, row.notes);
    }
    if let Err(e) = dimension_bound_table(42) {
        println!("42: {e}");
    }
    Ok(())
}
