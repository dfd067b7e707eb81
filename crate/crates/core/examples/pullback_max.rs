//! max (m, v) over the norm-4 shell for each named orbit.

use e8jacobi::catalog::pullback_max_table;

fn main() -> e8jacobi::Result<()> {
    for (label, v) in pullback_max_table()? {
        println!("{label:<8} {v}");
    }
    Ok(())
}
