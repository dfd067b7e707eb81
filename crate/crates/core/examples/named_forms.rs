//! Building named forms from the registry.

use e8jacobi::catalog::{build, info, FormName};

fn main() -> e8jacobi::Result<()> {
    for name in ["phi_-4_2", "B2", "phi_-8_3", "psi_-8_4", "U_10_4"] {
        let n: FormName = name.parse()?;
        let meta = info(n);
        let f = build(n, 1)?;
        println!("{n}: weight {}, index {}, {}", meta.weight, meta.index, meta.kind);
        println!("  recipe: {}", meta.recipe);
        println!("  normalization: {}", meta.normalization);
        for line in f.display().lines() {
            println!("  {line}");
        }
    }
    Ok(())
}
