//! Classification and structural checks on stored coefficients.

use e8jacobi::catalog::{build, FormName};
use e8jacobi::jacobi::{classify, coefficient_bound_check, quasi_periodicity_check, weight0_identity};

fn main() -> e8jacobi::Result<()> {
    for n in [FormName::Phi(-4, 2), FormName::Phi(0, 3), FormName::B(3), FormName::U(12, 3)] {
        let f = build(n, 3)?;
        let c = classify(&f)?;
        let qp = quasi_periodicity_check(&f, 50, 1)?;
        let bound = coefficient_bound_check(&f)?;
        let witness = c.witness.map(|(k, m)| format!("q^{k} {m}")).unwrap_or_else(|| "none".into());
        print!("{n}: {} (witness {witness}), quasi-periodicity {qp:?}, bound violations {}", c.kind, bound.is_some());
        if f.weight == 0 {
            print!(", weight 0 identity {}", weight0_identity(&f)?);
        }
        println!();
    }
    Ok(())
}
