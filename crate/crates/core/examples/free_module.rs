//! Weak forms of fixed index as a free module over modular forms.

use e8jacobi::catalog::{rank_series, verify_free_module};

fn main() -> e8jacobi::Result<()> {
    println!("ranks r(0..14): {:?}", rank_series(14));
    for t in 1..=4 {
        let r = verify_free_module(t, 8, 3)?;
        let gens: Vec<String> = r.generators.iter().map(|(n, w)| format!("{n} ({w})")).collect();
        println!("index {t}: {}", gens.join(", "));
        for w in &r.weights {
            println!("    weight {:>3}: rank {:>2} of {:>2}, predicted {:>2}", w.weight, w.rank, w.count, w.predicted);
        }
    }
    Ok(())
}
