//! Weyl orbits in the shells of E8 and the shell sizes 240·σ3(n).

use e8jacobi::e8::{orbit_size, shell};
use e8jacobi::invring::sigma_label;
use e8jacobi::qseries::sigma;

fn main() -> e8jacobi::Result<()> {
    for n in 1..=8u64 {
        let reps = shell(2 * n)?;
        let total: u64 = reps.iter().map(|(_, c)| c).sum();
        println!("norm {:>2}: {total} vectors (240·σ3 = {})", 2 * n, sigma(3, n) * 240);
        for (m, count) in reps {
            let label = sigma_label(&m).unwrap_or("-");
            println!("    {label:<7} {m:<12} orbit {count} (formula {})", orbit_size(&m));
        }
    }
    Ok(())
}
