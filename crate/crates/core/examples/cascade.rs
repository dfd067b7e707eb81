//! q^0 cascade systems: which leading terms can a weak form of low weight have?

use e8jacobi::catalog::solve_cascade;
use e8jacobi::rational::to_string;

fn main() -> e8jacobi::Result<()> {
    let cases: [(u32, i32, usize); 6] = [(2, -4, 2), (3, -8, 4), (3, -10, 4), (4, -16, 8), (4, -18, 8), (4, -14, 7)];
    for (t, w0, k) in cases {
        let norms: Vec<i64> = (0..=k as i64).map(|j| 2 * j).collect();
        let s = solve_cascade(t, w0, &norms)?;
        let ns: Vec<String> =
            s.nullspace.iter().map(|v| format!("({})", v.iter().map(to_string).collect::<Vec<_>>().join(", "))).collect();
        println!("t = {t}, w0 = {w0:>3}: {} rows, nullspace {}", s.matrix.len(), if ns.is_empty() { "trivial".into() } else { ns.join(" ") });
    }
    Ok(())
}
