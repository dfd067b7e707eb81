//! The fourteen acceptance criteria, one line each. Exits nonzero if any fails.

use e8jacobi::verify::{self, Check};
use std::process::ExitCode;
use std::time::Instant;

fn criteria() -> Vec<(u32, Box<dyn Fn() -> Vec<Check>>)> {
    vec![
        (1, Box::new(|| vec![verify::rank_table()])),
        (2, Box::new(|| vec![verify::orbit_table()])),
        (3, Box::new(|| vec![verify::shell_sizes()])),
        (4, Box::new(|| vec![verify::coset_minima()])),
        (5, Box::new(|| vec![verify::index2_catalog()])),
        (6, Box::new(|| vec![verify::theta_square_relation(10)])),
        (7, Box::new(|| vec![verify::cascade_systems(), verify::index2_cascade_matches_form()])),
        (8, Box::new(|| vec![verify::index3_catalog()])),
        (9, Box::new(|| vec![verify::index4_catalog()])),
        (10, Box::new(|| vec![verify::structure_spot_checks()])),
        (11, Box::new(|| vec![verify::property_suites(100), verify::weight0_forms()])),
        (12, Box::new(|| vec![verify::inv_mul_oracle(10_000_000)])),
        (13, Box::new(|| vec![verify::pullback_max()])),
        (14, Box::new(|| vec![verify::dimension_bounds()])),
    ]
}

fn main() -> ExitCode {
    let mut failed = 0;
    for (id, run) in criteria() {
        let start = Instant::now();
        let checks = run();
        let ok = checks.iter().all(|c| c.passed);
        let detail: Vec<String> = checks.iter().map(|c| format!("{}: {}", c.name, c.detail)).collect();
        println!(
            "criterion {id:>2} {} ({:.1}s) {}",
            if ok { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64(),
            detail.join("; ")
        );
        if !ok {
            failed += 1;
        }
    }
    println!("{} of 14 criteria passed", 14 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
