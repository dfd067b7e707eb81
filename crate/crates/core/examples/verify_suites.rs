//! Running the verification suites from library code.

use e8jacobi::verify::{run_suite, Suite};

fn main() {
    for suite in [Suite::Systems, Suite::Index2, Suite::Identities, Suite::Bounds] {
        for check in run_suite(suite) {
            println!("{check}");
        }
    }
}
