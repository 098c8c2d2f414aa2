//! Runs the acceptance matrix, one line per criterion, and fails the test
//! target if any criterion fails or exceeds its runtime budget.

use std::process::ExitCode;

use findual_core::criteria::run_all;

fn main() -> ExitCode {
    let outcomes = run_all();
    for o in &outcomes {
        println!("{}", o.line());
    }
    let failed = outcomes.iter().filter(|o| !o.ok()).count();
    println!(
        "acceptance: {} passed, {failed} failed",
        outcomes.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
