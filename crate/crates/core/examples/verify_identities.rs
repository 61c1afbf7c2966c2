//! Runs identity checks and prints the reports as JSON lines.
//!
//! Usage: cargo run --example verify_identities -- [suite]
use qfano::verify::{all_passed, check_matrix_inversion, run_suite, Suite, SuiteParams};

fn main() -> qfano::Result<()> {
    let suite: Suite = std::env::args()
        .nth(1)
        .as_deref()
        .unwrap_or("bailey")
        .parse()?;
    let reports = run_suite(suite, &SuiteParams::default())?;
    for r in &reports {
        println!("{}", r.to_json_line());
    }
    println!(
        "{} reports, all passed: {}",
        reports.len(),
        all_passed(&reports)
    );

    // A size that makes (AQ;Q)_k vanish is rejected before any checking.
    if let Err(e) = check_matrix_inversion(5, 8, -2, 0) {
        println!("rejected: {e}");
    }
    Ok(())
}
