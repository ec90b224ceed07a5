//! One line per acceptance criterion. Checks with a recorded mismatch are
//! reported as failures; the run exits non-zero only when an outcome differs
//! from the record.

use std::process::ExitCode;

use permpat::verify::{run, suite};

fn main() -> ExitCode {
    let mut unexpected = Vec::new();
    for id in suite("all").expect("built-in suite") {
        let report = match run(id) {
            Ok(r) => r,
            Err(e) => {
                println!("FAIL criterion {id:>2}: error: {e}");
                unexpected.push(format!("criterion {id}: {e}"));
                continue;
            }
        };
        println!("{}", report.summary());
        for c in report.checks.iter().filter(|c| !c.passed) {
            println!("    {}: {}", c.label, c.detail);
            if let Some(why) = c.known_mismatch {
                println!("      known: {why}");
            }
        }
        for c in report.unexpected() {
            unexpected.push(format!("criterion {id}: {} ({})", c.label, c.detail));
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: every outcome matches the record");
        ExitCode::SUCCESS
    } else {
        println!(
            "acceptance: unexpected outcomes:\n{}",
            unexpected.join("\n")
        );
        ExitCode::FAILURE
    }
}
