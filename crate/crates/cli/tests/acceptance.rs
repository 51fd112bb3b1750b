//! Runs every acceptance criterion at full scope and prints one line each.
//! Exits nonzero if any criterion fails.

use std::process::ExitCode;

use quandle_cli::verify::{criterion_count, run_check, Scope};

fn main() -> ExitCode {
    assert_eq!(criterion_count(), 15);
    let mut failed = Vec::new();
    for id in 1..=criterion_count() as u32 {
        let c = run_check(id, Scope::All).expect("criterion exists");
        println!(
            "{} criterion {:>2}: {} [{:.1} ms, limit {} ms]",
            if c.pass { "PASS" } else { "FAIL" },
            c.id,
            c.claim,
            c.wall_time_ms,
            c.time_limit_ms
        );
        if !c.pass {
            println!("    computed: {}\n    expected: {}", c.computed, c.expected);
            failed.push(c.id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {} criteria passed", criterion_count());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
