//! One PASS/FAIL line per acceptance criterion. All comparisons are exact.

use mnqt::verify::{run_criterion, VerifyConfig};

fn main() {
    let config = VerifyConfig::default();
    let mut failed = 0;
    for criterion in 1..=10u8 {
        let c = run_criterion(criterion, &config);
        let status = if c.passed { "PASS" } else { "FAIL" };
        println!(
            "criterion {criterion}: {status} (tolerance: exact equality) {} [{:.1}s]",
            c.identity, c.seconds
        );
        for f in &c.failures {
            println!("    {f}");
        }
        if !c.passed {
            failed += 1;
        }
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
