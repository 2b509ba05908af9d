//! Runs the acceptance suite and prints one line per criterion.

use ecalg::suite::{run_all, SuiteOptions};

fn main() {
    let outcomes = run_all(&SuiteOptions::default());
    for o in &outcomes {
        println!("{}", o.summary_line());
    }
    if outcomes.iter().any(|o| !o.passed) {
        std::process::exit(1);
    }
}
