//! Runs every acceptance criterion and prints one line per criterion.

use stanley_cli::checks;

fn main() {
    let mut failed = 0;
    for id in 1..=checks::CRITERIA.len() {
        let report = checks::run_one(id);
        println!("{}", report.line());
        if !report.passed() {
            failed += 1;
        }
    }
    println!("acceptance: {} of {} criteria passed", checks::CRITERIA.len() - failed, checks::CRITERIA.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
