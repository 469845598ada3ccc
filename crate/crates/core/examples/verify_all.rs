//! Runs every registered check and prints one line per report.
//!
//! Pass `--large` to include E7 and E8.

fn main() {
    let large = std::env::args().any(|a| a == "--large");
    let start = std::time::Instant::now();
    let reports = rowmotion::harness::run_all(large);
    for r in &reports {
        println!("{}", r.summary_line());
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    eprintln!(
        "{} reports, {} not passing, {:.2?}",
        reports.len(),
        failed,
        start.elapsed()
    );
    std::process::exit(i32::from(failed > 0));
}
