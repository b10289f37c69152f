//! A small benchmark campaign written as CSV to stdout.

use ubrp::bench::{classes, run_bench, BenchConfig, Heuristic};
use ubrp::instances::HeightPolicy;

fn main() -> ubrp::Result<()> {
    let mut config = BenchConfig::new(classes(&[(4, 4), (6, 6)], HeightPolicy::PlusTwo, 1, 5));
    config.heuristics = vec![Heuristic::Greedy, Heuristic::Random(1), Heuristic::Random(2)];
    config.jobs = 4;
    let report = run_bench(&config)?;
    print!("{}", report.to_csv());
    println!();
    print!("{}", report.extremes_csv());
    Ok(())
}
