//! Seeded randomized checks of the sampling, pooling and umbra results.
//!
//! cargo run --release --example verify_harness -- [suite] [trials] [k2]

use morphsample::builtin;
use morphsample::sampling::FilterSpec;
use morphsample::verify::{run_suite, SeChoice, TrialConfig};
use morphsample::Sieve;

fn main() -> morphsample::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let suite = args.first().map(String::as_str).unwrap_or("grey");
    let trials = args.get(1).and_then(|t| t.parse().ok()).unwrap_or(50);
    let nonflat = args.get(2).is_some_and(|a| a == "k2");

    let l = if suite == "umbra" { 15 } else { 255 };
    let k = if nonflat { builtin::k2(l) } else { builtin::flat3(l) };
    let mut cfg = TrialConfig::canonical(FilterSpec::new(k, Sieve::new(&[2, 2])?)?).with_suite(&[suite]);
    cfg.trials = trials;
    if nonflat {
        cfg.se_choice = SeChoice::B2;
    }
    if suite == "umbra" {
        (cfg.rows, cfg.cols, cfg.value_max) = (8, 8, 15);
        cfg.se_choice = SeChoice::RandomOpened;
    }
    let report = run_suite(&cfg)?;
    print!("{}", report.render());
    println!("{} trials in {:.2?}", report.trials, report.elapsed);
    if !report.all_pass() {
        std::process::exit(1);
    }
    Ok(())
}
