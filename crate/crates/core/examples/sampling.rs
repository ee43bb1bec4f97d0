//! Samples each configuration and prints the extremes of `A(r)`.

use std::time::Instant;

use isocert::curvature::CorollaryType;
use isocert::verify::{sample_configuration, Configuration, SampleSpec};

fn main() {
    let count: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1000);
    let mut configs: Vec<Configuration> = (1..=4).map(|n| Configuration::Corollary(CorollaryType::from_number(n).unwrap())).collect();
    configs.push(Configuration::Pattern221);
    configs.push(Configuration::DegenerateTop);
    for cfg in configs {
        let start = Instant::now();
        let rep = sample_configuration(&SampleSpec::new(cfg, count, 7)).expect("feasible");
        println!(
            "{:<14} accepted={} attempts={} violations={} sigma3<0: {} ({:.2?})",
            rep.configuration,
            rep.accepted,
            rep.attempts,
            rep.violation_count,
            rep.sigma3_negative,
            start.elapsed()
        );
        println!("    assert: {}", rep.assertion);
        for r in 0..5 {
            println!("    A({}) in [{:.4e}, {:.4e}]", r + 1, rep.a_min[r].to_f64(), rep.a_max[r].to_f64());
        }
    }
}
