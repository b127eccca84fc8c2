//! A reduced sweep over every small topology plus random spaces.
//!
//! `cargo run --release --example theorem_sweep -- [seed]`

use soberlens::suite::{run_suite, SuiteConfig};

fn main() -> soberlens::Result<()> {
    let seed = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(0);
    let config = SuiteConfig {
        seed,
        max_points: 3,
        samples: 100,
        hyperspace_samples: 20,
        lattice_samples: 20,
        ..Default::default()
    };
    let report = run_suite(&config)?;
    for (check, c) in &report.counters {
        println!("{check:<55} {:>5} passed {:>3} failed", c.passed, c.failed);
    }
    for w in &report.witnesses {
        println!("FAIL {} on {}: {}", w.check, w.instance, w.detail);
    }
    println!(
        "{}",
        if report.passed {
            "all checks passed"
        } else {
            "failures found"
        }
    );
    Ok(())
}
