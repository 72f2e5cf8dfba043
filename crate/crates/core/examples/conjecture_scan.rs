//! Scans integrally closed random ideals for violations of
//! sdepth(S/I) >= n - spread(I) and sdepth(I) >= n - spread(I) + 1.
//!
//! cargo run --release --example conjecture_scan -- [count] [seed]

use sdepthlab::invariants::{conjecture_scan, DEFAULT_SPREAD_HORIZON};
use sdepthlab::poset::SearchLimits;
use sdepthlab::random::RandomIdealSpec;

fn main() -> sdepthlab::Result<()> {
    let mut args = std::env::args().skip(1);
    let count = args.next().and_then(|a| a.parse().ok()).unwrap_or(200);
    let seed = args.next().and_then(|a| a.parse().ok()).unwrap_or(0);
    for n in 2..=3 {
        let template = RandomIdealSpec {
            seed,
            n,
            max_exponent: 3,
            min_gens: 2,
            max_gens: 4,
            equigenerated: false,
            squarefree: false,
            integrally_close_after: true,
        };
        let report = conjecture_scan(&template, count, DEFAULT_SPREAD_HORIZON, SearchLimits::default())?;
        println!(
            "n={n}: checked {}, skipped {}, inconclusive {}, counterexamples {}",
            report.checked,
            report.skipped,
            report.inconclusive,
            report.counterexamples.len()
        );
        for c in &report.counterexamples {
            println!("COUNTEREXAMPLE {}", serde_json::to_string(c).expect("json"));
        }
    }
    Ok(())
}
