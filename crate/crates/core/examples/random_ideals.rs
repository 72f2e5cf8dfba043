//! Seeded random ideals and forests; forest edge ideals have spread n - p.
//!
//! cargo run --example random_ideals

use sdepthlab::invariants::{analytic_spread, DEFAULT_SPREAD_HORIZON};
use sdepthlab::random::{random_forest_ideal, random_ideal, RandomIdealSpec};

fn main() -> sdepthlab::Result<()> {
    for seed in 0..5 {
        let plain = random_ideal(&RandomIdealSpec::new(seed, 3, 3, 3))?;
        let mut spec = RandomIdealSpec::new(seed, 3, 3, 3);
        spec.integrally_close_after = true;
        let closed = random_ideal(&spec)?;
        let mut spec = RandomIdealSpec::new(seed, 3, 3, 3);
        spec.equigenerated = true;
        let equi = random_ideal(&spec)?;
        println!("seed {seed}: ({plain})  closed ({closed})  equigenerated ({equi})");
    }
    println!();
    for seed in 0..6 {
        let n = 3 + seed as usize % 5;
        let (ideal, p) = random_forest_ideal(seed, n)?;
        let cert = analytic_spread(&ideal, DEFAULT_SPREAD_HORIZON)?;
        println!("forest n={n} p={p}: ({ideal})  spread {:?}, n - p = {}", cert.value, n - p);
    }
    Ok(())
}
