//! The worked transfer: a 13-space decomposition of I0^2 becomes a 7-space
//! decomposition of closure(I0) by taking gcds of square roots.
//!
//! cargo run --example transfer

use sdepthlab::parse::{format_space, parse_ideal};
use sdepthlab::stanley::{DecompositionJson, StanleyDecomposition};
use sdepthlab::transfer::{transfer, Source};
use sdepthlab::Module;

const I0_SQUARED: &str = include_str!("../corpus/i0_squared.json");

fn main() -> sdepthlab::Result<()> {
    let i0 = parse_ideal("x1^2*x2^2, x1^2*x3^2, x2^2*x3^2", None)?;
    let base = Module::Ideal(i0.clone());
    let json: DecompositionJson = serde_json::from_str(I0_SQUARED).expect("bundled file");
    let input = StanleyDecomposition::from_json(Module::Ideal(i0.power(2)?), &json)?;

    let report = transfer(&input, &base, 2)?;
    let source = match report.source {
        Source::ClosedPower => "closure(I0^2)",
        Source::Power => "I0^2",
    };
    println!("input verified as a decomposition of {source}");
    for (space, outcome) in input.spaces.iter().zip(&report.outcomes) {
        let result = match &outcome.root {
            Some(root) => format!("-> {}", sdepthlab::Monomial::new(root.clone())),
            None => "dropped".to_string(),
        };
        println!("  {:<28} {result}", format_space(space));
    }
    println!(
        "kept {}, dropped {}; sdepth {} -> {}",
        report.output.spaces.len(),
        report.dropped(),
        report.input_sdepth().unwrap_or(0),
        report.output_sdepth().unwrap_or(0)
    );
    println!("{}", serde_json::to_string_pretty(&report.output.to_json()).expect("json"));
    Ok(())
}
