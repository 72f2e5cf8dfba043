//! Height, reductions and the analytic spread certificate.
//!
//! cargo run --example analytic_spread

use sdepthlab::invariants::{analytic_spread, height, is_reduction, DEFAULT_SPREAD_HORIZON};
use sdepthlab::parse::parse_ideal;

fn main() -> sdepthlab::Result<()> {
    let i = parse_ideal("x1^2, x2^2, x1*x2*x3, x1*x2*x4", None)?;
    let j = parse_ideal("x1^2, x2^2", Some(4))?;
    let r = is_reduction(&j, &i, 4)?;
    println!("I = ({i})");
    println!("ht(I) = {}", height(&i)?);
    println!("J = ({j}) reduction of I: {} (t = {:?})", r.reduction, r.t);
    let cert = analytic_spread(&i, DEFAULT_SPREAD_HORIZON)?;
    println!("mu(I^k) = {:?}", cert.mu_sequence);
    println!("spread = {:?} via {:?}, window {:?}\n", cert.value, cert.method, cert.window);

    for text in ["x1*x2, x2*x3", "x1*x2, x3*x4", "x1*x2, x2*x3, x3*x4, x2*x5", "x1^3, x1*x2, x2^2*x3"] {
        let ideal = parse_ideal(text, None)?;
        let cert = analytic_spread(&ideal, DEFAULT_SPREAD_HORIZON)?;
        println!(
            "({ideal}): spread {:?} [{:?}], hilbert {:?}, rank {:?}",
            cert.value, cert.method, cert.hilbert_value, cert.rank_value
        );
    }
    Ok(())
}
