//! Associated primes of powers and of their closures, localization and the
//! comparison of the two stable sets.
//!
//! cargo run --release --example associated_primes

use sdepthlab::ass::{ass_chain, localization_commutes_with_closure, localize, ratliff_check};
use sdepthlab::parse::parse_ideal;
use sdepthlab::MonomialPrime;

fn show(label: &str, chain: &[std::collections::BTreeSet<MonomialPrime>]) {
    for (k, primes) in chain.iter().enumerate() {
        let list: Vec<String> = primes.iter().map(|p| p.to_string()).collect();
        println!("  {label} k={}: {}", k + 1, list.join(" "));
    }
}

fn main() -> sdepthlab::Result<()> {
    for text in [
        "x1^4, x1^3*x2, x1*x2^3, x2^4, x1^2*x2^2*x3",
        "x1^2*x2^2, x1^2*x3^2, x2^2*x3^2",
        "x1*x2, x2*x3, x1*x3",
    ] {
        let ideal = parse_ideal(text, None)?;
        let report = ass_chain(&ideal, 4)?;
        println!("I = ({ideal})");
        show("Ass(S/I^k)        ", &report.powers);
        show("Ass(S/closure(I^k))", &report.closures);
        let (verdict, _) = ratliff_check(&ideal, 4)?;
        println!("  closures ascending: {}, verdict: {verdict:?}", report.closures_ascending);

        let p = MonomialPrime::new(vec![0, 1]);
        let local = localize(&ideal, &p)?;
        println!(
            "  I({p}) = ({}), commutes with closure: {}\n",
            local.ideal,
            localization_commutes_with_closure(&ideal, &p)?
        );
    }
    Ok(())
}
