//! Integral closure through the Newton polyhedron, closure exponents and
//! normality of small ideals.
//!
//! cargo run --example closure

use sdepthlab::closure::{
    closure_certificate, integral_closure, is_integrally_closed, is_normal_up_to, uniform_exponent,
};
use sdepthlab::parse::parse_ideal;

fn main() -> sdepthlab::Result<()> {
    for text in [
        "x1^2, x2^2, x1*x2*x3",
        "x1^2*x2^2, x1^2*x3^2, x2^2*x3^2",
        "x1^4, x1^3*x2, x1*x2^3, x2^4, x1^2*x2^2*x3",
        "x1^3, x2^5",
    ] {
        let ideal = parse_ideal(text, None)?;
        let closure = integral_closure(&ideal);
        println!("I       = ({ideal})");
        println!("closure = ({closure})");
        for u in closure.gens().iter().filter(|u| !ideal.contains(u)) {
            let cert = closure_certificate(&ideal, u)?;
            println!("  {u}: u^{} lies in I^{}", cert.k, cert.k);
        }
        println!("uniform exponent: {}", uniform_exponent(&ideal)?);
        println!("integrally closed: {}", is_integrally_closed(&ideal));
        let normal = is_normal_up_to(&closure, 3)?;
        match normal.first_failure {
            None => println!("closure normal up to power 3"),
            Some(k) => println!("closure^{k} is not integrally closed"),
        }
        println!();
    }
    Ok(())
}
