//! Exact Stanley depth of ideals, residue rings and quotients, with the
//! optimal decomposition the search found.
//!
//! cargo run --release --example stanley_depth

use sdepthlab::closure::integral_closure;
use sdepthlab::parse::{format_space, parse_ideal};
use sdepthlab::poset::{sdepth_decomposition, CharacteristicPoset};
use sdepthlab::stanley::verify_decomposition;
use sdepthlab::Module;

fn main() -> sdepthlab::Result<()> {
    let i0 = parse_ideal("x1^2*x2^2, x1^2*x3^2, x2^2*x3^2", None)?;
    let small = parse_ideal("x1^2, x2^2, x1*x2*x3", None)?;
    let modules = [
        ("I0^2", Module::Ideal(i0.power(2)?)),
        ("closure(I0)", Module::Ideal(integral_closure(&i0))),
        ("S/I0", Module::Residue(i0.clone())),
        ("S/closure(I0)", Module::Residue(integral_closure(&i0))),
        ("S/I", Module::Residue(small.clone())),
        ("S/closure(I)", Module::Residue(integral_closure(&small))),
        ("closure(I0)/I0", Module::quotient(integral_closure(&i0), i0.clone())?),
    ];
    for (name, module) in modules {
        let poset = CharacteristicPoset::new(&module);
        let (result, d) = sdepth_decomposition(&module)?;
        let check = verify_decomposition(&d, 1);
        println!(
            "sdepth({name}) = {}  [{} poset points, {} search steps, verified: {}]",
            result.value,
            poset.len(),
            result.steps,
            check.valid
        );
        for space in &d.spaces {
            println!("    {}", format_space(space));
        }
    }
    Ok(())
}
