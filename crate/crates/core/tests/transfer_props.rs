mod common;

use common::{arb_ideal, arb_monomial, fiber_root_by_gcd};
use proptest::prelude::*;
use sdepthlab::closure::{integral_closure, uniform_exponent};
use sdepthlab::poset::sdepth_decomposition;
use sdepthlab::stanley::verify_decomposition;
use sdepthlab::transfer::{fiber_root, transfer, transfer_from_power, Source};
use sdepthlab::{Error, Module};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn fiber_root_matches_gcd(t in arb_monomial(3, 6), mask in 0u8..8, k in 1u32..=4) {
        let free: Vec<usize> = (0..3).filter(|j| mask & (1 << j) != 0).collect();
        prop_assert_eq!(fiber_root(&t, &free, k), fiber_root_by_gcd(&t, &free, k));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn closed_power_transfer_verifies(i in arb_ideal(3, 2, 3), k in 2u32..=3, residue in any::<bool>()) {
        let base = if residue { Module::Residue(i.clone()) } else { Module::Ideal(i.clone()) };
        let source = base.map_ideals(|j| Ok(integral_closure(&j.power(k)?))).unwrap();
        let (_, d) = sdepth_decomposition(&source).unwrap();
        let r = transfer(&d, &base, k).unwrap();
        prop_assert_eq!(r.source, Source::ClosedPower);
        for margin in [1, 2] {
            prop_assert!(verify_decomposition(&r.output, margin).valid);
        }
        prop_assert!(r.output_sdepth() >= r.input_sdepth());
    }

    #[test]
    fn power_transfer_verifies(i in arb_ideal(3, 2, 3), s in 1u32..=2) {
        let k = uniform_exponent(&i).unwrap();
        prop_assume!(s * k <= 4);
        let base = Module::Ideal(i.clone());
        let (_, d) = sdepth_decomposition(&Module::Ideal(i.power(s * k).unwrap())).unwrap();
        let r = transfer_from_power(&d, &base, s, k).unwrap();
        prop_assert!(verify_decomposition(&r.output, 1).valid);
        prop_assert!(r.output_sdepth() >= r.input_sdepth());
    }
}

#[test]
fn non_uniform_exponent_is_rejected() {
    let i = common::ideal(2, &[&[3, 0], &[0, 5]]);
    let base = Module::Ideal(i.clone());
    let (_, d) = sdepth_decomposition(&Module::Ideal(i.power(2).unwrap())).unwrap();
    assert_eq!(
        transfer_from_power(&d, &base, 1, 2).unwrap_err(),
        Error::InvalidUniformExponent { k: 2, required: 3 }
    );
}
