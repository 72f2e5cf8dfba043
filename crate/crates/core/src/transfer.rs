//! Moving a Stanley decomposition of a power (or of the closure of a power)
//! down to the integral closure.
//!
//! Given a decomposition `⊕ t_i·K[Z_i]` of `closure(I^k)/closure(J^k)`, each
//! monomial `u` of `closure(I)/closure(J)` has `u^k` in exactly one space.
//! The monomials landing in space `i` are the `u` with
//!
//! * `k·deg_j(u) = deg_j(t_i)` for `j ∉ Z_i`,
//! * `k·deg_j(u) >= deg_j(t_i)` for `j ∈ Z_i`,
//!
//! so they form the space `u_i·K[Z_i]` rooted at their gcd, which is empty
//! exactly when `k` fails to divide some fixed exponent of `t_i`. The kept
//! spaces decompose `closure(I)/closure(J)` with the same `Z_i`.
//!
//! When `k` is a multiple of the uniform exponent of `I` and `J`, the same
//! argument applies to a decomposition of `I^k/J^k` itself.

use serde::Serialize;

use crate::closure::{integral_closure, lcm, uniform_exponent};
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::stanley::{
    verify_decomposition, DecompositionJson, Module, StanleyDecomposition, StanleySpace,
};

/// Root of `{u : u^k ∈ t·K[Z]}`, or `None` if that set is empty.
pub fn fiber_root(t: &Monomial, free: &[usize], k: u32) -> Option<Monomial> {
    assert!(k >= 1, "fiber_root needs k >= 1");
    let mut root = Vec::with_capacity(t.n());
    for (j, &e) in t.exponents().iter().enumerate() {
        if free.contains(&j) {
            root.push(e.div_ceil(k));
        } else if e % k == 0 {
            root.push(e / k);
        } else {
            return None;
        }
    }
    Some(Monomial::new(root))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpaceOutcome {
    pub t: Vec<u32>,
    /// 1-based.
    #[serde(rename = "Z")]
    pub z: Vec<usize>,
    pub kept: bool,
    pub root: Option<Vec<u32>>,
}

/// Which module the input decomposition was verified against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    ClosedPower,
    Power,
}

#[derive(Clone, Debug)]
pub struct TransferReport {
    /// Exponent applied to the output roots: `k` for [`transfer`], `s·k` for
    /// [`transfer_from_power`].
    pub k: u32,
    pub source: Source,
    pub input: StanleyDecomposition,
    pub output: StanleyDecomposition,
    pub outcomes: Vec<SpaceOutcome>,
}

impl TransferReport {
    pub fn input_sdepth(&self) -> Option<usize> {
        self.input.sdepth()
    }

    pub fn output_sdepth(&self) -> Option<usize> {
        self.output.sdepth()
    }

    pub fn dropped(&self) -> usize {
        self.outcomes.iter().filter(|o| !o.kept).count()
    }

    pub fn to_json(&self) -> TransferJson {
        TransferJson {
            k: self.k,
            source: self.source,
            input: self.input.to_json(),
            output: self.output.to_json(),
            input_sdepth: self.input_sdepth(),
            output_sdepth: self.output_sdepth(),
            spaces: self.outcomes.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TransferJson {
    pub k: u32,
    pub source: Source,
    pub input: DecompositionJson,
    pub output: DecompositionJson,
    pub input_sdepth: Option<usize>,
    pub output_sdepth: Option<usize>,
    pub spaces: Vec<SpaceOutcome>,
}

/// Transfers a decomposition of `closure(I^k)/closure(J^k)` to one of
/// `closure(I)/closure(J)`. `base` names `I` and `J` (ideal, residue or
/// quotient shape). If `d` does not verify against the closed powers but
/// `k` is a multiple of [`required_exponent`], it is tried as a
/// decomposition of `I^k/J^k`.
pub fn transfer(d: &StanleyDecomposition, base: &Module, k: u32) -> Result<TransferReport> {
    if k == 0 {
        return Err(Error::ZeroPower);
    }
    let closed = base.map_ideals(|i| Ok(integral_closure(&i.power(k)?)))?;
    let target = base.map_ideals(|i| Ok(integral_closure(i)))?;
    match apply(d, closed, target.clone(), k, Source::ClosedPower) {
        Err(Error::InvalidDecomposition(v)) => {
            if !k.is_multiple_of(required_exponent(base)?) {
                return Err(Error::InvalidDecomposition(v));
            }
            let plain = base.map_ideals(|i| i.power(k))?;
            apply(d, plain, target, k, Source::Power)
        }
        other => other,
    }
}

/// Transfers a decomposition of `I1^(sk)/I2^(sk)` to one of
/// `closure(I1)/closure(I2)`; `k` must be a multiple of the uniform exponent
/// of every nonzero ideal of `base`.
pub fn transfer_from_power(
    d: &StanleyDecomposition,
    base: &Module,
    s: u32,
    k: u32,
) -> Result<TransferReport> {
    if s == 0 || k == 0 {
        return Err(Error::ZeroPower);
    }
    let required = required_exponent(base)?;
    if !k.is_multiple_of(required) {
        return Err(Error::InvalidUniformExponent { k, required });
    }
    let e = s.checked_mul(k).ok_or(Error::Overflow)?;
    let source = base.map_ideals(|i| i.power(e))?;
    let target = base.map_ideals(|i| Ok(integral_closure(i)))?;
    apply(d, source, target, e, Source::Power)
}

/// lcm of the uniform exponents of the nonzero ideals in `base`.
pub fn required_exponent(base: &Module) -> Result<u32> {
    let mut k = 1;
    for ideal in base.ideals() {
        if !ideal.is_zero() {
            k = lcm(k, uniform_exponent(ideal)?);
        }
    }
    Ok(k)
}

fn apply(
    d: &StanleyDecomposition,
    source: Module,
    target: Module,
    k: u32,
    kind: Source,
) -> Result<TransferReport> {
    let input = StanleyDecomposition::new(source, d.spaces.clone())?;
    let check = verify_decomposition(&input, 1);
    if let Some(v) = check.violation {
        return Err(Error::InvalidDecomposition(v));
    }
    let mut outcomes = Vec::with_capacity(input.spaces.len());
    let mut kept = Vec::new();
    for space in &input.spaces {
        let root = fiber_root(&space.root, &space.vars, k);
        outcomes.push(SpaceOutcome {
            t: space.root.exponents().to_vec(),
            z: space.vars.iter().map(|j| j + 1).collect(),
            kept: root.is_some(),
            root: root.as_ref().map(|r| r.exponents().to_vec()),
        });
        if let Some(r) = root {
            kept.push(StanleySpace::new(r, space.vars.clone()));
        }
    }
    let output = StanleyDecomposition::new(target, kept)?;
    Ok(TransferReport {
        k,
        source: kind,
        input,
        output,
        outcomes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::MonomialIdeal;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn fiber_root_examples() {
        assert_eq!(fiber_root(&m(&[4, 4, 0]), &[0, 1], 2), Some(m(&[2, 2, 0])));
        assert_eq!(fiber_root(&m(&[4, 4, 1]), &[0, 1], 2), None);
        assert_eq!(fiber_root(&m(&[4, 2, 2]), &[0, 1], 2), Some(m(&[2, 1, 1])));
        assert_eq!(fiber_root(&m(&[3, 1, 5]), &[1], 1), Some(m(&[3, 1, 5])));
        // free coordinates round up
        assert_eq!(fiber_root(&m(&[3, 0]), &[0], 2), Some(m(&[2, 0])));
    }

    #[test]
    fn identity_for_k_one() {
        let i = MonomialIdeal::from_exponents(2, &[vec![1, 0], vec![0, 1]]).unwrap();
        let base = Module::Ideal(i);
        let d = StanleyDecomposition::new(
            base.clone(),
            vec![
                StanleySpace::new(m(&[1, 0]), vec![0]),
                StanleySpace::new(m(&[0, 1]), vec![0, 1]),
            ],
        )
        .unwrap();
        let r = transfer(&d, &base, 1).unwrap();
        assert_eq!(r.output.spaces, d.spaces);
        assert_eq!(r.source, Source::ClosedPower);
        assert_eq!(r.dropped(), 0);
        let r = transfer_from_power(&d, &base, 1, 1).unwrap();
        assert_eq!(r.output.spaces, d.spaces);
    }

    #[test]
    fn invalid_input_is_rejected() {
        let i = MonomialIdeal::from_exponents(2, &[vec![1, 0], vec![0, 1]]).unwrap();
        let base = Module::Ideal(i);
        let d = StanleyDecomposition::new(
            base.clone(),
            vec![StanleySpace::new(m(&[1, 0]), vec![0, 1])],
        )
        .unwrap();
        assert!(matches!(
            transfer(&d, &base, 1),
            Err(Error::InvalidDecomposition(_))
        ));
    }

    #[test]
    fn wrong_uniform_exponent_is_rejected() {
        let i = MonomialIdeal::from_exponents(2, &[vec![2, 0], vec![0, 2]]).unwrap();
        let base = Module::Ideal(i.clone());
        let d = StanleyDecomposition::new(base.clone(), vec![]).unwrap();
        assert_eq!(
            transfer_from_power(&d, &base, 1, 3).unwrap_err(),
            Error::InvalidUniformExponent { k: 3, required: 2 }
        );
    }
}
