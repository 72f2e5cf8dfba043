//! Associated primes of monomial ideals, their powers and closures, and
//! localization at monomial primes.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::closure::integral_closure;
use crate::error::{Error, Result};
use crate::lattice::BoxIter;
use crate::monomial::{minimalize, Monomial, MonomialIdeal, MonomialPrime};

/// Associated primes of `S/I`.
///
/// `I : c` only depends on `c` capped at the generator bound `g`, so
/// scanning `c <= g` finds every prime of the form `I : c`.
pub fn ass_primes(ideal: &MonomialIdeal) -> Result<BTreeSet<MonomialPrime>> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let g = ideal.max_exponents();
    let mut out = BTreeSet::new();
    for c in BoxIter::new(&g) {
        if ideal.contains_exponents(&c) {
            continue;
        }
        if let Some(p) = ideal.colon(&Monomial::new(c))?.as_prime() {
            out.insert(p);
        }
    }
    Ok(out)
}

/// A monomial `c` with `I : c = P`, if one exists.
pub fn ass_witness(ideal: &MonomialIdeal, prime: &MonomialPrime) -> Result<Option<Monomial>> {
    let g = ideal.max_exponents();
    for c in BoxIter::new(&g) {
        let c = Monomial::new(c);
        if ideal.colon(&c)?.as_prime().as_ref() == Some(prime) {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

/// `I(P)`: the image of `I` under `x_i ↦ 1` for `i ∉ P`, in the ring on the
/// variables of `P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Localization {
    pub ideal: MonomialIdeal,
    /// `index_map[i]` is the original index of new variable `i`.
    pub index_map: Vec<usize>,
}

pub fn localize(ideal: &MonomialIdeal, prime: &MonomialPrime) -> Result<Localization> {
    if prime.is_empty() {
        return Err(Error::EmptyPrime);
    }
    if let Some(&v) = prime.vars().iter().find(|&&v| v >= ideal.n()) {
        return Err(Error::VariableOutOfRange(v + 1));
    }
    let index_map = prime.vars().to_vec();
    let gens = ideal
        .gens()
        .iter()
        .map(|g| Monomial::new(index_map.iter().map(|&i| g.exponents()[i]).collect()));
    Ok(Localization {
        ideal: minimalize(index_map.len(), gens)?,
        index_map,
    })
}

/// `closure(I(P)) == closure(I)(P)`.
pub fn localization_commutes_with_closure(
    ideal: &MonomialIdeal,
    prime: &MonomialPrime,
) -> Result<bool> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let left = integral_closure(&localize(ideal, prime)?.ideal);
    let right = localize(&integral_closure(ideal), prime)?.ideal;
    Ok(left == right)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssChainReport {
    pub horizon: u32,
    /// `powers[k-1] = Ass(S/I^k)`.
    pub powers: Vec<BTreeSet<MonomialPrime>>,
    /// `closures[k-1] = Ass(S/closure(I^k))`.
    pub closures: Vec<BTreeSet<MonomialPrime>>,
    pub powers_stable_at: Option<u32>,
    pub closures_stable_at: Option<u32>,
    /// Whether the closure chain is ascending within the horizon.
    pub closures_ascending: bool,
    pub ratliff: Option<bool>,
}

/// Least `k0 < K` such that the chain is constant on `k0..=K`.
fn stable_index(chain: &[BTreeSet<MonomialPrime>]) -> Option<u32> {
    let last = chain.last()?;
    let mut k0 = chain.len();
    while k0 > 1 && chain[k0 - 2] == *last {
        k0 -= 1;
    }
    (k0 < chain.len()).then_some(k0 as u32)
}

pub fn ass_chain(ideal: &MonomialIdeal, horizon: u32) -> Result<AssChainReport> {
    if horizon == 0 {
        return Err(Error::HorizonTooSmall(1));
    }
    let mut powers = vec![ideal.clone()];
    for _ in 1..horizon {
        let next = powers.last().expect("nonempty").product(ideal)?;
        powers.push(next);
    }
    let rows: Vec<(BTreeSet<MonomialPrime>, BTreeSet<MonomialPrime>)> = powers
        .par_iter()
        .map(|p| Ok((ass_primes(p)?, ass_primes(&integral_closure(p))?)))
        .collect::<Result<_>>()?;
    let (powers, closures): (Vec<_>, Vec<_>) = rows.into_iter().unzip();
    let powers_stable_at = stable_index(&powers);
    let closures_stable_at = stable_index(&closures);
    let closures_ascending = closures.windows(2).all(|w| w[0].is_subset(&w[1]));
    let ratliff = match (powers_stable_at, closures_stable_at) {
        (Some(_), Some(_)) => Some(closures[closures.len() - 1].is_subset(&powers[powers.len() - 1])),
        _ => None,
    };
    Ok(AssChainReport {
        horizon,
        powers,
        closures,
        powers_stable_at,
        closures_stable_at,
        closures_ascending,
        ratliff,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Fails,
    Inconclusive,
}

/// Checks that the stable closure primes are among the stable power primes.
pub fn ratliff_check(ideal: &MonomialIdeal, horizon: u32) -> Result<(Verdict, AssChainReport)> {
    let report = ass_chain(ideal, horizon)?;
    let verdict = match report.ratliff {
        Some(true) => Verdict::Holds,
        Some(false) => Verdict::Fails,
        None => Verdict::Inconclusive,
    };
    Ok((verdict, report))
}

fn primes_json(chain: &[BTreeSet<MonomialPrime>]) -> Vec<Vec<Vec<usize>>> {
    chain
        .iter()
        .map(|set| set.iter().map(MonomialPrime::one_based).collect())
        .collect()
}

impl Serialize for AssChainReport {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Stable {
            powers: Option<u32>,
            closures: Option<u32>,
        }
        let mut st = ser.serialize_struct("AssChainReport", 6)?;
        st.serialize_field("K", &self.horizon)?;
        st.serialize_field("powers", &primes_json(&self.powers))?;
        st.serialize_field("closures", &primes_json(&self.closures))?;
        st.serialize_field(
            "stable_at",
            &Stable {
                powers: self.powers_stable_at,
                closures: self.closures_stable_at,
            },
        )?;
        st.serialize_field("closures_ascending", &self.closures_ascending)?;
        st.serialize_field("ratliff", &self.ratliff)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, rows: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
            .unwrap()
    }

    #[test]
    fn associated_primes() {
        let m = MonomialPrime::maximal(3);
        let i = ideal(3, &[&[2, 0, 0], &[0, 2, 0], &[1, 1, 1]]);
        assert!(ass_primes(&i).unwrap().contains(&m));
        assert_eq!(
            ass_witness(&i, &m).unwrap(),
            Some(Monomial::new(vec![1, 1, 0]))
        );
        let closed = ideal(3, &[&[2, 0, 0], &[0, 2, 0], &[1, 1, 0]]);
        assert!(!ass_primes(&closed).unwrap().contains(&m));
        let x1 = ideal(1, &[&[1]]);
        assert_eq!(
            ass_primes(&x1).unwrap().into_iter().collect::<Vec<_>>(),
            vec![MonomialPrime::new(vec![0])]
        );
        assert_eq!(ass_primes(&MonomialIdeal::zero(2)).unwrap_err(), Error::ZeroIdeal);
        assert_eq!(ass_primes(&MonomialIdeal::unit(2)).unwrap_err(), Error::UnitIdeal);
    }

    #[test]
    fn localization() {
        let i = ideal(3, &[&[2, 0, 0], &[0, 2, 0], &[1, 1, 1]]);
        let l = localize(&i, &MonomialPrime::new(vec![0, 1])).unwrap();
        assert_eq!(l.ideal, ideal(2, &[&[2, 0], &[0, 2], &[1, 1]]));
        assert_eq!(l.index_map, vec![0, 1]);
        assert_eq!(localize(&i, &MonomialPrime::maximal(3)).unwrap().ideal, i);
        let j = ideal(3, &[&[1, 1, 1]]);
        let l = localize(&j, &MonomialPrime::new(vec![2])).unwrap();
        assert_eq!(l.ideal, ideal(1, &[&[1]]));
        assert_eq!(l.index_map, vec![2]);
        assert_eq!(
            localize(&j, &MonomialPrime::new(vec![])).unwrap_err(),
            Error::EmptyPrime
        );
    }

    #[test]
    fn closure_commutes() {
        let i0 = ideal(3, &[&[2, 2, 0], &[2, 0, 2], &[0, 2, 2]]);
        assert!(localization_commutes_with_closure(&i0, &MonomialPrime::new(vec![0, 1])).unwrap());
        assert!(localization_commutes_with_closure(&i0, &MonomialPrime::maximal(3)).unwrap());
    }

    #[test]
    fn principal_chain_is_constant() {
        let x1 = ideal(1, &[&[1]]);
        let r = ass_chain(&x1, 4).unwrap();
        let p = BTreeSet::from([MonomialPrime::new(vec![0])]);
        assert!(r.powers.iter().all(|s| *s == p));
        assert!(r.closures.iter().all(|s| *s == p));
        assert_eq!(r.powers_stable_at, Some(1));
        assert_eq!(r.ratliff, Some(true));
    }

    #[test]
    fn stable_index_rules() {
        let a = BTreeSet::from([MonomialPrime::new(vec![0])]);
        let b = BTreeSet::from([MonomialPrime::new(vec![0, 1])]);
        assert_eq!(stable_index(&[a.clone(), b.clone(), b.clone()]), Some(2));
        assert_eq!(stable_index(&[a.clone(), b.clone()]), None);
        assert_eq!(stable_index(std::slice::from_ref(&a)), None);
    }

    #[test]
    fn report_json_shape() {
        let x1 = ideal(2, &[&[1, 0]]);
        let r = ass_chain(&x1, 2).unwrap();
        let js = serde_json::to_value(&r).unwrap();
        assert_eq!(js["K"], 2);
        assert_eq!(js["powers"][0][0], serde_json::json!([1]));
        assert_eq!(js["stable_at"]["powers"], 1);
        assert_eq!(js["ratliff"], true);
    }
}
