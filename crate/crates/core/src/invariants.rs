//! Height, number of generators, reductions, analytic spread and the
//! `sdepth >= n - spread` scanner for integrally closed ideals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::closure::is_integrally_closed;
use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;
use crate::poset::{sdepth_with_limits, SdepthResult, SearchLimits};
use crate::random::{random_ideal, RandomIdealSpec};
use crate::stanley::Module;

fn proper_nonzero(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    Ok(())
}

/// Least number of variables meeting the support of every generator.
pub fn height(ideal: &MonomialIdeal) -> Result<usize> {
    proper_nonzero(ideal)?;
    let vars = ideal.support();
    let supports: Vec<Vec<usize>> = ideal.gens().iter().map(|g| g.support()).collect();
    for size in 1..=vars.len() {
        let mut chosen = Vec::with_capacity(size);
        if cover_search(&vars, 0, size, &mut chosen, &supports) {
            return Ok(size);
        }
    }
    unreachable!("the full support is a cover")
}

fn cover_search(
    vars: &[usize],
    from: usize,
    size: usize,
    chosen: &mut Vec<usize>,
    supports: &[Vec<usize>],
) -> bool {
    if chosen.len() == size {
        return supports
            .iter()
            .all(|s| s.iter().any(|v| chosen.contains(v)));
    }
    for i in from..vars.len() {
        chosen.push(vars[i]);
        if cover_search(vars, i + 1, size, chosen, supports) {
            return true;
        }
        chosen.pop();
    }
    false
}

pub fn mu(ideal: &MonomialIdeal) -> usize {
    ideal.mu()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionResult {
    pub reduction: bool,
    pub t: Option<u32>,
    pub horizon: u32,
}

/// Least `t <= t_max` with `J·I^t = I^(t+1)`.
pub fn is_reduction(j: &MonomialIdeal, i: &MonomialIdeal, t_max: u32) -> Result<ReductionResult> {
    if t_max == 0 {
        return Err(Error::HorizonTooSmall(1));
    }
    if !j.is_subset_of(i) {
        return Err(Error::NotContained);
    }
    let mut power = i.clone();
    for t in 1..=t_max {
        let next = power.product(i)?;
        if j.product(&power)? == next {
            return Ok(ReductionResult {
                reduction: true,
                t: Some(t),
                horizon: t_max,
            });
        }
        power = next;
    }
    Ok(ReductionResult {
        reduction: false,
        t: None,
        horizon: t_max,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpreadMethod {
    HilbertDifferences,
    EquigeneratedRank,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpreadCertificate {
    /// `None` when the spread could not be determined within the horizon.
    pub value: Option<usize>,
    pub method: SpreadMethod,
    pub horizon: usize,
    /// `mu(I^k)` for `k = 1..=horizon`.
    pub mu_sequence: Vec<usize>,
    /// First and last `k` whose values produced the constant differences.
    pub window: Option<(usize, usize)>,
    pub hilbert_value: Option<usize>,
    pub rank_value: Option<usize>,
}

pub const DEFAULT_SPREAD_HORIZON: usize = 8;
const WINDOW: usize = 3;

/// Analytic spread from the growth of `mu(I^k)`, which is eventually a
/// polynomial of degree `spread - 1`. Equigenerated ideals also get the
/// rank of their exponent vectors, which is then the spread.
pub fn analytic_spread(ideal: &MonomialIdeal, horizon: usize) -> Result<SpreadCertificate> {
    proper_nonzero(ideal)?;
    if horizon < 4 {
        return Err(Error::HorizonTooSmall(4));
    }
    let mu_sequence = mu_sequence(ideal, horizon)?;
    let (degree, window) = match eventual_degree(&mu_sequence) {
        Some((d, w)) => (Some(d), Some(w)),
        None => (None, None),
    };
    let ht = height(ideal)?;
    let n = ideal.n();
    let sane = |l: usize| ht <= l && l <= n && l <= ideal.mu();
    let hilbert_value = degree.map(|d| d + 1).filter(|&l| sane(l));
    let rank_value = ideal
        .is_equigenerated()
        .then(|| exponent_rank(ideal))
        .filter(|&l| sane(l));
    let (method, value) = if ideal.is_equigenerated() {
        (SpreadMethod::EquigeneratedRank, rank_value)
    } else {
        (SpreadMethod::HilbertDifferences, hilbert_value)
    };
    Ok(SpreadCertificate {
        value,
        method,
        horizon,
        mu_sequence,
        window: hilbert_value.and(window),
        hilbert_value,
        rank_value,
    })
}

pub fn mu_sequence(ideal: &MonomialIdeal, horizon: usize) -> Result<Vec<usize>> {
    let mut out = Vec::with_capacity(horizon);
    let mut power = ideal.clone();
    for k in 1..=horizon {
        if k > 1 {
            power = power.product(ideal)?;
        }
        out.push(power.mu());
    }
    Ok(out)
}

/// Smallest `d` whose `d`-th differences end in `WINDOW` equal values, with
/// the 1-based range of indices those values depend on.
pub fn eventual_degree(seq: &[usize]) -> Option<(usize, (usize, usize))> {
    let mut diffs: Vec<i64> = seq.iter().map(|&x| x as i64).collect();
    let len = seq.len();
    for d in 0..len {
        if diffs.len() < WINDOW {
            return None;
        }
        let tail = &diffs[diffs.len() - WINDOW..];
        if tail.iter().all(|&x| x == tail[0]) {
            return Some((d, (len - d - WINDOW + 1, len)));
        }
        diffs = diffs.windows(2).map(|w| w[1] - w[0]).collect();
    }
    None
}

/// Rank over Q of the generator exponent vectors.
pub fn exponent_rank(ideal: &MonomialIdeal) -> usize {
    let mut rows: Vec<Vec<BigRational>> = ideal
        .gens()
        .iter()
        .map(|g| {
            g.exponents()
                .iter()
                .map(|&e| BigRational::from_integer(BigInt::from(e)))
                .collect()
        })
        .collect();
    let cols = ideal.n();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        let prow = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] / &pivot;
            for (v, pv) in row.iter_mut().zip(&prow) {
                *v -= &f * pv;
            }
        }
        rank += 1;
    }
    debug_assert!(rows.iter().skip(rank).all(|r| r.iter().all(|v| !v.is_positive() && !v.is_negative())));
    rank
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Holds,
    Counterexample,
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureReport {
    pub n: usize,
    pub ideal: String,
    pub gens: Vec<Vec<u32>>,
    pub spread: SpreadCertificate,
    pub sdepth_residue: SdepthResult,
    pub sdepth_ideal: SdepthResult,
    /// `sdepth(S/I) >= n - spread`.
    pub residue: Status,
    /// `sdepth(I) >= n - spread + 1`.
    pub ideal_bound: Status,
    pub counterexample: bool,
}

fn status(result: &SdepthResult, bound: usize) -> Status {
    if result.value >= bound {
        Status::Holds
    } else if result.exact {
        Status::Counterexample
    } else {
        Status::Inconclusive
    }
}

/// Tests `sdepth(S/I) >= n - spread(I)` and `sdepth(I) >= n - spread(I) + 1`
/// for an integrally closed `I`.
pub fn conjecture_check(
    ideal: &MonomialIdeal,
    horizon: usize,
    limits: SearchLimits,
) -> Result<ConjectureReport> {
    proper_nonzero(ideal)?;
    if !is_integrally_closed(ideal) {
        return Err(Error::NotIntegrallyClosed);
    }
    let spread = analytic_spread(ideal, horizon)?;
    let l = spread.value.ok_or(Error::UndeterminedSpread(horizon))?;
    let n = ideal.n();
    let sdepth_residue = sdepth_with_limits(&Module::Residue(ideal.clone()), limits)?;
    let sdepth_ideal = sdepth_with_limits(&Module::Ideal(ideal.clone()), limits)?;
    let residue = status(&sdepth_residue, n - l);
    let ideal_bound = status(&sdepth_ideal, n - l + 1);
    Ok(ConjectureReport {
        n,
        ideal: ideal.to_string(),
        gens: ideal.gens().iter().map(|g| g.exponents().to_vec()).collect(),
        spread,
        sdepth_residue,
        sdepth_ideal,
        residue,
        ideal_bound,
        counterexample: residue == Status::Counterexample
            || ideal_bound == Status::Counterexample,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub checked: usize,
    pub skipped: usize,
    pub counterexamples: Vec<ConjectureReport>,
    pub inconclusive: usize,
}

/// Runs [`conjecture_check`] on the closures of `count` seeded random ideals.
pub fn conjecture_scan(
    template: &RandomIdealSpec,
    count: u64,
    horizon: usize,
    limits: SearchLimits,
) -> Result<ScanReport> {
    let results: Vec<Option<ConjectureReport>> = (0..count)
        .into_par_iter()
        .map(|i| {
            let mut spec = template.clone();
            spec.seed = template.seed.wrapping_add(i);
            spec.integrally_close_after = true;
            let ideal = random_ideal(&spec)?;
            match conjecture_check(&ideal, horizon, limits) {
                Ok(r) => Ok(Some(r)),
                Err(Error::UndeterminedSpread(_)) | Err(Error::UnitIdeal) => Ok(None),
                Err(e) => Err(e),
            }
        })
        .collect::<Result<_>>()?;
    let skipped = results.iter().filter(|r| r.is_none()).count();
    let done: Vec<ConjectureReport> = results.into_iter().flatten().collect();
    let inconclusive = done
        .iter()
        .filter(|r| r.residue == Status::Inconclusive || r.ideal_bound == Status::Inconclusive)
        .count();
    Ok(ScanReport {
        checked: done.len(),
        skipped,
        inconclusive,
        counterexamples: done.into_iter().filter(|r| r.counterexample).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::edge_ideal;

    fn ideal(n: usize, rows: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
            .unwrap()
    }

    fn example_four() -> MonomialIdeal {
        ideal(4, &[&[2, 0, 0, 0], &[0, 2, 0, 0], &[1, 1, 1, 0], &[1, 1, 0, 1]])
    }

    #[test]
    fn heights() {
        assert_eq!(height(&example_four()).unwrap(), 2);
        assert_eq!(
            height(&ideal(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])).unwrap(),
            3
        );
        assert_eq!(height(&ideal(2, &[&[1, 1]])).unwrap(), 1);
        assert_eq!(height(&MonomialIdeal::unit(2)).unwrap_err(), Error::UnitIdeal);
    }

    #[test]
    fn mu_counts() {
        assert_eq!(mu(&ideal(2, &[&[2, 0], &[0, 2]])), 2);
        let i0 = ideal(3, &[&[2, 2, 0], &[2, 0, 2], &[0, 2, 2]]);
        assert_eq!(mu(&i0.power(2).unwrap()), 6);
        assert_eq!(mu(&MonomialIdeal::zero(3)), 0);
    }

    #[test]
    fn reductions() {
        let i = example_four();
        let j = ideal(4, &[&[2, 0, 0, 0], &[0, 2, 0, 0]]);
        let r = is_reduction(&j, &i, 4).unwrap();
        assert!(r.reduction);
        assert_eq!(r.t, Some(1));
        assert_eq!(is_reduction(&i, &i, 4).unwrap().t, Some(1));
        let small = ideal(4, &[&[2, 0, 0, 0]]);
        assert!(!is_reduction(&small, &i, 4).unwrap().reduction);
        assert_eq!(is_reduction(&i, &j, 4).unwrap_err(), Error::NotContained);
    }

    #[test]
    fn degree_detection() {
        assert_eq!(eventual_degree(&[1, 1, 1, 1]).map(|x| x.0), Some(0));
        assert_eq!(eventual_degree(&[2, 3, 4, 5, 6]).map(|x| x.0), Some(1));
        // C(k+2, 2)
        assert_eq!(
            eventual_degree(&[3, 6, 10, 15, 21, 28, 36, 45]),
            Some((2, (4, 8)))
        );
        assert_eq!(eventual_degree(&[1, 2, 4, 8]), None);
    }

    #[test]
    fn spreads() {
        let c = analytic_spread(&example_four(), 8).unwrap();
        assert_eq!(c.value, Some(2));
        assert_eq!(c.method, SpreadMethod::HilbertDifferences);

        let path = edge_ideal(3, &[(1, 2), (2, 3)]).unwrap();
        let c = analytic_spread(&path, 8).unwrap();
        assert_eq!(c.value, Some(2));
        assert_eq!(c.hilbert_value, c.rank_value);

        let x1 = ideal(1, &[&[1]]);
        assert_eq!(analytic_spread(&x1, 8).unwrap().value, Some(1));

        let two_edges = edge_ideal(4, &[(1, 2), (3, 4)]).unwrap();
        let c = analytic_spread(&two_edges, 8).unwrap();
        assert_eq!(c.value, Some(2));
        assert_eq!(c.method, SpreadMethod::EquigeneratedRank);
        assert_eq!(c.hilbert_value, Some(2));

        assert_eq!(analytic_spread(&x1, 3).unwrap_err(), Error::HorizonTooSmall(4));
    }

    #[test]
    fn rank() {
        assert_eq!(exponent_rank(&ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]])), 3);
        assert_eq!(exponent_rank(&ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0]])), 2);
    }

    #[test]
    fn conjecture_examples() {
        let closed = ideal(3, &[&[2, 0, 0], &[0, 2, 0], &[1, 1, 0]]);
        let r = conjecture_check(&closed, 8, SearchLimits::default()).unwrap();
        assert_eq!(r.spread.value, Some(2));
        assert!(r.sdepth_residue.value >= 1);
        assert_eq!(r.residue, Status::Holds);
        assert!(!r.counterexample);

        let m = ideal(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let r = conjecture_check(&m, 8, SearchLimits::default()).unwrap();
        assert_eq!(r.spread.value, Some(3));
        assert_eq!(r.residue, Status::Holds);

        assert_eq!(
            conjecture_check(&example_four(), 8, SearchLimits::default()).unwrap_err(),
            Error::NotIntegrallyClosed
        );
    }
}
