//! Seeded random monomial ideals and forests.
//!
//! Uses ChaCha8 so that a seed reproduces the same ideal on every platform
//! and across `rand` releases.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::closure::integral_closure;
use crate::error::{Error, Result};
use crate::monomial::{edge_ideal, minimalize, Monomial, MonomialIdeal};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RandomIdealSpec {
    pub seed: u64,
    pub n: usize,
    pub max_exponent: u32,
    /// Number of monomials drawn, before minimalization.
    pub min_gens: usize,
    pub max_gens: usize,
    #[serde(default)]
    pub equigenerated: bool,
    #[serde(default)]
    pub squarefree: bool,
    #[serde(default)]
    pub integrally_close_after: bool,
}

impl RandomIdealSpec {
    pub fn new(seed: u64, n: usize, max_exponent: u32, gens: usize) -> Self {
        Self {
            seed,
            n,
            max_exponent,
            min_gens: gens,
            max_gens: gens,
            equigenerated: false,
            squarefree: false,
            integrally_close_after: false,
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidRandomSpec(m.to_string()));
        if self.n == 0 {
            return bad("n must be positive");
        }
        if self.max_exponent == 0 {
            return bad("max exponent must be positive");
        }
        if self.min_gens == 0 || self.min_gens > self.max_gens {
            return bad("generator count range must satisfy 1 <= min <= max");
        }
        if self.equigenerated && self.integrally_close_after {
            // the closure of an equigenerated ideal need not stay equigenerated
            return bad("equigenerated and integrally-close-after cannot be combined");
        }
        Ok(())
    }
}

/// A nonzero proper ideal determined by `spec`.
pub fn random_ideal(spec: &RandomIdealSpec) -> Result<MonomialIdeal> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let top = if spec.squarefree { 1 } else { spec.max_exponent };
    let count = rng.gen_range(spec.min_gens..=spec.max_gens);
    let degree = if spec.equigenerated {
        let max_degree = spec.n as u32 * top;
        Some(rng.gen_range(1..=max_degree))
    } else {
        None
    };
    let mut gens = Vec::with_capacity(count);
    while gens.len() < count {
        let e: Vec<u32> = match degree {
            Some(d) => random_composition(&mut rng, spec.n, d, top),
            None => (0..spec.n).map(|_| rng.gen_range(0..=top)).collect(),
        };
        if e.iter().any(|&x| x > 0) {
            gens.push(Monomial::new(e));
        }
    }
    let ideal = minimalize(spec.n, gens)?;
    Ok(if spec.integrally_close_after {
        integral_closure(&ideal)
    } else {
        ideal
    })
}

/// Uniform-ish vector with entries in `0..=top` summing to `degree`.
fn random_composition(rng: &mut ChaCha8Rng, n: usize, degree: u32, top: u32) -> Vec<u32> {
    let mut e = vec![0u32; n];
    let mut left = degree;
    while left > 0 {
        let open: Vec<usize> = (0..n).filter(|&j| e[j] < top).collect();
        let j = *open.choose(rng).expect("degree <= n * top");
        e[j] += 1;
        left -= 1;
    }
    e
}

/// A random forest on `n` vertices: its edges (1-based, `i < j`) and number
/// of connected components.
pub fn random_forest(seed: u64, n: usize) -> (Vec<(usize, usize)>, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut labels: Vec<usize> = (1..=n).collect();
    labels.shuffle(&mut rng);
    let mut edges = Vec::new();
    for v in 1..n {
        if rng.gen_bool(0.7) {
            let u = rng.gen_range(0..v);
            let (a, b) = (labels[u], labels[v]);
            edges.push((a.min(b), a.max(b)));
        }
    }
    if edges.is_empty() && n >= 2 {
        let (a, b) = (labels[0], labels[1]);
        edges.push((a.min(b), a.max(b)));
    }
    edges.sort_unstable();
    let components = n - edges.len();
    (edges, components)
}

pub fn random_forest_ideal(seed: u64, n: usize) -> Result<(MonomialIdeal, usize)> {
    let (edges, p) = random_forest(seed, n);
    Ok((edge_ideal(n, &edges)?, p))
}
