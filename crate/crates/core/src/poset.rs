//! Exact Stanley depth through interval partitions of the characteristic
//! poset.
//!
//! For a module `M` with generator bound `g`, the poset consists of the
//! exponent vectors `a <= g` of monomials of `M`. The Stanley depth of `M` is
//! the largest `s` for which the poset splits into intervals `[a, b]` whose
//! tops all have `rho(b) = |{j : b_j = g_j}| >= s`.
//!
//! The search handles one target `s` at a time, from `n` downwards. The
//! lexicographically least uncovered point must be the bottom of its
//! interval, so each node branches only over admissible tops for that point.
//! Subtrees are cut by a reachability test (every free point needs a monotone
//! free path up to some point with `rho >= s`) and by a table of covered
//! states already shown to be dead ends.

use std::collections::HashSet;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{BoxIter, Grid};
use crate::monomial::Monomial;
use crate::stanley::{Module, StanleyDecomposition, StanleySpace};

/// Number of coordinates where `b` reaches `g`.
pub fn rho(b: &[u32], g: &[u32]) -> usize {
    b.iter().zip(g).filter(|(x, y)| x == y).count()
}

#[derive(Clone, Debug)]
pub struct CharacteristicPoset {
    module: Module,
    grid: Grid,
    member: Vec<bool>,
}

impl CharacteristicPoset {
    pub fn new(module: &Module) -> Self {
        let g = module.bound();
        let grid = Grid::new(&g);
        let member = BoxIter::new(&g).map(|a| module.contains(&a)).collect();
        Self {
            module: module.clone(),
            grid,
            member,
        }
    }

    pub fn module(&self) -> &Module {
        &self.module
    }

    pub fn g(&self) -> &[u32] {
        self.grid.top()
    }

    pub fn len(&self) -> usize {
        self.member.iter().filter(|&&m| m).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, a: &[u32]) -> bool {
        a.len() == self.grid.n()
            && a.iter().zip(self.g()).all(|(x, y)| x <= y)
            && self.member[self.grid.index(a)]
    }

    /// Poset points in lexicographic order.
    pub fn points(&self) -> impl Iterator<Item = Vec<u32>> + '_ {
        (0..self.grid.len())
            .filter(|&i| self.member[i])
            .map(|i| self.grid.point(i))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntervalPartition {
    pub intervals: Vec<(Vec<u32>, Vec<u32>)>,
}

impl IntervalPartition {
    /// `min rho(b, g)` over the intervals.
    pub fn sdepth(&self, g: &[u32]) -> Option<usize> {
        self.intervals.iter().map(|(_, b)| rho(b, g)).min()
    }

    /// Checks that the intervals lie in the poset, are disjoint and cover it.
    pub fn validate(&self, poset: &CharacteristicPoset) -> Result<()> {
        let mut covered = vec![false; poset.grid.len()];
        for (a, b) in &self.intervals {
            if a.len() != poset.grid.n() || b.len() != poset.grid.n() {
                return Err(Error::InvalidPartition("wrong dimension".into()));
            }
            if a.iter().zip(b).any(|(x, y)| x > y) {
                return Err(Error::InvalidPartition(format!("{a:?} is not below {b:?}")));
            }
            for p in BoxIter::between(a, b) {
                if !poset.contains(&p) {
                    return Err(Error::InvalidPartition(format!(
                        "{p:?} in [{a:?}, {b:?}] is not a poset point"
                    )));
                }
                let i = poset.grid.index(&p);
                if covered[i] {
                    return Err(Error::InvalidPartition(format!("{p:?} covered twice")));
                }
                covered[i] = true;
            }
        }
        if let Some(i) = (0..covered.len()).find(|&i| poset.member[i] && !covered[i]) {
            return Err(Error::InvalidPartition(format!(
                "{:?} is not covered",
                poset.grid.point(i)
            )));
        }
        Ok(())
    }
}

/// Step and wall-clock budget for the search. Steps are counted per target.
#[derive(Clone, Copy, Debug, Default)]
pub struct SearchLimits {
    pub max_steps: Option<u64>,
    pub deadline: Option<Instant>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SdepthResult {
    pub value: usize,
    /// False when a limit stopped the search above `value`; `value` is then
    /// only a lower bound.
    pub exact: bool,
    pub witness: IntervalPartition,
    pub steps: u64,
}

/// Exact Stanley depth of a nonzero module with an optimal witness.
pub fn sdepth_exact(module: &Module) -> Result<SdepthResult> {
    sdepth_with_limits(module, SearchLimits::default())
}

pub fn sdepth_with_limits(module: &Module, limits: SearchLimits) -> Result<SdepthResult> {
    if module.is_zero() {
        return Err(Error::ZeroModule);
    }
    let poset = CharacteristicPoset::new(module);
    let n = poset.grid.n();
    let mut exact = true;
    let mut total = 0;
    for target in (1..=n).rev() {
        let mut search = Search::new(&poset, target, limits);
        let outcome = search.run();
        total += search.steps;
        match outcome {
            Outcome::Found => {
                return Ok(SdepthResult {
                    value: target,
                    exact,
                    witness: search.partition(),
                    steps: total,
                })
            }
            Outcome::Dead => {}
            Outcome::Aborted => exact = false,
        }
    }
    let intervals = poset.points().map(|p| (p.clone(), p)).collect();
    Ok(SdepthResult {
        value: 0,
        exact,
        witness: IntervalPartition { intervals },
        steps: total,
    })
}

/// Expands each interval `[a, b]` into the spaces `x^c·K[Z_b]`, where
/// `Z_b = {j : b_j = g_j}` and `c` runs over `[a, b]` with `c_j = a_j` on
/// `Z_b`.
pub fn partition_to_decomposition(
    partition: &IntervalPartition,
    poset: &CharacteristicPoset,
) -> Result<StanleyDecomposition> {
    partition.validate(poset)?;
    let g = poset.g();
    let mut spaces = Vec::new();
    for (a, b) in &partition.intervals {
        let free: Vec<usize> = (0..g.len()).filter(|&j| b[j] == g[j]).collect();
        let upper: Vec<u32> = (0..g.len())
            .map(|j| if b[j] == g[j] { a[j] } else { b[j] })
            .collect();
        for c in BoxIter::between(a, &upper) {
            spaces.push(StanleySpace::new(Monomial::new(c), free.clone()));
        }
    }
    StanleyDecomposition::new(poset.module.clone(), spaces)
}

/// Stanley depth plus a verified decomposition realizing it.
pub fn sdepth_decomposition(module: &Module) -> Result<(SdepthResult, StanleyDecomposition)> {
    let result = sdepth_exact(module)?;
    let poset = CharacteristicPoset::new(module);
    let d = partition_to_decomposition(&result.witness, &poset)?;
    Ok((result, d))
}

enum Outcome {
    Found,
    Dead,
    Aborted,
}

struct Search<'a> {
    grid: &'a Grid,
    member: &'a [bool],
    target: usize,
    limits: SearchLimits,
    /// Coordinates of every grid index, precomputed.
    coords: Vec<Vec<u32>>,
    rho: Vec<usize>,
    /// Poset indices in lexicographic order.
    order: Vec<usize>,
    covered: Vec<bool>,
    chosen: Vec<(usize, usize)>,
    dead: HashSet<Vec<u64>>,
    steps: u64,
    scratch: Vec<bool>,
}

const DEAD_TABLE_LIMIT: usize = 1 << 20;

impl<'a> Search<'a> {
    fn new(poset: &'a CharacteristicPoset, target: usize, limits: SearchLimits) -> Self {
        let grid = &poset.grid;
        let g = grid.top();
        let coords: Vec<Vec<u32>> = (0..grid.len()).map(|i| grid.point(i)).collect();
        let rho = coords.iter().map(|p| rho(p, g)).collect();
        let order: Vec<usize> = (0..grid.len()).filter(|&i| poset.member[i]).collect();
        Self {
            grid,
            member: &poset.member,
            target,
            limits,
            coords,
            rho,
            order,
            covered: vec![false; grid.len()],
            chosen: Vec::new(),
            dead: HashSet::new(),
            steps: 0,
            scratch: vec![false; grid.len()],
        }
    }

    fn run(&mut self) -> Outcome {
        self.dfs(0)
    }

    fn partition(&self) -> IntervalPartition {
        IntervalPartition {
            intervals: self
                .chosen
                .iter()
                .map(|&(a, b)| (self.coords[a].clone(), self.coords[b].clone()))
                .collect(),
        }
    }

    fn free(&self, i: usize) -> bool {
        self.member[i] && !self.covered[i]
    }

    fn key(&self) -> Vec<u64> {
        let mut bits = vec![0u64; self.order.len().div_ceil(64)];
        for (k, &i) in self.order.iter().enumerate() {
            if self.covered[i] {
                bits[k / 64] |= 1 << (k % 64);
            }
        }
        bits
    }

    fn out_of_budget(&self) -> bool {
        if self.limits.max_steps.is_some_and(|m| self.steps > m) {
            return true;
        }
        self.steps.is_multiple_of(256) && self.limits.deadline.is_some_and(|d| Instant::now() >= d)
    }

    fn dfs(&mut self, mut pos: usize) -> Outcome {
        while pos < self.order.len() && self.covered[self.order[pos]] {
            pos += 1;
        }
        if pos == self.order.len() {
            return Outcome::Found;
        }
        self.steps += 1;
        if self.out_of_budget() {
            return Outcome::Aborted;
        }
        let key = self.key();
        if self.dead.contains(&key) || !self.reachable(pos) {
            return Outcome::Dead;
        }
        let bottom = self.order[pos];
        for top in self.tops(bottom) {
            let cells = self.interval(bottom, top);
            for &c in &cells {
                self.covered[c] = true;
            }
            self.chosen.push((bottom, top));
            match self.dfs(pos + 1) {
                Outcome::Found => return Outcome::Found,
                Outcome::Aborted => return Outcome::Aborted,
                Outcome::Dead => {}
            }
            self.chosen.pop();
            for &c in &cells {
                self.covered[c] = false;
            }
        }
        if self.dead.len() < DEAD_TABLE_LIMIT {
            self.dead.insert(key);
        }
        Outcome::Dead
    }

    /// Every free point from `order[pos]` on must reach a point with
    /// `rho >= target` along a monotone path of free points.
    fn reachable(&mut self, pos: usize) -> bool {
        let n = self.grid.n();
        let g = self.grid.top();
        let ok = &mut self.scratch;
        for i in (0..self.grid.len()).rev() {
            let free = self.member[i] && !self.covered[i];
            ok[i] = free
                && (self.rho[i] >= self.target
                    || (0..n).any(|j| {
                        self.coords[i][j] < g[j] && ok[i + self.grid.stride(j)]
                    }));
        }
        self.order[pos..]
            .iter()
            .all(|&i| self.covered[i] || ok[i])
    }

    /// Admissible tops for the interval starting at `bottom`, best first.
    fn tops(&self, bottom: usize) -> Vec<usize> {
        let n = self.grid.n();
        let a = &self.coords[bottom];
        let mut valid: Vec<(usize, usize)> = Vec::new();
        let mut ok: HashSet<usize> = HashSet::new();
        // [a, b] is free iff b is free and so is [a, b - e_j] for each j
        for b in BoxIter::between(a, self.grid.top()) {
            let i = self.grid.index(&b);
            if !self.free(i) {
                continue;
            }
            let inside = (0..n).all(|j| b[j] == a[j] || ok.contains(&(i - self.grid.stride(j))));
            if inside {
                ok.insert(i);
                if self.rho[i] >= self.target {
                    let volume = (0..n).map(|j| (b[j] - a[j] + 1) as usize).product();
                    valid.push((i, volume));
                }
            }
        }
        valid.sort_by(|x, y| {
            self.rho[y.0]
                .cmp(&self.rho[x.0])
                .then(y.1.cmp(&x.1))
                .then(y.0.cmp(&x.0))
        });
        valid.into_iter().map(|(i, _)| i).collect()
    }

    fn interval(&self, bottom: usize, top: usize) -> Vec<usize> {
        BoxIter::between(&self.coords[bottom], &self.coords[top])
            .map(|p| self.grid.index(&p))
            .collect()
    }
}
