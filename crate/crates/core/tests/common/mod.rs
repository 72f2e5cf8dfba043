//! Shared strategies and brute-force oracles for the integration tests.
#![allow(dead_code)]

use proptest::prelude::*;
use sdepthlab::{Module, Monomial, MonomialIdeal};

pub fn ideal(n: usize, rows: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::from_exponents(n, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
}

/// Nonzero proper ideals with `n <= max_n` and exponents `<= max_exp`.
pub fn arb_ideal(max_n: usize, max_exp: u32, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(prop::collection::vec(0..=max_exp, n), 1..=max_gens).prop_filter_map(
            "needs a non-constant generator",
            move |rows| {
                let rows: Vec<Vec<u32>> = rows.into_iter().filter(|r| r.iter().any(|&e| e > 0)).collect();
                (!rows.is_empty()).then(|| MonomialIdeal::from_exponents(n, &rows).unwrap())
            },
        )
    })
}

pub fn arb_monomial(n: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, n).prop_map(Monomial::new)
}

pub fn boxed(hi: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for &h in hi {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=h).map(move |e| {
                    let mut q = p.clone();
                    q.push(e);
                    q
                })
            })
            .collect();
    }
    out
}

/// `u` is in the closure iff `u^k` is in `I^k` for some `k <= max_k`.
pub fn closure_by_powers(ideal: &MonomialIdeal, u: &Monomial, max_k: u32) -> bool {
    let mut power = ideal.clone();
    for k in 1..=max_k {
        if k > 1 {
            power = power.product(ideal).unwrap();
        }
        if power.contains(&u.pow(k).unwrap()) {
            return true;
        }
    }
    false
}

/// Plain exact cover: Stanley depth of `module` over its bounding box.
pub fn brute_sdepth(module: &Module) -> usize {
    let g = module.bound();
    let n = g.len();
    let points: Vec<Vec<u32>> = boxed(&g).into_iter().filter(|a| module.contains(a)).collect();
    let rho = |b: &[u32]| (0..n).filter(|&j| b[j] == g[j]).count();
    for s in (1..=n).rev() {
        let mut covered = vec![false; points.len()];
        if cover(&points, &mut covered, s, &rho) {
            return s;
        }
    }
    0
}

fn cover(
    points: &[Vec<u32>],
    covered: &mut Vec<bool>,
    s: usize,
    rho: &dyn Fn(&[u32]) -> usize,
) -> bool {
    // points are in lex order, so the first uncovered one must be a bottom
    let Some(i) = covered.iter().position(|c| !c) else {
        return true;
    };
    let a = points[i].clone();
    for b in points.iter().filter(|b| b.iter().zip(&a).all(|(x, y)| x >= y)) {
        if rho(b) < s {
            continue;
        }
        let members: Option<Vec<usize>> = boxed_between(&a, b)
            .iter()
            .map(|p| points.iter().position(|q| q == p).filter(|&k| !covered[k]))
            .collect();
        let Some(members) = members else { continue };
        for &k in &members {
            covered[k] = true;
        }
        if cover(points, covered, s, rho) {
            return true;
        }
        for &k in &members {
            covered[k] = false;
        }
    }
    false
}

pub fn boxed_between(lo: &[u32], hi: &[u32]) -> Vec<Vec<u32>> {
    let span: Vec<u32> = hi.iter().zip(lo).map(|(h, l)| h - l).collect();
    boxed(&span)
        .into_iter()
        .map(|d| d.iter().zip(lo).map(|(x, l)| x + l).collect())
        .collect()
}

/// Root of `{u : u^k in t*K[Z]}` by enumerating a box and taking the gcd.
pub fn fiber_root_by_gcd(t: &Monomial, free: &[usize], k: u32) -> Option<Monomial> {
    let hi: Vec<u32> = t.exponents().iter().map(|&e| e.div_ceil(k) + 2).collect();
    let mut root: Option<Monomial> = None;
    for u in boxed(&hi) {
        let inside = u.iter().enumerate().all(|(j, &e)| {
            let p = e * k;
            if free.contains(&j) {
                p >= t.exponents()[j]
            } else {
                p == t.exponents()[j]
            }
        });
        if inside {
            let u = Monomial::new(u);
            root = Some(match root {
                None => u,
                Some(r) => r.gcd(&u),
            });
        }
    }
    root
}

/// `(n, ideal, mode, sdepth)` cross-checked with an integer programming
/// formulation of the interval partition.
pub const FROZEN_SDEPTH: &[(usize, &str, &str, usize)] = &[
    (3, "x1^3, x2^2", "ideal", 2),
    (2, "x2", "ideal", 2),
    (4, "x1^2*x4^2", "residue", 3),
    (3, "x1*x2*x3, x2^2*x3^3", "residue", 1),
    (4, "x1^2*x4^2, x1*x2*x4^2, x1*x3", "ideal", 3),
    (3, "x1^3, x3^2", "residue", 1),
    (4, "x1^2*x3, x2*x3", "ideal", 3),
    (3, "x1^3*x3, x1*x2^3*x3^3", "residue", 1),
    (3, "x1^2*x3", "residue", 2),
    (3, "x1^2*x2", "ideal", 3),
    (2, "x1^3*x2, x2^2", "ideal", 1),
    (2, "x1", "ideal", 2),
    (3, "x1^3*x2*x3^2, x3^3", "residue", 1),
    (2, "x2^2", "ideal", 2),
    (2, "x1^2*x2, x2^2", "ideal", 1),
    (3, "x1^2*x2*x3^2, x1*x2^2*x3, x1*x2*x3^3", "residue", 0),
    (2, "x1^2*x2", "residue", 1),
    (4, "x1*x2, x3", "residue", 2),
    (2, "x1^2, x2^3", "residue", 0),
    (4, "x2, x4^2", "ideal", 3),
    (3, "x1^2*x2^3*x3, x1^2*x2*x3^2", "ideal", 2),
    (3, "x2*x3", "ideal", 3),
    (4, "x1^2*x3^2, x4", "ideal", 3),
    (2, "x1^3, x1^2*x2, x2^3", "residue", 0),
    (3, "x1^4*x2^4, x1^4*x3^4, x2^4*x3^4, x1^4*x2^2*x3^2, x1^2*x2^4*x3^2, x1^2*x2^2*x3^4", "ideal", 2),
];
