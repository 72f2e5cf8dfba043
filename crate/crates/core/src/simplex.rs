//! Exact phase-one simplex for `A x = b, x >= 0` over the rationals.
//!
//! Bland's smallest-index rule is used for both the entering and the leaving
//! variable, which rules out cycling.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Finds a point of `{x >= 0 : A x = b}` or proves it empty.
///
/// `a` is row-major with every row of equal length.
pub fn feasible_point(a: &[Vec<i64>], b: &[i64]) -> Option<Vec<BigRational>> {
    let m = a.len();
    assert_eq!(m, b.len());
    let cols = a.first().map_or(0, Vec::len);
    if m == 0 {
        return Some(vec![BigRational::zero(); cols]);
    }
    let width = cols + m + 1;
    let rhs = width - 1;

    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(m + 1);
    for (row, &bi) in a.iter().zip(b) {
        let sign: i64 = if bi < 0 { -1 } else { 1 };
        let mut r = vec![BigRational::zero(); width];
        for (j, &v) in row.iter().enumerate() {
            r[j] = rat(sign * v);
        }
        r[rhs] = rat(sign * bi);
        t.push(r);
    }
    for (i, r) in t.iter_mut().enumerate() {
        r[cols + i] = BigRational::one();
    }
    // cost row: minimize the sum of artificials, written in reduced form
    let mut cost = vec![BigRational::zero(); width];
    for r in &t {
        for j in 0..cols {
            cost[j] -= &r[j];
        }
        cost[rhs] -= &r[rhs];
    }
    t.push(cost);
    let mut basis: Vec<usize> = (cols..cols + m).collect();

    loop {
        let entering = (0..cols + m).find(|&j| t[m][j].is_negative());
        let Some(e) = entering else { break };
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..m {
            if t[i][e].is_positive() {
                let ratio = &t[i][rhs] / &t[i][e];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        // phase one is bounded below by zero
        let (p, _) = leave.expect("phase-one objective is bounded");
        pivot(&mut t, p, e);
        basis[p] = e;
    }

    if !t[m][rhs].is_zero() {
        return None;
    }
    let mut x = vec![BigRational::zero(); cols];
    for (i, &v) in basis.iter().enumerate() {
        if v < cols {
            x[v] = t[i][rhs].clone();
        }
    }
    Some(x)
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn pivot(t: &mut [Vec<BigRational>], p: usize, e: usize) {
    let inv = t[p][e].recip();
    for v in t[p].iter_mut() {
        *v *= &inv;
    }
    let prow = t[p].clone();
    for (i, row) in t.iter_mut().enumerate() {
        if i == p || row[e].is_zero() {
            continue;
        }
        let f = row[e].clone();
        for (v, pv) in row.iter_mut().zip(&prow) {
            if !pv.is_zero() {
                *v -= &f * pv;
            }
        }
    }
}
