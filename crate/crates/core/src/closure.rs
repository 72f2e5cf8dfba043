//! Integral closure of monomial ideals.
//!
//! A monomial `x^a` lies in the closure of `I` exactly when `a` lies in the
//! Newton polyhedron `conv(G(I)) + R^n_{>=0}`. Membership is decided by an
//! exact rational feasibility problem; the closure itself by enumerating the
//! box spanned by the generator exponents.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::BoxIter;
use crate::monomial::{minimalize, Monomial, MonomialIdeal};
use crate::simplex::feasible_point;

/// The Newton polyhedron of a nonzero monomial ideal.
#[derive(Clone, Debug)]
pub struct NewtonPolyhedron {
    n: usize,
    vertices: Vec<Vec<u32>>,
    lower: Vec<u32>,
}

impl NewtonPolyhedron {
    pub fn new(ideal: &MonomialIdeal) -> Result<Self> {
        if ideal.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let n = ideal.n();
        let vertices: Vec<Vec<u32>> = ideal.gens().iter().map(|g| g.exponents().to_vec()).collect();
        let lower = (0..n)
            .map(|j| vertices.iter().map(|v| v[j]).min().unwrap_or(0))
            .collect();
        Ok(Self { n, vertices, lower })
    }

    /// Candidate vertices, i.e. the generator exponents.
    pub fn vertices(&self) -> &[Vec<u32>] {
        &self.vertices
    }

    pub fn contains(&self, a: &[u32]) -> bool {
        debug_assert_eq!(a.len(), self.n);
        if self
            .vertices
            .iter()
            .any(|v| v.iter().zip(a).all(|(x, y)| x <= y))
        {
            return true;
        }
        if a.iter().zip(&self.lower).any(|(x, l)| x < l) {
            return false;
        }
        // sum(l) = 1 and sum(l_i v_i) + s = a with l, s >= 0
        let s = self.vertices.len();
        let mut rows = Vec::with_capacity(self.n + 1);
        let mut top = vec![1i64; s];
        top.extend(std::iter::repeat_n(0, self.n));
        rows.push(top);
        let mut rhs = vec![1i64];
        for j in 0..self.n {
            let mut row: Vec<i64> = self.vertices.iter().map(|v| v[j] as i64).collect();
            row.extend((0..self.n).map(|jj| i64::from(jj == j)));
            rows.push(row);
            rhs.push(a[j] as i64);
        }
        feasible_point(&rows, &rhs).is_some()
    }
}

/// Whether `x^a` belongs to the integral closure of `ideal`.
pub fn np_member(ideal: &MonomialIdeal, a: &Monomial) -> Result<bool> {
    if a.n() != ideal.n() {
        return Err(Error::DimensionMismatch {
            expected: ideal.n(),
            found: a.n(),
        });
    }
    Ok(NewtonPolyhedron::new(ideal)?.contains(a.exponents()))
}

/// Minimal generators of the integral closure.
///
/// Every minimal generator of the closure lies below the componentwise
/// maximum of the generator exponents, so enumerating that box in graded
/// order and skipping multiples of accepted points is complete.
pub fn integral_closure(ideal: &MonomialIdeal) -> MonomialIdeal {
    if ideal.is_zero() || ideal.is_unit() {
        return ideal.clone();
    }
    let np = NewtonPolyhedron::new(ideal).expect("nonzero");
    let bound = ideal.max_exponents();
    let mut points: Vec<Vec<u32>> = BoxIter::new(&bound).collect();
    points.sort_by(|a, b| {
        let da: u64 = a.iter().map(|&x| x as u64).sum();
        let db: u64 = b.iter().map(|&x| x as u64).sum();
        da.cmp(&db).then_with(|| b.cmp(a))
    });
    let mut accepted: Vec<Vec<u32>> = Vec::new();
    for p in points {
        if accepted
            .iter()
            .any(|g| g.iter().zip(&p).all(|(x, y)| x <= y))
        {
            continue;
        }
        if np.contains(&p) {
            accepted.push(p);
        }
    }
    minimalize(ideal.n(), accepted.into_iter().map(Monomial::new)).expect("same context")
}

/// A witness `u^k ∈ I^k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureCertificate {
    pub u: Vec<u32>,
    pub k: u32,
}

impl ClosureCertificate {
    pub fn verify(&self, ideal: &MonomialIdeal) -> Result<bool> {
        let u = Monomial::new(self.u.clone());
        Ok(ideal.power(self.k)?.contains(&u.pow(self.k)?))
    }
}

/// Least `k >= 1` with `u^k ∈ I^k`.
pub fn closure_exponent(ideal: &MonomialIdeal, u: &Monomial) -> Result<u32> {
    closure_exponent_bounded(ideal, u, None)?.ok_or_else(|| Error::NotInClosure(u.to_string()))
}

/// As [`closure_exponent`], giving up with `Ok(None)` once `k` exceeds `max_k`.
pub fn closure_exponent_bounded(
    ideal: &MonomialIdeal,
    u: &Monomial,
    max_k: Option<u32>,
) -> Result<Option<u32>> {
    if !np_member(ideal, u)? {
        return Err(Error::NotInClosure(u.to_string()));
    }
    let mut power = ideal.clone();
    let mut k = 1u32;
    loop {
        if power.contains(&u.pow(k)?) {
            return Ok(Some(k));
        }
        if max_k.is_some_and(|m| k >= m) {
            return Ok(None);
        }
        k += 1;
        power = power.product(ideal)?;
    }
}

pub fn closure_certificate(ideal: &MonomialIdeal, u: &Monomial) -> Result<ClosureCertificate> {
    Ok(ClosureCertificate {
        u: u.exponents().to_vec(),
        k: closure_exponent(ideal, u)?,
    })
}

/// A single `k` with `u ∈ closure(I) ⇔ u^k ∈ I^k` for every monomial `u`:
/// the lcm of the closure exponents of the closure's minimal generators.
pub fn uniform_exponent(ideal: &MonomialIdeal) -> Result<u32> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let closure = integral_closure(ideal);
    let mut k = 1u32;
    for g in closure.gens() {
        if ideal.contains(g) {
            continue;
        }
        k = lcm(k, closure_exponent(ideal, g)?);
    }
    Ok(k)
}

pub fn is_integrally_closed(ideal: &MonomialIdeal) -> bool {
    integral_closure(ideal) == *ideal
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalityReport {
    pub horizon: u32,
    pub normal: bool,
    pub first_failure: Option<u32>,
}

/// Checks that `I^k` is integrally closed for every `k <= horizon`.
pub fn is_normal_up_to(ideal: &MonomialIdeal, horizon: u32) -> Result<NormalityReport> {
    if horizon == 0 {
        return Err(Error::HorizonTooSmall(1));
    }
    let mut power = ideal.clone();
    for k in 1..=horizon {
        if k > 1 {
            power = power.product(ideal)?;
        }
        if !is_integrally_closed(&power) {
            return Ok(NormalityReport {
                horizon,
                normal: false,
                first_failure: Some(k),
            });
        }
    }
    Ok(NormalityReport {
        horizon,
        normal: true,
        first_failure: None,
    })
}

pub(crate) fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm(a: u32, b: u32) -> u32 {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, rows: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
            .unwrap()
    }

    fn i0() -> MonomialIdeal {
        ideal(3, &[&[2, 2, 0], &[2, 0, 2], &[0, 2, 2]])
    }

    #[test]
    fn membership_examples() {
        let i = i0();
        assert!(np_member(&i, &Monomial::new(vec![2, 1, 1])).unwrap());
        assert!(!np_member(&i, &Monomial::new(vec![1, 1, 0])).unwrap());
        for g in i.gens() {
            assert!(np_member(&i, g).unwrap());
        }
        assert_eq!(
            np_member(&MonomialIdeal::zero(2), &Monomial::one(2)).unwrap_err(),
            Error::ZeroIdeal
        );
    }

    #[test]
    fn closure_examples() {
        let i = ideal(3, &[&[2, 0, 0], &[0, 2, 0], &[1, 1, 1]]);
        assert_eq!(
            integral_closure(&i),
            ideal(3, &[&[2, 0, 0], &[0, 2, 0], &[1, 1, 0]])
        );
        assert_eq!(
            integral_closure(&i0()),
            ideal(
                3,
                &[
                    &[2, 2, 0],
                    &[2, 0, 2],
                    &[0, 2, 2],
                    &[2, 1, 1],
                    &[1, 2, 1],
                    &[1, 1, 2]
                ]
            )
        );
        let prime = ideal(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(integral_closure(&prime), prime);
        assert_eq!(
            integral_closure(&ideal(2, &[&[2, 0], &[0, 2]])),
            ideal(2, &[&[2, 0], &[1, 1], &[0, 2]])
        );
        assert!(integral_closure(&MonomialIdeal::zero(2)).is_zero());
        assert!(integral_closure(&MonomialIdeal::unit(2)).is_unit());
    }

    #[test]
    fn exponents() {
        let i = ideal(2, &[&[2, 0], &[0, 2]]);
        assert_eq!(closure_exponent(&i, &Monomial::new(vec![1, 1])).unwrap(), 2);
        assert_eq!(closure_exponent(&i, &Monomial::new(vec![2, 0])).unwrap(), 1);
        assert!(matches!(
            closure_exponent(&i, &Monomial::new(vec![1, 0])),
            Err(Error::NotInClosure(_))
        ));
        assert_eq!(
            closure_exponent(&i0(), &Monomial::new(vec![2, 1, 1])).unwrap(),
            2
        );
        let cert = closure_certificate(&i0(), &Monomial::new(vec![1, 2, 1])).unwrap();
        assert!(cert.verify(&i0()).unwrap());
    }

    #[test]
    fn uniform_exponents() {
        assert_eq!(uniform_exponent(&i0()).unwrap(), 2);
        assert_eq!(uniform_exponent(&ideal(2, &[&[1, 0], &[0, 1]])).unwrap(), 1);
        assert_eq!(uniform_exponent(&ideal(2, &[&[2, 0], &[0, 2]])).unwrap(), 2);
        assert_eq!(
            uniform_exponent(&MonomialIdeal::zero(2)).unwrap_err(),
            Error::ZeroIdeal
        );
    }

    #[test]
    fn normality() {
        let i = ideal(4, &[&[2, 0, 0, 0], &[0, 2, 0, 0], &[1, 1, 1, 0], &[1, 1, 0, 1]]);
        assert!(!is_integrally_closed(&i));
        let j = ideal(3, &[&[4, 0, 0], &[3, 1, 0], &[1, 3, 0], &[0, 4, 0], &[2, 2, 1]]);
        let r = is_normal_up_to(&j, 3).unwrap();
        assert_eq!(r.first_failure, Some(1));
        assert!(np_member(&j, &Monomial::new(vec![2, 2, 0])).unwrap());
        assert!(!j.contains(&Monomial::new(vec![2, 2, 0])));
        let p = ideal(2, &[&[1, 0], &[0, 1]]);
        let r = is_normal_up_to(&p, 5).unwrap();
        assert!(r.normal);
        assert_eq!(r.first_failure, None);
    }
}
