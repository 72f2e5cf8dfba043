//! Monomials, monomial ideals and monomial primes.
//!
//! Everything here is combinatorics on exponent vectors. An ideal always
//! stores its minimal generators, sorted in descending lexicographic order,
//! so structural equality of two [`MonomialIdeal`]s is ideal equality.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

/// Number of variables and their display names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariableContext {
    names: Vec<String>,
}

impl VariableContext {
    /// `n` variables named `x1..xn`.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyContext);
        }
        Ok(Self {
            names: (1..=n).map(|i| format!("x{i}")).collect(),
        })
    }

    pub fn with_names(names: Vec<String>) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::EmptyContext);
        }
        let mut seen = HashSet::new();
        for name in &names {
            if !seen.insert(name.as_str()) {
                return Err(Error::DuplicateName(name.clone()));
            }
        }
        Ok(Self { names })
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let factors: Vec<String> = m
            .exponents()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    self.names[i].clone()
                } else {
                    format!("{}^{}", self.names[i], e)
                }
            })
            .collect();
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        }
    }

    pub fn format_ideal(&self, ideal: &MonomialIdeal) -> String {
        if ideal.is_zero() {
            return "0".to_string();
        }
        ideal
            .gens()
            .iter()
            .map(|g| self.format_monomial(g))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// Exponent vector of a monomial `x1^a1 * ... * xn^an`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(i: usize, n: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn into_exponents(self) -> Vec<u32> {
        self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// `self | other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.n(), other.n());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        check_dim(self.n(), other)?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(Monomial)
    }

    pub fn pow(&self, k: u32) -> Result<Monomial> {
        self.0
            .iter()
            .map(|a| a.checked_mul(k).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(Monomial)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// `self / gcd(self, other)`.
    pub fn quotient_by_gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        )
    }

    /// Indices of variables with a positive exponent.
    pub fn support(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.0[i] > 0).collect()
    }

    pub fn squarefree_part(&self) -> Monomial {
        Monomial(self.0.iter().map(|&e| e.min(1)).collect())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match VariableContext::new(self.n()) {
            Ok(ctx) => f.write_str(&ctx.format_monomial(self)),
            Err(_) => f.write_str("1"),
        }
    }
}

fn check_dim(n: usize, m: &Monomial) -> Result<()> {
    if m.n() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: m.n(),
        });
    }
    Ok(())
}

/// A monomial ideal given by its minimal generators.
///
/// The empty generator list is the zero ideal, `[1]` is the unit ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

/// Divisibility-minimal subset of `gens`, as an ideal in `n` variables.
pub fn minimalize(n: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<MonomialIdeal> {
    let mut all: Vec<Monomial> = Vec::new();
    for g in gens {
        check_dim(n, &g)?;
        all.push(g);
    }
    all.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    all.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(all.len());
    for g in all {
        // kept entries never have larger degree, so only they can divide g
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort_by(|a, b| b.cmp(a));
    Ok(MonomialIdeal { n, gens: kept })
}

impl MonomialIdeal {
    pub fn new(n: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        minimalize(n, gens)
    }

    /// Build from raw exponent rows.
    pub fn from_exponents(n: usize, rows: &[Vec<u32>]) -> Result<Self> {
        minimalize(n, rows.iter().cloned().map(Monomial::new))
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: vec![Monomial::one(n)],
        }
    }

    /// The prime generated by the given variables.
    pub fn from_prime(n: usize, prime: &MonomialPrime) -> Self {
        minimalize(n, prime.vars().iter().map(|&i| Monomial::var(i, n)))
            .expect("variables lie in context")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn mu(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn contains(&self, u: &Monomial) -> bool {
        debug_assert_eq!(u.n(), self.n);
        self.gens.iter().any(|g| g.divides(u))
    }

    pub fn contains_exponents(&self, a: &[u32]) -> bool {
        self.gens
            .iter()
            .any(|g| g.exponents().iter().zip(a).all(|(x, y)| x <= y))
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> bool {
        self.n == other.n && self.gens.iter().all(|g| other.contains(g))
    }

    /// Componentwise maximum of the generator exponents.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut g = vec![0; self.n];
        for m in &self.gens {
            for (x, &e) in g.iter_mut().zip(m.exponents()) {
                *x = (*x).max(e);
            }
        }
        g
    }

    /// Whether every minimal generator has the same total degree.
    pub fn is_equigenerated(&self) -> bool {
        match self.gens.first() {
            Some(first) => self.gens.iter().all(|g| g.degree() == first.degree()),
            None => true,
        }
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if other.n != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let mut prods = HashSet::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                prods.insert(a.mul(b)?);
            }
        }
        minimalize(self.n, prods)
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        minimalize(self.n, self.gens.iter().chain(&other.gens).cloned())
    }

    /// `self^k`, `k >= 1`.
    pub fn power(&self, k: u32) -> Result<MonomialIdeal> {
        if k == 0 {
            return Err(Error::ZeroPower);
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `self : c`.
    pub fn colon(&self, c: &Monomial) -> Result<MonomialIdeal> {
        check_dim(self.n, c)?;
        minimalize(self.n, self.gens.iter().map(|g| g.quotient_by_gcd(c)))
    }

    pub fn radical(&self) -> MonomialIdeal {
        minimalize(self.n, self.gens.iter().map(Monomial::squarefree_part))
            .expect("same context")
    }

    /// Whether every generator is a single variable; returns that prime.
    pub fn as_prime(&self) -> Option<MonomialPrime> {
        let mut vars = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            if g.degree() != 1 {
                return None;
            }
            vars.push(g.support()[0]);
        }
        if vars.is_empty() {
            return None;
        }
        Some(MonomialPrime::new(vars))
    }

    /// Indices of variables dividing at least one generator.
    pub fn support(&self) -> Vec<usize> {
        let g = self.max_exponents();
        (0..self.n).filter(|&i| g[i] > 0).collect()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        f.write_str(&parts.join(", "))
    }
}

/// Edge ideal of a graph on vertices `1..=n`.
pub fn edge_ideal(n: usize, edges: &[(usize, usize)]) -> Result<MonomialIdeal> {
    let mut gens = Vec::with_capacity(edges.len());
    for &(i, j) in edges {
        if i == 0 || j == 0 || i >= j || j > n {
            return Err(Error::InvalidEdge(i, j, n));
        }
        let mut e = vec![0; n];
        e[i - 1] = 1;
        e[j - 1] = 1;
        gens.push(Monomial::new(e));
    }
    minimalize(n, gens)
}

/// A monomial prime `(x_i : i in vars)`, stored as sorted 0-based indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialPrime(Vec<usize>);

impl MonomialPrime {
    pub fn new(mut vars: Vec<usize>) -> Self {
        vars.sort_unstable();
        vars.dedup();
        MonomialPrime(vars)
    }

    /// From 1-based indices, checking the range.
    pub fn from_one_based(vars: &[usize], n: usize) -> Result<Self> {
        let mut out = Vec::with_capacity(vars.len());
        for &v in vars {
            if v == 0 || v > n {
                return Err(Error::VariableOutOfRange(v));
            }
            out.push(v - 1);
        }
        Ok(Self::new(out))
    }

    pub fn maximal(n: usize) -> Self {
        MonomialPrime((0..n).collect())
    }

    pub fn vars(&self) -> &[usize] {
        &self.0
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|i| i + 1).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }
}

impl fmt::Display for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| format!("x{}", i + 1)).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, rows: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
            .unwrap()
    }

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn minimalize_drops_multiples() {
        let i = ideal(2, &[&[2, 0], &[3, 0], &[0, 1]]);
        assert_eq!(i, ideal(2, &[&[2, 0], &[0, 1]]));
        assert_eq!(i.mu(), 2);
    }

    #[test]
    fn minimalize_square_list() {
        let rows: Vec<Vec<u32>> = vec![
            vec![8, 0, 0],
            vec![7, 1, 0],
            vec![6, 2, 0],
            vec![5, 3, 0],
            vec![4, 4, 0],
            vec![3, 5, 0],
            vec![2, 6, 0],
            vec![1, 7, 0],
            vec![0, 8, 0],
            vec![6, 4, 1],
        ];
        let i = MonomialIdeal::from_exponents(3, &rows).unwrap();
        assert_eq!(i.mu(), 9);
        assert!(!i.gens().contains(&mono(&[6, 4, 1])));
    }

    #[test]
    fn minimalize_empty_and_mismatch() {
        assert!(minimalize(3, vec![]).unwrap().is_zero());
        let err = minimalize(3, vec![mono(&[1, 0])]).unwrap_err();
        assert_eq!(
            err,
            Error::DimensionMismatch {
                expected: 3,
                found: 2
            }
        );
    }

    #[test]
    fn membership() {
        let i = ideal(3, &[&[2, 0, 0], &[0, 2, 0]]);
        assert!(i.contains(&mono(&[2, 1, 0])));
        assert!(!i.contains(&mono(&[1, 1, 0])));
        let j = ideal(3, &[&[2, 0, 0], &[0, 2, 0], &[1, 1, 1]]);
        assert!(!j.contains(&mono(&[1, 1, 0])));
    }

    #[test]
    fn powers() {
        let i = ideal(3, &[&[4, 0, 0], &[3, 1, 0], &[1, 3, 0], &[0, 4, 0], &[2, 2, 1]]);
        let sq = i.power(2).unwrap();
        let expected = ideal(
            3,
            &[
                &[8, 0, 0],
                &[7, 1, 0],
                &[5, 3, 0],
                &[4, 4, 0],
                &[6, 2, 0],
                &[3, 5, 0],
                &[2, 6, 0],
                &[1, 7, 0],
                &[0, 8, 0],
            ],
        );
        assert_eq!(sq, expected);
        assert_eq!(i.power(1).unwrap(), i);
        assert_eq!(i.power(0).unwrap_err(), Error::ZeroPower);

        let i0 = ideal(3, &[&[2, 2, 0], &[2, 0, 2], &[0, 2, 2]]);
        let expected = ideal(
            3,
            &[
                &[4, 4, 0],
                &[4, 0, 4],
                &[0, 4, 4],
                &[4, 2, 2],
                &[2, 4, 2],
                &[2, 2, 4],
            ],
        );
        assert_eq!(i0.power(2).unwrap(), expected);
    }

    #[test]
    fn colon_examples() {
        let i = ideal(3, &[&[2, 0, 0], &[0, 2, 0], &[1, 1, 1]]);
        let q = i.colon(&mono(&[1, 1, 0])).unwrap();
        assert_eq!(q.as_prime(), Some(MonomialPrime::maximal(3)));
        let x1 = ideal(1, &[&[1]]);
        assert_eq!(x1.colon(&mono(&[0])).unwrap(), x1);
        let x1sq = ideal(1, &[&[2]]);
        assert!(x1sq.colon(&mono(&[3])).unwrap().is_unit());
    }

    #[test]
    fn radical_examples() {
        let i = ideal(3, &[&[2, 0, 0], &[0, 2, 0], &[1, 1, 1]]);
        assert_eq!(i.radical(), ideal(3, &[&[1, 0, 0], &[0, 1, 0]]));
        let sf = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        assert_eq!(sf.radical(), sf);
        assert_eq!(ideal(2, &[&[4, 4]]).radical(), ideal(2, &[&[1, 1]]));
    }

    #[test]
    fn edge_ideals() {
        assert_eq!(
            edge_ideal(3, &[(1, 2), (2, 3)]).unwrap(),
            ideal(3, &[&[1, 1, 0], &[0, 1, 1]])
        );
        assert_eq!(edge_ideal(2, &[(1, 2)]).unwrap(), ideal(2, &[&[1, 1]]));
        assert!(edge_ideal(4, &[]).unwrap().is_zero());
        assert!(edge_ideal(3, &[(2, 2)]).is_err());
        assert!(edge_ideal(3, &[(1, 4)]).is_err());
    }

    #[test]
    fn zero_and_unit() {
        let z = MonomialIdeal::zero(2);
        let u = MonomialIdeal::unit(2);
        assert!(!z.contains(&mono(&[0, 0])));
        assert!(u.contains(&mono(&[0, 0])));
        assert!(z.power(3).unwrap().is_zero());
        assert!(u.power(3).unwrap().is_unit());
        assert!(z.is_subset_of(&u));
        assert!(u.radical().is_unit());
    }

    #[test]
    fn overflow_is_reported() {
        let i = ideal(1, &[&[u32::MAX / 2 + 1]]);
        assert_eq!(i.power(2).unwrap_err(), Error::Overflow);
    }

    #[test]
    fn display() {
        let i = ideal(3, &[&[1, 1, 0], &[2, 0, 0], &[0, 2, 0]]);
        assert_eq!(i.to_string(), "x1^2, x1*x2, x2^2");
        assert_eq!(MonomialIdeal::zero(2).to_string(), "0");
        assert_eq!(MonomialIdeal::unit(2).to_string(), "1");
    }
}
