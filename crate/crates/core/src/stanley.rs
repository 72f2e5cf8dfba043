//! Modules `I`, `S/I`, `I/J`, Stanley spaces and decompositions, and the
//! box-bounded verifier for claimed decompositions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::BoxIter;
use crate::monomial::{Monomial, MonomialIdeal};

/// A multigraded module spanned by monomials: `I`, `S/I` or `I/J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Module {
    Ideal(MonomialIdeal),
    Residue(MonomialIdeal),
    Quotient {
        num: MonomialIdeal,
        den: MonomialIdeal,
    },
}

impl Module {
    /// `I/J`, requiring `J ⊆ I`.
    pub fn quotient(num: MonomialIdeal, den: MonomialIdeal) -> Result<Self> {
        if num.n() != den.n() {
            return Err(Error::DimensionMismatch {
                expected: num.n(),
                found: den.n(),
            });
        }
        if !den.is_subset_of(&num) {
            return Err(Error::NotContained);
        }
        Ok(Module::Quotient { num, den })
    }

    pub fn n(&self) -> usize {
        match self {
            Module::Ideal(i) | Module::Residue(i) => i.n(),
            Module::Quotient { num, .. } => num.n(),
        }
    }

    pub fn mode(&self) -> &'static str {
        match self {
            Module::Ideal(_) => "ideal",
            Module::Residue(_) => "residue",
            Module::Quotient { .. } => "quotient",
        }
    }

    /// Whether `x^a` is a nonzero monomial of the module.
    pub fn contains(&self, a: &[u32]) -> bool {
        match self {
            Module::Ideal(i) => i.contains_exponents(a),
            Module::Residue(i) => !i.contains_exponents(a),
            Module::Quotient { num, den } => {
                num.contains_exponents(a) && !den.contains_exponents(a)
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Module::Ideal(i) => i.is_zero(),
            Module::Residue(i) => i.is_unit(),
            Module::Quotient { num, den } => num.is_subset_of(den),
        }
    }

    pub fn ideals(&self) -> Vec<&MonomialIdeal> {
        match self {
            Module::Ideal(i) | Module::Residue(i) => vec![i],
            Module::Quotient { num, den } => vec![num, den],
        }
    }

    /// Componentwise maximum of all generator exponents involved.
    pub fn bound(&self) -> Vec<u32> {
        let mut g = vec![0; self.n()];
        for ideal in self.ideals() {
            for (x, e) in g.iter_mut().zip(ideal.max_exponents()) {
                *x = (*x).max(e);
            }
        }
        g
    }

    /// Applies `f` to every ideal, keeping the module shape.
    pub fn map_ideals<F>(&self, mut f: F) -> Result<Module>
    where
        F: FnMut(&MonomialIdeal) -> Result<MonomialIdeal>,
    {
        Ok(match self {
            Module::Ideal(i) => Module::Ideal(f(i)?),
            Module::Residue(i) => Module::Residue(f(i)?),
            Module::Quotient { num, den } => Module::Quotient {
                num: f(num)?,
                den: f(den)?,
            },
        })
    }
}

/// The space `t·K[Z]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StanleySpace {
    pub root: Monomial,
    /// Sorted 0-based variable indices.
    pub vars: Vec<usize>,
}

impl StanleySpace {
    pub fn new(root: Monomial, mut vars: Vec<usize>) -> Self {
        vars.sort_unstable();
        vars.dedup();
        Self { root, vars }
    }

    pub fn dim(&self) -> usize {
        self.vars.len()
    }

    pub fn is_free(&self, j: usize) -> bool {
        self.vars.binary_search(&j).is_ok()
    }

    /// `x^a ∈ t·K[Z]`: equal to `t` off `Z`, at least `t` on `Z`.
    pub fn contains(&self, a: &[u32]) -> bool {
        self.root
            .exponents()
            .iter()
            .zip(a)
            .enumerate()
            .all(|(j, (&t, &x))| if self.is_free(j) { x >= t } else { x == t })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StanleyDecomposition {
    pub module: Module,
    pub spaces: Vec<StanleySpace>,
}

impl StanleyDecomposition {
    pub fn new(module: Module, spaces: Vec<StanleySpace>) -> Result<Self> {
        let n = module.n();
        for s in &spaces {
            if s.root.n() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: s.root.n(),
                });
            }
            if let Some(&j) = s.vars.iter().find(|&&j| j >= n) {
                return Err(Error::VariableOutOfRange(j + 1));
            }
        }
        Ok(Self { module, spaces })
    }

    /// `min |Z_i|`, `None` for the empty decomposition.
    pub fn sdepth(&self) -> Option<usize> {
        self.spaces.iter().map(StanleySpace::dim).min()
    }

    pub fn to_json(&self) -> DecompositionJson {
        DecompositionJson {
            spaces: self.spaces.iter().map(SpaceJson::from).collect(),
        }
    }

    pub fn from_json(module: Module, json: &DecompositionJson) -> Result<Self> {
        let n = module.n();
        let mut spaces = Vec::with_capacity(json.spaces.len());
        for s in &json.spaces {
            let mut vars = Vec::with_capacity(s.z.len());
            for &v in &s.z {
                if v == 0 || v > n {
                    return Err(Error::VariableOutOfRange(v));
                }
                vars.push(v - 1);
            }
            spaces.push(StanleySpace::new(Monomial::new(s.t.clone()), vars));
        }
        Self::new(module, spaces)
    }
}

/// `{"t": [...], "Z": [...]}` with 1-based variable indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceJson {
    pub t: Vec<u32>,
    #[serde(rename = "Z")]
    pub z: Vec<usize>,
}

impl From<&StanleySpace> for SpaceJson {
    fn from(s: &StanleySpace) -> Self {
        SpaceJson {
            t: s.root.exponents().to_vec(),
            z: s.vars.iter().map(|j| j + 1).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub spaces: Vec<SpaceJson>,
}

/// First failure found by [`verify_decomposition`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    Uncovered { monomial: Vec<u32> },
    DoubleCovered { monomial: Vec<u32>, first: usize, second: usize },
    Escapes { space: usize, monomial: Vec<u32> },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Uncovered { monomial } => {
                write!(f, "monomial {monomial:?} is not covered by any space")
            }
            Violation::DoubleCovered {
                monomial,
                first,
                second,
            } => write!(
                f,
                "monomial {monomial:?} lies in spaces {first} and {second}"
            ),
            Violation::Escapes { space, monomial } => write!(
                f,
                "space {space} contains {monomial:?}, which is not in the module"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub valid: bool,
    pub violation: Option<Violation>,
    /// Upper corner of the box that was checked.
    pub checked_box: Vec<u32>,
}

/// Checks that the spaces tile the module's monomials exactly once.
///
/// The check runs over the box bounded by all roots and generator exponents
/// plus `margin`; with `margin >= 1` every monomial outside the box behaves
/// like its truncation to the box, so the verdict is global.
pub fn verify_decomposition(d: &StanleyDecomposition, margin: u32) -> VerifyReport {
    let mut top = d.module.bound();
    for s in &d.spaces {
        for (x, &e) in top.iter_mut().zip(s.root.exponents()) {
            *x = (*x).max(e);
        }
    }
    for x in top.iter_mut() {
        *x += margin;
    }
    let violation = BoxIter::new(&top).find_map(|a| {
        let mut hits = d
            .spaces
            .iter()
            .enumerate()
            .filter(|(_, s)| s.contains(&a))
            .map(|(i, _)| i);
        let first = hits.next();
        let second = hits.next();
        if d.module.contains(&a) {
            match (first, second) {
                (None, _) => Some(Violation::Uncovered { monomial: a }),
                (Some(first), Some(second)) => Some(Violation::DoubleCovered {
                    monomial: a,
                    first,
                    second,
                }),
                _ => None,
            }
        } else {
            first.map(|space| Violation::Escapes { space, monomial: a })
        }
    });
    VerifyReport {
        valid: violation.is_none(),
        violation,
        checked_box: top,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn i0_square() -> MonomialIdeal {
        MonomialIdeal::from_exponents(
            3,
            &[
                vec![4, 4, 0],
                vec![4, 0, 4],
                vec![0, 4, 4],
                vec![4, 2, 2],
                vec![2, 4, 2],
                vec![2, 2, 4],
            ],
        )
        .unwrap()
    }

    fn space(t: &[u32], z: &[usize]) -> StanleySpace {
        StanleySpace::new(Monomial::new(t.to_vec()), z.iter().map(|j| j - 1).collect())
    }

    #[test]
    fn space_membership() {
        let s = space(&[4, 4, 0], &[1, 2]);
        assert!(s.contains(&[4, 4, 0]));
        assert!(s.contains(&[9, 5, 0]));
        assert!(!s.contains(&[4, 4, 1]));
        assert!(!s.contains(&[3, 4, 0]));
    }

    #[test]
    fn module_membership() {
        let i = MonomialIdeal::from_exponents(1, &[vec![1]]).unwrap();
        assert!(Module::Residue(i.clone()).contains(&[0]));
        assert!(!Module::Residue(i.clone()).contains(&[1]));
        assert!(Module::Ideal(i.clone()).contains(&[3]));
        let j = MonomialIdeal::from_exponents(1, &[vec![2]]).unwrap();
        let q = Module::quotient(i.clone(), j.clone()).unwrap();
        assert!(q.contains(&[1]) && !q.contains(&[2]));
        assert_eq!(Module::quotient(j, i).unwrap_err(), Error::NotContained);
        assert!(Module::Residue(MonomialIdeal::unit(2)).is_zero());
        assert!(Module::Ideal(MonomialIdeal::zero(2)).is_zero());
    }

    #[test]
    fn double_cover_is_reported() {
        let m = Module::Ideal(i0_square());
        let s = space(&[4, 4, 4], &[1, 2, 3]);
        let d = StanleyDecomposition::new(m, vec![s.clone(), s]).unwrap();
        let r = verify_decomposition(&d, 1);
        assert!(!r.valid);
        assert!(matches!(
            r.violation,
            Some(Violation::Uncovered { .. }) | Some(Violation::DoubleCovered { .. })
        ));
        // restricted to a principal ideal the only defect is the double cover
        let p = MonomialIdeal::from_exponents(1, &[vec![1]]).unwrap();
        let s = space(&[1], &[1]);
        let d = StanleyDecomposition::new(Module::Ideal(p), vec![s.clone(), s]).unwrap();
        assert_eq!(
            verify_decomposition(&d, 1).violation,
            Some(Violation::DoubleCovered {
                monomial: vec![1],
                first: 0,
                second: 1
            })
        );
    }

    #[test]
    fn escaping_space_is_reported() {
        let p = MonomialIdeal::from_exponents(2, &[vec![1, 0]]).unwrap();
        let d = StanleyDecomposition::new(Module::Ideal(p), vec![space(&[0, 0], &[1, 2])]).unwrap();
        assert_eq!(
            verify_decomposition(&d, 1).violation,
            Some(Violation::Escapes {
                space: 0,
                monomial: vec![0, 0]
            })
        );
    }

    #[test]
    fn json_uses_one_based_indices() {
        let m = Module::Ideal(i0_square());
        let d = StanleyDecomposition::new(m.clone(), vec![space(&[4, 4, 0], &[1, 2])]).unwrap();
        let js = serde_json::to_string(&d.to_json()).unwrap();
        assert_eq!(js, r#"{"spaces":[{"t":[4,4,0],"Z":[1,2]}]}"#);
        let back: DecompositionJson = serde_json::from_str(&js).unwrap();
        assert_eq!(StanleyDecomposition::from_json(m.clone(), &back).unwrap(), d);
        let bad = DecompositionJson {
            spaces: vec![SpaceJson {
                t: vec![0, 0, 0],
                z: vec![4],
            }],
        };
        assert_eq!(
            StanleyDecomposition::from_json(m, &bad).unwrap_err(),
            Error::VariableOutOfRange(4)
        );
    }
}
