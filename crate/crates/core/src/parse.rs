//! Text and JSON forms of monomial ideals.
//!
//! Text grammar: comma-separated terms, each a `*`-separated product of
//! factors `x<i>` or `x<i>^<e>`; whitespace is ignored. `0` is the zero
//! ideal and `1` the unit ideal.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{minimalize, Monomial, MonomialIdeal};
use crate::stanley::StanleySpace;

/// `{"n": 3, "gens": [[2,2,0], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub n: usize,
    pub gens: Vec<Vec<u32>>,
}

impl From<&MonomialIdeal> for IdealJson {
    fn from(ideal: &MonomialIdeal) -> Self {
        Self {
            n: ideal.n(),
            gens: ideal.gens().iter().map(|g| g.exponents().to_vec()).collect(),
        }
    }
}

impl TryFrom<&IdealJson> for MonomialIdeal {
    type Error = Error;

    fn try_from(json: &IdealJson) -> Result<Self> {
        if json.n == 0 {
            return Err(Error::Parse("n must be positive".into()));
        }
        if let Some(row) = json.gens.iter().find(|r| r.len() != json.n) {
            return Err(Error::Parse(format!(
                "generator {:?} has {} entries, expected {}",
                row,
                row.len(),
                json.n
            )));
        }
        MonomialIdeal::from_exponents(json.n, &json.gens)
    }
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn parse_term(term: &str) -> Result<Vec<(usize, u32)>> {
    if term == "1" {
        return Ok(Vec::new());
    }
    term.split('*')
        .map(|factor| {
            let rest = factor
                .strip_prefix('x')
                .ok_or_else(|| parse_err(format!("bad factor `{factor}`")))?;
            let (index, exp) = match rest.split_once('^') {
                Some((i, e)) => (i, e),
                None => (rest, "1"),
            };
            let index: usize = index
                .parse()
                .map_err(|_| parse_err(format!("bad variable index in `{factor}`")))?;
            if index == 0 {
                return Err(parse_err(format!("variables start at x1, got `{factor}`")));
            }
            let exp: u32 = exp
                .parse()
                .map_err(|_| parse_err(format!("bad exponent in `{factor}`")))?;
            Ok((index, exp))
        })
        .collect()
}

/// Parses the text grammar. Without `n` the ring has as many variables as
/// the largest index mentioned (at least one).
pub fn parse_ideal(text: &str, n: Option<usize>) -> Result<MonomialIdeal> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(parse_err("empty ideal"));
    }
    if n == Some(0) {
        return Err(parse_err("n must be positive"));
    }
    if compact == "0" {
        return Ok(MonomialIdeal::zero(n.unwrap_or(1)));
    }
    let terms = compact
        .split(',')
        .map(|t| {
            if t.is_empty() {
                Err(parse_err("empty term"))
            } else {
                parse_term(t)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let max_index = terms.iter().flatten().map(|&(i, _)| i).max().unwrap_or(1);
    let n = match n {
        Some(n) if n < max_index => {
            return Err(parse_err(format!("x{max_index} exceeds n = {n}")));
        }
        Some(n) => n,
        None => max_index,
    };
    let mut gens = Vec::with_capacity(terms.len());
    for term in terms {
        let mut e = vec![0u32; n];
        for (i, x) in term {
            e[i - 1] = e[i - 1].checked_add(x).ok_or(Error::Overflow)?;
        }
        gens.push(Monomial::new(e));
    }
    minimalize(n, gens)
}

pub fn parse_monomial(text: &str, n: usize) -> Result<Monomial> {
    let ideal = parse_ideal(text, Some(n))?;
    match ideal.gens() {
        [m] if !text.contains(',') => Ok(m.clone()),
        _ => Err(parse_err(format!("`{text}` is not a single monomial"))),
    }
}

/// Parses `{"n":..,"gens":..}` JSON.
pub fn ideal_from_json(text: &str) -> Result<MonomialIdeal> {
    let json: IdealJson =
        serde_json::from_str(text).map_err(|e| parse_err(format!("ideal JSON: {e}")))?;
    MonomialIdeal::try_from(&json)
}

pub fn ideal_to_json(ideal: &MonomialIdeal) -> String {
    serde_json::to_string(&IdealJson::from(ideal)).expect("plain data")
}

/// Inline text, inline JSON, or `@path` naming a file holding either.
pub fn load_ideal(arg: &str, n: Option<usize>) -> Result<MonomialIdeal> {
    let content = match arg.strip_prefix('@') {
        Some(path) => read_file(path)?,
        None => arg.to_string(),
    };
    let ideal = if content.trim_start().starts_with('{') {
        ideal_from_json(&content)?
    } else {
        parse_ideal(&content, n)?
    };
    match n {
        Some(n) if n != ideal.n() => Err(Error::DimensionMismatch {
            expected: n,
            found: ideal.n(),
        }),
        _ => Ok(ideal),
    }
}

pub fn read_file(path: impl AsRef<Path>) -> Result<String> {
    let path = path.as_ref();
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// Parses a prime given as 1-based indices (`1,3`) or variables (`x1,x3`).
pub fn parse_prime_vars(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|t| {
            let t = t.trim();
            let t = t.strip_prefix('x').unwrap_or(t);
            t.parse::<usize>()
                .map_err(|_| parse_err(format!("bad prime variable `{t}`")))
        })
        .collect()
}

/// Parses `<monomial> K[x1,x3]` (`K[]` for a zero-dimensional space).
pub fn parse_space(text: &str, n: usize) -> Result<StanleySpace> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let (root, rest) = compact
        .split_once("K[")
        .ok_or_else(|| parse_err(format!("space `{text}` lacks `K[...]`")))?;
    let inner = rest
        .strip_suffix(']')
        .ok_or_else(|| parse_err(format!("space `{text}` lacks closing `]`")))?;
    let root = parse_monomial(root, n)?;
    let mut vars = Vec::new();
    if !inner.is_empty() {
        for v in parse_prime_vars(inner)? {
            if v == 0 || v > n {
                return Err(Error::VariableOutOfRange(v));
            }
            vars.push(v - 1);
        }
    }
    Ok(StanleySpace::new(root, vars))
}

pub fn format_space(space: &StanleySpace) -> String {
    let vars: Vec<String> = space.vars.iter().map(|j| format!("x{}", j + 1)).collect();
    format!("{} K[{}]", space.root, vars.join(","))
}
