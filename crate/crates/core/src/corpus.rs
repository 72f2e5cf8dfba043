//! Golden corpus: cases stored as TOML in the text grammar, and a runner
//! that recomputes each one.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::ass::{ass_chain, ass_primes, localization_commutes_with_closure, localize, ratliff_check, Verdict};
use crate::closure::{closure_exponent, integral_closure, is_integrally_closed, is_normal_up_to, np_member, uniform_exponent};
use crate::error::{Error, Result};
use crate::invariants::{analytic_spread, conjecture_check, height, is_reduction, DEFAULT_SPREAD_HORIZON};
use crate::monomial::{edge_ideal, MonomialIdeal, MonomialPrime};
use crate::parse::{format_space, parse_ideal, parse_monomial, parse_space};
use crate::poset::{sdepth_with_limits, CharacteristicPoset, SearchLimits};
use crate::stanley::{verify_decomposition, Module, StanleyDecomposition, StanleySpace};
use crate::transfer::{fiber_root, transfer, transfer_from_power, TransferReport};

pub const BUILTIN: &str = include_str!("../corpus/cases.toml");

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Origin {
    Literature,
    Elementary,
    Computed,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusCase {
    pub id: String,
    pub op: String,
    pub origin: Origin,
    pub ideal: Option<String>,
    /// Second ideal: the denominator of a quotient or the candidate reduction.
    pub other: Option<String>,
    pub n: Option<usize>,
    pub monomial: Option<String>,
    /// Replace `ideal` by this power before running `op`.
    pub power: Option<u32>,
    pub k: Option<u32>,
    pub s: Option<u32>,
    pub horizon: Option<u32>,
    pub mode: Option<String>,
    pub prime: Option<Vec<usize>>,
    pub vars: Option<Vec<usize>>,
    pub edges: Option<Vec<(usize, usize)>>,
    pub decomposition: Option<Vec<String>>,
    pub expect: Option<toml::Value>,
    pub at_least: Option<u64>,
    pub at_most: Option<u64>,
    pub dropped: Option<usize>,
    pub note: Option<String>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Corpus {
    #[serde(rename = "case")]
    pub cases: Vec<CorpusCase>,
}

impl Corpus {
    pub fn parse(text: &str) -> Result<Self> {
        let corpus: Corpus =
            toml::from_str(text).map_err(|e| Error::Parse(format!("corpus: {e}")))?;
        let mut seen = BTreeSet::new();
        for case in &corpus.cases {
            if !seen.insert(case.id.as_str()) {
                return Err(Error::Parse(format!("duplicate corpus id `{}`", case.id)));
            }
        }
        Ok(corpus)
    }

    pub fn builtin() -> Self {
        Self::parse(BUILTIN).expect("bundled corpus parses")
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseResult {
    pub id: String,
    pub op: String,
    pub origin: Origin,
    pub passed: bool,
    pub actual: String,
    /// Empty when the case passed.
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusReport {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub cases: Vec<CaseResult>,
}

impl CorpusReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

/// What a case computed.
#[derive(Clone, Debug, PartialEq)]
enum Actual {
    Bool(bool),
    Int(u64),
    Ideal(MonomialIdeal),
    Text(String),
    Flags(Vec<bool>),
    Spaces { spaces: BTreeSet<StanleySpace>, dropped: usize },
}

impl fmt::Display for Actual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Actual::Bool(b) => write!(f, "{b}"),
            Actual::Int(v) => write!(f, "{v}"),
            Actual::Ideal(i) => write!(f, "{i}"),
            Actual::Text(t) => f.write_str(t),
            Actual::Flags(v) => write!(f, "{v:?}"),
            Actual::Spaces { spaces, dropped } => {
                let list: Vec<String> = spaces.iter().map(format_space).collect();
                write!(f, "[{}] ({dropped} dropped)", list.join(", "))
            }
        }
    }
}

pub fn run_corpus(corpus: &Corpus, limits: SearchLimits) -> CorpusReport {
    let cases: Vec<CaseResult> = corpus.cases.iter().map(|c| run_case(c, limits)).collect();
    let passed = cases.iter().filter(|c| c.passed).count();
    CorpusReport {
        total: cases.len(),
        passed,
        failed: cases.len() - passed,
        cases,
    }
}

pub fn run_case(case: &CorpusCase, limits: SearchLimits) -> CaseResult {
    let (passed, actual, detail) = match evaluate(case, limits) {
        Ok(actual) => {
            let problems = check(case, &actual);
            (problems.is_empty(), actual.to_string(), problems.join("; "))
        }
        Err(e) => (false, String::new(), format!("error: {e}")),
    };
    CaseResult {
        id: case.id.clone(),
        op: case.op.clone(),
        origin: case.origin,
        passed,
        actual,
        detail,
    }
}

fn missing(case: &CorpusCase, field: &str) -> Error {
    Error::Parse(format!("case `{}` needs `{field}`", case.id))
}

fn main_ideal(case: &CorpusCase) -> Result<MonomialIdeal> {
    let text = case.ideal.as_deref().ok_or_else(|| missing(case, "ideal"))?;
    let ideal = parse_ideal(text, case.n)?;
    match case.power {
        Some(p) => ideal.power(p),
        None => Ok(ideal),
    }
}

fn other_ideal(case: &CorpusCase, n: usize) -> Result<MonomialIdeal> {
    let text = case.other.as_deref().ok_or_else(|| missing(case, "other"))?;
    parse_ideal(text, Some(n))
}

fn module(case: &CorpusCase, ideal: MonomialIdeal) -> Result<Module> {
    match case.mode.as_deref().unwrap_or("ideal") {
        "ideal" => Ok(Module::Ideal(ideal)),
        "residue" => Ok(Module::Residue(ideal)),
        "quotient" => {
            let den = other_ideal(case, ideal.n())?;
            Module::quotient(ideal, den)
        }
        m => Err(Error::Parse(format!("unknown mode `{m}`"))),
    }
}

fn prime(case: &CorpusCase, n: usize) -> Result<MonomialPrime> {
    let vars = case.prime.as_ref().ok_or_else(|| missing(case, "prime"))?;
    MonomialPrime::from_one_based(vars, n)
}

fn spaces(list: &[String], n: usize) -> Result<Vec<StanleySpace>> {
    list.iter().map(|s| parse_space(s, n)).collect()
}

fn transfer_actual(report: TransferReport) -> Actual {
    let dropped = report.dropped();
    Actual::Spaces {
        spaces: report.output.spaces.into_iter().collect(),
        dropped,
    }
}

fn evaluate(case: &CorpusCase, limits: SearchLimits) -> Result<Actual> {
    let k = || case.k.ok_or_else(|| missing(case, "k"));
    let horizon = || case.horizon.ok_or_else(|| missing(case, "horizon"));
    let monomial = |n: usize| {
        let text = case.monomial.as_deref().ok_or_else(|| missing(case, "monomial"))?;
        parse_monomial(text, n)
    };
    Ok(match case.op.as_str() {
        "minimalize" => Actual::Ideal(main_ideal(case)?),
        "contains" => {
            let i = main_ideal(case)?;
            Actual::Bool(i.contains(&monomial(i.n())?))
        }
        "power" => Actual::Ideal(main_ideal(case)?.power(k()?)?),
        "colon" => {
            let i = main_ideal(case)?;
            Actual::Ideal(i.colon(&monomial(i.n())?)?)
        }
        "radical" => Actual::Ideal(main_ideal(case)?.radical()),
        "edge_ideal" => {
            let n = case.n.ok_or_else(|| missing(case, "n"))?;
            let edges = case.edges.as_ref().ok_or_else(|| missing(case, "edges"))?;
            Actual::Ideal(edge_ideal(n, edges)?)
        }
        "np_member" => {
            let i = main_ideal(case)?;
            Actual::Bool(np_member(&i, &monomial(i.n())?)?)
        }
        "closure" => Actual::Ideal(integral_closure(&main_ideal(case)?)),
        "closure_exponent" => {
            let i = main_ideal(case)?;
            Actual::Int(closure_exponent(&i, &monomial(i.n())?)?.into())
        }
        "uniform_exponent" => Actual::Int(uniform_exponent(&main_ideal(case)?)?.into()),
        "integrally_closed" => Actual::Bool(is_integrally_closed(&main_ideal(case)?)),
        "normal" => Actual::Bool(is_normal_up_to(&main_ideal(case)?, horizon()?)?.normal),
        "poset_size" => {
            let m = module(case, main_ideal(case)?)?;
            Actual::Int(CharacteristicPoset::new(&m).len() as u64)
        }
        "sdepth" => {
            let m = module(case, main_ideal(case)?)?;
            let r = sdepth_with_limits(&m, limits)?;
            if !r.exact {
                return Ok(Actual::Text(format!("bounded: value >= {}", r.value)));
            }
            Actual::Int(r.value as u64)
        }
        "verify" => {
            let m = module(case, main_ideal(case)?)?;
            let list = case.decomposition.as_ref().ok_or_else(|| missing(case, "decomposition"))?;
            let d = StanleyDecomposition::new(m.clone(), spaces(list, m.n())?)?;
            Actual::Bool(verify_decomposition(&d, 1).valid)
        }
        "fiber_root" => {
            let text = case.monomial.as_deref().ok_or_else(|| missing(case, "monomial"))?;
            let t = parse_ideal(text, case.n)?;
            let [t] = t.gens() else {
                return Err(Error::Parse(format!("`{text}` is not a single monomial")));
            };
            let vars = case.vars.as_ref().ok_or_else(|| missing(case, "vars"))?;
            let mut free = Vec::new();
            for &v in vars {
                if v == 0 || v > t.n() {
                    return Err(Error::VariableOutOfRange(v));
                }
                free.push(v - 1);
            }
            Actual::Text(match fiber_root(t, &free, k()?) {
                Some(r) => r.to_string(),
                None => "empty".into(),
            })
        }
        "transfer" | "transfer_from_power" => {
            let base = module(case, main_ideal(case)?)?;
            let list = case.decomposition.as_ref().ok_or_else(|| missing(case, "decomposition"))?;
            let input = StanleyDecomposition::new(base.clone(), spaces(list, base.n())?)?;
            let report = if case.op == "transfer" {
                transfer(&input, &base, k()?)?
            } else {
                let s = case.s.ok_or_else(|| missing(case, "s"))?;
                transfer_from_power(&input, &base, s, k()?)?
            };
            transfer_actual(report)
        }
        "ass" => {
            let i = main_ideal(case)?;
            Actual::Bool(ass_primes(&i)?.contains(&prime(case, i.n())?))
        }
        "ass_power_chain" | "ass_closure_chain" => {
            let i = main_ideal(case)?;
            let p = prime(case, i.n())?;
            let report = ass_chain(&i, horizon()?)?;
            let chain = if case.op == "ass_power_chain" {
                &report.powers
            } else {
                &report.closures
            };
            Actual::Flags(chain.iter().map(|set| set.contains(&p)).collect())
        }
        "localize" => {
            let i = main_ideal(case)?;
            Actual::Ideal(localize(&i, &prime(case, i.n())?)?.ideal)
        }
        "localization_commutes" => {
            let i = main_ideal(case)?;
            Actual::Bool(localization_commutes_with_closure(&i, &prime(case, i.n())?)?)
        }
        "ratliff" => {
            let (verdict, _) = ratliff_check(&main_ideal(case)?, horizon()?)?;
            match verdict {
                Verdict::Holds => Actual::Bool(true),
                Verdict::Fails => Actual::Bool(false),
                Verdict::Inconclusive => Actual::Text("inconclusive".into()),
            }
        }
        "height" => Actual::Int(height(&main_ideal(case)?)? as u64),
        "mu" => Actual::Int(main_ideal(case)?.mu() as u64),
        "reduction" => {
            let i = main_ideal(case)?;
            let j = other_ideal(case, i.n())?;
            match is_reduction(&j, &i, horizon()?)?.t {
                Some(t) => Actual::Int(t.into()),
                None => Actual::Bool(false),
            }
        }
        "spread" => {
            let h = case.horizon.map_or(DEFAULT_SPREAD_HORIZON, |h| h as usize);
            match analytic_spread(&main_ideal(case)?, h)?.value {
                Some(v) => Actual::Int(v as u64),
                None => Actual::Text("undetermined".into()),
            }
        }
        "conjecture" => {
            let h = case.horizon.map_or(DEFAULT_SPREAD_HORIZON, |h| h as usize);
            let r = conjecture_check(&main_ideal(case)?, h, limits)?;
            Actual::Text(if r.counterexample {
                "counterexample".into()
            } else if r.residue == crate::invariants::Status::Holds
                && r.ideal_bound == crate::invariants::Status::Holds
            {
                "holds".into()
            } else {
                "inconclusive".into()
            })
        }
        op => return Err(Error::Parse(format!("unknown op `{op}`"))),
    })
}

/// Mismatches between `actual` and the case's expectations.
fn check(case: &CorpusCase, actual: &Actual) -> Vec<String> {
    let mut problems = Vec::new();
    if let Some(expect) = &case.expect {
        if let Err(msg) = matches_expectation(expect, actual) {
            problems.push(msg);
        }
    }
    if let Some(lo) = case.at_least {
        match actual {
            Actual::Int(v) if *v >= lo => {}
            _ => problems.push(format!("expected at least {lo}, got {actual}")),
        }
    }
    if let Some(hi) = case.at_most {
        match actual {
            Actual::Int(v) if *v <= hi => {}
            _ => problems.push(format!("expected at most {hi}, got {actual}")),
        }
    }
    if let Some(want) = case.dropped {
        match actual {
            Actual::Spaces { dropped, .. } if *dropped == want => {}
            _ => problems.push(format!("expected {want} dropped spaces, got {actual}")),
        }
    }
    if case.expect.is_none() && case.at_least.is_none() && case.at_most.is_none() {
        problems.push("case has no expectation".into());
    }
    problems
}

fn matches_expectation(expect: &toml::Value, actual: &Actual) -> std::result::Result<(), String> {
    use toml::Value;
    let ok = match (expect, actual) {
        (Value::Boolean(b), Actual::Bool(a)) => b == a,
        (Value::Integer(e), Actual::Int(a)) => u64::try_from(*e).ok() == Some(*a),
        (Value::String(s), Actual::Ideal(a)) => {
            parse_ideal(s, Some(a.n())).map_err(|e| format!("bad expectation: {e}"))? == *a
        }
        (Value::String(s), Actual::Text(a)) => s == a,
        (Value::Array(items), Actual::Flags(a)) => {
            items.len() == a.len()
                && items.iter().zip(a).all(|(e, a)| match e {
                    Value::Boolean(b) => b == a,
                    Value::String(s) => s == "any",
                    _ => false,
                })
        }
        (Value::Array(items), Actual::Spaces { spaces, .. }) => {
            let n = spaces.iter().next().map_or(1, |s| s.root.n());
            let mut want = BTreeSet::new();
            for item in items {
                let Value::String(s) = item else {
                    return Err("space expectations must be strings".into());
                };
                want.insert(parse_space(s, n).map_err(|e| format!("bad expectation: {e}"))?);
            }
            want == *spaces
        }
        _ => false,
    };
    if ok {
        Ok(())
    } else {
        Err(format!("expected {expect}, got {actual}"))
    }
}
