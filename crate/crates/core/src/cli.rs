//! `sdepthlab` command line: argument parsing, dispatch and reports.
//!
//! Exit codes: 0 success, 1 mathematical rejection, 2 parse error,
//! 3 corpus mismatch.

use std::ffi::OsString;
use std::io::Write;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::ass::{ass_chain, ass_primes, ass_witness, ratliff_check};
use crate::closure::{integral_closure, is_normal_up_to};
use crate::corpus::{run_corpus, Corpus};
use crate::error::{Error, Result};
use crate::invariants::{
    analytic_spread, conjecture_check, conjecture_scan, height, is_reduction,
    DEFAULT_SPREAD_HORIZON,
};
use crate::monomial::MonomialIdeal;
use crate::parse::{format_space, load_ideal, read_file, IdealJson};
use crate::poset::{
    partition_to_decomposition, sdepth_with_limits, CharacteristicPoset, SearchLimits,
};
use crate::random::RandomIdealSpec;
use crate::stanley::{verify_decomposition, DecompositionJson, Module, StanleyDecomposition};
use crate::transfer::{transfer, transfer_from_power};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REJECTED: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "sdepthlab",
    version,
    about = "Integral closure, Stanley depth and associated primes of monomial ideals"
)]
pub struct Cli {
    /// Print a human-readable report instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Number of variables (defaults to the largest index mentioned).
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Worker threads for parallel stages.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct LimitArgs {
    /// Search step budget per target depth.
    #[arg(long)]
    pub max_steps: Option<u64>,
    /// Wall-clock budget in seconds.
    #[arg(long)]
    pub timeout: Option<u64>,
}

impl LimitArgs {
    fn limits(&self) -> SearchLimits {
        SearchLimits {
            max_steps: self.max_steps,
            deadline: self.timeout.map(|s| Instant::now() + Duration::from_secs(s)),
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Ideal,
    Residue,
    Quotient,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Integral closure of an ideal.
    Closure { ideal: String },
    /// k-th power of an ideal.
    Power {
        ideal: String,
        #[arg(long)]
        k: u32,
    },
    /// Stanley depth of I, S/I or I/J; verifies a decomposition when one is given.
    Sdepth {
        ideal: String,
        /// Denominator for `--mode quotient`.
        other: Option<String>,
        #[arg(long, value_enum, default_value = "ideal")]
        mode: Mode,
        /// Decomposition JSON to verify instead of searching (`@file` or inline).
        #[arg(long)]
        decomposition: Option<String>,
        #[arg(long, default_value_t = 1)]
        margin: u32,
        /// Include the witness decomposition.
        #[arg(long)]
        witness: bool,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Transfer a decomposition of a (closed) power down to the closure.
    Transfer {
        ideal: String,
        other: Option<String>,
        #[arg(long, value_enum, default_value = "ideal")]
        mode: Mode,
        #[arg(long)]
        k: u32,
        /// Treat the input as a decomposition of the plain power `s*k`.
        #[arg(long)]
        s: Option<u32>,
        #[arg(long)]
        decomposition: String,
    },
    /// Associated primes of S/I, or the chains of powers and closures with `--horizon`.
    Ass {
        ideal: String,
        #[arg(long)]
        horizon: Option<u32>,
    },
    /// Stable closure primes are among the stable power primes.
    Ratliff {
        ideal: String,
        #[arg(long, default_value_t = 4)]
        horizon: u32,
    },
    /// Analytic spread with its certificate.
    Spread {
        ideal: String,
        #[arg(long, default_value_t = DEFAULT_SPREAD_HORIZON)]
        horizon: usize,
    },
    /// Height: least number of variables meeting every generator.
    Height { ideal: String },
    /// Whether J is a reduction of I.
    Reduction {
        j: String,
        i: String,
        #[arg(long, default_value_t = 4)]
        horizon: u32,
    },
    /// Whether the powers of I up to the horizon are integrally closed.
    Normal {
        ideal: String,
        #[arg(long, default_value_t = 4)]
        horizon: u32,
    },
    /// Test sdepth >= n - spread on one ideal or on random closed ideals.
    ConjectureScan {
        ideal: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        count: u64,
        #[arg(long, default_value_t = 3)]
        vars: usize,
        #[arg(long, default_value_t = 3)]
        max_exp: u32,
        #[arg(long, default_value_t = 2)]
        min_gens: usize,
        #[arg(long, default_value_t = 4)]
        max_gens: usize,
        #[arg(long, default_value_t = DEFAULT_SPREAD_HORIZON)]
        horizon: usize,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Recompute every case of the golden corpus.
    VerifyPaper {
        /// Corpus TOML to use instead of the bundled one.
        #[arg(long)]
        corpus: Option<String>,
        #[command(flatten)]
        limits: LimitArgs,
    },
}

/// A finished report: JSON plus the `--pretty` text.
struct Report {
    json: Value,
    text: String,
    code: i32,
}

impl Report {
    fn ok(json: Value, text: impl Into<String>) -> Self {
        Self {
            json,
            text: text.into(),
            code: EXIT_OK,
        }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn ideal_value(ideal: &MonomialIdeal) -> Value {
    json!({ "n": ideal.n(), "gens": IdealJson::from(ideal).gens, "text": ideal.to_string() })
}

fn build_module(mode: Mode, ideal: MonomialIdeal, other: Option<&str>) -> Result<Module> {
    match (mode, other) {
        (Mode::Ideal, None) => Ok(Module::Ideal(ideal)),
        (Mode::Residue, None) => Ok(Module::Residue(ideal)),
        (Mode::Quotient, Some(den)) => {
            let den = load_ideal(den, Some(ideal.n()))?;
            Module::quotient(ideal, den)
        }
        (Mode::Quotient, None) => Err(Error::Parse("quotient mode needs a second ideal".into())),
        (_, Some(_)) => Err(Error::Parse(
            "a second ideal is only accepted with --mode quotient".into(),
        )),
    }
}

fn load_decomposition(arg: &str, module: Module) -> Result<StanleyDecomposition> {
    let text = match arg.strip_prefix('@') {
        Some(path) => read_file(path)?,
        None => arg.to_string(),
    };
    let json: DecompositionJson = serde_json::from_str(&text)
        .map_err(|e| Error::Parse(format!("decomposition JSON: {e}")))?;
    StanleyDecomposition::from_json(module, &json)
}

fn spaces_text(d: &StanleyDecomposition) -> String {
    d.spaces.iter().map(format_space).collect::<Vec<_>>().join("\n")
}

fn primes_text<'a>(primes: impl IntoIterator<Item = &'a crate::monomial::MonomialPrime>) -> String {
    let list: Vec<String> = primes.into_iter().map(|p| p.to_string()).collect();
    format!("{{{}}}", list.join(", "))
}

fn execute(cli: &Cli) -> Result<Report> {
    let n = cli.n;
    let ideal = |s: &str| load_ideal(s, n);
    Ok(match &cli.command {
        Command::Closure { ideal: arg } => {
            let i = ideal(arg)?;
            let c = integral_closure(&i);
            Report::ok(
                json!({ "input": ideal_value(&i), "closure": ideal_value(&c) }),
                c.to_string(),
            )
        }
        Command::Power { ideal: arg, k } => {
            let i = ideal(arg)?;
            let p = i.power(*k)?;
            Report::ok(json!({ "input": ideal_value(&i), "k": k, "power": ideal_value(&p) }), p.to_string())
        }
        Command::Sdepth {
            ideal: arg,
            other,
            mode,
            decomposition,
            margin,
            witness,
            limits,
        } => {
            let module = build_module(*mode, ideal(arg)?, other.as_deref())?;
            if let Some(d) = decomposition {
                let d = load_decomposition(d, module)?;
                let report = verify_decomposition(&d, *margin);
                let text = match &report.violation {
                    None => format!("valid, sdepth >= {}", d.sdepth().map_or("-".into(), |v| v.to_string())),
                    Some(v) => format!("invalid: {v}"),
                };
                let code = if report.valid { EXIT_OK } else { EXIT_REJECTED };
                return Ok(Report {
                    json: json!({ "verify": to_value(&report), "sdepth": d.sdepth() }),
                    text,
                    code,
                });
            }
            let r = sdepth_with_limits(&module, limits.limits())?;
            let text = if r.exact {
                r.value.to_string()
            } else {
                format!("bounded: value >= {}", r.value)
            };
            let mut js = json!({
                "mode": module.mode(),
                "value": r.value,
                "exact": r.exact,
                "steps": r.steps,
            });
            let text = if *witness {
                let poset = CharacteristicPoset::new(&module);
                let d = partition_to_decomposition(&r.witness, &poset)?;
                js["decomposition"] = to_value(&d.to_json());
                format!("{text}\n{}", spaces_text(&d))
            } else {
                text
            };
            Report::ok(js, text)
        }
        Command::Transfer {
            ideal: arg,
            other,
            mode,
            k,
            s,
            decomposition,
        } => {
            let base = build_module(*mode, ideal(arg)?, other.as_deref())?;
            let input = load_decomposition(decomposition, base.clone())?;
            let report = match s {
                Some(s) => transfer_from_power(&input, &base, *s, *k)?,
                None => transfer(&input, &base, *k)?,
            };
            let text = format!(
                "{} spaces kept, {} dropped, sdepth >= {}\n{}",
                report.output.spaces.len(),
                report.dropped(),
                report.output_sdepth().map_or("-".into(), |v| v.to_string()),
                spaces_text(&report.output)
            );
            Report::ok(to_value(&report.to_json()), text)
        }
        Command::Ass { ideal: arg, horizon } => {
            let i = ideal(arg)?;
            match horizon {
                Some(h) => {
                    let r = ass_chain(&i, *h)?;
                    let mut text = String::new();
                    for (k, (p, c)) in r.powers.iter().zip(&r.closures).enumerate() {
                        text.push_str(&format!(
                            "k={}: powers {} closures {}\n",
                            k + 1,
                            primes_text(p),
                            primes_text(c)
                        ));
                    }
                    let at = |k: Option<u32>| k.map_or("not within horizon".into(), |k| k.to_string());
                    text.push_str(&format!(
                        "stable from: powers {}, closures {}",
                        at(r.powers_stable_at),
                        at(r.closures_stable_at)
                    ));
                    Report::ok(to_value(&r), text)
                }
                None => {
                    let primes = ass_primes(&i)?;
                    let mut rows = Vec::new();
                    for p in &primes {
                        let w = ass_witness(&i, p)?.expect("found by the same scan");
                        rows.push(json!({ "prime": p.one_based(), "witness": w.exponents() }));
                    }
                    Report::ok(json!({ "primes": rows }), primes_text(&primes))
                }
            }
        }
        Command::Ratliff { ideal: arg, horizon } => {
            let (verdict, report) = ratliff_check(&ideal(arg)?, *horizon)?;
            let text = serde_json::to_string(&verdict).expect("enum").trim_matches('"').to_string();
            Report::ok(json!({ "verdict": verdict, "report": to_value(&report) }), text)
        }
        Command::Spread { ideal: arg, horizon } => {
            let c = analytic_spread(&ideal(arg)?, *horizon)?;
            let text = c.value.map_or("undetermined".into(), |v| v.to_string());
            Report::ok(to_value(&c), text)
        }
        Command::Height { ideal: arg } => {
            let h = height(&ideal(arg)?)?;
            Report::ok(json!({ "height": h }), h.to_string())
        }
        Command::Reduction { j, i, horizon } => {
            let i = ideal(i)?;
            let j = load_ideal(j, Some(i.n()))?;
            let r = is_reduction(&j, &i, *horizon)?;
            let text = match r.t {
                Some(t) => format!("true, t = {t}"),
                None => format!("false within t <= {horizon}"),
            };
            Report::ok(to_value(&r), text)
        }
        Command::Normal { ideal: arg, horizon } => {
            let r = is_normal_up_to(&ideal(arg)?, *horizon)?;
            let text = match r.first_failure {
                None => format!("normal up to {horizon}"),
                Some(k) => format!("not normal: power {k} is not integrally closed"),
            };
            Report::ok(to_value(&r), text)
        }
        Command::ConjectureScan {
            ideal: arg,
            seed,
            count,
            vars,
            max_exp,
            min_gens,
            max_gens,
            horizon,
            limits,
        } => {
            if let Some(arg) = arg {
                let r = conjecture_check(&ideal(arg)?, *horizon, limits.limits())?;
                let text = format!(
                    "{}: sdepth(S/I) = {}, sdepth(I) = {}, n - spread = {}{}",
                    r.ideal,
                    r.sdepth_residue.value,
                    r.sdepth_ideal.value,
                    r.n - r.spread.value.unwrap_or(0),
                    if r.counterexample { "  COUNTEREXAMPLE" } else { "" }
                );
                return Ok(Report::ok(to_value(&r), text));
            }
            let template = RandomIdealSpec {
                seed: *seed,
                n: *vars,
                max_exponent: *max_exp,
                min_gens: *min_gens,
                max_gens: *max_gens,
                equigenerated: false,
                squarefree: false,
                integrally_close_after: true,
            };
            let r = conjecture_scan(&template, *count, *horizon, limits.limits())?;
            let mut text = format!(
                "checked {}, skipped {}, inconclusive {}, counterexamples {}",
                r.checked,
                r.skipped,
                r.inconclusive,
                r.counterexamples.len()
            );
            for c in &r.counterexamples {
                text.push_str(&format!("\nCOUNTEREXAMPLE {}", c.ideal));
            }
            Report::ok(to_value(&r), text)
        }
        Command::VerifyPaper { corpus, limits } => {
            let corpus = match corpus {
                Some(path) => Corpus::parse(&read_file(path)?)?,
                None => Corpus::builtin(),
            };
            let r = run_corpus(&corpus, limits.limits());
            let mut text = String::new();
            for c in &r.cases {
                let mark = if c.passed { "ok  " } else { "FAIL" };
                text.push_str(&format!("{mark} {}", c.id));
                if !c.passed {
                    text.push_str(&format!("  ({})", c.detail));
                }
                text.push('\n');
            }
            text.push_str(&format!("{}/{} cases passed", r.passed, r.total));
            Report {
                code: if r.all_passed() { EXIT_OK } else { EXIT_MISMATCH },
                json: to_value(&r),
                text,
            }
        }
    })
}

fn error_code(e: &Error) -> i32 {
    if e.is_parse() {
        EXIT_PARSE
    } else {
        EXIT_REJECTED
    }
}

/// Parses `args` (program name first), runs the command and writes the
/// report to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    if let Some(jobs) = cli.jobs {
        // fails only if a pool already exists, which keeps the earlier size
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global();
    }
    match execute(&cli) {
        Ok(report) => {
            let written = if cli.pretty {
                writeln!(out, "{}", report.text)
            } else {
                writeln!(out, "{}", report.json)
            };
            if written.is_err() {
                return EXIT_REJECTED;
            }
            report.code
        }
        Err(e) => {
            let _ = writeln!(err, "sdepthlab: {e}");
            error_code(&e)
        }
    }
}
