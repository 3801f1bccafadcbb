//! The `charge-basis` command line.
//!
//! Every subcommand builds a JSON report (schemas in `docs/formats.md`) and
//! prints it to stdout; `--report` also writes it to a file. Exit status is 0
//! when all requested checks pass, 1 when a check fails, and 2 on malformed
//! input.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::basis::{antisym_index_set, cc_shuffle_basis, charge_basis, hilbert_series, MonomialSet};
use crate::catabolism::{blasiak_ctype, ctype, ctype_of_permutation};
use crate::chains::{build_seed_filling, chains_run};
use crate::charge::{charge, charge_word, cocharge, cocharge_word};
use crate::error::{Error, Result};
use crate::partition::{Composition, Partition};
use crate::perm::{format_word, parse_word, Permutation};
use crate::quotient::certify::{antisymmetrized_basis, certify_antisym_basis, certify_basis, CertifyOptions};
use crate::quotient::{MVPolynomial, MonomialOrder};
use crate::symfun::{modified_hl, SymBasis};
use crate::theorems::{run_suite, Suite, SuiteOptions};

/// Version of the JSON report layout.
pub const SCHEMA_VERSION: u32 = 1;

/// Environment variable holding the worker thread count.
pub const THREADS_ENV: &str = "CHARGE_BASIS_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "charge-basis",
    version,
    about = "Charge monomial bases, catabolizability, and quotient ring certification"
)]
pub struct Cli {
    /// Also write the JSON report to this file.
    #[arg(long, global = true, value_name = "PATH")]
    report: Option<PathBuf>,
    /// Seed for sampled checks; recorded in every report.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum KindArg {
    Charge,
    Shuffle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum FormatArg {
    Json,
    Csv,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Command {
    /// RSK insertion and recording tableaux of a permutation.
    Rsk { perm: Permutation },
    /// Cocharge word and cocharge of a permutation.
    Cocharge { perm: Permutation },
    /// Charge word and charge of a permutation.
    Charge { perm: Permutation },
    /// The charge monomial x^cw(w).
    ChargeMonomial { perm: Permutation },
    /// Catabolizability type of P(w).
    Ctype { perm: Permutation },
    /// Blasiak insertion on a cocharge word.
    Blasiak { word: String },
    /// Chains insertion on a cocharge word with a block decomposition of its positions.
    Chains {
        word: String,
        /// JSON array of 1-based position blocks, e.g. `[[1,2,4],[3,5]]`.
        decomposition: String,
    },
    /// The charge basis C_μ or the shuffle basis of μ.
    Basis {
        #[arg(long)]
        mu: Partition,
        #[arg(long, value_enum, default_value_t = KindArg::Charge)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
    },
    /// Hilbert series of C_μ.
    Hilbert {
        #[arg(long)]
        mu: Partition,
    },
    /// The modified Hall-Littlewood function H̃_μ in the s, h, m or e basis.
    Hl {
        #[arg(long)]
        mu: Partition,
        #[arg(long, default_value = "s")]
        basis: SymBasis,
    },
    /// Antisymmetrized index set and polynomials for (μ, γ).
    Antisym {
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        gamma: Composition,
    },
    /// Certifies the charge basis of R_μ, or with --gamma its antisymmetrized basis, by Gröbner linear algebra.
    Verify {
        /// The ring R_μ.
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        gamma: Option<Composition>,
        #[arg(long, default_value = "grevlex")]
        order: MonomialOrder,
        /// Allow n = 6.
        #[arg(long)]
        groebner_n6: bool,
        /// Wall-clock limit for each Gröbner basis, in milliseconds.
        #[arg(long)]
        budget_ms: Option<u64>,
    },
    /// Runs verification suites on every size up to n.
    CheckTheorems {
        /// A suite name or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Size bound; defaults per suite. With `all`, clipped to each suite's limit.
        #[arg(long)]
        n: Option<usize>,
        /// Allow n = 6 in the Gröbner suites.
        #[arg(long)]
        groebner_n6: bool,
        #[arg(long)]
        budget_ms: Option<u64>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Rsk { .. } => "rsk",
            Command::Cocharge { .. } => "cocharge",
            Command::Charge { .. } => "charge",
            Command::ChargeMonomial { .. } => "charge-monomial",
            Command::Ctype { .. } => "ctype",
            Command::Blasiak { .. } => "blasiak",
            Command::Chains { .. } => "chains",
            Command::Basis { .. } => "basis",
            Command::Hilbert { .. } => "hilbert",
            Command::Hl { .. } => "hl",
            Command::Antisym { .. } => "antisym",
            Command::Verify { .. } => "verify",
            Command::CheckTheorems { .. } => "check-theorems",
        }
    }
}

/// Result of one subcommand before it is wrapped in a report.
struct Outcome {
    result: Map<String, Value>,
    pass: bool,
    timings: BTreeMap<String, f64>,
    /// Replaces the JSON on stdout (CSV tables).
    stdout: Option<String>,
}

impl Outcome {
    fn new(result: Value) -> Outcome {
        let Value::Object(result) = result else { panic!("results are JSON objects") };
        Outcome { result, pass: true, timings: BTreeMap::new(), stdout: None }
    }

    fn with_pass(mut self, pass: bool) -> Outcome {
        self.pass = pass;
        self
    }
}

#[derive(Serialize)]
struct Report<'a> {
    schema: String,
    schema_version: u32,
    tool_version: &'static str,
    config: &'a Command,
    seed: u64,
    #[serde(flatten)]
    result: Map<String, Value>,
    pass: bool,
    timings: BTreeMap<String, f64>,
}

fn millis(d: Duration) -> f64 {
    (d.as_secs_f64() * 1e6).round() / 1e3
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report values serialize")
}

fn monomial_strings(set: &MonomialSet) -> Vec<String> {
    set.monomials().iter().map(|m| format_word(m)).collect()
}

fn budget(ms: Option<u64>) -> Option<Duration> {
    ms.map(Duration::from_millis)
}

fn execute(command: &Command, seed: u64) -> Result<Outcome> {
    Ok(match command {
        Command::Rsk { perm } => {
            let (p, q) = perm.rsk();
            Outcome::new(json!({ "permutation": perm.to_string(), "shape": p.shape(), "p": p, "q": q }))
        }
        Command::Cocharge { perm } => Outcome::new(json!({
            "permutation": perm.to_string(),
            "cocharge_word": format_word(&cocharge_word(perm)),
            "cocharge": cocharge(perm),
        })),
        Command::Charge { perm } => Outcome::new(json!({
            "permutation": perm.to_string(),
            "charge_word": format_word(&charge_word(perm)),
            "charge": charge(perm),
        })),
        Command::ChargeMonomial { perm } => {
            let exps = charge_word(perm);
            let m = MVPolynomial::monomial(&exps, MonomialOrder::Grevlex);
            Outcome::new(json!({
                "permutation": perm.to_string(),
                "exponents": exps,
                "monomial": m.to_string(),
                "degree": charge(perm),
            }))
        }
        Command::Ctype { perm } => {
            let p = perm.insertion_tableau();
            let by_tableau = ctype(&p)?;
            let by_insertion = ctype_of_permutation(perm);
            Outcome::new(json!({
                "permutation": perm.to_string(),
                "insertion_tableau": p,
                "cocharge_word": format_word(&cocharge_word(perm)),
                "ctype": by_tableau,
            }))
            .with_pass(by_tableau == by_insertion)
        }
        Command::Blasiak { word } => {
            let z = parse_word(word)?;
            let out = blasiak_ctype(&z)?;
            Outcome::new(json!({
                "word": format_word(&z),
                "shape": out.shape,
                "filling": out.filling,
                "passes": out.passes,
                "rows": out.rows,
            }))
        }
        Command::Chains { word, decomposition } => {
            let z = parse_word(word)?;
            let blocks: Vec<Vec<usize>> =
                serde_json::from_str(decomposition).map_err(|e| Error::Parse(format!("decomposition: {e}")))?;
            let seed_filling = build_seed_filling(&z, &blocks)?;
            let out = chains_run(&z, &seed_filling)?;
            Outcome::new(json!({
                "word": format_word(&z),
                "decomposition": blocks,
                "seed": seed_filling,
                "ctype": out.ctype,
                "filling": out.filling,
                "shape_trace": out.shape_trace,
                "steps": out.steps,
            }))
        }
        Command::Basis { mu, kind, format } => {
            let set = match kind {
                KindArg::Charge => charge_basis(mu),
                KindArg::Shuffle => cc_shuffle_basis(mu),
            };
            let mut out = Outcome::new(json!({
                "mu": mu,
                "kind": set.kind,
                "n": set.n,
                "count": set.len(),
                "hilbert_series": hilbert_series(&set),
                "monomials": monomial_strings(&set),
            }));
            if *format == FormatArg::Csv {
                let mut csv = String::from("monomial,degree\n");
                for m in set.monomials() {
                    csv.push_str(&format!("{},{}\n", format_word(m), m.iter().sum::<usize>()));
                }
                out.stdout = Some(csv);
            }
            out
        }
        Command::Hilbert { mu } => {
            let series = hilbert_series(&charge_basis(mu));
            Outcome::new(json!({
                "mu": mu,
                "ring": mu.transpose(),
                "coefficients": series,
                "series": series.to_string(),
                "dimension": series.eval(1),
            }))
        }
        Command::Hl { mu, basis } => {
            let f = modified_hl(mu).to_basis(*basis);
            Outcome::new(json!({ "mu": mu, "basis": basis, "coefficients": f.to_coefficient_map() }))
        }
        Command::Antisym { mu, gamma } => {
            let set = antisym_index_set(mu, gamma)?;
            let polys = antisymmetrized_basis(mu, gamma, MonomialOrder::Grevlex)?;
            let entries: Vec<Value> = set
                .entries
                .iter()
                .zip(&polys)
                .map(|(e, (_, p))| {
                    json!({
                        "w": e.w.to_string(),
                        "p": e.p,
                        "q": e.q,
                        "charge": e.charge,
                        "charge_word": format_word(&e.charge_word),
                        "polynomial": p.to_string(),
                    })
                })
                .collect();
            Outcome::new(json!({
                "mu": mu,
                "gamma": gamma,
                "graded_count": set.graded_count(),
                "dimension": set.entries.len(),
                "entries": entries,
            }))
        }
        Command::Verify { mu, gamma, order, groebner_n6, budget_ms } => {
            let opts = CertifyOptions { order: *order, groebner_n6: *groebner_n6, budget: budget(*budget_ms) };
            opts.check_size(mu.size())?;
            let index = mu.transpose();
            let start = Instant::now();
            let (mut result, pass) = match gamma {
                None => {
                    let r = certify_basis(&charge_basis(&index), &index, &opts)?;
                    let pass = r.pass;
                    (to_value(&r), pass)
                }
                Some(g) => {
                    let r = certify_antisym_basis(&index, g, &opts)?;
                    let pass = r.pass;
                    let dimension = r.ambient_rank;
                    let mut v = to_value(&r);
                    v["dimension"] = json!(dimension);
                    (v, pass)
                }
            };
            let elapsed = start.elapsed();
            let obj = result.as_object_mut().expect("object");
            obj.remove("pass");
            obj.remove("mu");
            obj.insert("mu".into(), to_value(mu));
            obj.insert("basis_index".into(), to_value(&index));
            obj.insert("gamma".into(), to_value(gamma));
            let mut out = Outcome::new(result).with_pass(pass);
            out.timings.insert("certify_ms".into(), millis(elapsed));
            out
        }
        Command::CheckTheorems { suite, n, groebner_n6, budget_ms } => {
            let suites = Suite::parse_selection(suite)?;
            let opts = SuiteOptions {
                certify: CertifyOptions { groebner_n6: *groebner_n6, budget: budget(*budget_ms), ..Default::default() },
                seed,
            };
            let mut reports = Vec::new();
            let mut timings = BTreeMap::new();
            for s in &suites {
                let size = match n {
                    Some(n) if suites.len() > 1 => (*n).min(s.max_n(*groebner_n6)),
                    Some(n) => *n,
                    None => s.default_n(),
                };
                let start = Instant::now();
                let r = run_suite(*s, size, &opts)?;
                let elapsed = start.elapsed();
                eprintln!(
                    "{:<18} n={size:<2} {} ({} checks, {} failures, {:.1} s)",
                    s.name(),
                    if r.pass { "pass" } else { "FAIL" },
                    r.checked,
                    r.failure_count,
                    elapsed.as_secs_f64()
                );
                timings.insert(format!("{}_ms", s.name()), millis(elapsed));
                reports.push(r);
            }
            let pass = reports.iter().all(|r| r.pass);
            let mut out = Outcome::new(json!({ "suites": reports })).with_pass(pass);
            out.timings = timings;
            out
        }
    })
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::TimeBudgetExceeded { .. } | Error::ChainsCondition { .. } => 1,
        _ => 2,
    }
}

fn configure_threads() -> std::result::Result<(), String> {
    let Ok(raw) = std::env::var(THREADS_ENV) else { return Ok(()) };
    let threads: usize =
        raw.trim().parse().map_err(|_| format!("{THREADS_ENV} must be a positive integer, got {raw:?}"))?;
    if threads == 0 {
        return Err(format!("{THREADS_ENV} must be positive"));
    }
    // A pool built earlier in the process (tests) is kept.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    Ok(())
}

/// Builds the report JSON for a parsed command line.
pub fn report_json(cli: &Cli) -> Result<(String, Option<String>, bool)> {
    let start = Instant::now();
    let mut outcome = execute(&cli.command, cli.seed)?;
    outcome.timings.insert("total_ms".into(), millis(start.elapsed()));
    let report = Report {
        schema: format!("charge-basis/{}", cli.command.name()),
        schema_version: SCHEMA_VERSION,
        tool_version: env!("CARGO_PKG_VERSION"),
        config: &cli.command,
        seed: cli.seed,
        result: outcome.result,
        pass: outcome.pass,
        timings: outcome.timings,
    };
    let text = serde_json::to_string_pretty(&report).expect("report serializes") + "\n";
    Ok((text, outcome.stdout, outcome.pass))
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    if let Err(msg) = configure_threads() {
        eprintln!("error: {msg}");
        return 2;
    }
    let (json, stdout, pass) = match report_json(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code(&e);
        }
    };
    if let Some(path) = &cli.report {
        if let Err(e) = std::fs::write(path, &json) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return 2;
        }
    }
    print!("{}", stdout.unwrap_or(json));
    if pass {
        0
    } else {
        1
    }
}
