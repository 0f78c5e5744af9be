//! Command-line frontend for the `girthlab` binary.
//!
//! Exit codes: 0 success, 1 parameter or usage error, 2 budget exhausted
//! (partial result written), 3 a verification check did not hold.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::cayley::{self, BfsOptions, DEFAULT_MEMORY_BUDGET};
use crate::error::{Error, Result};
use crate::exactmat::{magic_lower, magic_upper, power_closed_form};
use crate::modmat::{is_prime, reduce};
use crate::params::{self, binom_mod_direct, Family, GuaranteeKind, Regime};
use crate::spectral::{self, DEFAULT_ORDER_LIMIT, DEFAULT_SEED};
use crate::words::{self, DEFAULT_WORD_BUDGET};

pub const SCHEMA_VERSION: u32 = 1;
/// Overrides the default BFS memory budget, in bytes.
pub const MEMORY_BUDGET_ENV: &str = "GIRTHLAB_MEMORY_BUDGET";

#[derive(Debug, Parser)]
#[command(name = "girthlab", version, about = "Cayley graphs of SL_n(F_p) from unitriangular generator pairs")]
pub struct RunConfig {
    /// Worker threads (default: all cores). Never changes any output.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// BFS memory budget in bytes [env: GIRTHLAB_MEMORY_BUDGET, default 8 GiB].
    #[arg(long, global = true)]
    pub memory_budget: Option<u64>,
    /// Write to this file instead of stdout.
    #[arg(long, short, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct SpecArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub l: u64,
    #[arg(long)]
    pub a: i64,
    #[arg(long)]
    pub b: i64,
}

impl SpecArgs {
    fn family(&self) -> Family {
        Family::new(self.n, self.l, self.a, self.b)
    }
}

#[derive(Debug, Clone, Args)]
pub struct PrimeArgs {
    /// Inclusive range `lo..hi` or a comma-separated list.
    #[arg(long)]
    pub primes: PrimeSelector,
    /// Also skip primes with a ≡ 1 or b ≡ 1.
    #[arg(long)]
    pub skip_unit_residues: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MatrixFormat {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify (n, l, a, b) and list the guarantees it carries.
    Validate(SpecArgs),
    /// Print A^l and B^l, optionally reduced modulo p.
    Construct {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long, value_enum, default_value_t = MatrixFormat::Json)]
        format: MatrixFormat,
    },
    /// Girth of Cay(<A^l, B^l> mod p).
    Girth {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        p: u64,
    },
    /// Order and diameter of Cay(<A^l, B^l> mod p).
    Diameter {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        p: u64,
    },
    /// Per-prime order, girth, diameter and diameter/girth ratio.
    DgTable {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        primes: PrimeArgs,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        /// Fill the `seconds` column with wall-clock times.
        #[arg(long)]
        timings: bool,
    },
    /// Spectral girth lower bound from the Gram matrices of A^l and B^l.
    Bound {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        p: u64,
    },
    /// Second adjacency eigenvalue for one modulus or a table of primes.
    Spectral {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, conflicts_with = "primes")]
        p: Option<u64>,
        #[arg(long)]
        primes: Option<PrimeSelector>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_ORDER_LIMIT)]
        order_limit: u64,
        #[arg(long, value_enum, default_value_t = TableFormat::Json)]
        format: TableFormat,
    },
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Schreier generators of the index-m subgroup, optionally with graph stats mod p.
    SubgroupGens {
        #[arg(long)]
        index: u64,
        #[arg(long, requires_all = ["n", "a", "b"])]
        p: Option<u64>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 1)]
        l: u64,
        #[arg(long)]
        a: Option<i64>,
        #[arg(long)]
        b: Option<i64>,
    },
    /// Graphviz export of the full Cayley graph (order at most 10000).
    ExportDot {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        p: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// Scan reduced words for integral relators.
    Freeness {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        max_length: u32,
        #[arg(long, default_value_t = DEFAULT_WORD_BUDGET)]
        word_budget: u64,
    },
    /// Compare the BFS order with |SL_n(F_p)| for each prime.
    Generation {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        primes: PrimeArgs,
    },
    /// Replay an explicit generation recipe.
    Recipe {
        #[command(subcommand)]
        recipe: RecipeCommand,
    },
    /// Check digit binomials and list admissible exponents.
    Lucas {
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 200)]
        alpha_max: u64,
        #[arg(long, requires = "count")]
        n: Option<usize>,
        #[arg(long)]
        count: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
pub enum RecipeCommand {
    /// SL_3 over F_3 with X = A^4, Y = B^4.
    Sl3 {
        #[arg(long, default_value_t = 4)]
        a: i64,
        #[arg(long, default_value_t = 2)]
        b: i64,
        #[arg(long)]
        no_closure: bool,
    },
    /// SL_{q^t+1} over F_q with unit bidiagonal generators.
    Qt {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        t: u32,
        #[arg(long)]
        no_closure: bool,
    },
}

/// Which primes to visit: an inclusive range or an explicit list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrimeSelector {
    Range(u64, u64),
    List(Vec<u64>),
}

impl FromStr for PrimeSelector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::param(format!("cannot parse prime selector `{s}`"));
        if let Some((lo, hi)) = s.split_once("..") {
            let lo: u64 = lo.trim().parse().map_err(|_| bad())?;
            let hi: u64 = hi.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
            if lo < 2 {
                return Err(Error::param("range bounds must be at least 2"));
            }
            return Ok(PrimeSelector::Range(lo, hi));
        }
        let list = s
            .split(',')
            .map(|x| x.trim().parse::<u64>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        Ok(PrimeSelector::List(list))
    }
}

/// Ascending primes from the selector, skipping `p | a` and `p | b` when a
/// spec is given, and optionally `a ≡ 1` or `b ≡ 1 (mod p)`.
pub fn prime_iter(sel: &PrimeSelector, spec: Option<(i64, i64)>, skip_unit_residues: bool) -> Result<Vec<u64>> {
    let mut ps: Vec<u64> = match sel {
        PrimeSelector::Range(lo, hi) => (*lo..=*hi).filter(|&p| is_prime(p)).collect(),
        PrimeSelector::List(v) => {
            if let Some(&c) = v.iter().find(|&&p| !is_prime(p)) {
                return Err(Error::NotPrime(c));
            }
            v.clone()
        }
    };
    ps.sort_unstable();
    ps.dedup();
    if let Some((a, b)) = spec {
        ps.retain(|&p| {
            let (ra, rb) = (a.rem_euclid(p as i64), b.rem_euclid(p as i64));
            ra != 0 && rb != 0 && !(skip_unit_residues && (ra == 1 || rb == 1))
        });
    }
    if ps.is_empty() {
        eprintln!("warning: prime selection is empty");
    }
    Ok(ps)
}

fn envelope<T: Serialize>(command: &str, body: &T) -> Result<Value> {
    let mut v = json!({ "schema_version": SCHEMA_VERSION, "command": command });
    let body = serde_json::to_value(body)?;
    match body {
        Value::Object(map) => {
            for (k, x) in map {
                v[k] = x;
            }
        }
        other => v["result"] = other,
    }
    Ok(v)
}

/// Everything a subcommand produces: the rendered output plus its exit code.
struct Outcome {
    text: String,
    code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, code: 0 }
    }

    fn json(v: &Value, code: i32) -> Result<Self> {
        Ok(Self {
            text: serde_json::to_string_pretty(v)? + "\n",
            code,
        })
    }
}

fn memory_budget(cfg: &RunConfig) -> Result<u64> {
    if let Some(b) = cfg.memory_budget {
        return Ok(b);
    }
    match std::env::var(MEMORY_BUDGET_ENV) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Error::param(format!("{MEMORY_BUDGET_ENV}=`{s}` is not a byte count"))),
        Err(_) => Ok(DEFAULT_MEMORY_BUDGET),
    }
}

/// Parses `argv` (program name first), runs the subcommand and returns the
/// process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cfg) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

/// Runs a parsed configuration, writing output, and returns the exit code.
pub fn execute(cfg: &RunConfig) -> Result<i32> {
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(t) = cfg.threads {
        pool = pool.num_threads(t);
    }
    let pool = pool
        .build()
        .map_err(|e| Error::param(format!("thread pool: {e}")))?;
    let outcome = pool.install(|| dispatch(cfg));
    let outcome = match outcome {
        Ok(o) => o,
        Err(e @ (Error::BudgetExceeded { .. } | Error::OrderLimit { .. })) => {
            let partial = match &e {
                Error::BudgetExceeded {
                    budget_bytes,
                    visited,
                    depth,
                } => json!({
                    "status": "budget_exhausted",
                    "budget_bytes": budget_bytes,
                    "visited": visited,
                    "depth_reached": depth,
                    "diameter_lower_bound": depth,
                }),
                Error::OrderLimit { order, limit } => json!({
                    "status": "order_limit",
                    "order_at_least": order,
                    "limit": limit,
                }),
                _ => unreachable!(),
            };
            eprintln!("error: {e}");
            let mut v = envelope("partial", &partial)?;
            v["error"] = Value::String(e.to_string());
            Outcome::json(&v, e.exit_code())?
        }
        Err(e) => return Err(e),
    };
    match &cfg.out {
        Some(path) => {
            let mut f = BufWriter::new(File::create(path)?);
            f.write_all(outcome.text.as_bytes())?;
            f.flush()?;
        }
        None => {
            let mut s = io::stdout().lock();
            s.write_all(outcome.text.as_bytes())?;
            s.flush()?;
        }
    }
    Ok(outcome.code)
}

fn check_modulus(p: u64) -> Result<()> {
    if p < 2 {
        return Err(Error::param(format!("modulus must be at least 2, got {p}")));
    }
    Ok(())
}

fn dispatch(cfg: &RunConfig) -> Result<Outcome> {
    let opts = BfsOptions {
        memory_budget: memory_budget(cfg)?,
        stop_at_girth: false,
    };
    match &cfg.command {
        Command::Validate(s) => {
            let spec = params::validate(s.n, s.l, s.a, s.b)?;
            Outcome::json(&envelope("validate", &spec)?, 0)
        }
        Command::Construct { spec, p, format } => construct(spec, *p, *format),
        Command::Girth { spec, p } => {
            check_modulus(*p)?;
            let gens = cayley::family_generators(&spec.family(), *p)?;
            let g = cayley::girth_with(&gens, &opts)?;
            Outcome::json(
                &envelope("girth", &json!({ "family": spec.family(), "p": p, "girth": g }))?,
                0,
            )
        }
        Command::Diameter { spec, p } => {
            check_modulus(*p)?;
            let s = cayley::stats(&spec.family(), *p, &opts)?;
            Outcome::json(
                &envelope(
                    "diameter",
                    &json!({
                        "family": spec.family(),
                        "p": p,
                        "order": s.order,
                        "diameter": s.diameter,
                        "generated_full": s.generated_full,
                    }),
                )?,
                0,
            )
        }
        Command::DgTable {
            spec,
            primes,
            format,
            timings,
        } => {
            let ps = prime_iter(&primes.primes, Some((spec.a, spec.b)), primes.skip_unit_residues)?;
            let rows = cayley::dg_table(&spec.family(), &ps, &opts);
            match format {
                TableFormat::Csv => {
                    let mut buf = Vec::new();
                    cayley::write_dg_csv(&rows, &mut buf, *timings)?;
                    Ok(Outcome::ok(String::from_utf8(buf).expect("csv is utf-8")))
                }
                TableFormat::Json => {
                    let rows: Vec<Value> = rows
                        .iter()
                        .map(|r| {
                            let mut v = serde_json::to_value(r).expect("serialisable row");
                            if !*timings {
                                if let Some(s) = v.get_mut("stats").and_then(|s| s.as_object_mut()) {
                                    s.remove("seconds");
                                }
                            }
                            v
                        })
                        .collect();
                    Outcome::json(&envelope("dg-table", &json!({ "family": spec.family(), "rows": rows }))?, 0)
                }
            }
        }
        Command::Bound { spec, p } => {
            let b = spectral::girth_lower_bound(&spec.family(), *p)?;
            Outcome::json(&envelope("bound", &b)?, 0)
        }
        Command::Spectral {
            spec,
            p,
            primes,
            seed,
            order_limit,
            format,
        } => spectral_cmd(spec, *p, primes.as_ref(), *seed, *order_limit, *format),
        Command::Verify(v) => verify(v, &opts),
        Command::SubgroupGens { index, p, n, l, a, b } => {
            let s = words::schreier_generators(*index)?;
            let mut v = envelope(
                "subgroup-gens",
                &json!({
                    "index": s.index,
                    "rank": s.rank,
                    "generators": s.generators.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
                }),
            )?;
            if let (Some(p), Some(n), Some(a), Some(b)) = (p, n, a, b) {
                check_modulus(*p)?;
                let fam = Family::new(*n, *l, *a, *b);
                let [x, y] = cayley::family_generators(&fam, *p)?;
                let imgs = s
                    .generators
                    .iter()
                    .map(|w| words::eval_word_mod(w, &x, &y))
                    .collect::<Result<Vec<_>>>()?;
                let st = cayley::stats_for(&imgs, Some(fam), &opts)?;
                v["graph"] = json!({
                    "p": p,
                    "order": st.order,
                    "generated_full": st.generated_full,
                    "degree": st.degree,
                    "girth": st.girth,
                    "diameter": st.diameter,
                    "dg_ratio": st.ratio(),
                });
            }
            Outcome::json(&v, 0)
        }
        Command::ExportDot { spec, p } => {
            check_modulus(*p)?;
            let gens = cayley::family_generators(&spec.family(), *p)?;
            let mut buf = Vec::new();
            cayley::export_dot(&gens, &mut buf)?;
            Ok(Outcome::ok(String::from_utf8(buf).expect("dot is utf-8")))
        }
    }
}

fn construct(spec: &SpecArgs, p: Option<u64>, format: MatrixFormat) -> Result<Outcome> {
    if spec.n < 2 {
        return Err(Error::param("dimension must be at least 2"));
    }
    let l = i64::try_from(spec.l).map_err(|_| Error::Overflow("power l".into()))?;
    let x = power_closed_form(&magic_upper(spec.n, spec.a), l)?;
    let y = power_closed_form(&magic_lower(spec.n, spec.b), l)?;
    let reduced = match p {
        Some(p) => {
            check_modulus(p)?;
            Some((reduce(&x, p)?, reduce(&y, p)?))
        }
        None => None,
    };
    match format {
        MatrixFormat::Text => {
            let mut s = format!("X = A^{} =\n{x}\nY = B^{} =\n{y}\n", spec.l, spec.l);
            if let (Some(p), Some((xp, yp))) = (p, &reduced) {
                s += &format!("X mod {p} =\n{xp}\nY mod {p} =\n{yp}\n");
            }
            Ok(Outcome::ok(s))
        }
        MatrixFormat::Json => {
            let rows = |m: &crate::exactmat::ExactMatrix| -> Vec<Vec<String>> {
                m.rows().map(|r| r.iter().map(|e| e.to_string()).collect()).collect()
            };
            let mut v = envelope(
                "construct",
                &json!({ "family": spec.family(), "x": rows(&x), "y": rows(&y) }),
            )?;
            if let (Some(p), Some((xp, yp))) = (p, reduced) {
                v["p"] = json!(p);
                v["x_mod_p"] = serde_json::to_value(&xp)?;
                v["y_mod_p"] = serde_json::to_value(&yp)?;
            }
            Outcome::json(&v, 0)
        }
    }
}

#[derive(Serialize)]
struct SpectralRow {
    p: u64,
    order: u64,
    degree: usize,
    second_eigenvalue: f64,
    gap: f64,
    iterations: u32,
    converged: bool,
    seed: u64,
}

fn spectral_cmd(
    spec: &SpecArgs,
    p: Option<u64>,
    primes: Option<&PrimeSelector>,
    seed: u64,
    order_limit: u64,
    format: TableFormat,
) -> Result<Outcome> {
    let ps = match (p, primes) {
        (Some(p), None) => {
            check_modulus(p)?;
            vec![p]
        }
        (None, Some(sel)) => prime_iter(sel, Some((spec.a, spec.b)), false)?,
        _ => return Err(Error::param("give exactly one of --p or --primes")),
    };
    let mut rows = Vec::new();
    for p in ps {
        let gens = cayley::family_generators(&spec.family(), p)?;
        let r = spectral::second_eigenvalue(&gens, order_limit, seed)?;
        rows.push(SpectralRow {
            p,
            order: r.order,
            degree: r.degree,
            second_eigenvalue: r.second_eigenvalue,
            gap: r.normalized_gap,
            iterations: r.iterations,
            converged: r.converged,
            seed: r.seed,
        });
    }
    match format {
        TableFormat::Json => Outcome::json(&envelope("spectral", &json!({ "family": spec.family(), "rows": rows }))?, 0),
        TableFormat::Csv => {
            let mut buf = Vec::new();
            {
                let mut w = csv::Writer::from_writer(&mut buf);
                for r in &rows {
                    w.serialize(r)?;
                }
                w.flush()?;
            }
            Ok(Outcome::ok(String::from_utf8(buf).expect("csv is utf-8")))
        }
    }
}

fn verify(cmd: &VerifyCommand, opts: &BfsOptions) -> Result<Outcome> {
    match cmd {
        VerifyCommand::Freeness {
            spec,
            max_length,
            word_budget,
        } => {
            let r = words::freeness_scan_with(spec.n, spec.l, spec.a, spec.b, *max_length, *word_budget)?;
            // a relator only contradicts something when freeness was promised
            let promised = params::validate(spec.n, spec.l, spec.a, spec.b)
                .map(|s| s.has(GuaranteeKind::Freeness))
                .unwrap_or(false);
            let mut v = envelope("verify-freeness", &r)?;
            v["freeness_guaranteed"] = json!(promised);
            let code = if promised && !r.violations.is_empty() {
                3
            } else if r.partial {
                2
            } else {
                0
            };
            Outcome::json(&v, code)
        }
        VerifyCommand::Generation { spec, primes } => {
            let fam = spec.family();
            let ps = prime_iter(&primes.primes, Some((spec.a, spec.b)), primes.skip_unit_residues)?;
            let promised_all_primes = params::validate(spec.n, spec.l, spec.a, spec.b)
                .map(|s| s.regime == Some(Regime::Dim2) && s.has(GuaranteeKind::Generation))
                .unwrap_or(false);
            let mut rows = Vec::new();
            let mut largest_failing: Option<u64> = None;
            for p in ps {
                let gens = cayley::family_generators(&fam, p)?;
                let order = cayley::closure_with(&gens, opts)?;
                let expected = crate::modmat::group_order_sl(spec.n, p)?;
                let full = order as u128 == expected;
                if !full {
                    largest_failing = Some(p);
                }
                rows.push(json!({ "p": p, "order": order, "expected": expected.to_string(), "full": full }));
            }
            let code = if promised_all_primes && largest_failing.is_some() { 3 } else { 0 };
            let v = envelope(
                "verify-generation",
                &json!({
                    "family": fam,
                    "guaranteed_for_all_primes": promised_all_primes,
                    "largest_failing_prime": largest_failing,
                    "rows": rows,
                }),
            )?;
            Outcome::json(&v, code)
        }
        VerifyCommand::Recipe { recipe } => {
            let r = match recipe {
                RecipeCommand::Sl3 { a, b, no_closure } => {
                    words::replay_recipe_sl3_mod3_with(*a, *b, (!no_closure).then_some(opts))
                }
                RecipeCommand::Qt { q, t, no_closure } => {
                    words::replay_recipe_qt_with(*q, *t, (!no_closure).then_some(opts))
                }
            };
            match r {
                Ok(r) => {
                    let code = if r.closure_error.is_some() { 2 } else { 0 };
                    let mut v = envelope("verify-recipe", &r)?;
                    v["generated_full"] = json!(r.generated_full());
                    Outcome::json(&v, code)
                }
                Err(e @ Error::RecipeFailure { .. }) => {
                    eprintln!("error: {e}");
                    let v = envelope("verify-recipe", &json!({ "status": "mismatch", "error": e.to_string() }))?;
                    Outcome::json(&v, 3)
                }
                Err(e) => Err(e),
            }
        }
        VerifyCommand::Lucas {
            q,
            alpha_max,
            n,
            count,
        } => {
            let mut mismatches = Vec::new();
            for alpha in 0..=*alpha_max {
                for beta in 0..=alpha {
                    let l = params::lucas_binom_mod(alpha, beta, *q)?;
                    if l != binom_mod_direct(alpha, beta, *q) {
                        mismatches.push([alpha, beta]);
                    }
                }
            }
            let mut v = envelope(
                "verify-lucas",
                &json!({ "q": q, "alpha_max": alpha_max, "mismatches": mismatches }),
            )?;
            if let (Some(n), Some(count)) = (n, count) {
                v["n"] = json!(n);
                v["admissible_exponents"] = json!(params::admissible_exponents(*n, *q, *count)?);
            }
            Outcome::json(&v, if mismatches.is_empty() { 0 } else { 3 })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_iter_examples() {
        let r = |s: &str| s.parse::<PrimeSelector>().unwrap();
        assert_eq!(prime_iter(&r("3..20"), Some((2, 2)), false).unwrap(), vec![3, 5, 7, 11, 13, 17, 19]);
        assert_eq!(prime_iter(&r("2..4"), Some((2, 2)), false).unwrap(), vec![3]);
        assert_eq!(prime_iter(&r("3,5"), None, false).unwrap(), vec![3, 5]);
        assert_eq!(prime_iter(&r("5,3,5"), None, false).unwrap(), vec![3, 5]);
        assert!(prime_iter(&r("4,5"), None, false).is_err());
        assert!("1..10".parse::<PrimeSelector>().is_err());
        assert!("x".parse::<PrimeSelector>().is_err());
        // a = 4 ≡ 1 (mod 3), b = 7 ≡ 1 (mod 2, 3)
        assert_eq!(prime_iter(&r("3..13"), Some((4, 7)), true).unwrap(), vec![5, 11, 13]);
    }

    #[test]
    fn unknown_flag_is_usage_error() {
        assert_eq!(run(["girthlab", "validate", "--bogus"]), 1);
        assert_eq!(run(["girthlab"]), 1);
    }
}
