//! The `eisenstein` command line: argument parsing, validation, caching and the JSON
//! artifacts written by each subcommand.

use crate::arith::{dedekind_sum_fast, rational_string};
use crate::cusps::{all_cusps, eisenstein_divisor, ramification_index};
use crate::eisenstein::{f_values_with, p_m, period, winding_element_in, winding_element_via_boundary};
use crate::error::Error;
use crate::homology::{verify_eisenstein, ModularSymbols};
use crate::level::Level;
use crate::matrix::UnimodularMatrix;
use crate::numeric::{integrate, period_path, Integrand, DEFAULT_TAIL};
use crate::p1::P1List;
use crate::report::{Check, Report};
use crate::sampling::{random_gamma0, seeded_rng};
use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use std::ffi::OsString;
use std::path::PathBuf;

/// Bumped whenever the layout of any artifact changes; part of every cache key.
const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "eisenstein", version, about = "Eisenstein and winding elements of modular symbols for Gamma0(N)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the JSON artifact here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Directory of cached artifacts.
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,
    /// Run the exact and numeric checks for the command; exit 3 if any fails.
    #[arg(long, global = true)]
    pub verify: bool,
    /// Tolerance for numeric comparisons.
    #[arg(long, global = true, default_value_t = 1e-6)]
    pub tol: f64,
    /// Fixed number of q-expansion terms (default: chosen from the tail bound).
    #[arg(long, global = true)]
    pub terms: Option<usize>,
    /// Worker threads.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Dedekind sum s(u, v).
    Dedekind {
        #[arg(allow_negative_numbers = true)]
        u: BigInt,
        #[arg(allow_negative_numbers = true)]
        v: BigInt,
    },
    /// The classes of P1(Z/N) in canonical order.
    P1 { n: u64 },
    /// Cusp classes with representatives and ramification indices.
    Cusps { n: u64 },
    /// Divisor of E_m on X0(N).
    Divisor { n: u64, m: u64 },
    /// Period of E_m at the matrix (a b; c d).
    Period {
        n: u64,
        m: u64,
        #[arg(allow_negative_numbers = true)]
        a: BigInt,
        #[arg(allow_negative_numbers = true)]
        b: BigInt,
        #[arg(allow_negative_numbers = true)]
        c: BigInt,
        #[arg(allow_negative_numbers = true)]
        d: BigInt,
    },
    /// Coefficients F_m/6 of the Eisenstein element, in P1 order.
    Element { n: u64, m: u64 },
    /// The winding element and the coordinates of its integral multiple.
    Winding { n: u64 },
    /// Every exact check for all m | N plus numeric period checks.
    Verify { n: u64 },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Dedekind { .. } => "dedekind",
            Command::P1 { .. } => "p1",
            Command::Cusps { .. } => "cusps",
            Command::Divisor { .. } => "divisor",
            Command::Period { .. } => "period",
            Command::Element { .. } => "element",
            Command::Winding { .. } => "winding",
            Command::Verify { .. } => "verify",
        }
    }
}

/// A validated invocation.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub level: Option<Level>,
    pub m: Option<u64>,
    pub out: Option<PathBuf>,
    pub cache: Option<PathBuf>,
    pub verify: bool,
    pub tol: f64,
    pub terms: Option<usize>,
    pub jobs: usize,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Domain(#[from] Error),
    #[error("{0}")]
    Usage(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(Error::Numeric(_) | Error::Inconclusive(_)) => EXIT_VERIFY,
            _ => EXIT_USAGE,
        }
    }
}

fn cli_level(n: u64) -> Result<Level, CliError> {
    if n <= 4 {
        return Err(CliError::Usage(format!("level must be greater than 4, got {n}")));
    }
    Ok(Level::new(n)?)
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<RunConfig, CliError> {
        let (n, m) = match &cli.command {
            Command::Dedekind { .. } => (None, None),
            Command::P1 { n } | Command::Cusps { n } | Command::Winding { n } | Command::Verify { n } => {
                (Some(*n), None)
            }
            Command::Divisor { n, m } | Command::Element { n, m } | Command::Period { n, m, .. } => {
                (Some(*n), Some(*m))
            }
        };
        let level = n.map(cli_level).transpose()?;
        if let (Some(level), Some(m)) = (level, m) {
            level.check_index(m)?;
        }
        if !(cli.tol > 0.0 && cli.tol.is_finite()) {
            return Err(CliError::Usage(format!("tolerance must be positive, got {}", cli.tol)));
        }
        if cli.jobs == 0 {
            return Err(CliError::Usage("--jobs must be at least 1".into()));
        }
        if cli.terms == Some(0) {
            return Err(CliError::Usage("--terms must be at least 1".into()));
        }
        Ok(RunConfig {
            command: cli.command,
            level,
            m,
            out: cli.out,
            cache: cli.cache,
            verify: cli.verify,
            tol: cli.tol,
            terms: cli.terms,
            jobs: cli.jobs,
        })
    }

    /// Cache file for this invocation: every argument that affects the bytes, plus the
    /// crate version and schema version.
    fn cache_path(&self) -> Option<PathBuf> {
        let dir = self.cache.as_ref()?;
        let mut h = Sha256::new();
        h.update(env!("CARGO_PKG_VERSION"));
        h.update(SCHEMA_VERSION.to_le_bytes());
        h.update(format!("{:?}|{}|{}|{:?}", self.command, self.verify, self.tol, self.terms));
        let digest = h.finalize();
        let hex: String = digest.iter().take(8).map(|b| format!("{b:02x}")).collect();
        let n = self.level.map(|l| l.n().to_string()).unwrap_or_else(|| "-".into());
        let m = self.m.map(|m| m.to_string()).unwrap_or_else(|| "-".into());
        Some(dir.join(format!("{}-{n}-{m}-{hex}.json", self.command.name())))
    }
}

/// What a command produced: the artifact and whether its checks passed.
pub struct Outcome {
    pub json: Value,
    pub passed: bool,
}

fn level_of(cfg: &RunConfig) -> Level {
    cfg.level.expect("validated")
}

fn m_of(cfg: &RunConfig) -> u64 {
    cfg.m.expect("validated")
}

fn numeric_period(cfg: &RunConfig, m: u64, g: &UnimodularMatrix, exact: f64) -> Result<Check, Error> {
    let path = period_path(g, Complex64::new(0.0, 1.0), None)?;
    let v = integrate(&Integrand::eisenstein(m), &path, cfg.terms, DEFAULT_TAIL.max(cfg.tol / 100.0))?;
    let residual = (v.value() - Complex64::new(exact, 0.0)).norm();
    Ok(Check::new(
        format!("numeric_period m={m} {g}"),
        residual < cfg.tol,
        json!({"re": v.re, "im": v.im, "exact": exact, "residual": residual, "tail_bound": v.tail_bound, "terms": v.terms}),
    ))
}

/// Runs a validated command.
pub fn execute(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let ok = |json: Value| Ok(Outcome { json, passed: true });
    match &cfg.command {
        Command::Dedekind { u, v } => ok(json!(rational_string(&dedekind_sum_fast(u.clone(), v.clone())?))),
        Command::P1 { .. } => {
            let level = level_of(cfg);
            let list = P1List::new(level);
            let expected = level.p1_size();
            ok(json!({"N": level.n(), "size": list.len(), "expected_size": expected, "classes": list.classes()}))
                .map(|o: Outcome| Outcome { passed: !cfg.verify || list.len() == expected, ..o })
        }
        Command::Cusps { .. } => {
            let level = level_of(cfg);
            let cusps: Vec<Value> = all_cusps(level)
                .into_iter()
                .map(|y| {
                    let rep = match y.key {
                        1 => "0".to_string(),
                        k if k == level.n() => "oo".to_string(),
                        k => format!("1/{k}"),
                    };
                    json!({"key": y.key, "representative": rep, "ramification": ramification_index(level, y)})
                })
                .collect();
            let count = cusps.len();
            let expected = 1usize << level.primes().len();
            Ok(Outcome {
                json: json!({"N": level.n(), "count": count, "cusps": cusps}),
                passed: !cfg.verify || count == expected,
            })
        }
        Command::Divisor { .. } => {
            let (level, m) = (level_of(cfg), m_of(cfg));
            let div = eisenstein_divisor(level, m)?;
            let degree = rational_string(&div.degree());
            Ok(Outcome {
                passed: !cfg.verify || (div.is_integral() && degree == "0"),
                json: json!({"N": level.n(), "m": m, "divisor": div, "degree": degree}),
            })
        }
        Command::Period { a, b, c, d, .. } => {
            let (level, m) = (level_of(cfg), m_of(cfg));
            let g = UnimodularMatrix::new(a.clone(), b.clone(), c.clone(), d.clone())?;
            let exact = period(level, m, &g)?;
            let conj = if g.in_gamma2() { Some(rational_string(&p_m(level, m, &g)?)) } else { None };
            let mut json = json!({"N": level.n(), "m": m, "matrix": g, "period": rational_string(&exact), "p_m": conj});
            let mut passed = true;
            if cfg.verify {
                let check = numeric_period(cfg, m, &g, exact.to_f64().unwrap())?;
                passed = check.pass;
                json["numeric"] = check.detail;
            }
            Ok(Outcome { json, passed })
        }
        Command::Element { .. } => {
            let (level, m) = (level_of(cfg), m_of(cfg));
            let f = f_values_with(level, m, 0, cfg.jobs)?.to_element_scale();
            let json = serde_json::to_value(&f).expect("serializable");
            let mut passed = true;
            if cfg.verify {
                let report = verify_eisenstein(&ModularSymbols::new(level), m);
                for c in report.failures() {
                    eprintln!("check failed: {} {}", c.name, c.detail);
                }
                passed = report.passed();
            }
            Ok(Outcome { json, passed })
        }
        Command::Winding { .. } => {
            let level = level_of(cfg);
            let ms = ModularSymbols::new(level);
            let w = winding_element_in(&ms)?;
            let boundary = ms.boundary(&w.chain);
            let scaled = w.chain.scaled(&crate::arith::rat_int(w.multiplier));
            let coords = ms.integral_coordinates(&scaled);
            let mut json = serde_json::to_value(&w).expect("serializable");
            json["boundary"] = json!(boundary.to_display_string());
            json["coordinates"] = match &coords {
                Some(c) => json!(c.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
                None => Value::Null,
            };
            // Comparison with the class pinned down by its boundary; informational only.
            let reference = winding_element_via_boundary(&ms)?;
            let agrees = ms.reduce(&reference) == ms.reduce(&w.chain);
            json["diagnostics"] = json!({"agrees_with_boundary_characterization": agrees});
            Ok(Outcome { passed: !cfg.verify || (boundary.is_zero() && coords.is_some()), json })
        }
        Command::Verify { .. } => {
            let report = verify_level(cfg)?;
            Ok(Outcome { passed: report.passed(), json: serde_json::to_value(&report).expect("serializable") })
        }
    }
}

/// verify_eisenstein for every m | N plus numeric period checks at seeded random matrices.
fn verify_level(cfg: &RunConfig) -> Result<Report, CliError> {
    let level = level_of(cfg);
    let ms = ModularSymbols::new(level);
    let indices = level.eisenstein_indices();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let reports: Vec<Report> = pool.install(|| indices.par_iter().map(|&m| verify_eisenstein(&ms, m)).collect());
    let mut report = Report::new(level.n(), None);
    for (m, r) in indices.iter().zip(reports) {
        report.absorb(&format!("m={m}: "), r);
    }
    let mut rng = seeded_rng(level.n());
    let samples: Vec<UnimodularMatrix> = (0..4).map(|_| random_gamma0(level, &mut rng, 3, 40, false)).collect();
    for &m in &indices {
        for g in &samples {
            let exact = period(level, m, g)?.to_f64().unwrap();
            report.push(numeric_period(cfg, m, g, exact)?);
        }
    }
    Ok(report)
}

fn render(json: &Value) -> String {
    let mut s = serde_json::to_string_pretty(json).expect("serializable");
    s.push('\n');
    s
}

fn emit(cfg: &RunConfig, bytes: &[u8]) -> Result<(), CliError> {
    match &cfg.out {
        Some(p) => std::fs::write(p, bytes)?,
        None => {
            use std::io::Write;
            std::io::stdout().write_all(bytes)?;
        }
    }
    Ok(())
}

/// Executes, consulting and filling the cache. Only passing results are cached.
pub fn run(cfg: &RunConfig) -> Result<i32, CliError> {
    let cache = cfg.cache_path();
    if let Some(p) = &cache {
        if let Ok(bytes) = std::fs::read(p) {
            emit(cfg, &bytes)?;
            return Ok(EXIT_OK);
        }
    }
    let outcome = execute(cfg)?;
    let bytes = render(&outcome.json);
    emit(cfg, bytes.as_bytes())?;
    if !outcome.passed {
        return Ok(EXIT_VERIFY);
    }
    if let Some(p) = &cache {
        std::fs::create_dir_all(p.parent().expect("file in a directory"))?;
        let tmp = p.with_extension("tmp");
        std::fs::write(&tmp, &bytes)?;
        std::fs::rename(tmp, p)?;
    }
    Ok(EXIT_OK)
}

/// Full entry point: parse, validate, run. Returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let result = RunConfig::from_cli(cli).and_then(|cfg| run(&cfg));
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
