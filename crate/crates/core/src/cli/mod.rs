//! Command-line front end.
//!
//! [`run_command`] parses an argument vector, dispatches, and returns the
//! exit status together with everything that would go to stdout and stderr.
//! Exit status is 0 on success, 1 on a domain error and 2 on a usage error.
//! Big integers are emitted as decimal strings in JSON.

pub mod cache;
mod selftest;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::{Serialize, Serializer};
use serde_json::json;

use crate::bounds::{self, FiniteGroupQuery, Twist};
use crate::error::{Error, Result};
use crate::jantzen::{self, LengthCache};
use crate::rootsys::{RootSystem, RootSystemSpec, Weight};
use crate::weights::{self, PrimeContext, WallConvention};

pub use selftest::{run_selftest, SelfCheck};

pub fn ser_big<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

pub fn ser_big_opt<S: Serializer>(v: &Option<BigUint>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.collect_str(v),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "weylbound", version, about = "Jantzen sum formula data and first-cohomology bounds")]
pub struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum)]
    format: Option<OutputFormat>,
    /// Shorthand for --format json
    #[arg(long, global = true)]
    json: bool,
    /// Length-bound cache file
    #[arg(long, global = true, env = cache::CACHE_ENV)]
    cache: Option<PathBuf>,
    /// Diagnostics on stderr (repeat for more)
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

/// Resolved global options.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliConfig {
    pub output_format: OutputFormat,
    pub cache_path: Option<PathBuf>,
    pub verbosity: u8,
}

#[derive(Debug, Args)]
struct TypeArg {
    /// Root system type, e.g. A2, B3, E8, G2
    #[arg(value_name = "TYPE")]
    ty: String,
}

#[derive(Debug, Args)]
struct WeightArgs {
    #[command(flatten)]
    ty: TypeArg,
    #[arg(long)]
    p: u64,
    /// Fundamental-weight coordinates, comma separated
    #[arg(long, allow_hyphen_values = true)]
    lam: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Dump root data as JSON
    Roots(TypeArg),
    /// Alcove depth d(lambda)
    Dlambda {
        #[command(flatten)]
        w: WeightArgs,
        /// Use floor(<lambda+rho, alpha^vee>/p) instead of the upper-closure convention
        #[arg(long)]
        floor: bool,
    },
    /// Maximum of d(lambda) over restricted weights
    Maxd {
        #[command(flatten)]
        ty: TypeArg,
        /// Prime p >= h (default: the smallest one)
        #[arg(long)]
        p: Option<u64>,
    },
    /// Collected right-hand side of the sum formula
    Jantzen(WeightArgs),
    /// Weyl module length bounds
    #[command(subcommand)]
    Length(LengthCommand),
    /// First cohomology bounds
    #[command(subcommand)]
    Bound(BoundCommand),
    /// Batch tables
    #[command(subcommand)]
    Table(TableCommand),
    /// Run the built-in consistency checks
    Selftest,
}

#[derive(Debug, Subcommand)]
enum LengthCommand {
    /// Recursive bound from the sum formula (cached)
    Exact(WeightArgs),
    /// Closed form sum_{i<=d} z^i with z = d floor(log_p(b-1))
    Closed {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        b: i64,
        #[arg(long)]
        p: u64,
    },
    /// Coarse bound for all restricted weights
    Restricted {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long)]
        p: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BalgSource {
    Restricted,
    Lcf,
}

#[derive(Debug, Subcommand)]
enum BoundCommand {
    TheoremA {
        #[arg(long)]
        h: u64,
        #[arg(long)]
        p: u64,
    },
    TheoremC {
        #[arg(long)]
        h: u64,
    },
    Lcf(TypeArg),
    Steinberg {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        r: u32,
    },
    CrossChar {
        #[command(flatten)]
        ty: TypeArg,
        /// Twisted rank
        #[arg(long)]
        e: usize,
    },
    Finite {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        r: u32,
        #[arg(long, default_value = "untwisted")]
        twist: String,
        /// Twisted rank (default: the rank)
        #[arg(long)]
        e: Option<usize>,
        /// Explicit bound for the algebraic group
        #[arg(long, conflicts_with = "balg_source")]
        balg: Option<String>,
        /// Derive the algebraic-group bound
        #[arg(long, value_enum, default_value = "restricted")]
        balg_source: BalgSource,
    },
}

#[derive(Debug, Subcommand)]
enum TableCommand {
    Growth {
        #[arg(long)]
        lmax: usize,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Ctx {
    config: CliConfig,
    stderr: String,
}

fn parse_weight(rs: &RootSystem, s: &str) -> Result<Weight> {
    let coords: std::result::Result<Vec<i64>, _> = s.split(',').map(|t| t.trim().parse::<i64>()).collect();
    let coords = coords.map_err(|_| Error::Domain(format!("cannot parse weight {s:?}")))?;
    let w = Weight(coords);
    rs.check_rank(&w)?;
    Ok(w)
}

fn system(ty: &TypeArg) -> Result<RootSystem> {
    RootSystem::from_str_spec(&ty.ty)
}

fn pretty<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serialisable") + "\n"
}

pub fn run_command<I, T>(args: I) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CommandOutput { status: 2, stdout: String::new(), stderr: text }
            } else {
                CommandOutput { status: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let output_format = if cli.json {
        OutputFormat::Json
    } else {
        cli.format.unwrap_or(match cli.command {
            Command::Table(_) => OutputFormat::Csv,
            Command::Roots(_) => OutputFormat::Json,
            _ => OutputFormat::Text,
        })
    };
    let config = CliConfig { output_format, cache_path: cli.cache.clone(), verbosity: cli.verbose };
    let mut ctx = Ctx { config, stderr: String::new() };
    match dispatch(&cli.command, &mut ctx) {
        Ok((status, stdout)) => CommandOutput { status, stdout, stderr: ctx.stderr },
        Err(e) => {
            let _ = writeln!(ctx.stderr, "error: {e}");
            CommandOutput { status: 1, stdout: String::new(), stderr: ctx.stderr }
        }
    }
}

fn dispatch(cmd: &Command, ctx: &mut Ctx) -> Result<(i32, String)> {
    let fmt = ctx.config.output_format;
    let out = match cmd {
        Command::Roots(ty) => {
            let rs = system(ty)?;
            pretty(&json!({
                "type": rs.spec().to_string(),
                "rank": rs.rank(),
                "cartan": rs.cartan(),
                "coxeter_number": rs.coxeter_number(),
                "num_pos_roots": rs.num_pos_roots(),
                "alpha_zero": rs.alpha_zero(),
                "rho": rs.rho(),
                "weyl_group_order": rs.weyl_group_order().to_string(),
                "positive_roots": rs.positive_roots(),
            }))
        }
        Command::Dlambda { w, floor } => {
            let rs = system(&w.ty)?;
            let p = PrimeContext::new(w.p)?;
            let lam = parse_weight(&rs, &w.lam)?;
            let conv = if *floor { WallConvention::Floor } else { WallConvention::UpperClosure };
            let d = weights::d_lambda_with(&rs, &lam, p, conv)?;
            match fmt {
                OutputFormat::Json => pretty(&json!({"type": rs.spec().to_string(), "p": w.p, "lambda": lam, "d": d})),
                _ => format!("{d}\n"),
            }
        }
        Command::Maxd { ty, p } => {
            let rs = system(ty)?;
            let p = match p {
                Some(p) => *p,
                None => crate::arith::next_prime_at_least(rs.coxeter_number()),
            };
            let d = weights::restricted_max_d(&rs, PrimeContext::new(p)?)?;
            match fmt {
                OutputFormat::Json => pretty(&json!({"type": rs.spec().to_string(), "p": p, "max_d": d})),
                _ => format!("{d}\n"),
            }
        }
        Command::Jantzen(w) => {
            let rs = system(&w.ty)?;
            let p = PrimeContext::new(w.p)?;
            let lam = parse_weight(&rs, &w.lam)?;
            let combo = jantzen::jantzen_sum(&rs, &lam, p)?;
            match fmt {
                OutputFormat::Json => pretty(&combo),
                OutputFormat::Csv => {
                    let mut s = String::from("weight,coeff\n");
                    for (mu, c) in combo.iter() {
                        let _ = writeln!(s, "\"{}\",{c}", mu.coords().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","));
                    }
                    s
                }
                OutputFormat::Text => {
                    if combo.is_empty() {
                        "0\n".to_string()
                    } else {
                        combo.iter().map(|(mu, c)| format!("{c} chi{mu}\n")).collect()
                    }
                }
            }
        }
        Command::Length(LengthCommand::Exact(w)) => {
            let rs = system(&w.ty)?;
            let p = PrimeContext::new(w.p)?;
            let lam = parse_weight(&rs, &w.lam)?;
            let mut cache = match &ctx.config.cache_path {
                Some(path) => {
                    let (c, warn) = cache::load(path);
                    if let Some(warn) = warn {
                        let _ = writeln!(ctx.stderr, "{warn}");
                    }
                    if ctx.config.verbosity > 0 {
                        let _ = writeln!(ctx.stderr, "loaded {} cache entries from {}", c.len(), path.display());
                    }
                    c
                }
                None => LengthCache::new(),
            };
            let v = jantzen::length_bound_exact(&rs, &lam, p, &mut cache)?;
            if let Some(path) = &ctx.config.cache_path {
                if let Err(e) = cache::store(path, &cache) {
                    let _ = writeln!(ctx.stderr, "warning: cannot write cache {}: {e}", path.display());
                }
            }
            match fmt {
                OutputFormat::Json => pretty(&json!({
                    "type": rs.spec().to_string(), "p": w.p, "lambda": lam, "bound": v.to_string()
                })),
                _ => format!("{v}\n"),
            }
        }
        Command::Length(LengthCommand::Closed { d, b, p }) => {
            let v = jantzen::length_bound_closed(*d, *b, PrimeContext::new(*p)?.p())?;
            big_out(fmt, v, json!({"d": d, "b": b, "p": p}))
        }
        Command::Length(LengthCommand::Restricted { ty, p }) => {
            let rs = system(ty)?;
            let r = jantzen::restricted_length_bound(&rs, PrimeContext::new(*p)?);
            match fmt {
                OutputFormat::Json => pretty(&r),
                _ => match &r.sharper {
                    Some(s) => format!("{}\nsharper: {s}\n", r.bound),
                    None => format!("{}\n", r.bound),
                },
            }
        }
        Command::Bound(b) => bound_command(b, fmt)?,
        Command::Table(TableCommand::Growth { lmax }) => {
            let rows = bounds::growth_table(*lmax)?;
            match fmt {
                OutputFormat::Json => pretty(&rows),
                _ => {
                    let mut buf = Vec::new();
                    bounds::write_growth_csv(&rows, &mut buf).map_err(|e| Error::Domain(e.to_string()))?;
                    String::from_utf8(buf).expect("csv is utf-8")
                }
            }
        }
        Command::Selftest => {
            let checks = run_selftest();
            let mut s = String::new();
            let mut failed = 0;
            for c in &checks {
                let _ = writeln!(s, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
                failed += usize::from(!c.passed);
            }
            let _ = writeln!(s, "{} checks, {failed} failed", checks.len());
            return Ok((if failed == 0 { 0 } else { 1 }, s));
        }
    };
    Ok((0, out))
}

fn big_out(fmt: OutputFormat, v: BigUint, mut inputs: serde_json::Value) -> String {
    match fmt {
        OutputFormat::Json => {
            inputs["bound"] = serde_json::Value::String(v.to_string());
            pretty(&inputs)
        }
        _ => format!("{v}\n"),
    }
}

fn bound_command(cmd: &BoundCommand, fmt: OutputFormat) -> Result<String> {
    Ok(match cmd {
        BoundCommand::TheoremA { h, p } => big_out(fmt, bounds::theorem_a_bound(*h, *p)?, json!({"h": h, "p": p})),
        BoundCommand::TheoremC { h } => big_out(fmt, bounds::theorem_c_bound(*h)?, json!({"h": h})),
        BoundCommand::Lcf(ty) => {
            let rs = system(ty)?;
            big_out(fmt, bounds::lcf_length_bound(&rs), json!({"type": rs.spec().to_string()}))
        }
        BoundCommand::Steinberg { ty, p, r } => {
            let rs = system(ty)?;
            let v = bounds::steinberg_trivial_bound(&rs, PrimeContext::new(*p)?, *r);
            big_out(fmt, v, json!({"type": rs.spec().to_string(), "p": p, "r": r}))
        }
        BoundCommand::CrossChar { ty, e } => {
            let rs = system(ty)?;
            big_out(fmt, bounds::cross_char_bound(&rs, *e)?, json!({"type": rs.spec().to_string(), "e": e}))
        }
        BoundCommand::Finite { ty, p, r, twist, e, balg, balg_source } => {
            let spec: RootSystemSpec = ty.ty.parse()?;
            let twist: Twist = twist.parse()?;
            let query = FiniteGroupQuery::new(spec, *p, *r, twist, e.unwrap_or(spec.rank()))?;
            let rs = RootSystem::build(spec);
            let b_alg = match balg {
                Some(s) => s.parse::<BigUint>().map_err(|_| Error::Domain(format!("cannot parse bound {s:?}")))?,
                None => match balg_source {
                    BalgSource::Restricted => jantzen::restricted_length_bound(&rs, PrimeContext::new(*p)?).bound,
                    BalgSource::Lcf => bounds::lcf_length_bound(&rs),
                },
            };
            let rep = bounds::finite_group_bound(&query, &b_alg)?;
            match fmt {
                OutputFormat::Json => pretty(&rep),
                _ => {
                    let tag = serde_json::to_value(rep.case_tag).unwrap();
                    format!("case={} bound={}\nformula: {}\n", tag.as_str().unwrap(), rep.bound, rep.formula)
                }
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> CommandOutput {
        run_command(std::iter::once("weylbound").chain(args.iter().copied()))
    }

    #[test]
    fn documented_examples() {
        assert_eq!(run(&["maxd", "G2"]).stdout, "10\n");
        assert_eq!(run(&["jantzen", "A1", "--p", "2", "--lam", "2", "--json"]).stdout, "{\"terms\":[{\"weight\":[0],\"coeff\":1}]}\n");
        assert_eq!(run(&["dlambda", "A2", "--p", "3", "--lam", "1,1"]).stdout, "1\n");
    }

    #[test]
    fn exit_codes() {
        let out = run(&["frobnicate"]);
        assert_eq!(out.status, 2);
        assert!(out.stderr.contains("Usage"));
        assert_eq!(run(&["maxd", "G2", "--bogus"]).status, 2);
        let out = run(&["maxd", "G2", "--p", "5"]);
        assert_eq!(out.status, 1);
        assert!(out.stderr.contains("smaller than the Coxeter number"));
        assert_eq!(run(&["dlambda", "A2", "--p", "4", "--lam", "1,1"]).status, 1);
        assert_eq!(run(&["dlambda", "A2", "--p", "3", "--lam", "1,-1"]).status, 1);
        assert_eq!(run(&["dlambda", "A2", "--p", "3", "--lam", "1"]).status, 1);
        assert_eq!(run(&["roots", "D3"]).status, 1);
        assert_eq!(run(&["--help"]).status, 0);
    }

    #[test]
    fn floor_flag() {
        assert_eq!(run(&["dlambda", "A1", "--p", "2", "--lam", "1"]).stdout, "0\n");
        assert_eq!(run(&["dlambda", "A1", "--p", "2", "--lam", "1", "--floor"]).stdout, "1\n");
    }

    #[test]
    fn finite_reports() {
        let out = run(&["bound", "finite", "A2", "--p", "2", "--r", "1"]);
        assert_eq!(out.stdout.lines().next().unwrap(), "case=small-q-a bound=4");
        let out = run(&["bound", "finite", "B2", "--p", "2", "--twist", "ree-suzuki", "--json"]);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["case_tag"], "ReeSuzuki");
        assert_eq!(v["bound"], "2");
        assert_eq!(run(&["bound", "finite", "B2", "--p", "3", "--twist", "ree-suzuki"]).status, 1);
        let out = run(&["bound", "finite", "G2", "--p", "37", "--balg", "123"]);
        assert_eq!(out.stdout.lines().next().unwrap(), "case=BNP-ii bound=123");
    }

    #[test]
    fn cache_flag_persists() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.json");
        let p = path.to_str().unwrap();
        let out = run(&["length", "exact", "A1", "--p", "2", "--lam", "2", "--cache", p]);
        assert_eq!((out.status, out.stdout.as_str()), (0, "2\n"));
        let stored = std::fs::read_to_string(&path).unwrap();
        assert!(stored.contains("\"schema\": \"v1\""));
        std::fs::write(&path, "{\"schema\": \"v0\", \"entries\": []}").unwrap();
        let out = run(&["length", "exact", "A1", "--p", "2", "--lam", "2", "--cache", p]);
        assert_eq!(out.status, 0);
        assert_eq!(out.stdout, "2\n");
        assert!(out.stderr.contains("warning"));
    }
}
