//! Command-line front end: `eval`, `table`, `verify`, `exact` and `probe`.
//!
//! Every command renders its whole output in memory first, so a failing run
//! never leaves a partial file behind.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::error::{Error, Result};
use crate::exact;
use crate::family::{make_family, truncation_index, FamilyParams, TruncationPolicy};
use crate::grid::{linspace, second_divided_differences};
use crate::output::{render_records, render_f64, Cell, Format, Table};
use crate::quadratic::{derivative_tower, log_convexity_minimum, s_value};
use crate::shannon::{shannon, shannon_second};
use crate::verify::{manifest, run_suite, Fault, Suite, Summary, VerifyConfig};

pub const TABLE_HEADER: [&str; 7] = ["x", "H", "Hpp", "S", "R", "T", "Spp"];
pub const PROBE_HEADER: [&str; 4] = ["c", "l", "min_second_diff", "argmin_x"];
pub const EVAL_HEADER: [&str; 9] = ["x", "H", "R", "T", "S", "K", "H_tail_bound", "S_tail_bound", "family"];

/// Exit status for invalid parameters or domain errors.
pub const EXIT_USAGE: u8 = 2;
/// Exit status when a verification check fails.
pub const EXIT_FAILED: u8 = 1;

#[derive(Debug, Parser)]
#[command(name = "baskakov", version, about = "Entropies of the binomial / Poisson / negative-binomial family")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Certified tail bound for truncated series.
    #[arg(long, global = true, default_value_t = 1e-15)]
    pub epsilon: f64,
    /// Hard cap on the number of series terms.
    #[arg(long, global = true, default_value_t = 2_000_000)]
    pub max_terms: usize,
    /// csv, tsv or json-lines.
    #[arg(long, global = true, default_value = "csv")]
    pub format: String,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Entropies and truncation diagnostics at one point.
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        c: f64,
        #[arg(long)]
        n: f64,
        #[arg(long)]
        x: f64,
    },
    /// x,H,Hpp,S,R,T,Spp over an equally spaced grid.
    Table {
        #[arg(long, allow_hyphen_values = true)]
        c: f64,
        #[arg(long)]
        n: f64,
        #[arg(long, default_value_t = 0.0)]
        x_min: f64,
        /// Defaults to the right end of the domain, or 10 when it is unbounded.
        #[arg(long)]
        x_max: Option<f64>,
        #[arg(long, default_value_t = 101)]
        steps: usize,
    },
    /// Run a built-in verification suite; exits 1 if any check fails.
    Verify {
        /// family, shannon, quadratic, exact or all.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Largest n for the exact checks.
        #[arg(long)]
        n_max: Option<u32>,
        #[arg(long, hide = true)]
        inject_fault: Option<String>,
    },
    /// Exact certificate for one binomial order n (c = -1).
    Exact {
        #[arg(long)]
        n: f64,
    },
    /// Minimum second difference of ln S over l = 1..=n-max, for c < 0.
    Probe {
        #[arg(long, allow_hyphen_values = true)]
        c: f64,
        #[arg(long, default_value_t = manifest::PROBE_L_MAX as u32)]
        n_max: u32,
        #[arg(long, default_value_t = manifest::PROBE_STEPS)]
        steps: usize,
    },
}

/// What a command produced: text for the output target, an optional note for
/// stderr, and whether every check in it passed.
#[derive(Debug, Clone, PartialEq)]
pub struct CommandOutput {
    pub body: String,
    pub note: Option<String>,
    pub passed: bool,
}

impl CommandOutput {
    fn data(body: String) -> Self {
        CommandOutput { body, note: None, passed: true }
    }
}

pub fn run(cfg: &RunConfig) -> Result<CommandOutput> {
    let format: Format = cfg.common.format.parse()?;
    let policy = TruncationPolicy::new(cfg.common.epsilon, cfg.common.max_terms)?;
    match &cfg.command {
        Command::Eval { c, n, x } => cmd_eval(&make_family(*c, *n)?, *x, &policy, format),
        Command::Table { c, n, x_min, x_max, steps } => {
            let f = make_family(*c, *n)?;
            let hi = x_max.unwrap_or(if f.domain().is_bounded() { f.domain().hi } else { 10.0 });
            cmd_table(&f, &linspace(*x_min, hi, *steps)?, &policy, format)
        }
        Command::Verify { suite, n_max, inject_fault } => {
            let mut vc = VerifyConfig { policy, ..VerifyConfig::default() };
            if let Some(n) = n_max {
                vc = vc.with_exact_cap(*n);
            }
            vc.fault = match inject_fault.as_deref() {
                None => None,
                Some("sign-flip") => Some(Fault::FlipDerivativeSign),
                Some(other) => return Err(Error::InvalidArgument(format!("unknown fault {other:?}"))),
            };
            cmd_verify(suite.parse()?, &vc, format)
        }
        Command::Exact { n } => cmd_exact(integer_order(*n)?, format),
        Command::Probe { c, n_max, steps } => cmd_probe(*c, *n_max, *steps, &policy, format),
    }
}

fn integer_order(n: f64) -> Result<u32> {
    if n >= 1.0 && n.fract() == 0.0 && n <= f64::from(exact::MAX_EXACT_N) {
        Ok(n as u32)
    } else if n > f64::from(exact::MAX_EXACT_N) && n.fract() == 0.0 {
        Err(Error::SizeExceeded { n: n as usize, cap: exact::MAX_EXACT_N as usize })
    } else {
        Err(Error::NonIntegerL { c: -1.0, n, ratio: n })
    }
}

pub fn cmd_eval(f: &FamilyParams, x: f64, policy: &TruncationPolicy, format: Format) -> Result<CommandOutput> {
    let h = shannon(f, x, policy)?;
    let q = s_value(f, x, policy)?;
    let t = truncation_index(f, x, policy)?;
    let mut table = Table::new(&EVAL_HEADER);
    table.push(vec![
        x.into(),
        h.h.into(),
        q.renyi.into(),
        q.tsallis.into(),
        q.s.into(),
        t.k_max.into(),
        h.tail_bound.into(),
        q.tail_bound.into(),
        f.to_string().into(),
    ]);
    Ok(CommandOutput::data(table.render(format)?))
}

pub fn cmd_table(f: &FamilyParams, xs: &[f64], policy: &TruncationPolicy, format: Format) -> Result<CommandOutput> {
    let mut table = Table::new(&TABLE_HEADER);
    let mut s_col = Vec::with_capacity(xs.len());
    for &x in xs {
        let h = shannon(f, x, policy)?;
        let q = s_value(f, x, policy)?;
        let hpp = shannon_second(f, x, policy).ok();
        let spp = derivative_tower(f, x, 2, policy).ok().map(|t| t.values[2]);
        s_col.push(q.s);
        table.push(vec![x.into(), h.h.into(), Cell::opt(hpp), q.s.into(), q.renyi.into(), q.tsallis.into(), Cell::opt(spp)]);
    }
    let min_d2 = second_divided_differences(xs, &s_col).into_iter().map(|(_, d)| d).fold(f64::INFINITY, f64::min);
    let note = format!(
        "S discrete convexity: min second difference {} ({})",
        render_f64(min_d2),
        if min_d2 >= -1e-8 { "convex" } else { "NOT convex" }
    );
    Ok(CommandOutput { body: table.render(format)?, note: Some(note), passed: true })
}

pub fn cmd_verify(suite: Suite, cfg: &VerifyConfig, format: Format) -> Result<CommandOutput> {
    let records = run_suite(suite, cfg);
    let summary = Summary::of(&records);
    Ok(CommandOutput {
        body: render_records(&records, format)?,
        note: Some(format!("suite {suite} (manifest v{}): {summary}", manifest::MANIFEST_VERSION)),
        passed: summary.ok(),
    })
}

pub fn cmd_exact(n: u32, format: Format) -> Result<CommandOutput> {
    let mut table = Table::new(&["quantity", "value"]);
    let mut passed = true;
    let mut row = |name: String, value: String| table.push(vec![name.into(), value.into()]);
    let mut verdict = |ok: bool| {
        passed &= ok;
        if ok { "pass" } else { "fail" }.to_string()
    };
    let s = exact::s_poly(n)?;
    row("S(x)".into(), s.to_string());
    let (s0, s2, s4) = exact::central_closed_forms(n)?;
    row("S(1/2)".into(), s0.to_string());
    row("S''(1/2)".into(), s2.to_string());
    if let Some(s4) = s4 {
        row("S''''(1/2)".into(), s4.to_string());
    }
    let cf = exact::central_form(n)?;
    for (k, a) in cf.a.iter().enumerate() {
        row(format!("a_{k}"), a.to_string());
    }
    row("f_n(t)".into(), exact::f_poly(n)?.to_string().replace('x', "t"));
    let cnk = exact::cnk_solve(n)?;
    for (k, c) in cnk.c.iter().enumerate() {
        row(format!("c_{n},{}", k + 1), c.to_string());
    }
    let nodes: Vec<String> = exact::saw_nodes(n).iter().map(ToString::to_string).collect();
    row("saw nodes".into(), nodes.join(" "));
    row("check: central expansion".into(), verdict(exact::recentered_s_poly(n)? == cf.as_poly_in_y()));
    row("check: f_n from S'".into(), verdict(exact::f_identity_holds(n)?));
    row("check: f_n(1+u) coefficients >= 0".into(), verdict(exact::shift_expansion_nonneg(n)?.passed()));
    row("check: c_nk > 0".into(), verdict(cnk.all_positive()));
    let derivs_ok = (0..2 * n).all(|i| exact::derivative_at_one(n, i).is_ok_and(|(a, b)| a == b && a >= num_traits::Zero::zero()));
    row("check: f_n derivatives at 1".into(), verdict(derivs_ok));
    row("check: Bernstein image of saw".into(), verdict(exact::bernstein_apply(2 * n, &exact::saw_nodes(n))? == s));
    row("check: equation residual is 0".into(), verdict(exact::ode_residual_poly(n)?.is_zero()));
    Ok(CommandOutput { body: table.render(format)?, note: None, passed })
}

pub fn cmd_probe(c: f64, l_max: u32, steps: usize, policy: &TruncationPolicy, format: Format) -> Result<CommandOutput> {
    if c >= 0.0 {
        return Err(Error::UnsupportedParams("the probe targets c < 0; for c >= 0 the property is a theorem".into()));
    }
    if l_max == 0 {
        return Err(Error::InvalidArgument("--n-max must be at least 1".into()));
    }
    let mut table = Table::new(&PROBE_HEADER);
    let grid = linspace(0.0, -1.0 / c, steps)?;
    for l in 1..=u64::from(l_max) {
        let f = make_family(c, -c * l as f64)?;
        let (min, argmin) = log_convexity_minimum(&f, &grid, policy)?;
        table.push(vec![c.into(), l.into(), min.into(), argmin.into()]);
    }
    Ok(CommandOutput::data(table.render(format)?))
}

/// Writes `body` to `path` through a sibling temporary file, so the target is
/// either complete or untouched.
pub fn write_atomically(path: &Path, body: &str) -> std::io::Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".partial");
    let tmp = PathBuf::from(tmp);
    let result = fs::write(&tmp, body).and_then(|()| fs::rename(&tmp, path));
    if result.is_err() {
        let _ = fs::remove_file(&tmp);
    }
    result
}

/// Parses arguments, runs, writes output and maps the outcome to an exit code.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(args) {
        Ok(cfg) => cfg,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    let out = match run(&cfg) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let written = match &cfg.common.out {
        Some(path) => write_atomically(path, &out.body),
        None => std::io::stdout().write_all(out.body.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(EXIT_USAGE);
    }
    if let Some(note) = &out.note {
        eprintln!("{note}");
    }
    if out.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAILED)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> RunConfig {
        RunConfig::try_parse_from(std::iter::once("baskakov").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn eval_binomial_half() {
        let out = run(&parse(&["eval", "--c", "-1", "--n", "2", "--x", "0.5"])).unwrap();
        let mut lines = out.body.lines();
        assert_eq!(lines.next().unwrap(), EVAL_HEADER.join(","));
        let row: Vec<&str> = lines.next().unwrap().split(',').collect();
        assert_eq!(row[4], "0.375");
    }

    #[test]
    fn eval_point_mass() {
        let out = run(&parse(&["eval", "--c", "0", "--n", "1", "--x", "0"])).unwrap();
        let row: Vec<String> = out.body.lines().nth(1).unwrap().split(',').map(String::from).collect();
        assert_eq!(&row[1..5], ["0", "0", "0", "1"]);
    }

    #[test]
    fn eval_rejects_non_integer_l() {
        assert!(matches!(run(&parse(&["eval", "--c", "-1", "--n", "2.5", "--x", "0.1"])), Err(Error::NonIntegerL { .. })));
    }

    #[test]
    fn table_marks_singular_points_empty() {
        let out = run(&parse(&["table", "--c", "-1", "--n", "2", "--steps", "5"])).unwrap();
        let rows: Vec<Vec<&str>> = out.body.lines().skip(1).map(|l| l.split(',').collect()).collect();
        assert_eq!(rows.len(), 5);
        assert_eq!(rows[0][2], "");
        assert_eq!(rows[2][6], "");
        assert!(!rows[1][6].is_empty());
    }

    #[test]
    fn probe_schema() {
        let out = run(&parse(&["probe", "--c", "-1", "--n-max", "3", "--steps", "101"])).unwrap();
        assert_eq!(out.body.lines().next().unwrap(), PROBE_HEADER.join(","));
        assert_eq!(out.body.lines().count(), 4);
        assert!(run(&parse(&["probe", "--c", "1"])).is_err());
    }

    #[test]
    fn exact_certificate_passes() {
        let out = run(&parse(&["exact", "--n", "3"])).unwrap();
        assert!(out.passed);
        assert!(out.body.contains("S(1/2),5/16"));
        assert!(run(&parse(&["exact", "--n", "2.5"])).is_err());
    }

    #[test]
    fn bad_format_is_an_error() {
        assert!(run(&parse(&["eval", "--c", "0", "--n", "1", "--x", "1", "--format", "xml"])).is_err());
    }
}
