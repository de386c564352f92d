//! The `tetrad` command line: `eval`, `check`, `gauge` and `table`.
//!
//! Exit codes: 0 success, 1 a check failed (or a point failed under
//! `--strict`), 2 usage or configuration error.

mod config;
mod quantities;
mod suites;
mod table;

pub use config::{parse_grid, parse_point, Coord, GridAxis, GridSpec, RunConfig, DEFAULT_SAMPLES};
pub use quantities::{columns, evaluate, Normalization, PointQuantities, Selector};
pub use suites::{clifford_residual, measure_point, Measurement, Suite};
pub use table::{Cell, Format, Row, Table};

use crate::algebra::{max_abs_diff4, Vec4, C64};
use crate::error::{Error, Result};
use crate::gauge::{
    transform_b, transform_c, transform_gamma_symmetric, transform_spin_coefficients, GaugeConfig,
    SpinorGaugeField,
};
use crate::geometry::{frame_at_with, DiffMode, GeometryConfig, TetradField};
use crate::np::{null_frame, spin_coefficients};
use crate::ricci::ricci_at;
use crate::sampling::{SampleBox, Sampler};
use crate::spinor::{gamma_spinor, gamma_symmetric};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

#[derive(Debug, Parser)]
#[command(name = "tetrad", version, about = "Tetrad calculus on user-defined frames")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate every quantity at the given points
    Eval(CommonArgs),
    /// Run the invariant suites
    Check(CommonArgs),
    /// Compare gauge laws with quantities recomputed from the gauged tetrad
    Gauge(CommonArgs),
    /// Emit one quantity as a table
    Table {
        /// One of gamma, B_dirac, B_trace, C_vector, decomposition,
        /// spin_coefficients, np_letters, hat, all
        selector: String,
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum DiffArg {
    Dual,
    Fd,
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// JSON run configuration
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Use a builtin geometry instead of a config file
    #[arg(long, conflicts_with = "config")]
    pub builtin: Option<String>,
    /// Builtin gauge (identity, spherical); overrides the config gauge
    #[arg(long = "gauge-builtin")]
    pub gauge_builtin: Option<String>,
    /// A point "t,r,th,ph"; entries may be expressions such as pi/3
    #[arg(long = "point", allow_hyphen_values = true)]
    pub points: Vec<String>,
    /// Grid "v;min:max:count;v;v", one field per coordinate
    #[arg(long, allow_hyphen_values = true)]
    pub grid: Option<String>,
    #[arg(long, value_enum)]
    pub diff: Option<DiffArg>,
    /// Tolerance (default 1e-9 dual, 1e-6 fd)
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Random points for `check` when none are given
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    /// Treat a failed point as a failure
    #[arg(long)]
    pub strict: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Scale of printed spin coefficients
    #[arg(long, value_enum, default_value_t)]
    pub normalization: Normalization,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
    Error,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
            Status::Error => "error",
        }
    }
}

/// One check at one point (or globally when `point` is `None`).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRecord {
    pub suite: String,
    pub point: Option<Vec4>,
    pub residual: Option<f64>,
    pub tol: f64,
    pub status: Status,
    pub message: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Summary {
    pub points: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub point_errors: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub geometry: String,
    pub diff_mode: DiffMode,
    pub tol: f64,
    pub seed: u64,
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
}

impl Report {
    fn new(command: &str, field: &TetradField, cfg: &RunConfig) -> Self {
        Report {
            command: command.into(),
            geometry: field.name.clone(),
            diff_mode: cfg.diff_mode,
            tol: cfg.tolerance(),
            seed: cfg.seed,
            checks: Vec::new(),
            summary: Summary::default(),
        }
    }

    fn record(&mut self, suite: &str, point: Option<Vec4>, residual: Option<f64>, message: Option<String>) {
        let status = match (residual, &message) {
            (_, Some(_)) => Status::Error,
            (None, None) => Status::Skip,
            (Some(r), None) if r < self.tol => Status::Pass,
            (Some(_), None) => Status::Fail,
        };
        match status {
            Status::Pass => self.summary.passed += 1,
            Status::Fail | Status::Error => self.summary.failed += 1,
            Status::Skip => self.summary.skipped += 1,
        }
        self.checks.push(CheckRecord {
            suite: suite.into(),
            point,
            residual,
            tol: self.tol,
            status,
            message,
        });
    }

    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    /// Human-readable summary: each failed check, then the counts.
    pub fn describe(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            if matches!(c.status, Status::Fail | Status::Error) {
                let p = c.point.map(|p| format!(" at {p:?}")).unwrap_or_default();
                let r = c.residual.map(|r| format!(" residual {r:.3e} > tol {:.1e}", c.tol)).unwrap_or_default();
                let m = c.message.as_deref().map(|m| format!(": {m}")).unwrap_or_default();
                s.push_str(&format!("FAIL {}{p}{r}{m}\n", c.suite));
            }
        }
        let u = &self.summary;
        s.push_str(&format!(
            "{} on {}: {} points, {} passed, {} failed, {} skipped, {} point errors\n",
            self.command, self.geometry, u.points, u.passed, u.failed, u.skipped, u.point_errors
        ));
        s
    }
}

/// A finished command: the table to emit, the report, and the exit code.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub table: Table,
    pub report: Report,
    pub exit: i32,
}

fn coord_columns(row: &mut Row, field: &TetradField, p: &Vec4) {
    for k in 0..4 {
        row.num(field.chart.names[k].clone(), p[k]);
    }
}

fn is_point_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Domain { .. }
            | Error::ComplexTetrad { .. }
            | Error::SingularTetrad { .. }
            | Error::NotUnimodular { .. }
    )
}

/// Split a per-point result into value or point-level error; anything else
/// aborts the command.
fn point_result<T>(r: Result<T>) -> Result<std::result::Result<T, Error>> {
    match r {
        Ok(v) => Ok(Ok(v)),
        Err(e) if is_point_error(&e) => Ok(Err(e)),
        Err(e) => Err(e),
    }
}

fn explicit_points(cfg: &RunConfig, field: &TetradField) -> Result<Vec<Vec4>> {
    let pts = cfg.resolve_points(&field.chart)?;
    if pts.is_empty() {
        return Err(Error::Config("no points given (use --point, --grid or the config)".into()));
    }
    Ok(pts)
}

fn build_gauge(cfg: &RunConfig, field: &TetradField) -> Result<Option<SpinorGaugeField>> {
    cfg.gauge.as_ref().map(|g| g.build(&field.chart)).transpose()
}

/// Table of `sel` at every configured point; the geometry is gauged first
/// when the config has a gauge.
pub fn cmd_table(cfg: &RunConfig, sel: Selector, norm: Normalization, strict: bool) -> Result<Outcome> {
    let base = cfg.geometry.build()?;
    let field = match build_gauge(cfg, &base)? {
        Some(g) => base.gauged(Arc::new(g)),
        None => base,
    };
    let points = explicit_points(cfg, &field)?;
    let results: Vec<_> = points
        .par_iter()
        .map(|p| point_result(evaluate(&field, p, cfg.diff_mode)))
        .collect::<Result<_>>()?;
    let mut report = Report::new("table", &field, cfg);
    report.summary.points = points.len();
    let mut table = Table::default();
    for (p, r) in points.iter().zip(results) {
        let mut row = Row::default();
        coord_columns(&mut row, &field, p);
        match r {
            Ok(q) => columns(&mut row, sel, &q, norm),
            Err(e) => {
                report.summary.point_errors += 1;
                row.text("error", e.to_string());
            }
        }
        table.push(row);
    }
    let exit = i32::from(strict && report.summary.point_errors > 0);
    Ok(Outcome { table, report, exit })
}

pub fn cmd_eval(cfg: &RunConfig, norm: Normalization, strict: bool) -> Result<Outcome> {
    let mut o = cmd_table(cfg, Selector::All, norm, strict)?;
    o.report.command = "eval".into();
    Ok(o)
}

/// Run all suites. Without explicit points, `samples` random points are
/// drawn from the geometry's sampling box with `seed`; without a gauge, two
/// random gauges feed the commuting-square suite.
pub fn cmd_check(cfg: &RunConfig) -> Result<Outcome> {
    let field = cfg.geometry.build()?;
    let mut sampler = Sampler::new(cfg.seed);
    let mut points = cfg.resolve_points(&field.chart)?;
    if points.is_empty() {
        let n = cfg.samples.unwrap_or(DEFAULT_SAMPLES);
        points = sampler.points(&SampleBox::for_geometry(&field), n);
    }
    let gauges = match build_gauge(cfg, &field)? {
        Some(g) => vec![g],
        None => vec![sampler.gauge(&field.chart), sampler.gauge(&field.chart)],
    };
    let results: Vec<_> = points
        .par_iter()
        .map(|p| point_result(measure_point(&field, &gauges, p, cfg.diff_mode)))
        .collect::<Result<_>>()?;
    let mut report = Report::new("check", &field, cfg);
    report.summary.points = points.len();
    report.record(Suite::CliffordIdentities.name(), None, Some(clifford_residual()), None);
    for (p, r) in points.iter().zip(results) {
        match r {
            Ok(ms) => {
                for (suite, res) in ms {
                    report.record(suite.name(), Some(*p), res, None);
                }
            }
            Err(e) => {
                report.summary.point_errors += 1;
                report.record("point", Some(*p), None, Some(e.to_string()));
            }
        }
    }
    let mut table = Table::default();
    for c in &report.checks {
        let mut row = Row::default();
        row.text("suite", c.suite.clone());
        for k in 0..4 {
            let name = field.chart.names[k].clone();
            match c.point {
                Some(p) => row.num(name, p[k]),
                None => row.0.push((name, Cell::Empty)),
            }
        }
        match c.residual {
            Some(r) => row.num("residual", r),
            None => row.0.push(("residual".into(), Cell::Empty)),
        }
        row.num("tol", c.tol);
        row.text("status", c.status.as_str());
        row.text("message", c.message.clone().unwrap_or_default());
        table.push(row);
    }
    let exit = i32::from(!report.passed());
    Ok(Outcome { table, report, exit })
}

struct GaugeRow {
    b_law: Vec4,
    b: Vec4,
    c_law: Vec4,
    c: Vec4,
    spin_law: crate::np::SpinCoefficientSet,
    spin: crate::np::SpinCoefficientSet,
    gamma_residual: f64,
}

fn gauge_point(field: &TetradField, gauge: &SpinorGaugeField, p: &Vec4, mode: DiffMode) -> Result<GaugeRow> {
    let jet = gauge.spinor_jet(p, mode)?;
    let lorentz = jet.lorentz();
    let gauged = field.gauged(Arc::new(gauge.clone()));
    let before = frame_at_with(field, p, mode)?;
    let after = frame_at_with(&gauged, p, mode)?;
    let (r0, r1) = (ricci_at(&before), ricci_at(&after));
    let (nf0, nf1) = (null_frame(&before), null_frame(&after));
    let s0 = spin_coefficients(&nf0);
    let g0 = gamma_symmetric(&gamma_spinor(&nf0));
    let g1 = gamma_symmetric(&gamma_spinor(&nf1));
    Ok(GaugeRow {
        b_law: transform_b(&r0.b_dirac, &lorentz, &before),
        b: r1.b_dirac,
        c_law: transform_c(&r0.c, &lorentz, &before),
        c: r1.c,
        spin_law: transform_spin_coefficients(&s0, &nf0, &jet),
        spin: spin_coefficients(&nf1),
        gamma_residual: transform_gamma_symmetric(&g0, &nf0, &jet).max_abs_diff(&g1),
    })
}

/// Law values next to recomputed values, with residual columns.
pub fn cmd_gauge(cfg: &RunConfig, norm: Normalization) -> Result<Outcome> {
    let field = cfg.geometry.build()?;
    let gauge = build_gauge(cfg, &field)?
        .ok_or_else(|| Error::Config("gauge command needs a gauge in the config".into()))?;
    let points = explicit_points(cfg, &field)?;
    let results: Vec<_> = points
        .par_iter()
        .map(|p| point_result(gauge_point(&field, &gauge, p, cfg.diff_mode)))
        .collect::<Result<_>>()?;
    let mut report = Report::new("gauge", &field, cfg);
    report.summary.points = points.len();
    let mut table = Table::default();
    for (p, r) in points.iter().zip(results) {
        let mut row = Row::default();
        coord_columns(&mut row, &field, p);
        match r {
            Ok(g) => {
                for k in 0..4 {
                    row.num(format!("B{k}_law"), g.b_law[k]);
                    row.num(format!("B{k}"), g.b[k]);
                }
                for k in 0..4 {
                    row.num(format!("C{k}_law"), g.c_law[k]);
                    row.num(format!("C{k}"), g.c[k]);
                }
                let f = C64::from(norm.factor());
                let law = g.spin_law.scale(f).to_array();
                let re = g.spin.scale(f).to_array();
                for (k, name) in crate::np::SpinCoefficientSet::NAMES.iter().enumerate() {
                    row.complex(&format!("{name}_law"), law[k]);
                    row.complex(name, re[k]);
                }
                let res = [
                    ("gauge_B", max_abs_diff4(&g.b_law, &g.b)),
                    ("gauge_C", max_abs_diff4(&g.c_law, &g.c)),
                    ("gauge_spin", g.spin_law.max_abs_diff(&g.spin)),
                    ("gauge_Gamma", g.gamma_residual),
                ];
                for (name, v) in res {
                    row.num(format!("res_{}", &name[6..]), v);
                    report.record(name, Some(*p), Some(v), None);
                }
            }
            Err(e) => {
                report.summary.point_errors += 1;
                row.text("error", e.to_string());
                report.record("gauge", Some(*p), None, Some(e.to_string()));
            }
        }
        table.push(row);
    }
    let exit = i32::from(!report.passed());
    Ok(Outcome { table, report, exit })
}

fn load_config(args: &CommonArgs) -> Result<RunConfig> {
    let mut cfg = match (&args.config, &args.builtin) {
        (Some(path), _) => RunConfig::from_json(&std::fs::read_to_string(path)?)?,
        (None, Some(name)) => RunConfig::new(GeometryConfig::builtin(name)),
        (None, None) => return Err(Error::Config("either --config or --builtin is required".into())),
    };
    if let Some(g) = &args.gauge_builtin {
        cfg.gauge = Some(GaugeConfig {
            builtin: Some(g.clone()),
            ..Default::default()
        });
    }
    if !args.points.is_empty() || args.grid.is_some() {
        cfg.points.clear();
        cfg.grid = None;
    }
    for p in &args.points {
        let v = parse_point(p)?;
        cfg.points.push(v.map(Coord::Num));
    }
    if let Some(g) = &args.grid {
        cfg.grid = Some(parse_grid(g)?);
    }
    if let Some(d) = args.diff {
        cfg.diff_mode = match d {
            DiffArg::Dual => DiffMode::Dual,
            DiffArg::Fd => DiffMode::Fd,
        };
    }
    if args.tol.is_some() {
        cfg.tol = args.tol;
    }
    if let Some(s) = args.seed {
        cfg.seed = s;
    }
    if args.samples.is_some() {
        cfg.samples = args.samples;
    }
    cfg.validate()?;
    Ok(cfg)
}

/// Run a parsed command.
pub fn execute(cli: &Cli) -> Result<(Outcome, CommonArgs)> {
    let (args, outcome) = match &cli.command {
        Command::Eval(a) => (a, cmd_eval(&load_config(a)?, a.normalization, a.strict)?),
        Command::Check(a) => (a, cmd_check(&load_config(a)?)?),
        Command::Gauge(a) => (a, cmd_gauge(&load_config(a)?, a.normalization)?),
        Command::Table { selector, common } => {
            let sel = Selector::parse(selector).ok_or_else(|| {
                Error::Config(format!(
                    "unknown selector `{selector}` (known: {})",
                    Selector::NAMES.join(", ")
                ))
            })?;
            (common, cmd_table(&load_config(common)?, sel, common.normalization, common.strict)?)
        }
    };
    Ok((outcome, args.clone()))
}

/// Parse `args`, run, write the table to `out` (or `--out`) and diagnostics
/// to `err`; returns the exit code.
pub fn run_to<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let (outcome, args) = match execute(&cli) {
        Ok(v) => v,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let text = match outcome.table.render(args.format) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let written = match &args.out {
        Some(path) => std::fs::write(path, &text).map_err(Error::from),
        None => out.write_all(text.as_bytes()).map_err(Error::from),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: {e}");
        return 2;
    }
    let _ = write!(err, "{}", outcome.report.describe());
    outcome.exit
}

/// Entry point for the binary.
pub fn main_with_env() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_to(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
