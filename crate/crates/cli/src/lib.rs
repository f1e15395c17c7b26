//! Command-line front end for `robin-rod`.
//!
//! [`run`] parses arguments, dispatches, and maps the outcome to an exit
//! code: 0 on success, 2 for invalid input, 3 when `verify` finds a failing
//! check.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

use clap::Parser;
use serde::Serialize;

use robin_rod::{
    bathtub_max, bathtub_min, grid_search_gap, make_params, solve_step, theorem1, theorem2,
    theorem3, verify_all, CellKernel, NamedVerdict, OracleConfig, SourceClass, StepSource,
    DEFAULT_TOL,
};

mod args;
pub mod figure;
pub mod svg;

use args::{BoundArgs, ClassArgs, FigureArgs, FigureKind, OracleArgs, SolveArgs, VerifyArgs};
pub use args::{Cli, Command, Format};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_VERIFY_FAILED: i32 = 3;

/// Environment variable overriding the comparison tolerance.
pub const TOL_ENV: &str = "ROBIN_ROD_TOL";

/// Samples per solution in CSV and SVG output of `solve`.
const SOLVE_SAMPLES: usize = 1001;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Model(#[from] robin_rod::Error),
    #[error("{path}: {source}")]
    Read { path: String, source: io::Error },
    #[error("{path}: {source}")]
    Parse {
        path: String,
        source: serde_json::Error,
    },
    #[error("writing output: {0}")]
    Write(#[from] io::Error),
    #[error("writing csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("writing json: {0}")]
    Json(#[from] serde_json::Error),
}

enum Outcome {
    Done,
    VerifyFailed,
}

/// Runs with the process's stdout and stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(Outcome::Done) => EXIT_OK,
        Ok(Outcome::VerifyFailed) => EXIT_VERIFY_FAILED,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INVALID
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome, CliError> {
    let tol = tolerance()?;
    match cmd {
        Command::Solve(a) => solve(a, out).map(|_| Outcome::Done),
        Command::Bound(a) => bound(a, tol, out).map(|_| Outcome::Done),
        Command::Verify(a) => verify(a, tol, out, err),
        Command::Figure(a) => figure(a, out, err).map(|_| Outcome::Done),
    }
}

fn tolerance() -> Result<f64, CliError> {
    match std::env::var(TOL_ENV) {
        Err(_) => Ok(DEFAULT_TOL),
        Ok(raw) => match raw.trim().parse::<f64>() {
            Ok(t) if t.is_finite() && t >= 0.0 => Ok(t),
            _ => Err(CliError::Usage(format!(
                "{TOL_ENV}={raw:?} is not a non-negative number"
            ))),
        },
    }
}

fn class(c: &ClassArgs) -> Result<SourceClass, CliError> {
    Ok(SourceClass::new(c.ground, c.top, c.average)?)
}

fn oracle_config(k: &OracleArgs) -> Result<OracleConfig, CliError> {
    let d = OracleConfig::default();
    Ok(OracleConfig::new(
        k.n_cells.unwrap_or(d.n_cells),
        k.n_grid.unwrap_or(d.n_grid),
        k.n_samples.unwrap_or(d.n_samples),
        k.seed.unwrap_or(d.seed),
    )?)
}

fn format_or(
    requested: Option<Format>,
    default: Format,
    allowed: &[Format],
    cmd: &str,
) -> Result<Format, CliError> {
    let f = requested.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(CliError::Usage(format!(
            "`{cmd}` does not support --format {}",
            format_name(f)
        )))
    }
}

fn format_name(f: Format) -> &'static str {
    match f {
        Format::Json => "json",
        Format::Csv => "csv",
        Format::Svg => "svg",
    }
}

/// Writes to `path` when given, otherwise to `out`.
fn emit(path: Option<&Path>, bytes: &[u8], out: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, bytes)?,
        None => out.write_all(bytes)?,
    }
    Ok(())
}

fn json_bytes<T: Serialize>(value: &T) -> Result<Vec<u8>, CliError> {
    let mut bytes = serde_json::to_vec_pretty(value)?;
    bytes.push(b'\n');
    Ok(bytes)
}

/// CSV with a header row, comma separator and LF line endings.
pub fn csv_bytes<R: Serialize>(header: &[&str], rows: &[R]) -> Result<Vec<u8>, CliError> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.serialize(r)?;
    }
    w.into_inner().map_err(|e| CliError::Write(e.into_error()))
}

fn read_source(path: &Path) -> Result<StepSource, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.display().to_string(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| CliError::Parse {
        path: path.display().to_string(),
        source,
    })
}

fn solve(a: SolveArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let format = format_or(
        a.output.format,
        Format::Json,
        &[Format::Json, Format::Csv, Format::Svg],
        "solve",
    )?;
    let params = make_params(a.alpha)?;
    let f = read_source(&a.source)?;
    let u = solve_step(&params, &f);

    #[derive(Serialize)]
    struct Solved<'a> {
        alpha: f64,
        solution: &'a robin_rod::PiecewiseQuadratic,
        extrema: robin_rod::Extrema,
    }
    let bytes = match format {
        Format::Json => json_bytes(&Solved {
            alpha: params.alpha(),
            solution: &u,
            extrema: u.extrema(),
        })?,
        Format::Csv => csv_bytes(&["x", "u"], &u.sample(SOLVE_SAMPLES))?,
        Format::Svg => svg::render(
            "temperature",
            "x",
            "u",
            &[svg::Series {
                label: format!("alpha={}", params.alpha()),
                points: &u.sample(SOLVE_SAMPLES),
            }],
        )
        .into_bytes(),
    };
    emit(a.output.out.as_deref(), &bytes, out)
}

fn bound(a: BoundArgs, tol: f64, out: &mut dyn Write) -> Result<(), CliError> {
    format_or(a.output.format, Format::Json, &[Format::Json], "bound")?;
    let params = make_params(a.alpha)?;
    let cls = class(&a.class)?;
    let cfg = oracle_config(&a.knobs)?;

    let bytes = match a.theorem {
        1 => {
            let mut r = theorem1(&params, &cls)?;
            if a.oracle {
                r = r.with_oracle(grid_search_gap(&params, &cls, &cfg, tol)?.oracle_value);
            }
            json_bytes(&r)?
        }
        2 => {
            let mut r = theorem2(&params, &cls, a.x0)?;
            if a.oracle {
                let k = CellKernel::point(&params, a.x0, cfg.n_cells)?;
                r.upper = r.upper.with_oracle(bathtub_max(&cls, &k)?.value);
                r.lower = r.lower.with_oracle(bathtub_min(&cls, &k)?.value);
            }
            json_bytes(&r)?
        }
        _ => {
            let mut r = theorem3(&params, &cls, a.x0)?;
            if a.oracle {
                let k = CellKernel::edge_gap(&params, a.x0, cfg.n_cells)?;
                r = r.with_oracle(bathtub_max(&cls, &k)?.value);
            }
            json_bytes(&r)?
        }
    };
    emit(a.output.out.as_deref(), &bytes, out)
}

fn verify(
    a: VerifyArgs,
    tol: f64,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<Outcome, CliError> {
    format_or(a.output.format, Format::Json, &[Format::Json], "verify")?;
    if a.theorem.is_none() && !a.all {
        return Err(CliError::Usage(
            "`verify` needs --theorem <1|2|3> or --all".into(),
        ));
    }
    let params = make_params(a.alpha)?;
    let cls = class(&a.class)?;
    let cfg = oracle_config(&a.knobs)?;
    let verdicts: Vec<NamedVerdict> = verify_all(&params, &cls, a.x0, &cfg, tol)?
        .into_iter()
        .filter(|v| a.theorem.is_none_or(|t| v.theorem == t))
        .collect();

    for v in verdicts.iter().filter(|v| !v.verdict.pass) {
        writeln!(
            err,
            "FAIL {:?}: {} [{}] oracle={} closed_form={} abs_gap={}",
            v.check,
            v.invariant,
            v.parameters,
            v.verdict.oracle_value,
            v.verdict.closed_form_value,
            v.verdict.abs_gap
        )?;
    }
    emit(a.output.out.as_deref(), &json_bytes(&verdicts)?, out)?;
    Ok(if verdicts.iter().all(|v| v.verdict.pass) {
        Outcome::Done
    } else {
        Outcome::VerifyFailed
    })
}

fn figure(a: FigureArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    use figure::*;

    let format = format_or(
        a.output.format,
        Format::Csv,
        &[Format::Csv, Format::Svg],
        "figure",
    )?;
    let cls = SourceClass::new(a.ground, a.top, a.average)?;
    if a.kind != FigureKind::Fig2 && !a.curves.is_empty() {
        return Err(CliError::Usage("--curve only applies to fig2".into()));
    }

    let bytes = match a.kind {
        FigureKind::Fig1a => {
            let pts = fig1a(&cls)?;
            writeln!(
                err,
                "fig1a: strictly decreasing in alpha: {}",
                strictly_decreasing(&pts)
            )?;
            match format {
                Format::Svg => svg::render(
                    "maximal temperature gap",
                    "alpha",
                    "gap",
                    &[svg::Series {
                        label: format!("m={} M={} s={}", cls.ground(), cls.top(), cls.average()),
                        points: &pts,
                    }],
                )
                .into_bytes(),
                _ => csv_bytes(&["alpha", "gap"], &pts)?,
            }
        }
        FigureKind::Fig1b => {
            let pts = fig1b(a.alpha, &cls)?;
            writeln!(
                err,
                "fig1b: concave: {}, minimum at an end: {}",
                concave(&pts, 1e-9),
                min_at_an_end(&pts, 1e-12)
            )?;
            match format {
                Format::Svg => svg::render(
                    "extremal temperature profile",
                    "x",
                    "u",
                    &[svg::Series {
                        label: format!("alpha={}", a.alpha),
                        points: &pts,
                    }],
                )
                .into_bytes(),
                _ => csv_bytes(&["x", "u"], &pts)?,
            }
        }
        FigureKind::Fig2 => {
            let curves = if a.curves.is_empty() {
                Curve::defaults()
            } else {
                a.curves
                    .iter()
                    .map(|s| Curve::parse(s))
                    .collect::<Result<_, _>>()?
            };
            let data = curves.iter().map(fig2).collect::<Result<Vec<_>, _>>()?;
            for (c, pts) in curves.iter().zip(&data) {
                writeln!(
                    err,
                    "fig2: l={} delta={} alpha={}: unimodal: {}, peak at a={}",
                    c.l,
                    c.delta,
                    c.alpha,
                    unimodal(pts, 1e-12),
                    peak(pts)
                )?;
            }
            match format {
                Format::Svg => {
                    let series: Vec<svg::Series> = curves
                        .iter()
                        .zip(&data)
                        .map(|(c, pts)| svg::Series {
                            label: format!("l={:.4} delta={} alpha={}", c.l, c.delta, c.alpha),
                            points: pts,
                        })
                        .collect();
                    svg::render("gap against interval center", "a", "H", &series).into_bytes()
                }
                _ => {
                    let rows: Vec<(f64, f64, f64, f64, f64)> = curves
                        .iter()
                        .zip(&data)
                        .flat_map(|(c, pts)| {
                            pts.iter().map(|&(x, h)| (c.l, c.delta, c.alpha, x, h))
                        })
                        .collect();
                    csv_bytes(&["l", "delta", "alpha", "a", "h"], &rows)?
                }
            }
        }
    };
    emit(a.output.out.as_deref(), &bytes, out)
}
