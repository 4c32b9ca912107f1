//! The `staircase` command line.
//!
//! Exit codes: 0 when everything checks out, 2 for bad input or arguments,
//! 3 when a verification fails. Errors go to stderr as one JSON object.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::cantor::{enumerate_endpoints, gamma, in_cantor, phi};
use crate::error::Error;
use crate::io::{to_json, EvalRow, ExtensionForm, FamilyForm, ProblemFile, ProblemKind};
use crate::plot::{extension_svg, family_svg};
use crate::rational::{parse_rational, parse_unit, rat, Dyadic, Rational};
use crate::report::Report;
use crate::tietze::{extend, verify_extension, Evaluator, Extension};
use crate::urysohn::{build_family_with_cap, verify_family, Family, DEFAULT_DEPTH_CAP};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

const DEFAULT_DEPTH: u32 = 4;
const DEFAULT_GRID: u32 = 1000;

#[derive(Parser, Debug)]
#[command(
    name = "staircase",
    version,
    about = "Exact Urysohn functions and Tietze extensions on [0,1]"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The Cantor function and the endpoint sets.
    #[command(subcommand)]
    Cantor(CantorCmd),
    /// Separating functions for disjoint closed sets.
    #[command(subcommand)]
    Urysohn(UrysohnCmd),
    /// Extensions of piecewise-linear functions.
    #[command(subcommand)]
    Tietze(TietzeCmd),
}

#[derive(Subcommand, Debug)]
enum CantorCmd {
    /// Φ(x) for a rational x, or for every point of a cantor problem file.
    Eval {
        #[arg(long, allow_hyphen_values = true, required_unless_present = "input")]
        x: Option<String>,
        #[arg(long, conflicts_with = "x")]
        input: Option<PathBuf>,
    },
    /// The endpoints of the given level, in increasing order.
    Endpoints {
        #[arg(long)]
        level: u32,
    },
    /// The Cantor point of a dyadic `k/2^e` (or `p/q` with q a power of two).
    Gamma {
        #[arg(long)]
        d: String,
    },
    /// Whether x lies in the Cantor set.
    Member {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
}

#[derive(Args, Debug)]
struct Points {
    /// A single point.
    #[arg(
        long,
        allow_hyphen_values = true,
        required_unless_present = "grid",
        conflicts_with = "grid"
    )]
    x: Option<String>,
    /// All points k/N for k = 0..=N.
    #[arg(long)]
    grid: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Subcommand, Debug)]
enum UrysohnCmd {
    /// Build the nested family for a problem file.
    Build {
        #[arg(long)]
        input: PathBuf,
        /// Overrides the depth in the problem file.
        #[arg(long)]
        depth: Option<u32>,
        #[arg(long, default_value_t = DEFAULT_DEPTH_CAP)]
        cap: u32,
        /// Where to write the family (stdout when absent).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate F_n from a stored family.
    Eval {
        #[arg(long)]
        family: PathBuf,
        #[command(flatten)]
        points: Points,
    },
    /// Run every check on a stored family.
    Verify {
        #[arg(long)]
        family: PathBuf,
        /// Also write the report as JSON.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Print the report as JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Render F_n and the nested sets as SVG.
    Plot {
        #[arg(long)]
        family: PathBuf,
        #[arg(long)]
        svg: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum TietzeCmd {
    /// Extend the function of a problem file (gluing first when it is not surjective).
    Extend {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        depth: Option<u32>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check traces and agreement of a stored extension.
    Verify {
        #[arg(long)]
        extension: PathBuf,
        #[arg(long, default_value_t = DEFAULT_GRID)]
        grid: u32,
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate a stored extension.
    Eval {
        #[arg(long)]
        extension: PathBuf,
        #[command(flatten)]
        points: Points,
    },
    /// Render the extension and the input function as SVG.
    Plot {
        #[arg(long)]
        extension: PathBuf,
        #[arg(long)]
        svg: PathBuf,
    },
}

/// Failures surfaced by the command line.
#[derive(Debug)]
enum Failure {
    Lib(Error),
    Io(PathBuf, std::io::Error),
    Verify(Report),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

#[derive(Serialize)]
struct ErrorLine<'a> {
    error: &'a str,
    message: String,
}

#[derive(Serialize)]
struct FailureLine<'a> {
    group: &'a str,
    message: &'a str,
}

fn kind(e: &Error) -> &'static str {
    match e {
        Error::InvalidArgument(_) => "invalid-argument",
        Error::Precondition(_) => "precondition",
        Error::InvalidInput(_) => "invalid-input",
        Error::DepthLimit { .. } => "depth-limit",
        Error::Domain(_) => "domain",
        Error::NotSurjective(_) => "not-surjective",
        Error::Parse { .. } => "parse",
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Runs the command line on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Cantor(c) => cantor(c, out),
        Command::Urysohn(c) => urysohn(c, out),
        Command::Tietze(c) => tietze(c, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Verify(report)) => {
            for g in &report.groups {
                for f in &g.failures {
                    let line = FailureLine {
                        group: &g.label,
                        message: f,
                    };
                    let _ = writeln!(
                        err,
                        "{}",
                        serde_json::to_string(&line).expect("serializable")
                    );
                }
            }
            EXIT_VERIFY
        }
        Err(Failure::Lib(e)) => {
            let line = ErrorLine {
                error: kind(&e),
                message: e.to_string(),
            };
            let _ = writeln!(
                err,
                "{}",
                serde_json::to_string(&line).expect("serializable")
            );
            EXIT_INPUT
        }
        Err(Failure::Io(path, e)) => {
            let line = ErrorLine {
                error: "io",
                message: format!("{}: {e}", path.display()),
            };
            let _ = writeln!(
                err,
                "{}",
                serde_json::to_string(&line).expect("serializable")
            );
            EXIT_INPUT
        }
    }
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

fn write_file(path: &Path, text: &str) -> Outcome {
    fs::write(path, text).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

/// Writes to `path`, or to `out` when no path is given.
fn emit(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Outcome {
    match path {
        Some(p) => write_file(p, text),
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Io(PathBuf::from("<stdout>"), e)),
    }
}

fn say(out: &mut dyn Write, text: impl std::fmt::Display) -> Outcome {
    writeln!(out, "{text}").map_err(|e| Failure::Io(PathBuf::from("<stdout>"), e))
}

fn cantor(cmd: CantorCmd, out: &mut dyn Write) -> Outcome {
    match cmd {
        CantorCmd::Eval { x: Some(x), .. } => say(out, phi(&parse_unit(&x)?)?),
        CantorCmd::Eval { input, .. } => {
            let path = input.expect("clap requires x or input");
            let p = ProblemFile::parse(&read(&path)?)?;
            if p.kind != ProblemKind::Cantor {
                return Err(Error::input("expected a cantor problem file").into());
            }
            for t in &p.points {
                let x = parse_unit(t)?;
                say(out, format!("{x}\t{}", phi(&x)?))?;
            }
            Ok(())
        }
        CantorCmd::Endpoints { level } => {
            let pts: Vec<String> = enumerate_endpoints(level)?
                .iter()
                .map(|e| e.alpha().to_string())
                .collect();
            say(out, pts.join(" "))
        }
        CantorCmd::Gamma { d } => say(out, gamma(d.parse::<Dyadic>()?)),
        CantorCmd::Member { x } => say(out, in_cantor(&parse_unit(&x)?)?),
    }
}

fn grid_points(points: &Points) -> std::result::Result<Vec<Rational>, Failure> {
    match (&points.x, points.grid) {
        (Some(x), _) => Ok(vec![parse_rational(x).and_then(|x| {
            crate::rational::check_unit(&x)?;
            Ok(x)
        })?]),
        (None, Some(0)) | (None, None) => {
            Err(Error::arg("--grid needs a positive number of steps").into())
        }
        (None, Some(n)) => Ok((0..=n).map(|k| rat(i64::from(k), i64::from(n))).collect()),
    }
}

fn print_rows(rows: &[EvalRow], points: &Points, out: &mut dyn Write) -> Outcome {
    match points.format {
        Format::Json if points.x.is_some() => emit(None, &to_json(&rows[0]), out),
        Format::Json => emit(None, &to_json(&rows), out),
        Format::Tsv if points.x.is_some() => say(out, &rows[0].value),
        Format::Tsv => {
            for r in rows {
                say(out, format!("{}\t{}", r.x, r.value))?;
            }
            Ok(())
        }
    }
}

fn load_family(path: &Path) -> std::result::Result<Family, Failure> {
    Ok(FamilyForm::parse(&read(path)?)?)
}

fn load_extension(path: &Path) -> std::result::Result<Extension, Failure> {
    Ok(ExtensionForm::parse(&read(path)?)?)
}

fn finish_report(report: Report, path: Option<&Path>, json: bool, out: &mut dyn Write) -> Outcome {
    if let Some(p) = path {
        write_file(p, &to_json(&report))?;
    }
    if json {
        emit(None, &to_json(&report), out)?;
    } else {
        emit(None, &report.render(), out)?;
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Verify(report))
    }
}

fn urysohn(cmd: UrysohnCmd, out: &mut dyn Write) -> Outcome {
    match cmd {
        UrysohnCmd::Build {
            input,
            depth,
            cap,
            out: dest,
        } => {
            let p = ProblemFile::parse(&read(&input)?)?;
            let (a, b) = p.urysohn_sets()?;
            let depth = depth.or(p.depth).unwrap_or(DEFAULT_DEPTH);
            let fam = build_family_with_cap(&a, &b, depth, cap)?;
            emit(dest.as_deref(), &to_json(&FamilyForm::of(&fam)), out)
        }
        UrysohnCmd::Eval { family, points } => {
            let fam = load_family(&family)?;
            let rows = grid_points(&points)?
                .iter()
                .map(|x| {
                    let e = fam.evaluate(x)?;
                    Ok(EvalRow::dyadic(x, e.value, Some(e.g_index.to_string())))
                })
                .collect::<crate::Result<Vec<_>>>()?;
            print_rows(&rows, &points, out)
        }
        UrysohnCmd::Verify {
            family,
            report,
            json,
        } => {
            let fam = load_family(&family)?;
            finish_report(verify_family(&fam), report.as_deref(), json, out)
        }
        UrysohnCmd::Plot { family, svg } => write_file(&svg, &family_svg(&load_family(&family)?)),
    }
}

fn tietze(cmd: TietzeCmd, out: &mut dyn Write) -> Outcome {
    match cmd {
        TietzeCmd::Extend {
            input,
            depth,
            out: dest,
        } => {
            let p = ProblemFile::parse(&read(&input)?)?;
            let f = p.tietze_function()?;
            let depth = depth.or(p.depth).unwrap_or(DEFAULT_DEPTH);
            let ext = extend(&f, depth)?;
            emit(dest.as_deref(), &to_json(&ExtensionForm::of(&ext)), out)
        }
        TietzeCmd::Verify {
            extension,
            grid,
            report,
            json,
        } => {
            let ext = load_extension(&extension)?;
            finish_report(verify_extension(&ext, grid), report.as_deref(), json, out)
        }
        TietzeCmd::Eval { extension, points } => {
            let ext = load_extension(&extension)?;
            let rows = grid_points(&points)?
                .iter()
                .map(|x| {
                    let v = ext.value_at(x)?;
                    Ok(EvalRow {
                        x: x.to_string(),
                        value: v.to_string(),
                        dyadic: None,
                        g_index: None,
                    })
                })
                .collect::<crate::Result<Vec<_>>>()?;
            print_rows(&rows, &points, out)
        }
        TietzeCmd::Plot { extension, svg } => {
            write_file(&svg, &extension_svg(&load_extension(&extension)?))
        }
    }
}
