//! Argument handling and dispatch for the `qcprog` binary.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use quasiconvex::apps::QualityMeasure;
use quasiconvex::qcp::BoundingBox;

use crate::commands::{self, RunConfig};
use crate::error::CliError;
use crate::formats::*;
use crate::levelset::{self, LevelsetProblem};

#[derive(Debug, Parser)]
#[command(
    name = "qcprog",
    version,
    about = "Quasiconvex programs from the command line"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Report,
}

#[derive(Debug, Args)]
struct Common {
    /// Input file.
    #[arg(long)]
    input: PathBuf,
    /// Random seed; falls back to QCPROG_SEED, then 0.
    #[arg(long, env = "QCPROG_SEED")]
    seed: Option<u64>,
    #[arg(long, default_value_t = 1e-9, value_parser = positive)]
    tolerance: f64,
    #[arg(long, default_value_t = 10_000)]
    max_iterations: usize,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    output: OutputFormat,
    /// Worker threads.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    jobs: u32,
}

impl Common {
    fn config(&self) -> RunConfig {
        RunConfig {
            tolerance: self.tolerance,
            max_iterations: self.max_iterations,
            seed: self.seed.unwrap_or(0),
            jobs: self.jobs as usize,
        }
    }
}

fn positive(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        _ => Err(format!("`{s}` is not a positive number")),
    }
}

/// Comma-separated numbers.
#[derive(Debug, Clone, PartialEq)]
struct NumberList(Vec<f64>);

fn number_list(s: &str) -> Result<NumberList, String> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<f64>()
                .map_err(|_| format!("`{p}` is not a number"))
        })
        .collect::<Result<_, _>>()
        .map(NumberList)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Measure {
    MaxAngle,
    AspectRatio,
    Perimeter,
    Circumradius,
    BankSmith,
}

impl From<Measure> for QualityMeasure {
    fn from(m: Measure) -> Self {
        match m {
            Measure::MaxAngle => QualityMeasure::MaxAngle,
            Measure::AspectRatio => QualityMeasure::AspectRatio,
            Measure::Perimeter => QualityMeasure::Perimeter,
            Measure::Circumradius => QualityMeasure::Circumradius,
            Measure::BankSmith => QualityMeasure::BankSmith,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Smallest enclosing ball of points (exact, dimensions 1 to 3).
    Seb(Common),
    /// Smallest ball containing a set of balls.
    SebBalls(Common),
    /// Smallest hyperbolic ball, points in Klein coordinates.
    SebHyp(Common),
    /// Kernel point of a star polygon with the best angular resolution.
    Sight(Common),
    /// Light position maximizing the dimmest face-vertex pair.
    Illum(Common),
    /// Longest prefix of convex sets with a common point.
    Lip(Common),
    /// Relocate free mesh vertices to improve the worst triangle.
    MeshSmooth {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Measure::MaxAngle)]
        measure: Measure,
        #[arg(long, default_value_t = 10)]
        passes: usize,
    },
    /// Growth rate of a backtracking recurrence along a target direction.
    Recurrence {
        #[command(flatten)]
        common: Common,
        /// Comma-separated target vector, e.g. `1,0.25`.
        #[arg(long, value_parser = number_list, allow_hyphen_values = true)]
        target: NumberList,
    },
    /// Sample a 2D objective on a grid as CSV (x, y, q).
    Levelset {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        problem: LevelsetProblem,
        #[arg(long, default_value_t = 50)]
        grid: usize,
        /// `xmin,xmax,ymin,ymax`; defaults to a window around the input.
        #[arg(long, value_parser = number_list, allow_hyphen_values = true)]
        bounds: Option<NumberList>,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn parse<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    Ok(serde_json::from_str(&read(path)?)?)
}

fn render<T: Serialize>(title: &str, value: &T, format: OutputFormat) -> Result<String, CliError> {
    let json = serde_json::to_value(value)?;
    Ok(match format {
        OutputFormat::Json => format!("{json}\n"),
        OutputFormat::Report => {
            let mut out = format!("{title}\n");
            if let serde_json::Value::Object(map) = json {
                for (k, v) in map {
                    out.push_str(&format!("  {k}: {v}\n"));
                }
            }
            out
        }
    })
}

fn execute(command: Command) -> Result<String, CliError> {
    match command {
        Command::Seb(c) => {
            let out = commands::seb(&parse(&c.input)?, &c.config())?;
            render("smallest enclosing ball", &out, c.output)
        }
        Command::SebBalls(c) => {
            let out = commands::seb_balls(&parse(&c.input)?, &c.config())?;
            render("smallest ball enclosing balls", &out, c.output)
        }
        Command::SebHyp(c) => {
            let out = commands::seb_hyp(&parse(&c.input)?, &c.config())?;
            render("smallest hyperbolic enclosing ball", &out, c.output)
        }
        Command::Sight(c) => {
            let out = commands::sight(&parse(&c.input)?, &c.config())?;
            render("sighting point", &out, c.output)
        }
        Command::Illum(c) => {
            let out = commands::illum(&parse(&c.input)?, &c.config())?;
            render("optimal illumination", &out, c.output)
        }
        Command::Lip(c) => {
            let out = commands::lip(&parse(&c.input)?)?;
            render("longest intersecting prefix", &out, c.output)
        }
        Command::MeshSmooth {
            common,
            measure,
            passes,
        } => {
            let mesh: MeshDoc = parse(&common.input)?;
            let out = commands::mesh_smooth(&mesh, measure.into(), passes, &common.config())?;
            render("mesh smoothing", &out, common.output)
        }
        Command::Recurrence { common, target } => {
            let r = commands::read_recurrence(&read(&common.input)?)?;
            let out = commands::recurrence(&r, &target.0, &common.config())?;
            render("recurrence growth", &out, common.output)
        }
        Command::Levelset {
            common,
            problem,
            grid,
            bounds,
        } => {
            let field = levelset::field(problem, &read(&common.input)?)?;
            let window = match bounds.map(|b| b.0) {
                None => field.bounds.clone(),
                Some(b) if b.len() == 4 => BoundingBox::new(vec![b[0], b[2]], vec![b[1], b[3]])?,
                Some(_) => return Err(CliError::Input("bounds need four numbers".into())),
            };
            let rows = levelset::sample(&field, grid, &window)?;
            let mut buf = Vec::new();
            levelset::write_csv(&rows, &mut buf)?;
            String::from_utf8(buf).map_err(|e| CliError::Input(e.to_string()))
        }
    }
}

/// Runs the program on `argv` (including the program name), writing the
/// result to `stdout` and diagnostics to `stderr`. Returns the exit code:
/// 0 on success, 1 when the input is rejected, 2 on usage errors.
pub fn run_with<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command) {
        Ok(text) => match stdout.write_all(text.as_bytes()) {
            Ok(()) => 0,
            Err(_) => 1,
        },
        Err(e) => {
            let report = serde_json::to_string(&e.report()).unwrap_or_default();
            let _ = writeln!(stderr, "{report}");
            1
        }
    }
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(
        argv,
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    )
}
