//! Command-line front end. Every subcommand prints one JSON document on
//! standard output.
//!
//! Exit codes: 0 on success, 2 when the input is well formed but violates a
//! geometric precondition (for instance a point outside `G`), 3 when the
//! input cannot be parsed.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::distinguished::{chart, unchart, ChartCoord};
use crate::domain::{Datum, Direction, GPoint};
use crate::extremal::caratheodory;
use crate::geodesic::{connect, direction_type, through_direction};
use crate::json::{self, ParseError};
use crate::ortho::{closest_point, orthogonal_geodesic};
use crate::plot::{real_slice_svg, SliceOptions};
use crate::{GeomError, Tolerances};

pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_PARSE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "symbidisc", version, about = "Hyperbolic geometry of the symmetrized bidisc")]
pub struct Cli {
    /// Replace every numerical tolerance by this value.
    #[arg(long, global = true, env = "SYMB_EPS")]
    pub eps: Option<f64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hyperbolic distance between two points, or the metric of a tangent vector.
    Dist {
        #[arg(long)]
        a: String,
        #[arg(long, required_unless_present = "v", conflicts_with = "v")]
        b: Option<String>,
        /// Tangent vector at `a` as [[re, im], [re, im]].
        #[arg(long)]
        v: Option<String>,
    },
    /// Type of the geodesic through two points.
    Classify {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Type of a direction at a point, and the geodesic it determines.
    Direction {
        #[arg(long)]
        at: String,
        #[arg(long)]
        v: String,
    },
    /// Closest point of a flat geodesic, with the orthogonal leaf through the point.
    Project {
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Chart coordinates of a non-royal point.
    Chart {
        #[arg(long)]
        at: String,
    },
    /// Point with the given chart coordinates.
    Unchart {
        #[arg(long, allow_hyphen_values = true)]
        eta1: String,
        #[arg(long, allow_hyphen_values = true)]
        eta2: String,
        #[arg(long)]
        t: f64,
        #[arg(long)]
        u: f64,
    },
    /// Write an SVG picture of the real slice and its foliations.
    PlotRealSlice {
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = SliceOptions::default().leaves)]
        leaves: usize,
        #[arg(long, default_value_t = SliceOptions::default().beta_lines)]
        beta_lines: usize,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Domain(#[from] GeomError),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Domain(_) => EXIT_DOMAIN,
            CliError::Io(_) => 1,
        }
    }
}

fn point(text: &str, tol: &Tolerances) -> Result<GPoint, CliError> {
    let (s, p) = json::parse_point_coords(text)?;
    Ok(GPoint::with_margin(s, p, tol.boundary_margin)?)
}

fn vector(text: &str) -> Result<[Complex64; 2], CliError> {
    let (a, b) = json::parse_pair(text)?;
    Ok([a, b])
}

/// Runs one command and returns the JSON document it prints.
pub fn execute(cli: &Cli) -> Result<Value, CliError> {
    let tol = match cli.eps {
        Some(eps) if eps > 0.0 && eps.is_finite() => Tolerances::with_eps(eps),
        Some(eps) => return Err(ParseError(format!("--eps must be positive, got {eps}")).into()),
        None => Tolerances::default(),
    };
    let out = match &cli.command {
        Command::Dist { a, b, v } => {
            let a = point(a, &tol)?;
            let datum = match (b, v) {
                (Some(b), _) => Datum::Discrete(a, point(b, &tol)?),
                (None, Some(v)) => Datum::Infinitesimal(a, vector(v)?),
                (None, None) => unreachable!("clap requires --b or --v"),
            };
            json::extremal(&caratheodory(&datum, &tol))
        }
        Command::Classify { a, b } => {
            let res = connect(&point(a, &tol)?, &point(b, &tol)?, &tol)?;
            json::connect(&res, &tol)
        }
        Command::Direction { at, v } => {
            let at = point(at, &tol)?;
            let v = Direction::from_vector(vector(v)?)?;
            let report = direction_type(&at, &v, &tol)?;
            let through = through_direction(&at, &v, &tol)?;
            json::direction(&report, &through, &tol)
        }
        Command::Project { beta, mu } => {
            let beta = json::parse_complex(beta)?;
            let mu = point(mu, &tol)?;
            let leaf = orthogonal_geodesic(beta, &mu, &tol)?;
            let foot = closest_point(beta, &mu, &tol)?;
            let mut doc = json::leaf(&leaf, &tol);
            doc["foot"] = json::point(&foot);
            doc
        }
        Command::Chart { at } => json::chart(&chart(&point(at, &tol)?, &tol)?),
        Command::Unchart { eta1, eta2, t, u } => {
            let coord = ChartCoord {
                eta: (json::parse_complex(eta1)?, json::parse_complex(eta2)?),
                t: *t,
                u: *u,
            };
            json::point(&unchart(&coord)?)
        }
        Command::PlotRealSlice { out, leaves, beta_lines } => {
            let svg = real_slice_svg(&SliceOptions { leaves: *leaves, beta_lines: *beta_lines });
            std::fs::write(out, svg)?;
            json!({ "out": out.display().to_string(), "leaves": leaves, "beta_lines": beta_lines })
        }
    };
    Ok(out)
}

/// Parses `args`, runs the command and writes its output. Returns the
/// process exit code.
pub fn run<I, T>(args: I, stdout: &mut impl Write, stderr: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{text}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{text}");
                    EXIT_PARSE
                }
            };
        }
    };
    match execute(&cli) {
        Ok(doc) => match writeln!(stdout, "{doc}") {
            Ok(()) => 0,
            Err(_) => 1,
        },
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
