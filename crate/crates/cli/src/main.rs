use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cuoco_core::figure::FigureKind;
use cuoco_core::geometry::triangle_from_sides;
use cuoco_core::three_sum::Interpretation;
use cuoco_core::{cosine_law, Triangle};

mod commands;
mod report;

/// Exit status for a failed check.
pub const EXIT_FAILED: u8 = 1;
/// Exit status for bad input or I/O trouble.
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "cuoco",
    version,
    about = "Verify the Cuoco configuration of the law of cosines"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run every identity check on one triangle.
    Verify {
        #[command(flatten)]
        triangle: TriangleArgs,
        /// Relative tolerance for residuals.
        #[arg(long, default_value_t = 1e-9, value_parser = parse_tol)]
        tol: f64,
    },
    /// Solve x+y=L, x+z=M, y+z=N, optionally reading L, M, N off a triangle.
    Solve {
        #[arg(long = "L", allow_hyphen_values = true)]
        l: Option<f64>,
        #[arg(long = "M", allow_hyphen_values = true)]
        m: Option<f64>,
        #[arg(long = "N", allow_hyphen_values = true)]
        n: Option<f64>,
        /// Take L, M, N from a triangle and cross-check the solution geometrically.
        #[arg(long, value_enum)]
        interpret: Option<InterpretArg>,
        #[command(flatten)]
        triangle: TriangleArgs,
        #[arg(long, default_value_t = 1e-9, value_parser = parse_tol)]
        tol: f64,
    },
    /// Write an SVG drawing of one construction.
    Figure {
        #[command(flatten)]
        triangle: TriangleArgs,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        out: PathBuf,
        /// Decimal places for coordinates.
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u8).range(1..=12))]
        precision: u8,
        #[arg(long, default_value_t = 0)]
        palette: usize,
        #[arg(long)]
        no_labels: bool,
        /// Leave zero-area panels out instead of drawing them as segments.
        #[arg(long)]
        omit_degenerate: bool,
    },
    /// Run every check over seeded random triangles.
    Fuzz {
        #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        /// Integer seed, or any string (hashed).
        #[arg(long, default_value = "42")]
        seed: String,
        #[arg(long, default_value_t = 1e-9, value_parser = parse_tol)]
        tol: f64,
    },
}

#[derive(Debug, Clone, Args)]
struct TriangleArgs {
    /// Side lengths a,b,c.
    #[arg(long, value_parser = parse_list::<3>, allow_hyphen_values = true)]
    sides: Option<[f64; 3]>,
    /// Vertices x1,y1,x2,y2,x3,y3 for A, B, C.
    #[arg(long, value_parser = parse_list::<6>, allow_hyphen_values = true)]
    points: Option<[f64; 6]>,
    /// Two sides and the angle between them: a,b,gamma.
    #[arg(long, value_parser = parse_list::<3>, allow_hyphen_values = true)]
    sas: Option<[f64; 3]>,
    /// Angles on the command line are in degrees.
    #[arg(long)]
    degrees: bool,
}

impl TriangleArgs {
    fn is_given(&self) -> bool {
        self.sides.is_some() || self.points.is_some() || self.sas.is_some()
    }

    fn angle(&self, v: f64) -> f64 {
        if self.degrees {
            v.to_radians()
        } else {
            v
        }
    }

    fn build(&self) -> Result<Triangle, String> {
        let given = [self.sides.is_some(), self.points.is_some(), self.sas.is_some()];
        match given.iter().filter(|&&g| g).count() {
            0 => return Err("a triangle is required: use --sides, --points or --sas".into()),
            1 => {}
            _ => return Err("give only one of --sides, --points, --sas".into()),
        }
        let result = if let Some(s) = &self.sides {
            triangle_from_sides(s[0], s[1], s[2])
        } else if let Some(p) = &self.points {
            Triangle::from_coords(*p)
        } else {
            let s = self.sas.as_ref().expect("checked above");
            let gamma = self.angle(s[2]);
            cosine_law::third_side(s[0], s[1], gamma).and_then(|c| triangle_from_sides(s[0], s[1], c))
        };
        result.map_err(|e| e.to_string())
    }
}

fn parse_list<const N: usize>(s: &str) -> Result<[f64; N], String> {
    let values = s
        .split(',')
        .map(|x| x.trim().parse::<f64>().map_err(|e| format!("`{x}`: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    if values.iter().any(|v| !v.is_finite()) {
        return Err("values must be finite".into());
    }
    let len = values.len();
    values
        .try_into()
        .map_err(|_| format!("expected {N} comma-separated numbers, got {len}"))
}

fn parse_tol(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(t) if t.is_finite() && t > 0.0 => Ok(t),
        Ok(_) => Err("tolerance must be positive and finite".into()),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum InterpretArg {
    Squares,
    Sides,
    Angles,
}

impl From<InterpretArg> for Interpretation {
    fn from(a: InterpretArg) -> Self {
        match a {
            InterpretArg::Squares => Interpretation::Squares,
            InterpretArg::Sides => Interpretation::Sides,
            InterpretArg::Angles => Interpretation::Angles,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum KindArg {
    EuclidDefect,
    Cuoco,
    CuocoPairs,
    CuocoObtuse,
    Incircle,
    Circumcircle,
}

impl From<KindArg> for FigureKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::EuclidDefect => FigureKind::EuclidDefect,
            KindArg::Cuoco => FigureKind::Cuoco,
            KindArg::CuocoPairs => FigureKind::CuocoPairs,
            KindArg::CuocoObtuse => FigureKind::CuocoObtuse,
            KindArg::Incircle => FigureKind::Incircle,
            KindArg::Circumcircle => FigureKind::Circumcircle,
        }
    }
}

/// A failed command: message for stderr plus exit status.
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify { triangle, tol } => triangle
            .build()
            .map_err(Failure::usage)
            .map(|t| commands::verify(&t, tol)),
        Command::Solve {
            l,
            m,
            n,
            interpret,
            triangle,
            tol,
        } => commands::solve(l, m, n, interpret.map(Into::into), &triangle, tol),
        Command::Figure {
            triangle,
            kind,
            out,
            precision,
            palette,
            no_labels,
            omit_degenerate,
        } => triangle.build().map_err(Failure::usage).and_then(|t| {
            let spec = cuoco_core::figure::FigureSpec {
                kind: kind.into(),
                palette,
                labels: !no_labels,
                precision,
                omit_degenerate,
            };
            commands::figure(&t, &spec, &out)
        }),
        Command::Fuzz { count, seed, tol } => Ok(commands::fuzz(count as usize, &seed, tol)),
    };
    match result {
        Ok((json, pass)) => {
            let mut stdout = std::io::stdout().lock();
            if let Err(e) = writeln!(stdout, "{}", report::to_string(json)) {
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    eprintln!("cuoco: {e}");
                    return ExitCode::from(EXIT_USAGE);
                }
            }
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAILED)
            }
        }
        Err(f) => {
            eprintln!("cuoco: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
