//! Command-line surface: build root data, print the wall arrangement,
//! query the distinguished cones, locate points, verify, enumerate
//! chambers, and render the rank-2 slice.
//!
//! Exit codes: 0 success (and verification pass), 1 verification failure,
//! 2 usage or parse error, 3 enumeration budget exhausted.

mod emit;
mod figure;

use std::collections::BTreeSet;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use polycone::RationalVector;
use rootsys::RootSystem;

use gitfan::{
    adjacent, cell_at, chamber_closure, chambers, is_q_factorial, picard_rank, sigma, sigma_prime,
    verify, Arrangement, Budget, GitFanError, Overall,
};

#[derive(Parser)]
#[command(
    name = "gitfan",
    version,
    about = "Exact wall-and-chamber combinatorics over the stability space of a framed affine quiver"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Svg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    Sigma,
    SigmaPrime,
    Chamber,
    Fundamental,
}

#[derive(Args)]
struct Output {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write to this file instead of standard output
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the root system: Cartan data, positive roots, delta, Coxeter number
    Roots {
        /// Dynkin type: A1..A8, D4 and up, E6, E7, E8
        #[arg(long = "type", value_name = "TYPE")]
        ty: String,
        #[command(flatten)]
        out: Output,
    },
    /// Print the wall arrangement with interior-cutting flags
    Arrangement {
        #[arg(long = "type", value_name = "TYPE")]
        ty: String,
        /// Number of points, n >= 1
        #[arg(long)]
        n: i64,
        #[command(flatten)]
        out: Output,
    },
    /// Print a distinguished cone, or the fundamental cone itself
    Cone {
        #[arg(long = "type", value_name = "TYPE")]
        ty: String,
        #[arg(long)]
        n: i64,
        /// Comma-separated node subset K, empty for the empty set
        #[arg(long = "K", value_name = "NODES", default_value = "")]
        k: String,
        /// Which cone to print
        #[arg(long, value_enum)]
        which: Which,
        #[command(flatten)]
        out: Output,
    },
    /// Locate the fan cone containing a rational point of F
    Locate {
        #[arg(long = "type", value_name = "TYPE")]
        ty: String,
        #[arg(long)]
        n: i64,
        /// Comma-separated rational coordinates theta_0,...,theta_r, each "p" or "p/q"
        #[arg(long, value_name = "COORDS", allow_hyphen_values = true)]
        point: String,
        #[command(flatten)]
        out: Output,
    },
    /// Check the defining clauses of the distinguished cone for K
    Verify {
        #[arg(long = "type", value_name = "TYPE")]
        ty: String,
        #[arg(long)]
        n: i64,
        #[arg(long = "K", value_name = "NODES", default_value = "")]
        k: String,
        /// Enumeration budget for the uniqueness clauses
        #[arg(long, value_name = "LIMIT")]
        budget: Option<u64>,
        #[command(flatten)]
        out: Output,
    },
    /// Enumerate chamber closures in F with their adjacency
    Chambers {
        #[arg(long = "type", value_name = "TYPE")]
        ty: String,
        #[arg(long)]
        n: i64,
        #[arg(long, value_name = "LIMIT")]
        budget: Option<u64>,
        #[command(flatten)]
        out: Output,
    },
    /// Render the affine slice of F as SVG (rank 2 only)
    Figure {
        #[arg(long = "type", value_name = "TYPE")]
        ty: String,
        #[arg(long)]
        n: i64,
        #[arg(long, value_name = "LIMIT")]
        budget: Option<u64>,
        /// Output format; the figure is only available as svg
        #[arg(long, value_enum, default_value_t = Format::Svg)]
        format: Format,
        #[arg(long, value_name = "PATH")]
        output: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Budget(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Budget(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Budget(m) => m,
        }
    }
}

impl From<GitFanError> for Failure {
    fn from(e: GitFanError) -> Self {
        match e {
            GitFanError::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn parse_system(ty: &str) -> Result<RootSystem, Failure> {
    let dynkin: rootsys::DynkinType = ty
        .parse()
        .map_err(|e: rootsys::RootSysError| Failure::Usage(e.to_string()))?;
    Ok(rootsys::build_root_system(dynkin))
}

fn parse_arrangement(ty: &str, n: i64) -> Result<Arrangement, Failure> {
    Ok(Arrangement::build(parse_system(ty)?, n)?)
}

fn parse_nodes(s: &str, rank: usize) -> Result<BTreeSet<usize>, Failure> {
    let mut out = BTreeSet::new();
    if s.trim().is_empty() {
        return Ok(out);
    }
    for part in s.split(',') {
        let node: usize = part
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("cannot read node {:?} in K", part.trim())))?;
        if node == 0 || node > rank {
            return Err(Failure::Usage(format!(
                "node {node} is outside the diagram, which has nodes 1 through {rank}"
            )));
        }
        if !out.insert(node) {
            return Err(Failure::Usage(format!("node {node} appears twice in K")));
        }
    }
    Ok(out)
}

fn parse_rational(s: &str) -> Result<BigRational, Failure> {
    let bad = || Failure::Usage(format!("cannot read rational coordinate {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Failure::Usage(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(n, d))
}

fn parse_point(s: &str, dim: usize) -> Result<RationalVector, Failure> {
    let coords: Vec<BigRational> = s
        .split(',')
        .map(parse_rational)
        .collect::<Result<_, _>>()?;
    if coords.len() != dim {
        return Err(Failure::Usage(format!(
            "expected {dim} coordinates theta_0,...,theta_{}, got {}",
            dim - 1,
            coords.len()
        )));
    }
    Ok(RationalVector::new(coords))
}

fn no_svg(format: Format) -> Result<(), Failure> {
    if format == Format::Svg {
        return Err(Failure::Usage(
            "svg output is only available for the figure subcommand".into(),
        ));
    }
    Ok(())
}

fn run(command: Command) -> Result<(String, Option<PathBuf>, u8), Failure> {
    match command {
        Command::Roots { ty, out } => {
            no_svg(out.format)?;
            let rs = parse_system(&ty)?;
            let body = match out.format {
                Format::Json => emit::roots_json(&rs),
                _ => emit::roots_text(&rs),
            };
            Ok((body, out.output, 0))
        }
        Command::Arrangement { ty, n, out } => {
            no_svg(out.format)?;
            let arr = parse_arrangement(&ty, n)?;
            let body = match out.format {
                Format::Json => emit::arrangement_json(&arr),
                _ => emit::arrangement_text(&arr),
            };
            Ok((body, out.output, 0))
        }
        Command::Cone {
            ty,
            n,
            k,
            which,
            out,
        } => {
            no_svg(out.format)?;
            let arr = parse_arrangement(&ty, n)?;
            let nodes = parse_nodes(&k, arr.rs().rank())?;
            let (label, cone) = match which {
                Which::Sigma => ("sigma", Some(sigma(&arr, &nodes)?)),
                Which::SigmaPrime => ("sigma_prime", Some(sigma_prime(&arr, &nodes)?)),
                Which::Chamber => ("chamber_closure", Some(chamber_closure(&arr, &nodes)?)),
                Which::Fundamental => ("fundamental", None),
            };
            let body = match out.format {
                Format::Json => {
                    let payload = match &cone {
                        Some(g) => g.to_json(),
                        None => serde_json::json!({
                            "label": "fundamental",
                            "cone": arr.fundamental_cone().to_json(),
                        }),
                    };
                    emit::cone_json(&arr, payload)
                }
                _ => emit::cone_text(&arr, label, cone.as_ref()),
            };
            Ok((body, out.output, 0))
        }
        Command::Locate { ty, n, point, out } => {
            no_svg(out.format)?;
            let arr = parse_arrangement(&ty, n)?;
            let theta = parse_point(&point, arr.dim())?;
            let cell = cell_at(&arr, &theta)?;
            let picard = picard_rank(&arr, &theta)?;
            let qfac = is_q_factorial(&arr, &theta)?;
            let body = match out.format {
                Format::Json => emit::locate_json(&arr, &theta, &cell, picard, qfac),
                _ => emit::locate_text(&arr, &cell, picard, qfac),
            };
            Ok((body, out.output, 0))
        }
        Command::Verify {
            ty,
            n,
            k,
            budget,
            out,
        } => {
            no_svg(out.format)?;
            let arr = parse_arrangement(&ty, n)?;
            let nodes = parse_nodes(&k, arr.rs().rank())?;
            let limit = budget.unwrap_or(Budget::DEFAULT_LIMIT);
            let report = verify(&arr, &nodes, limit)?;
            let code = match report.overall {
                Overall::Pass => 0,
                Overall::Fail => 1,
                Overall::Indeterminate => 3,
            };
            let body = match out.format {
                Format::Json => emit::verify_json(&arr, &report),
                _ => emit::verify_text(&report),
            };
            Ok((body, out.output, code))
        }
        Command::Chambers { ty, n, budget, out } => {
            no_svg(out.format)?;
            let arr = parse_arrangement(&ty, n)?;
            let mut b = Budget::new(budget.unwrap_or(Budget::DEFAULT_LIMIT));
            let list = chambers(&arr, &mut b)?;
            let mut pairs = Vec::new();
            for i in 0..list.len() {
                for j in i + 1..list.len() {
                    if adjacent(list[i].cone(), list[j].cone())? {
                        pairs.push((i, j));
                    }
                }
            }
            let body = match out.format {
                Format::Json => emit::chambers_json(&arr, &list, &pairs),
                _ => emit::chambers_text(&arr, &list, &pairs),
            };
            Ok((body, out.output, 0))
        }
        Command::Figure {
            ty,
            n,
            budget,
            format,
            output,
        } => {
            if format != Format::Svg {
                return Err(Failure::Usage(
                    "the figure subcommand only emits svg".into(),
                ));
            }
            let arr = parse_arrangement(&ty, n)?;
            if arr.rs().rank() != 2 {
                return Err(Failure::Usage(format!(
                    "slice rendering needs a rank-2 type, {} has rank {}",
                    arr.rs().dynkin(),
                    arr.rs().rank()
                )));
            }
            let svg = figure::render(&arr, budget.unwrap_or(Budget::DEFAULT_LIMIT))?;
            Ok((svg, output, 0))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((body, output, code)) => {
            let wrote = match output {
                Some(path) => std::fs::write(&path, &body)
                    .map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => std::io::stdout()
                    .write_all(body.as_bytes())
                    .map_err(|e| format!("cannot write output: {e}")),
            };
            match wrote {
                Ok(()) => ExitCode::from(code),
                Err(msg) => {
                    eprintln!("error: {msg}");
                    ExitCode::from(2)
                }
            }
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}
