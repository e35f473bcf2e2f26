mod json;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use lamcoord::oracle::DEFAULT_WORK_CEILING;
use lamcoord::{
    build_diagram, check_bijection, decode, encode, render_svg, trace, EnumerationBudget, Error,
    ExtraComponent, RenderOptions, Sidedness, Signature,
};
use serde_json::json;

/// Generalized Dynnikov coordinates for laminations on N_{k,n}.
#[derive(Parser)]
#[command(name = "lamcoord", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Triangle coordinates τ to Dynnikov coordinates ρ.
    Encode(Io),
    /// Dynnikov coordinates ρ to triangle coordinates τ.
    Decode {
        #[command(flatten)]
        io: Io,
        /// Also print ψ, X, Y, β* and R.
        #[arg(long)]
        verbose: bool,
    },
    /// Check that τ is the coordinate of a lamination.
    Validate(Io),
    /// List the components of the lamination with coordinates τ.
    Trace(Io),
    /// Draw the lamination with coordinates τ as SVG.
    Render {
        #[command(flatten)]
        io: Io,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 160.0)]
        scale: f64,
        #[arg(long, default_value_t = 1.2)]
        stroke_width: f64,
        #[arg(long)]
        no_labels: bool,
        #[arg(long)]
        no_arcs: bool,
    },
    /// Check the coordinate bijection exhaustively on a box.
    Selftest {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        k: i64,
        #[arg(long, default_value_t = 2)]
        radius: i64,
        /// Strand bound for the census enumeration; defaults to twice the radius.
        #[arg(long)]
        max_strands: Option<i64>,
        /// Skip tuples with t_s and ψ_s of different parity, which no
        /// lamination has.
        #[arg(long)]
        parity_lattice: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Args)]
struct Io {
    /// Input file, or `-` for stdin.
    #[arg(long, default_value = "-")]
    input: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
}

#[derive(Debug)]
pub enum Failure {
    Parse(String),
    Domain(String),
    Counterexample(String),
    Io(anyhow::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Io(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Io(_) => 1,
            Failure::Parse(_) => 2,
            Failure::Domain(_) => 3,
            Failure::Counterexample(_) => 4,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Parse(m) => write!(f, "parse error: {m}"),
            Failure::Domain(m) => write!(f, "{m}"),
            Failure::Counterexample(m) => write!(f, "{m}"),
            Failure::Io(e) => write!(f, "{e:#}"),
        }
    }
}

fn read_input(path: &str) -> anyhow::Result<String> {
    let mut text = String::new();
    if path == "-" {
        io::stdin()
            .read_to_string(&mut text)
            .context("reading stdin")?;
    } else {
        text = fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
    }
    Ok(text)
}

fn print_json(v: &impl serde::Serialize) -> Result<(), Failure> {
    let text = serde_json::to_string(v).context("serializing output")?;
    let mut out = io::stdout().lock();
    writeln!(out, "{text}").context("writing stdout")?;
    Ok(())
}

fn work_ceiling() -> Result<u128, Failure> {
    match std::env::var("LAMCOORD_WORK_CEILING") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Parse(format!("LAMCOORD_WORK_CEILING = {v:?} is not a count"))),
        Err(_) => Ok(DEFAULT_WORK_CEILING),
    }
}

fn sidedness(s: Sidedness) -> &'static str {
    match s {
        Sidedness::OneSided => "one-sided",
        Sidedness::TwoSided => "two-sided",
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Encode(io) => {
            let tau = json::read_tau(&read_input(&io.input)?)?;
            let report = tau.validate();
            if !report.is_valid() {
                return Err(Failure::Domain(format!("invalid τ: {report}")));
            }
            print_json(&json::rho_out(&encode(&tau)?))
        }
        Command::Decode { io, verbose } => {
            let rho = json::read_rho(&read_input(&io.input)?)?;
            let (tau, im) = decode(&rho)?;
            if verbose {
                print_json(&json!({
                    "tau": json::tau_out(&tau),
                    "intermediates": {
                        "psi": im.psi,
                        "X": im.x,
                        "Y": im.y,
                        "beta_star": im.beta_star,
                        "R": im.r,
                    },
                }))
            } else {
                print_json(&json::tau_out(&tau))
            }
        }
        Command::Validate(io) => {
            let tau = json::read_tau(&read_input(&io.input)?)?;
            let report = tau.validate();
            let violations: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
            print_json(&json!({ "valid": report.is_valid(), "violations": violations }))?;
            if report.is_valid() {
                Ok(())
            } else {
                Err(Failure::Domain(format!("invalid τ: {report}")))
            }
        }
        Command::Trace(io) => {
            let tau = json::read_tau(&read_input(&io.input)?)?;
            let report = tau.validate();
            if !report.is_valid() {
                return Err(Failure::Domain(format!("invalid τ: {report}")));
            }
            let comps = trace(&build_diagram(&tau)?)?;
            let list: Vec<_> = comps
                .iter()
                .map(|c| {
                    let kind = match c.extra {
                        None => "strand",
                        Some(ExtraComponent::CoreCurve(_)) => "core curve",
                        Some(ExtraComponent::MobiusBoundary(_)) => "mobius boundary",
                    };
                    json!({
                        "kind": kind,
                        "sidedness": sidedness(c.sidedness),
                        "core_crossings": c.crossings,
                    })
                })
                .collect();
            print_json(&json!({ "count": comps.len(), "components": list }))
        }
        Command::Render {
            io,
            out,
            scale,
            stroke_width,
            no_labels,
            no_arcs,
        } => {
            let tau = json::read_tau(&read_input(&io.input)?)?;
            let report = tau.validate();
            if !report.is_valid() {
                return Err(Failure::Domain(format!("invalid τ: {report}")));
            }
            let opts = RenderOptions {
                scale,
                stroke_width,
                arcs: !no_arcs,
                labels: !no_labels,
            };
            let svg = render_svg(&build_diagram(&tau)?, &opts)?;
            match out {
                Some(path) => {
                    fs::write(&path, svg).with_context(|| format!("writing {}", path.display()))?
                }
                None => io::stdout()
                    .lock()
                    .write_all(svg.as_bytes())
                    .context("writing stdout")?,
            }
            Ok(())
        }
        Command::Selftest {
            n,
            k,
            radius,
            max_strands,
            parity_lattice,
            format: _,
        } => {
            if radius < 0 || max_strands.is_some_and(|m| m < 0) {
                return Err(Failure::Domain(
                    "radius and max-strands must be non-negative".into(),
                ));
            }
            let sig = Signature::new(k, n)?;
            let budget = EnumerationBudget::new(sig, radius, max_strands.unwrap_or(2 * radius))
                .with_work_ceiling(work_ceiling()?)
                .parity_lattice_only(parity_lattice);
            let report = check_bijection(&budget)?;
            let checks: Vec<_> = report
                .checks
                .iter()
                .map(|c| {
                    json!({
                        "name": c.name,
                        "passed": c.passed(),
                        "checked": c.checked,
                        "skipped": c.skipped,
                        "failures": c.failures,
                        "first_failure": c.first_failure,
                    })
                })
                .collect();
            print_json(&json!({
                "n": sig.punctures(),
                "k": sig.genus(),
                "radius": radius,
                "max_strands": budget.max_strands,
                "parity_lattice": parity_lattice,
                "box_tuples": report.box_tuples,
                "configurations": report.configurations,
                "passed": report.passed(),
                "checks": checks,
            }))?;
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::Counterexample(
                    report.to_string().trim_end().to_string(),
                ))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("lamcoord: {f}");
            ExitCode::from(f.code())
        }
    }
}
