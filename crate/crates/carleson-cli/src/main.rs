//! Command-line front end: parses measure/system documents, dispatches to
//! the analysis routines, and writes JSON reports (plus CSV plot data for
//! the sweep commands).
//!
//! Exit codes: 0 success, 1 parse error, 2 invariant violation,
//! 3 numerical non-convergence, 4 assertion failure.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use carleson_core::numerics::quadrature::QuadratureSpec;

use carleson_cli::commands::{self, CommandOutput};
use carleson_cli::error::CliError;
use carleson_cli::schema::{parse_spec, ParsedInput};

#[derive(Parser)]
#[command(
    name = "carleson",
    about = "Carleson-measure admissibility checks for diagonal systems on the half-plane"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct IoArgs {
    /// Input document (measure, system, or family JSON).
    #[arg(long)]
    input: PathBuf,
    /// Report destination (JSON).
    #[arg(long)]
    output: PathBuf,
}

#[derive(Args)]
struct QuadArgs {
    /// Absolute and relative quadrature tolerance.
    #[arg(long, default_value_t = 1e-10)]
    quad_tol: f64,
    /// Subdivision budget per integral.
    #[arg(long, default_value_t = 4000)]
    max_subdivisions: u32,
}

impl QuadArgs {
    fn spec(&self) -> Result<QuadratureSpec, CliError> {
        Ok(QuadratureSpec::new(
            self.quad_tol,
            self.quad_tol,
            self.max_subdivisions,
        )?)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Exact geometric alpha-Carleson constant by extremal-tent enumeration.
    CheckGeometric {
        #[command(flatten)]
        io: IoArgs,
        #[arg(long, default_value_t = 1.0)]
        alpha: f64,
    },
    /// Embedding check: delegated to the geometric constant for alpha <= 1,
    /// otherwise the L^beta norm of the maximal function.
    CheckEmbedding {
        #[command(flatten)]
        io: IoArgs,
        #[arg(long, default_value_t = 1.0)]
        alpha: f64,
        /// Half-width of the integration window for alpha > 1.
        #[arg(long)]
        x_max: Option<f64>,
        #[command(flatten)]
        quad: QuadArgs,
    },
    /// Reproducing-kernel-thesis ratio sweep.
    Rkt {
        #[command(flatten)]
        io: IoArgs,
        #[arg(long, default_value_t = 2.0)]
        p: f64,
        #[arg(long, default_value_t = 2.0)]
        q: f64,
        /// Probe points per grid axis.
        #[arg(long, default_value_t = 40)]
        grid: usize,
        #[command(flatten)]
        quad: QuadArgs,
    },
    /// Probe-family admissibility sup (a lower bound of the constant).
    Admissibility {
        #[command(flatten)]
        io: IoArgs,
        #[arg(long, default_value_t = 2.0)]
        p: f64,
        /// Finite horizon; omit for the infinite-time functional.
        #[arg(long)]
        horizon: Option<f64>,
        /// Extrapolation exponent reported alongside (default 2/p').
        #[arg(long)]
        theta: Option<f64>,
    },
    /// Weiss-set sup over a log grid with local refinement.
    Weiss {
        #[command(flatten)]
        io: IoArgs,
        #[arg(long, default_value_t = 2.0)]
        p: f64,
    },
    /// Square-function norm of the all-ones state vector.
    SquareFunction {
        #[command(flatten)]
        io: IoArgs,
        #[arg(long, default_value_t = 2.0)]
        p: f64,
        #[command(flatten)]
        quad: QuadArgs,
    },
    /// Reciprocal-system probe and the finite-time constant C_T.
    Reciprocal {
        #[command(flatten)]
        io: IoArgs,
        #[arg(long, default_value_t = 2.0)]
        p: f64,
        #[arg(long, default_value_t = 1.0)]
        t_horizon: f64,
        /// Damping of the shifted semigroup (default: half the smallest
        /// Re lambda_n).
        #[arg(long)]
        epsilon: Option<f64>,
        #[command(flatten)]
        quad: QuadArgs,
    },
    /// Verify the Bessel-kernel representation identities on the default
    /// (lambda, t, variant) grid.
    BesselVerify {
        /// Report destination (JSON).
        #[arg(long)]
        output: PathBuf,
        /// Residual tolerance for the pass/fail verdict.
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        /// Optional CSV table of (lambda, t, variant, residual).
        #[arg(long)]
        csv: Option<PathBuf>,
        #[command(flatten)]
        quad: QuadArgs,
    },
    /// Reproduce the discrete counterexample family: geometric bound on a
    /// radius grid plus logarithmic growth of the maximal-function
    /// integrals.
    Counterexample {
        #[command(flatten)]
        io: IoArgs,
        /// Largest radius of the log-spaced evidence grid.
        #[arg(long, default_value_t = 1e6)]
        r_max: f64,
        /// Verify growth on the gaps n = 2..=growth_n.
        #[arg(long, default_value_t = 50)]
        growth_n: u32,
        /// Optional CSV table of the growth rows.
        #[arg(long)]
        csv: Option<PathBuf>,
        #[command(flatten)]
        quad: QuadArgs,
    },
}

fn read_input(path: &PathBuf) -> Result<ParsedInput, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))?;
    parse_spec(&text)
}

fn write_output(
    output: &PathBuf,
    csv_path: Option<&PathBuf>,
    out: &CommandOutput,
) -> Result<(), CliError> {
    let mut body = serde_json::to_string_pretty(&out.report)
        .map_err(|e| CliError::Parse(format!("report serialisation: {e}")))?;
    body.push('\n');
    fs::write(output, body)
        .map_err(|e| CliError::Parse(format!("cannot write {}: {e}", output.display())))?;
    if let (Some(path), Some(csv)) = (csv_path, out.csv.as_ref()) {
        fs::write(path, csv)
            .map_err(|e| CliError::Parse(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::CheckGeometric { io, alpha } => {
            let input = read_input(&io.input)?;
            let out = commands::check_geometric(&input, alpha)?;
            write_output(&io.output, None, &out)
        }
        Command::CheckEmbedding {
            io,
            alpha,
            x_max,
            quad,
        } => {
            let input = read_input(&io.input)?;
            let out = commands::check_embedding(&input, alpha, x_max, &quad.spec()?)?;
            write_output(&io.output, None, &out)
        }
        Command::Rkt {
            io,
            p,
            q,
            grid,
            quad,
        } => {
            let input = read_input(&io.input)?;
            let out = commands::rkt(&input, p, q, grid, &quad.spec()?)?;
            write_output(&io.output, None, &out)
        }
        Command::Admissibility {
            io,
            p,
            horizon,
            theta,
        } => {
            let input = read_input(&io.input)?;
            let out = commands::admissibility(&input, p, horizon, theta)?;
            write_output(&io.output, None, &out)
        }
        Command::Weiss { io, p } => {
            let input = read_input(&io.input)?;
            let out = commands::weiss(&input, p)?;
            write_output(&io.output, None, &out)
        }
        Command::SquareFunction { io, p, quad } => {
            let input = read_input(&io.input)?;
            let out = commands::square_function(&input, p, &quad.spec()?)?;
            write_output(&io.output, None, &out)
        }
        Command::Reciprocal {
            io,
            p,
            t_horizon,
            epsilon,
            quad,
        } => {
            let input = read_input(&io.input)?;
            let out = commands::reciprocal(&input, p, t_horizon, epsilon, &quad.spec()?)?;
            write_output(&io.output, None, &out)
        }
        Command::BesselVerify {
            output,
            tol,
            csv,
            quad,
        } => {
            let out = commands::bessel_verify(tol, &quad.spec()?)?;
            write_output(&output, csv.as_ref(), &out)?;
            if let Some(msg) = out.failed_assertion {
                return Err(CliError::Assertion(msg));
            }
            Ok(())
        }
        Command::Counterexample {
            io,
            r_max,
            growth_n,
            csv,
            quad,
        } => {
            let input = read_input(&io.input)?;
            let params =
                match &input {
                    ParsedInput::Family { doc, .. } => commands::CounterexampleParams {
                        epsilon: doc.epsilon,
                        gamma: doc.gamma,
                        n_modes: doc.n,
                        q: doc.q,
                        r_max,
                        growth_n_max: growth_n,
                    },
                    _ => return Err(CliError::Parse(
                        "counterexample needs a family document ({\"family\":\"example-e\",...})"
                            .into(),
                    )),
                };
            let out = commands::counterexample(&params, &quad.spec()?)?;
            write_output(&io.output, csv.as_ref(), &out)?;
            if let Some(msg) = out.failed_assertion {
                return Err(CliError::Assertion(msg));
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("carleson: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
