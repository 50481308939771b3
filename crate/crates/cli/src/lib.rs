//! The `fro` command line.
//!
//! Data goes to stdout (or `--out`), diagnostics to stderr. Exit status is 0
//! on success, 2 for invalid input or usage, 1 for io and runtime failures.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use fro_core::analytic::solve_analytic;
use fro_core::dataio::{self, grid_fit, load_series, parse_grid, DataError, FitError, Format};
use fro_core::expr::Expression;
use fro_core::mittag_leffler::ml;
use fro_core::solver::{
    empirical_order, solve_pece, theoretical_order, ConvergenceError, Forcing, FroProblem,
    Reference, SolveError,
};
use fro_service::AppConfig;

#[derive(Debug, Parser)]
#[command(
    name = "fro",
    version,
    about = "Fractional relaxation-oscillation solver"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve with the predictor-corrector scheme and write the trajectory
    Solve(TrajectoryArgs),
    /// Evaluate the Mittag-Leffler closed form on the same grid
    Analytic(TrajectoryArgs),
    /// Print E_{alpha,beta}(z)
    Ml {
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, allow_negative_numbers = true, default_value_t = 1.0)]
        beta: f64,
        #[arg(long, allow_negative_numbers = true)]
        z: f64,
    },
    /// Grid-search alpha and coeff against a time,value CSV
    Fit(FitArgs),
    /// Error table and fitted order against the closed form (zero forcing)
    Converge {
        #[command(flatten)]
        problem: ProblemArgs,
        /// Coarsest step of the ladder
        #[arg(long, default_value_t = 1.0 / 64.0)]
        h0: f64,
        /// Number of halvings
        #[arg(long, default_value_t = 4)]
        levels: usize,
    },
    /// Run the HTTP API
    Serve(ServeArgs),
}

#[derive(Debug, Clone, Args)]
pub struct ProblemArgs {
    /// Fractional order, 0 < alpha <= 2
    #[arg(long, allow_negative_numbers = true, default_value_t = 0.5)]
    pub alpha: f64,
    /// Relaxation coefficient A
    #[arg(long, allow_negative_numbers = true, default_value_t = 1.0)]
    pub coeff: f64,
    /// Time step
    #[arg(long, allow_negative_numbers = true, default_value_t = 0.1)]
    pub dt: f64,
    /// Total time
    #[arg(long, allow_negative_numbers = true, default_value_t = 10.0)]
    pub duration: f64,
    /// Initial value u(0)
    #[arg(long, allow_negative_numbers = true, default_value_t = 0.0)]
    pub y0: f64,
    /// Initial slope u'(0), used when alpha > 1
    #[arg(long, allow_negative_numbers = true, default_value_t = 0.0)]
    pub yp0: f64,
    /// Forcing f(t), e.g. "5*cos(t^2)*exp(-t)"
    #[arg(long, default_value = "0")]
    pub forcing: String,
}

impl ProblemArgs {
    pub fn problem(&self) -> Result<FroProblem, CliError> {
        let forcing: Expression = self
            .forcing
            .parse()
            .map_err(|e| CliError::Invalid(format!("forcing {:?}: {e}", self.forcing)))?;
        Ok(FroProblem {
            alpha: self.alpha,
            relax_coeff: self.coeff,
            forcing: Forcing::Expression(forcing),
            y0: self.y0,
            y0_prime: self.yp0,
            step: self.dt,
            duration: self.duration,
        })
    }
}

#[derive(Debug, Clone, Args)]
pub struct TrajectoryArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    /// Write here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// csv or json
    #[arg(long, default_value = "csv")]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct FitArgs {
    /// CSV file with a time,value header
    #[arg(long)]
    pub data: PathBuf,
    /// Orders to try: start:stop:step or a comma list
    #[arg(long, default_value = "0.1:0.95:0.05")]
    pub alphas: String,
    /// Coefficients to try: start:stop:step or a comma list
    #[arg(long, default_value = "0.05:3.0:0.05")]
    pub coeffs: String,
    #[arg(long, default_value_t = 0.1)]
    pub dt: f64,
    /// Defaults to the last data time rounded up to a whole step
    #[arg(long)]
    pub duration: Option<f64>,
    /// Defaults to the first data value
    #[arg(long, allow_negative_numbers = true)]
    pub y0: Option<f64>,
    /// Report as text or json
    #[arg(long, default_value = "text")]
    pub format: String,
}

#[derive(Debug, Clone, Args)]
pub struct ServeArgs {
    #[arg(long, env = "FRO_PORT", default_value_t = 8080)]
    pub port: u16,
    /// Largest accepted duration / dt
    #[arg(long, env = "FRO_MAX_STEPS", default_value_t = 100_000)]
    pub max_steps: usize,
    /// Largest accepted fit grid
    #[arg(long, env = "FRO_MAX_FIT_PAIRS", default_value_t = 10_000)]
    pub max_fit_pairs: usize,
    /// Directory with the UI bundle to serve at /
    #[arg(long, env = "FRO_STATIC_DIR")]
    pub static_dir: Option<PathBuf>,
}

#[derive(Debug)]
pub enum CliError {
    Invalid(String),
    Failed(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Failed(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Invalid(m) | CliError::Failed(m) => f.write_str(m),
        }
    }
}

impl From<SolveError> for CliError {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::Diverged { .. } => CliError::Failed(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<DataError> for CliError {
    fn from(e: DataError) -> Self {
        match e {
            DataError::Io { .. } | DataError::Serialize(_) => CliError::Failed(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<FitError> for CliError {
    fn from(e: FitError) -> Self {
        match e {
            FitError::Data(d) => d.into(),
            FitError::Solve {
                source: SolveError::Diverged { .. },
                ..
            }
            | FitError::AllDiverged => CliError::Failed(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Failed(e.to_string())
    }
}

/// Parses `std::env::args` and runs the command.
pub fn run() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

pub fn execute(command: Command) -> Result<(), CliError> {
    match command {
        Command::Solve(args) => {
            let traj = solve_pece(&args.problem.problem()?)?;
            emit(&args, &traj)
        }
        Command::Analytic(args) => {
            let traj = solve_analytic(&args.problem.problem()?)
                .map_err(|e| CliError::Invalid(e.to_string()))?;
            emit(&args, &traj)
        }
        Command::Ml { alpha, beta, z } => {
            let value = ml(alpha, beta, z).map_err(|e| CliError::Invalid(e.to_string()))?;
            print(&format!("{value}\n"))
        }
        Command::Fit(args) => fit(&args),
        Command::Converge {
            problem,
            h0,
            levels,
        } => converge(&problem, h0, levels),
        Command::Serve(args) => serve(args),
    }
}

fn print(text: &str) -> Result<(), CliError> {
    let mut out = io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        other => Ok(other?),
    }
}

fn emit(args: &TrajectoryArgs, traj: &fro_core::Trajectory) -> Result<(), CliError> {
    for notice in &traj.notices {
        log::warn!("{notice}");
    }
    match &args.out {
        Some(path) => Ok(dataio::export_trajectory(traj, path, args.format)?),
        None => match args.format {
            Format::Csv => print(&dataio::trajectory_csv(traj)),
            Format::Json => {
                let mut text = serde_json::to_string_pretty(&dataio::trajectory_json(traj))
                    .map_err(|e| CliError::Failed(e.to_string()))?;
                text.push('\n');
                print(&text)
            }
        },
    }
}

fn fit(args: &FitArgs) -> Result<(), CliError> {
    let series = load_series(&args.data)?;
    let alphas =
        parse_grid(&args.alphas).map_err(|e| CliError::Invalid(format!("--alphas: {e}")))?;
    let coeffs =
        parse_grid(&args.coeffs).map_err(|e| CliError::Invalid(format!("--coeffs: {e}")))?;
    if args.dt.is_nan() || args.dt <= 0.0 {
        return Err(CliError::Invalid(format!(
            "--dt {} must be positive",
            args.dt
        )));
    }
    let last = series.last().0;
    let template = FroProblem {
        y0: args.y0.unwrap_or(series.first().1),
        step: args.dt,
        duration: args
            .duration
            .unwrap_or_else(|| (last / args.dt - 1e-9).ceil().max(1.0) * args.dt),
        ..FroProblem::default()
    };
    let report = grid_fit(&series, &alphas, &coeffs, &template)?;
    let text = match args.format.as_str() {
        "json" => {
            let mut s = serde_json::to_string_pretty(&report)
                .map_err(|e| CliError::Failed(e.to_string()))?;
            s.push('\n');
            s
        }
        "text" => {
            let mut s = format!(
                "alpha {}\ncoeff {}\ny0 {}\nrmse {}\nmax_abs_error {}\nrelative_rmse {}\n",
                report.params.alpha,
                report.params.relax_coeff,
                report.params.y0,
                report.rmse,
                report.max_abs_error,
                report.relative_rmse
            );
            if !report.diverged.is_empty() {
                s.push_str(&format!("diverged {}\n", report.diverged.len()));
            }
            s
        }
        other => {
            return Err(CliError::Invalid(format!(
                "--format {other:?}: expected text or json"
            )))
        }
    };
    print(&text)
}

fn converge(args: &ProblemArgs, h0: f64, levels: usize) -> Result<(), CliError> {
    if h0.is_nan() || h0 <= 0.0 {
        return Err(CliError::Invalid(format!("--h0 {h0} must be positive")));
    }
    let problem = args.problem()?;
    let steps: Vec<f64> = (0..levels)
        .map(|k| h0 / f64::from(1u32 << k.min(30)))
        .collect();
    let study = empirical_order(&problem, &steps, Reference::Analytic).map_err(|e| match e {
        ConvergenceError::Solve(s) => s.into(),
        ConvergenceError::Reference(m) => CliError::Failed(m),
        other => CliError::Invalid(other.to_string()),
    })?;
    let mut text = String::from("h,max_error\n");
    for (h, err) in study.steps.iter().zip(&study.errors) {
        text.push_str(&format!("{h:e},{err:e}\n"));
    }
    text.push_str(&format!(
        "# slope {:.4}, expected {}\n",
        study.order,
        theoretical_order(problem.alpha)
    ));
    print(&text)
}

fn serve(args: ServeArgs) -> Result<(), CliError> {
    if let Some(dir) = &args.static_dir {
        if !fs::metadata(dir).map(|m| m.is_dir()).unwrap_or(false) {
            return Err(CliError::Invalid(format!(
                "--static-dir {}: not a directory",
                dir.display()
            )));
        }
    }
    let config = AppConfig {
        port: args.port,
        max_steps: args.max_steps,
        max_fit_pairs: args.max_fit_pairs,
        static_dir: args.static_dir,
        ..AppConfig::default()
    };
    let runtime = tokio::runtime::Runtime::new()?;
    Ok(runtime.block_on(fro_service::serve(config))?)
}
