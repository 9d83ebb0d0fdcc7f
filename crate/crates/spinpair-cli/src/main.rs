//! `spinpair`: thermal entanglement of a two-qubit XXX dimer with x-axis DM
//! and KSEA couplings. Every subcommand prints JSON to stdout by default;
//! data-producing subcommands can also emit CSV or SVG, to stdout or to a
//! file written atomically. Exit codes: 0 success, 1 usage, 2 numeric
//! failure, 3 verification failure.

use clap::{Args, Parser, Subcommand, ValueEnum};
use spinpair::{
    analytic_spectrum, classify_ground_state, concurrence_analytic, concurrence_oracle,
    critical_temperature, limit_high_temperature, limit_strong_coupling, limit_strong_dm_ksea,
    phase_diagram_raster, sweep_1d, sweep_2d, AxisSpec, Method, ModelAxisParam, ModelParams,
    RasterAxis, SweepParam, Temperature,
};
use spinpair_cli::output::{csv, json, svg};
use spinpair_cli::verify::run_verification;
use spinpair_cli::{write_atomic, CliError};
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "spinpair",
    version,
    about = "Thermal entanglement of a two-qubit XXX dimer with x-axis DM and KSEA couplings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    /// Closed-form spectrum and Gibbs elements
    Analytic,
    /// Numeric diagonalization cross-check
    Oracle,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Analytic => Method::Analytic,
            MethodArg::Oracle => Method::Oracle,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SweepParamArg {
    Temp,
    /// Temperature on a log10 grid: axis values are log10(T)
    #[value(name = "log_temp")]
    LogTemp,
    J,
    Dx,
    Gx,
}

impl From<SweepParamArg> for SweepParam {
    fn from(p: SweepParamArg) -> SweepParam {
        match p {
            SweepParamArg::Temp => SweepParam::Temp,
            SweepParamArg::LogTemp => SweepParam::LogTemp,
            SweepParamArg::J => SweepParam::J,
            SweepParamArg::Dx => SweepParam::Dx,
            SweepParamArg::Gx => SweepParam::Gx,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum AxisArg {
    J,
    Dx,
    Gx,
}

impl From<AxisArg> for ModelAxisParam {
    fn from(a: AxisArg) -> ModelAxisParam {
        match a {
            AxisArg::J => ModelAxisParam::J,
            AxisArg::Dx => ModelAxisParam::Dx,
            AxisArg::Gx => ModelAxisParam::Gx,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CaseArg {
    /// High-temperature expansion; defined at j=dx=gx=1, coupling flags are ignored
    HighTemp,
    /// Strong exchange coupling |J| >> |dx|, |gx|
    StrongCoupling,
    /// Strong anisotropies min(|dx|, |gx|) >> |J|
    StrongDmKsea,
}

impl CaseArg {
    fn name(self) -> &'static str {
        match self {
            CaseArg::HighTemp => "high-temp",
            CaseArg::StrongCoupling => "strong-coupling",
            CaseArg::StrongDmKsea => "strong-dm-ksea",
        }
    }
}

#[derive(Args)]
struct CouplingArgs {
    /// Isotropic exchange coupling
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    j: f64,
    /// DM interaction strength (x component)
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    dx: f64,
    /// KSEA interaction strength (x component)
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    gx: f64,
}

impl CouplingArgs {
    fn params(&self) -> Result<ModelParams, CliError> {
        Ok(ModelParams::new(self.j, self.dx, self.gx)?)
    }
}

#[derive(Args)]
struct OutputArgs {
    /// Write the result to this file (atomically) instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
    /// Output format
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
}

#[derive(Subcommand)]
enum Command {
    /// Concurrence of the thermal state at one parameter point
    Concurrence {
        #[command(flatten)]
        couplings: CouplingArgs,
        /// Temperature (must be positive)
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        temp: f64,
        /// Computation route
        #[arg(long, value_enum, default_value_t = MethodArg::Analytic)]
        method: MethodArg,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Closed-form spectrum: energies, eta, mixing angles, eigenvectors
    Spectrum {
        #[command(flatten)]
        couplings: CouplingArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Ground-state classification at zero temperature
    GroundState {
        #[command(flatten)]
        couplings: CouplingArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Concurrence along one axis (--param) or over a grid (--x-param/--y-param)
    Sweep {
        #[command(flatten)]
        couplings: CouplingArgs,
        /// Base temperature; overridden when the sweep varies temperature
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        temp: f64,
        /// Swept parameter (1D form)
        #[arg(long, value_enum)]
        param: Option<SweepParamArg>,
        /// Axis start (1D form)
        #[arg(long, allow_negative_numbers = true)]
        from: Option<f64>,
        /// Axis end (1D form)
        #[arg(long, allow_negative_numbers = true)]
        to: Option<f64>,
        /// Number of grid points including both ends (1D form)
        #[arg(long)]
        steps: Option<usize>,
        /// Horizontal parameter (2D form)
        #[arg(long, value_enum)]
        x_param: Option<SweepParamArg>,
        #[arg(long, allow_negative_numbers = true)]
        x_from: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        x_to: Option<f64>,
        /// Vertical parameter (2D form)
        #[arg(long, value_enum)]
        y_param: Option<SweepParamArg>,
        #[arg(long, allow_negative_numbers = true)]
        y_from: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        y_to: Option<f64>,
        /// Grid size as NxM, x count first (2D form)
        #[arg(long)]
        grid: Option<String>,
        /// Computation route
        #[arg(long, value_enum, default_value_t = MethodArg::Analytic)]
        method: MethodArg,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Ground-state label raster over two couplings
    PhaseDiagram {
        #[command(flatten)]
        couplings: CouplingArgs,
        /// Horizontal coupling axis
        #[arg(long, value_enum, default_value_t = AxisArg::Dx)]
        x_param: AxisArg,
        #[arg(long, default_value_t = -3.0, allow_negative_numbers = true)]
        x_from: f64,
        #[arg(long, default_value_t = 3.0, allow_negative_numbers = true)]
        x_to: f64,
        /// Vertical coupling axis
        #[arg(long, value_enum, default_value_t = AxisArg::Gx)]
        y_param: AxisArg,
        #[arg(long, default_value_t = -4.0, allow_negative_numbers = true)]
        y_from: f64,
        #[arg(long, default_value_t = 4.0, allow_negative_numbers = true)]
        y_to: f64,
        /// Grid size as NxM, x count first
        #[arg(long, default_value = "200x200")]
        grid: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Threshold temperature above which concurrence stays zero
    Tc {
        #[command(flatten)]
        couplings: CouplingArgs,
        /// Upper end of the temperature scan
        #[arg(long, default_value_t = 100.0)]
        t_max: f64,
        /// Final bracket width
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Asymptotic limit formula next to the exact concurrence
    Limits {
        /// Which asymptotic regime to evaluate
        #[arg(long, value_enum)]
        case: CaseArg,
        #[command(flatten)]
        couplings: CouplingArgs,
        /// Temperature (must be positive)
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        temp: f64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Randomized cross-route equivalence check with a seeded generator
    Verify {
        /// Number of random parameter draws
        #[arg(long, default_value_t = 10000)]
        samples: usize,
        /// Seed for the deterministic generator
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Maximum allowed |analytic - oracle|
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[command(flatten)]
        out: OutputArgs,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind as K;
            if matches!(e.kind(), K::DisplayHelp | K::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let _ = e.print();
            eprintln!("{}", json::error_line("usage", &e.to_string()));
            return ExitCode::from(1);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("{}", json::error_line(err.kind.name(), &err.message));
            ExitCode::from(err.kind.exit_code())
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Concurrence { couplings, temp, method, out } => {
            require_json(&out, "concurrence")?;
            let p = couplings.params()?;
            let t = Temperature::new(temp)?;
            let result = match Method::from(method) {
                Method::Analytic => concurrence_analytic(&p, t)?,
                Method::Oracle => concurrence_oracle(&p, t)?,
            };
            emit(&json::concurrence(&p, t, &result), &out)
        }
        Command::Spectrum { couplings, out } => {
            require_json(&out, "spectrum")?;
            let p = couplings.params()?;
            emit(&json::spectrum(&p, &analytic_spectrum(&p)), &out)
        }
        Command::GroundState { couplings, out } => {
            require_json(&out, "ground-state")?;
            let p = couplings.params()?;
            emit(&json::ground_state(&p, &classify_ground_state(&p)), &out)
        }
        Command::Sweep {
            couplings,
            temp,
            param,
            from,
            to,
            steps,
            x_param,
            x_from,
            x_to,
            y_param,
            y_from,
            y_to,
            grid,
            method,
            out,
        } => {
            let base = couplings.params()?;
            let base_temp = Temperature::new(temp)?;
            let one_d = param.is_some() || from.is_some() || to.is_some() || steps.is_some();
            let two_d = x_param.is_some()
                || x_from.is_some()
                || x_to.is_some()
                || y_param.is_some()
                || y_from.is_some()
                || y_to.is_some()
                || grid.is_some();
            if one_d == two_d {
                return Err(CliError::usage(
                    "use either --param/--from/--to/--steps or \
                     --x-param/--x-from/--x-to/--y-param/--y-from/--y-to/--grid",
                ));
            }
            let result = if one_d {
                let axis = AxisSpec::new(
                    required(param, "--param")?.into(),
                    required(from, "--from")?,
                    required(to, "--to")?,
                    required(steps, "--steps")?,
                )?;
                sweep_1d(axis, &base, base_temp, method.into())?
            } else {
                let (nx, ny) = parse_grid(&required(grid, "--grid")?)?;
                let ax = AxisSpec::new(
                    required(x_param, "--x-param")?.into(),
                    required(x_from, "--x-from")?,
                    required(x_to, "--x-to")?,
                    nx,
                )?;
                let ay = AxisSpec::new(
                    required(y_param, "--y-param")?.into(),
                    required(y_from, "--y-from")?,
                    required(y_to, "--y-to")?,
                    ny,
                )?;
                sweep_2d(ax, ay, &base, base_temp, method.into())?
            };
            let payload = match out.format {
                FormatArg::Json => json::sweep(&result),
                FormatArg::Csv => csv::render_sweep(&result),
                FormatArg::Svg => svg::render_sweep(&result),
            };
            emit(&payload, &out)
        }
        Command::PhaseDiagram {
            couplings,
            x_param,
            x_from,
            x_to,
            y_param,
            y_from,
            y_to,
            grid,
            out,
        } => {
            let base = couplings.params()?;
            let (nx, ny) = parse_grid(&grid)?;
            let x_axis = RasterAxis::new(x_param.into(), x_from, x_to)?;
            let y_axis = RasterAxis::new(y_param.into(), y_from, y_to)?;
            let raster = phase_diagram_raster(x_axis, y_axis, &base, nx, ny)?;
            let payload = match out.format {
                FormatArg::Json => json::phase(&raster),
                FormatArg::Csv => csv::render_phase(&raster),
                FormatArg::Svg => svg::render_phase(&raster),
            };
            emit(&payload, &out)
        }
        Command::Tc { couplings, t_max, tol, out } => {
            require_json(&out, "tc")?;
            let p = couplings.params()?;
            let ct = critical_temperature(&p, t_max, tol)?;
            emit(&json::tc(&p, t_max, &ct), &out)
        }
        Command::Limits { case, couplings, temp, out } => {
            require_json(&out, "limits")?;
            let t = Temperature::new(temp)?;
            let (p, evaluation) = match case {
                CaseArg::HighTemp => {
                    let p = ModelParams::new(1.0, 1.0, 1.0).expect("unit couplings are finite");
                    (p, limit_high_temperature(t)?)
                }
                CaseArg::StrongCoupling => {
                    let p = couplings.params()?;
                    (p, limit_strong_coupling(&p, t)?)
                }
                CaseArg::StrongDmKsea => {
                    let p = couplings.params()?;
                    (p, limit_strong_dm_ksea(&p, t)?)
                }
            };
            let exact = concurrence_analytic(&p, t)?;
            emit(&json::limits(case.name(), &p, t, &evaluation, &exact), &out)
        }
        Command::Verify { samples, seed, tol, out } => {
            require_json(&out, "verify")?;
            if samples == 0 {
                return Err(CliError::usage("--samples must be at least 1"));
            }
            if !tol.is_finite() || tol <= 0.0 {
                return Err(CliError::usage(format!(
                    "--tol must be a positive finite number, got {tol}"
                )));
            }
            let report = run_verification(samples, seed, tol)?;
            emit(&json::verify(&report), &out)?;
            if report.failure_count > 0 {
                return Err(CliError::verification(format!(
                    "{} of {} samples exceeded tolerance {:e}; max deviation {:e}",
                    report.failure_count, report.samples, report.tolerance, report.max_abs_dev
                )));
            }
            Ok(())
        }
    }
}

fn required<T>(value: Option<T>, flag: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::usage(format!("{flag} is required for this sweep form")))
}

fn require_json(out: &OutputArgs, verb: &str) -> Result<(), CliError> {
    if out.format == FormatArg::Json {
        Ok(())
    } else {
        Err(CliError::usage(format!("{verb} supports only --format json")))
    }
}

fn parse_grid(s: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::usage(format!("--grid must look like 200x200, got {s:?}"));
    let (a, b) = s.split_once('x').ok_or_else(bad)?;
    let nx: usize = a.trim().parse().map_err(|_| bad())?;
    let ny: usize = b.trim().parse().map_err(|_| bad())?;
    if nx == 0 || ny == 0 {
        return Err(bad());
    }
    Ok((nx, ny))
}

fn emit(payload: &str, out: &OutputArgs) -> Result<(), CliError> {
    match &out.output {
        Some(path) => Ok(write_atomic(path, payload.as_bytes())?),
        None => {
            let stdout = std::io::stdout();
            let mut handle = stdout.lock();
            handle.write_all(payload.as_bytes())?;
            handle.flush()?;
            Ok(())
        }
    }
}
