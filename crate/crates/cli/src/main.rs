//! `relframe` — encode a parameter in the relative degrees of freedom of a
//! two-qubit state and evaluate what a receiver without a shared reference
//! frame can learn from total-spin measurements.
//!
//! One subcommand per library capability: `prepare`, `extract`, `twirl`,
//! `check-twirl`, `infogain`, `scan`, `scan2d`, `table1`. Results go to
//! standard output (or `--output`) as CSV or JSON; diagnostics go to
//! standard error. Exit codes: 0 success, 1 numerical-domain failure,
//! 2 usage error.

mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use relframe::{
    extract_params, haar_su2, info_gain, invariants_of, prepare_canonical, prepare_via_circuit,
    scan1d, scan2d, table_one, tensor, twirl_analytic, twirl_monte_carlo, ComplexAmp,
    EncodingScheme, Error as CoreError, ParamKind, PriorModel, QuadratureConfig, RandomStream,
    RelativeParams, ScanGrid, StateVector2Q,
};

use output::*;

/// Environment variable consulted for the default seed.
const SEED_ENV: &str = "RELFRAME_SEED";

#[derive(Parser)]
#[command(
    name = "relframe",
    version,
    about = "Relational two-qubit encoding: preparation, twirling, and information gain"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write the result to this file instead of standard output
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
    /// Interpret input angles (parameters, grid bounds, prior points) as degrees
    #[arg(long, global = true)]
    degrees: bool,
    /// Seed for randomized subcommands; defaults to $RELFRAME_SEED, else 0
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ParamArg {
    Alpha,
    Theta,
    Psi,
}

impl From<ParamArg> for ParamKind {
    fn from(p: ParamArg) -> Self {
        match p {
            ParamArg::Alpha => ParamKind::Alpha,
            ParamArg::Theta => ParamKind::Theta,
            ParamArg::Psi => ParamKind::Psi,
        }
    }
}

/// A two-qubit state given either as raw amplitudes or as relative
/// parameters of the canonical state.
#[derive(Args)]
struct StateInput {
    /// Eight comma-separated reals a_re,a_im,b_re,b_im,c_re,c_im,d_re,d_im
    /// (normalized automatically)
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    amps: Option<Vec<f64>>,
    /// Entanglement parameter of the canonical state, in [0, pi/4]
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<f64>,
    /// Bloch angle of the canonical state, in [0, pi]
    #[arg(long, allow_hyphen_values = true)]
    theta: Option<f64>,
    /// Relative phase of the canonical state, in [0, pi]
    #[arg(long, allow_hyphen_values = true)]
    psi: Option<f64>,
}

#[derive(Subcommand)]
enum Command {
    /// Build the canonical state for given relative parameters
    Prepare {
        /// Entanglement parameter, in [0, pi/4]
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
        /// Bloch angle between the Schmidt partners, in [0, pi]
        #[arg(long, allow_hyphen_values = true)]
        theta: f64,
        /// Relative phase, in [0, pi]
        #[arg(long, allow_hyphen_values = true)]
        psi: f64,
        /// Run the gate sequence instead of the closed form
        #[arg(long)]
        circuit: bool,
    },
    /// Recover the relative parameters of a state
    Extract {
        #[command(flatten)]
        state: StateInput,
    },
    /// Apply the collective twirling channel to a pure state
    Twirl {
        #[command(flatten)]
        state: StateInput,
    },
    /// Compare the Monte Carlo twirl against the closed form
    CheckTwirl {
        #[command(flatten)]
        state: StateInput,
        /// Number of Haar samples
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
    },
    /// Average information gain for one encoding scheme and prior
    Infogain {
        /// Which parameter carries the message
        #[arg(long, value_enum)]
        encode: ParamArg,
        /// Prior over the message parameter: "uniform" or "discrete:x0,x1[,w0]"
        #[arg(long, default_value = "uniform")]
        prior: String,
        /// Fixed values for the two other parameters, e.g. "alpha=0.5,psi=0"
        #[arg(long)]
        fixed: String,
        /// Quadrature nodes (odd) for continuous priors
        #[arg(long, default_value_t = 4097)]
        quad_points: usize,
    },
    /// Sweep one fixed parameter and tabulate the average information gain
    Scan {
        #[arg(long, value_enum)]
        encode: ParamArg,
        /// The fixed parameter to vary
        #[arg(long, value_enum)]
        vary: ParamArg,
        /// Lower grid bound (default: the parameter's range start)
        #[arg(long, allow_hyphen_values = true)]
        from: Option<f64>,
        /// Upper grid bound (default: the parameter's range end)
        #[arg(long, allow_hyphen_values = true)]
        to: Option<f64>,
        /// Grid nodes
        #[arg(long, default_value_t = 64)]
        points: usize,
        #[arg(long, default_value = "uniform")]
        prior: String,
        /// Value of the remaining fixed parameter, e.g. "psi=0"
        #[arg(long)]
        fixed: String,
        #[arg(long, default_value_t = 4097)]
        quad_points: usize,
    },
    /// Sweep both fixed parameters over a 2-D grid
    Scan2d {
        #[arg(long, value_enum)]
        encode: ParamArg,
        /// First varied parameter (rows)
        #[arg(long, value_enum)]
        vary_a: ParamArg,
        #[arg(long, allow_hyphen_values = true)]
        a_from: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        a_to: Option<f64>,
        #[arg(long, default_value_t = 64)]
        a_points: usize,
        /// Second varied parameter (columns)
        #[arg(long, value_enum)]
        vary_b: ParamArg,
        #[arg(long, allow_hyphen_values = true)]
        b_from: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        b_to: Option<f64>,
        #[arg(long, default_value_t = 64)]
        b_points: usize,
        #[arg(long, default_value = "uniform")]
        prior: String,
        #[arg(long, default_value_t = 4097)]
        quad_points: usize,
    },
    /// Optimal settings and maximal gain for all six (encoding, prior) cells
    Table1 {
        #[arg(long, default_value_t = 4097)]
        quad_points: usize,
        /// Grid nodes per axis for the optimum search
        #[arg(long, default_value_t = 33)]
        resolution: usize,
    },
}

/// Failure carrying the process exit code: 2 for usage, 1 for numerics.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }

    fn numerical(message: impl Into<String>) -> Self {
        Self {
            code: 1,
            message: message.into(),
        }
    }
}

/// User-supplied values reaching the library map argument problems to
/// usage errors and everything else to numerical failures.
impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::InvalidInput(_)
            | CoreError::InvalidConfiguration(_)
            | CoreError::InvalidDensity(_) => Failure::usage(e.to_string()),
            CoreError::ImpossibleOutcome | CoreError::NumericalDomain(_) => {
                Failure::numerical(e.to_string())
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(rendered) => match write_result(&cli.output, &rendered) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("relframe: cannot write output: {e}");
                ExitCode::from(1)
            }
        },
        Err(failure) => {
            eprintln!("relframe: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn write_result(path: &Option<PathBuf>, text: &str) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Command::Prepare {
            alpha,
            theta,
            psi,
            circuit,
        } => {
            let params = parse_params(cli, *alpha, *theta, *psi)?;
            let state = if *circuit {
                prepare_via_circuit(&params)
            } else {
                prepare_canonical(&params)
            };
            Ok(render_prepare(cli, &params, *circuit, &state))
        }
        Command::Extract { state } => {
            let sv = parse_state(cli, state)?;
            Ok(render_extract(cli, &sv))
        }
        Command::Twirl { state } => {
            let sv = parse_state(cli, state)?;
            let twirled = twirl_analytic(&sv.outer());
            Ok(render_matrix(cli, twirled.matrix().entries()))
        }
        Command::CheckTwirl { state, samples } => {
            if *samples == 0 {
                return Err(Failure::usage("--samples must be at least 1"));
            }
            let seed = effective_seed(cli);
            let mut stream = RandomStream::new(seed);
            let sv = match has_state_flags(state) {
                true => parse_state(cli, state)?,
                false => random_pure_state(&mut stream),
            };
            let rho = sv.outer();
            let analytic = twirl_analytic(&rho);
            let mc = twirl_monte_carlo(&rho, *samples, &mut stream);
            let report = CheckTwirlOut {
                samples: *samples,
                seed,
                max_abs_deviation: norm_zero(mc.max_abs_diff(&analytic)),
            };
            Ok(match cli.format {
                Format::Json => render_json(&report),
                Format::Csv => csv_table(
                    "samples,seed,max_abs_deviation",
                    [format!(
                        "{},{},{}",
                        report.samples,
                        report.seed,
                        sig12(report.max_abs_deviation)
                    )],
                ),
            })
        }
        Command::Infogain {
            encode,
            prior,
            fixed,
            quad_points,
        } => {
            let message: ParamKind = (*encode).into();
            let scheme = scheme_from_fixed(cli, message, fixed, 2)?;
            let prior = parse_prior(cli, prior, message)?;
            let quad = parse_quad(*quad_points)?;
            relframe::infogain::validate_support(&scheme, &prior).map_err(Failure::from)?;
            let result = info_gain(&scheme, &prior, &quad);
            let out = InfoGainOut {
                p_outcome: result.p_outcome.map(norm_zero),
                gain_per_outcome: result.gain_per_outcome.map(norm_zero),
                avg_gain: norm_zero(result.avg_gain),
            };
            Ok(match cli.format {
                Format::Json => render_json(&out),
                Format::Csv => csv_table(
                    "p_singlet,p_triplet,gain_singlet,gain_triplet,avg_gain",
                    [format!(
                        "{},{},{},{},{}",
                        sig12(out.p_outcome[0]),
                        sig12(out.p_outcome[1]),
                        sig12(out.gain_per_outcome[0]),
                        sig12(out.gain_per_outcome[1]),
                        sig12(out.avg_gain)
                    )],
                ),
            })
        }
        Command::Scan {
            encode,
            vary,
            from,
            to,
            points,
            prior,
            fixed,
            quad_points,
        } => {
            let message: ParamKind = (*encode).into();
            let vary: ParamKind = (*vary).into();
            let mut scheme = default_scheme(message);
            if let Some(pairs) = parse_fixed_pairs(cli, fixed)? {
                for (kind, value) in pairs {
                    scheme = scheme.with_fixed(kind, value).map_err(Failure::from)?;
                }
            }
            let grid = make_grid(cli, vary, *from, *to, *points)?;
            let prior = parse_prior(cli, prior, message)?;
            let quad = parse_quad(*quad_points)?;
            let result = scan1d(&scheme, &grid, &prior, &quad).map_err(Failure::from)?;
            let points: Vec<ScanPointOut> = result
                .axis
                .iter()
                .zip(result.gains.iter())
                .map(|(&x, &g)| ScanPointOut {
                    axis_value: norm_zero(x),
                    avg_gain: norm_zero(g),
                })
                .collect();
            Ok(match cli.format {
                Format::Json => render_json(&ScanOut { points }),
                Format::Csv => csv_table(
                    "axis_value,avg_gain",
                    points
                        .iter()
                        .map(|p| format!("{},{}", sig12(p.axis_value), sig12(p.avg_gain))),
                ),
            })
        }
        Command::Scan2d {
            encode,
            vary_a,
            a_from,
            a_to,
            a_points,
            vary_b,
            b_from,
            b_to,
            b_points,
            prior,
            quad_points,
        } => {
            let message: ParamKind = (*encode).into();
            let scheme = default_scheme(message);
            let grid_a = make_grid(cli, (*vary_a).into(), *a_from, *a_to, *a_points)?;
            let grid_b = make_grid(cli, (*vary_b).into(), *b_from, *b_to, *b_points)?;
            let prior = parse_prior(cli, prior, message)?;
            let quad = parse_quad(*quad_points)?;
            let result = scan2d(&scheme, &grid_a, &grid_b, &prior, &quad).map_err(Failure::from)?;
            let n_b = result.b_axis.len();
            let points: Vec<Scan2dPointOut> = result
                .gains
                .iter()
                .enumerate()
                .map(|(idx, &g)| Scan2dPointOut {
                    a_value: norm_zero(result.a_axis[idx / n_b]),
                    b_value: norm_zero(result.b_axis[idx % n_b]),
                    avg_gain: norm_zero(g),
                })
                .collect();
            Ok(match cli.format {
                Format::Json => render_json(&Scan2dOut { points }),
                Format::Csv => csv_table(
                    "a_value,b_value,avg_gain",
                    points.iter().map(|p| {
                        format!(
                            "{},{},{}",
                            sig12(p.a_value),
                            sig12(p.b_value),
                            sig12(p.avg_gain)
                        )
                    }),
                ),
            })
        }
        Command::Table1 {
            quad_points,
            resolution,
        } => {
            if *resolution < 2 {
                return Err(Failure::usage("--resolution must be at least 2"));
            }
            let quad = parse_quad(*quad_points)?;
            let report = table_one(&quad, *resolution);
            let entries: Vec<TableEntryOut> = report
                .entries
                .iter()
                .map(|e| TableEntryOut {
                    encoding: e.encoding.name(),
                    prior: e.prior.name(),
                    fixed: [
                        FixedValueOut {
                            param: e.fixed[0].0.name(),
                            value: norm_zero(e.fixed[0].1),
                        },
                        FixedValueOut {
                            param: e.fixed[1].0.name(),
                            value: norm_zero(e.fixed[1].1),
                        },
                    ],
                    avg_gain: norm_zero(e.gain),
                })
                .collect();
            Ok(match cli.format {
                Format::Json => render_json(&TableOut { entries }),
                Format::Csv => csv_table(
                    "encoding,prior,fixed1_name,fixed1_value,fixed2_name,fixed2_value,avg_gain",
                    entries.iter().map(|e| {
                        format!(
                            "{},{},{},{},{},{},{}",
                            e.encoding,
                            e.prior,
                            e.fixed[0].param,
                            sig12(e.fixed[0].value),
                            e.fixed[1].param,
                            sig12(e.fixed[1].value),
                            sig12(e.avg_gain)
                        )
                    }),
                ),
            })
        }
    }
}

// ---------------------------------------------------------------------------
// Input parsing helpers.
// ---------------------------------------------------------------------------

fn to_radians(cli: &Cli, value: f64) -> f64 {
    if cli.degrees {
        value * std::f64::consts::PI / 180.0
    } else {
        value
    }
}

fn effective_seed(cli: &Cli) -> u64 {
    if let Some(seed) = cli.seed {
        return seed;
    }
    std::env::var(SEED_ENV)
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0)
}

fn parse_params(cli: &Cli, alpha: f64, theta: f64, psi: f64) -> Result<RelativeParams, Failure> {
    RelativeParams::new(
        to_radians(cli, alpha),
        to_radians(cli, theta),
        to_radians(cli, psi),
    )
    .map_err(Failure::from)
}

fn has_state_flags(state: &StateInput) -> bool {
    state.amps.is_some() || state.alpha.is_some() || state.theta.is_some() || state.psi.is_some()
}

fn parse_state(cli: &Cli, state: &StateInput) -> Result<StateVector2Q, Failure> {
    match (&state.amps, state.alpha, state.theta, state.psi) {
        (Some(values), None, None, None) => {
            if values.len() != 8 {
                return Err(Failure::usage(
                    "--amps needs exactly 8 comma-separated reals",
                ));
            }
            let amps: [ComplexAmp; 4] =
                core::array::from_fn(|i| ComplexAmp::new(values[2 * i], values[2 * i + 1]));
            StateVector2Q::normalized(amps).map_err(Failure::from)
        }
        (None, Some(a), Some(t), Some(p)) => Ok(prepare_canonical(&parse_params(cli, a, t, p)?)),
        (None, None, None, None) => Err(Failure::usage(
            "provide a state: either --amps or all of --alpha/--theta/--psi",
        )),
        _ => Err(Failure::usage(
            "state flags conflict: use --amps alone, or all of --alpha/--theta/--psi",
        )),
    }
}

/// Haar-generic pure state drawn from the stream: independent single-qubit
/// rotations applied to a random canonical state.
fn random_pure_state(stream: &mut RandomStream) -> StateVector2Q {
    let params = RelativeParams::new(
        stream.uniform_in(0.0, std::f64::consts::FRAC_PI_4),
        stream.uniform_in(0.0, std::f64::consts::PI),
        stream.uniform_in(0.0, std::f64::consts::PI),
    )
    .expect("sampled in range");
    let u = haar_su2(stream);
    let v = haar_su2(stream);
    tensor(&u, &v).apply(&prepare_canonical(&params))
}

fn parse_quad(n_points: usize) -> Result<QuadratureConfig, Failure> {
    QuadratureConfig::simpson(n_points).map_err(Failure::from)
}

fn param_by_name(name: &str) -> Result<ParamKind, Failure> {
    match name {
        "alpha" => Ok(ParamKind::Alpha),
        "theta" => Ok(ParamKind::Theta),
        "psi" => Ok(ParamKind::Psi),
        other => Err(Failure::usage(format!(
            "unknown parameter {other:?} (expected alpha, theta, or psi)"
        ))),
    }
}

/// Parse "name=value,name=value" lists; `None` for an empty string.
#[allow(clippy::type_complexity)]
fn parse_fixed_pairs(cli: &Cli, spec: &str) -> Result<Option<Vec<(ParamKind, f64)>>, Failure> {
    if spec.trim().is_empty() {
        return Ok(None);
    }
    let mut pairs = Vec::new();
    for item in spec.split(',') {
        let (name, value) = item.split_once('=').ok_or_else(|| {
            Failure::usage(format!("bad --fixed entry {item:?}, expected name=value"))
        })?;
        let kind = param_by_name(name.trim())?;
        let value: f64 = value.trim().parse().map_err(|_| {
            Failure::usage(format!("bad --fixed value {value:?} for {}", kind.name()))
        })?;
        if pairs.iter().any(|(k, _)| *k == kind) {
            return Err(Failure::usage(format!(
                "--fixed names {} twice",
                kind.name()
            )));
        }
        pairs.push((kind, to_radians(cli, value)));
    }
    Ok(Some(pairs))
}

/// Build a scheme from `--fixed`, requiring exactly `need` pairs covering
/// the non-message parameters.
fn scheme_from_fixed(
    cli: &Cli,
    message: ParamKind,
    spec: &str,
    need: usize,
) -> Result<EncodingScheme, Failure> {
    let pairs = parse_fixed_pairs(cli, spec)?
        .ok_or_else(|| Failure::usage("--fixed must name the non-message parameters"))?;
    if pairs.len() != need {
        return Err(Failure::usage(format!(
            "--fixed must set exactly {need} parameter(s), got {}",
            pairs.len()
        )));
    }
    if need == 2 {
        EncodingScheme::new(message, pairs[0], pairs[1]).map_err(Failure::from)
    } else {
        let mut scheme = default_scheme(message);
        for (kind, value) in pairs {
            scheme = scheme.with_fixed(kind, value).map_err(Failure::from)?;
        }
        Ok(scheme)
    }
}

fn default_scheme(message: ParamKind) -> EncodingScheme {
    match message {
        ParamKind::Theta => EncodingScheme::theta_encoding(0.0, 0.0),
        ParamKind::Psi => EncodingScheme::psi_encoding(0.0, 0.0),
        ParamKind::Alpha => EncodingScheme::alpha_encoding(0.0, 0.0),
    }
    .expect("zero defaults are in range")
}

/// "uniform" (over the message parameter's range) or "discrete:x0,x1[,w0]".
fn parse_prior(cli: &Cli, spec: &str, message: ParamKind) -> Result<PriorModel, Failure> {
    let spec = spec.trim();
    if spec == "uniform" {
        return Ok(PriorModel::uniform_over(message));
    }
    if let Some(rest) = spec.strip_prefix("discrete:") {
        let parts: Vec<&str> = rest.split(',').collect();
        if parts.len() < 2 || parts.len() > 3 {
            return Err(Failure::usage(
                "discrete prior needs two points: discrete:x0,x1[,w0]",
            ));
        }
        let x0: f64 = parts[0]
            .trim()
            .parse()
            .map_err(|_| Failure::usage(format!("bad prior point {:?}", parts[0])))?;
        let x1: f64 = parts[1]
            .trim()
            .parse()
            .map_err(|_| Failure::usage(format!("bad prior point {:?}", parts[1])))?;
        let w0: f64 = match parts.get(2) {
            Some(w) => w
                .trim()
                .parse()
                .map_err(|_| Failure::usage(format!("bad prior weight {w:?}")))?,
            None => 0.5,
        };
        return PriorModel::two_point(to_radians(cli, x0), to_radians(cli, x1), w0)
            .map_err(Failure::from);
    }
    Err(Failure::usage(format!(
        "unknown prior {spec:?} (expected \"uniform\" or \"discrete:x0,x1[,w0]\")"
    )))
}

fn make_grid(
    cli: &Cli,
    param: ParamKind,
    from: Option<f64>,
    to: Option<f64>,
    points: usize,
) -> Result<ScanGrid, Failure> {
    let (rlo, rhi) = param.range();
    let lo = from.map(|v| to_radians(cli, v)).unwrap_or(rlo);
    let hi = to.map(|v| to_radians(cli, v)).unwrap_or(rhi);
    ScanGrid::new(param, lo, hi, points).map_err(Failure::from)
}

// ---------------------------------------------------------------------------
// Rendering.
// ---------------------------------------------------------------------------

const BASIS_LABELS: [&str; 4] = ["00", "01", "10", "11"];

fn render_prepare(
    cli: &Cli,
    params: &RelativeParams,
    circuit: bool,
    state: &StateVector2Q,
) -> String {
    let amplitudes: Vec<AmplitudeOut> = state
        .amps()
        .iter()
        .zip(BASIS_LABELS)
        .map(|(z, basis)| AmplitudeOut {
            basis,
            re: norm_zero(z.re),
            im: norm_zero(z.im),
        })
        .collect();
    match cli.format {
        Format::Json => render_json(&PrepareOut {
            alpha: params.alpha(),
            theta: params.theta(),
            psi: params.psi(),
            via_circuit: circuit,
            amplitudes,
        }),
        Format::Csv => csv_table(
            "basis,re,im",
            amplitudes
                .iter()
                .map(|a| format!("{},{},{}", a.basis, sig12(a.re), sig12(a.im))),
        ),
    }
}

fn render_extract(cli: &Cli, state: &StateVector2Q) -> String {
    let extracted = extract_params(state);
    let inv = invariants_of(state);
    let out = ExtractOut {
        alpha: norm_zero(extracted.params.alpha()),
        theta: norm_zero(extracted.params.theta()),
        psi: norm_zero(extracted.params.psi()),
        psi_identifiable: extracted.psi_identifiable,
        concurrence: norm_zero(relframe::concurrence(state)),
        invariants: InvariantsOut {
            det_re: norm_zero(inv.det_inv().re),
            det_im: norm_zero(inv.det_inv().im),
            cross_re: norm_zero(inv.cross_inv().re),
            cross_im: norm_zero(inv.cross_inv().im),
        },
    };
    match cli.format {
        Format::Json => render_json(&out),
        Format::Csv => csv_table(
            "alpha,theta,psi,psi_identifiable,concurrence,det_re,det_im,cross_re,cross_im",
            [format!(
                "{},{},{},{},{},{},{},{},{}",
                sig12(out.alpha),
                sig12(out.theta),
                sig12(out.psi),
                out.psi_identifiable,
                sig12(out.concurrence),
                sig12(out.invariants.det_re),
                sig12(out.invariants.det_im),
                sig12(out.invariants.cross_re),
                sig12(out.invariants.cross_im)
            )],
        ),
    }
}

fn render_matrix(cli: &Cli, entries: &[[ComplexAmp; 4]; 4]) -> String {
    let rows: Vec<MatrixEntryOut> = (0..4)
        .flat_map(|i| (0..4).map(move |j| (i, j)))
        .map(|(i, j)| MatrixEntryOut {
            row: i,
            col: j,
            re: norm_zero(entries[i][j].re),
            im: norm_zero(entries[i][j].im),
        })
        .collect();
    match cli.format {
        Format::Json => render_json(&TwirlOut { entries: rows }),
        Format::Csv => csv_table(
            "row,col,re,im",
            rows.iter()
                .map(|e| format!("{},{},{},{}", e.row, e.col, sig12(e.re), sig12(e.im))),
        ),
    }
}
