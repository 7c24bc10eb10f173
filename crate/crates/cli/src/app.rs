use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use plethora_core::exactalg::{expand_product_of_powers, BiPoly, PowerFactor, TSeries};
use plethora_core::genfun::{
    charvar_full_from_irr, charvar_irr_from_full, conf_ordered_epoly, equiv_config_epoly, ordered_sign_series,
    pe_via_coloring, pe_via_hn, pl, unordered_config_series, CycleType, GeometricSeries,
    SeriesRole,
};
use plethora_core::hodge::{abc_decompose, birational_reduce, HodgeDiamond};
use plethora_core::chromgraph::{csf, cs_coloring_sum, h_in_csf_basis};
use plethora_core::symfun::Partition;
use plethora_core::Limits;
use serde_json::json;

use crate::formats::{
    abc_json, coefficient_map_json, load_diamond, load_family, load_graph, load_series, parse_poly, FormatError,
    SeriesJson, SymFunJson,
};
use crate::verify::{run_suite, SuiteError, SUITES};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;

pub const MAX_STATES_VAR: &str = "PLETHORA_MAX_STATES";

#[derive(Parser, Debug)]
#[command(name = "plethora", version, about = "Exact plethystic exponentials and their identity web")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// JSON document used as the command's main input instead of a name or path.
    #[arg(long, global = true)]
    pub inline: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum PeMethod {
    Product,
    Hn,
    Coloring,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConfKind {
    Ordered,
    Sign,
    Unordered,
    Equivariant,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    FullFromIrr,
    IrrFromFull,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Plethystic exponential of HD(X)·t or of a polynomial times t.
    Pe {
        /// Built-in diamond (P1, P2, elliptic), diamond JSON file, or inline JSON.
        #[arg(long, conflicts_with = "poly")]
        diamond: Option<String>,
        /// Polynomial in u, v such as "1 + u*v".
        #[arg(long, allow_hyphen_values = true)]
        poly: Option<String>,
        #[arg(long, value_enum, default_value_t = PeMethod::Product)]
        method: PeMethod,
        #[arg(long, default_value_t = 4)]
        order: usize,
    },
    /// Plethystic logarithm of a series with constant term 1.
    Pl {
        /// Series JSON file or inline JSON.
        #[arg(long)]
        series: Option<String>,
    },
    /// Chromatic symmetric function in the power-sum basis.
    Csf {
        /// Built-in graph (K3, P4, C5, E2), graph JSON file, or inline JSON.
        #[arg(long)]
        graph: Option<String>,
    },
    /// Signed coloring sum of X_G against poly·t^k.
    ColorSum {
        #[arg(long)]
        graph: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, default_value_t = 1)]
        t_power: usize,
        #[arg(long, default_value_t = 4)]
        order: usize,
    },
    /// Configuration-space E-polynomials and series.
    ///
    /// `ordered` and `equivariant` use the signed E-polynomial of the diamond;
    /// `sign` and `unordered` report series in the Hodge-Deligne convention.
    Conf {
        #[arg(long)]
        diamond: Option<String>,
        #[arg(long, value_enum)]
        kind: ConfKind,
        /// Number of points (ordered).
        #[arg(long)]
        n: Option<u32>,
        /// Cycle lengths, e.g. "2,1" (equivariant).
        #[arg(long)]
        cycle_type: Option<String>,
        #[arg(long, default_value_t = 4)]
        order: usize,
    },
    /// Convert between full and irreducible character-variety series.
    Charvar {
        #[arg(long, value_enum)]
        direction: Direction,
        #[arg(long)]
        series: Option<String>,
    },
    /// Hodge diamond in the A = (1+uv)z, B = (u+v)z, C = uv·z² coordinates.
    Abc {
        #[arg(long)]
        diamond: Option<String>,
        /// Set C = 0.
        #[arg(long)]
        birational: bool,
    },
    /// Coefficients of h_n in a chromatic basis.
    Basis {
        /// `paths`, `complete`, or a JSON list of graphs with 1, 2, ... vertices.
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        n: usize,
    },
    /// Run a verification suite (`all` runs every suite).
    Verify {
        suite: String,
        #[arg(long, default_value_t = 4)]
        order: usize,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Core(#[from] plethora_core::Error),
    #[error("{0}")]
    Usage(String),
}

/// Captured result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn limits_from_env(var: Option<String>) -> Result<Limits, CliError> {
    match var {
        None => Ok(Limits::default()),
        Some(v) => v
            .trim()
            .parse()
            .map(Limits::with_max_states)
            .map_err(|_| CliError::Usage(format!("{MAX_STATES_VAR} must be a nonnegative integer, got {v:?}"))),
    }
}

fn required(source: Option<String>, inline: &Option<String>, what: &str) -> Result<String, CliError> {
    source
        .or_else(|| inline.clone())
        .ok_or_else(|| CliError::Usage(format!("missing input: pass --{what} or --inline")))
}

fn render_series(s: &TSeries, format: Format) -> String {
    match format {
        Format::Text => s.to_string(),
        Format::Json => serde_json::to_string(&SeriesJson::from_series(s)).expect("serializable"),
    }
}

fn render_poly(p: &BiPoly, format: Format) -> String {
    match format {
        Format::Text => p.to_string(),
        Format::Json => json!({ "poly": p.to_string() }).to_string(),
    }
}

/// `Π (1 − m·t)^{−c}` over the terms `c·m` of `f`.
fn product_formula_for_poly(f: &BiPoly, order: usize) -> Result<TSeries, CliError> {
    let mut factors = Vec::new();
    for (m, c) in f.terms() {
        let exponent = c
            .is_integer()
            .then(|| c.to_integer().to_i64())
            .flatten()
            .ok_or_else(|| plethora_core::Error::NonIntegerCoefficient(c.to_string()))?;
        factors.push(PowerFactor::new(BiPoly::monomial(m.u, m.v), 1, -exponent));
    }
    Ok(expand_product_of_powers(&factors, order)?)
}

fn parse_cycle_type(text: &str) -> Result<CycleType, CliError> {
    let parts = text
        .split(',')
        .map(|p| p.trim().parse::<u32>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| CliError::Usage(format!("cycle type must be comma-separated positive integers, got {text:?}")))?;
    if parts.contains(&0) {
        return Err(plethora_core::Error::InvalidCycleType(format!("{text:?} has a zero cycle length")).into());
    }
    Ok(CycleType::from_partition(Partition::from_unsorted(parts)))
}

fn execute(cli: Cli, lim: &Limits) -> Result<(i32, String), CliError> {
    let fmt = cli.format;
    let inline = &cli.inline;
    let out = match cli.command {
        Command::Pe { diamond, poly, method, order } => {
            let f = match (diamond, poly) {
                (_, Some(p)) => parse_poly(&p)?,
                (d, None) => load_diamond(&required(d, inline, "diamond or --poly")?)?.e_polynomial(false),
            };
            let series = match method {
                PeMethod::Product => product_formula_for_poly(&f, order)?,
                PeMethod::Hn => pe_via_hn(&f, order)?,
                PeMethod::Coloring => pe_via_coloring(&f, order, lim)?,
            };
            render_series(&series, fmt)
        }
        Command::Pl { series } => render_series(&pl(&load_series(&required(series, inline, "series")?)?)?, fmt),
        Command::Csf { graph } => {
            let x = csf(&load_graph(&required(graph, inline, "graph")?)?, lim)?;
            match fmt {
                Format::Text => x.to_string(),
                Format::Json => serde_json::to_string(&SymFunJson::from_symfun(&x)).expect("serializable"),
            }
        }
        Command::ColorSum { graph, poly, t_power, order } => {
            let g = load_graph(&required(graph, inline, "graph")?)?;
            render_series(&cs_coloring_sum(&g, &parse_poly(&poly)?, t_power, order, lim)?, fmt)
        }
        Command::Conf { diamond, kind, n, cycle_type, order } => {
            let d = load_diamond(&required(diamond, inline, "diamond")?)?;
            match kind {
                ConfKind::Ordered => {
                    let n = n.ok_or_else(|| CliError::Usage("--kind ordered needs --n".into()))?;
                    render_poly(&conf_ordered_epoly(&d.e_polynomial(true), n), fmt)
                }
                ConfKind::Equivariant => {
                    let text = cycle_type.ok_or_else(|| CliError::Usage("--kind equivariant needs --cycle-type".into()))?;
                    let sigma = parse_cycle_type(&text)?;
                    if let Some(n) = n {
                        if sigma.n() != n {
                            return Err(plethora_core::Error::InvalidCycleType(format!(
                                "{text:?} is not a cycle type of S_{n}"
                            ))
                            .into());
                        }
                    }
                    render_poly(&equiv_config_epoly(&d.e_polynomial(true), &sigma), fmt)
                }
                ConfKind::Sign => render_series(&ordered_sign_series(&d, order), fmt),
                ConfKind::Unordered => render_series(&unordered_config_series(&d, order), fmt),
            }
        }
        Command::Charvar { direction, series } => {
            let s = load_series(&required(series, inline, "series")?)?;
            let result = match direction {
                Direction::FullFromIrr => {
                    charvar_full_from_irr(&GeometricSeries::new(s, SeriesRole::Irreducible))?
                }
                Direction::IrrFromFull => charvar_irr_from_full(&GeometricSeries::new(s, SeriesRole::Full))?,
            };
            render_series(&result.series, fmt)
        }
        Command::Abc { diamond, birational } => {
            let d: HodgeDiamond = load_diamond(&required(diamond, inline, "diamond")?)?;
            let mut f = abc_decompose(&d)?;
            if birational {
                f = birational_reduce(&f);
            }
            match fmt {
                Format::Text => f.to_string(),
                Format::Json => json!({ "text": f.to_string(), "terms": abc_json(&f) }).to_string(),
            }
        }
        Command::Basis { family, n } => {
            let family = load_family(&required(family, inline, "family")?, n)?;
            let coeffs = h_in_csf_basis(n, &family, lim)?;
            match fmt {
                Format::Text => coeffs
                    .iter()
                    .map(|(lambda, c)| format!("{lambda}: {c}"))
                    .collect::<Vec<_>>()
                    .join("\n"),
                Format::Json => json!({ "n": n, "coefficients": coefficient_map_json(&coeffs) }).to_string(),
            }
        }
        Command::Verify { suite, order } => return verify(&suite, order, lim, fmt),
    };
    Ok((EXIT_OK, out))
}

fn verify(suite: &str, order: usize, lim: &Limits, fmt: Format) -> Result<(i32, String), CliError> {
    let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite] };
    let mut reports = Vec::new();
    for name in names {
        match run_suite(name, order, lim) {
            Ok(r) => reports.push(r),
            Err(SuiteError::Input(e)) => return Err(e.into()),
            Err(SuiteError::UnknownSuite(s)) => {
                return Err(CliError::Usage(format!(
                    "unknown suite {s:?}; expected one of all, {}",
                    SUITES.join(", ")
                )))
            }
            Err(SuiteError::Counterexample(m)) => return Err(CliError::Usage(m)),
        }
    }
    let all_passed = reports.iter().all(|r| r.passed());
    let out = match fmt {
        Format::Text => reports
            .iter()
            .map(|r| match &r.counterexample {
                None => format!("PASS {} ({} checks)", r.name, r.checks),
                Some(m) => format!("FAIL {} after {} checks: {m}", r.name, r.checks),
            })
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Json => json!({
            "passed": all_passed,
            "suites": reports.iter().map(|r| json!({
                "name": r.name,
                "passed": r.passed(),
                "checks": r.checks,
                "counterexample": r.counterexample,
            })).collect::<Vec<_>>(),
        })
        .to_string(),
    };
    Ok((if all_passed { EXIT_OK } else { EXIT_VERIFY_FAILED }, out))
}

/// Parses `args` (including the program name) and runs the command.
/// `max_states` is the raw value of the guard override variable, if set.
pub fn run<I, T>(args: I, max_states: Option<String>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            };
        }
    };
    let result = limits_from_env(max_states).and_then(|lim| execute(cli, &lim));
    match result {
        Ok((code, mut stdout)) => {
            if !stdout.ends_with('\n') {
                stdout.push('\n');
            }
            Outcome { code, stdout, stderr: String::new() }
        }
        Err(e) => Outcome {
            code: EXIT_INPUT_ERROR,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}
