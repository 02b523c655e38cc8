//! `mzv`: exact leading-order expansions of Euler-Zagier multiple zeta
//! functions at non-positive integers, with iterated / directional / path
//! limits, singularity classification, and verification oracles.
//!
//! Exit codes: 0 on success, 2 when a requested limit does not exist,
//! 3 on parse or precondition errors.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use mzv_core::engine::{
    self, is_singular, leading_term, leading_term_restricted, path_condition_check, EngineError,
    Point, SPoint,
};
use mzv_core::oracle::{
    direct_series, hurwitz_zeta_em, stuffle_constant, zeta2_em, zeta_nonpositive, EMParams,
};
use mzv_core::symbolic::{
    rational_latex, PathAssignment, PathStep, RenderFormat, SymbolicError,
};
use mzv_core::Rational;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "mzv",
    version,
    about = "Exact multiple zeta leading terms and limits at non-positive integer points"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum FormatArg {
    #[default]
    Plain,
    Latex,
    Json,
}

impl From<FormatArg> for RenderFormat {
    fn from(f: FormatArg) -> RenderFormat {
        match f {
            FormatArg::Plain => RenderFormat::Plain,
            FormatArg::Latex => RenderFormat::Latex,
            FormatArg::Json => RenderFormat::Json,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the exact leading term at (-m_1, ..., -m_d)
    Expand {
        /// Comma-separated m-values, e.g. "0,0,0" for the origin of depth 3
        #[arg(short = 'p', long)]
        point: String,
        /// Interpret the point as literal non-positive coordinates, e.g. "-1,-1"
        #[arg(long)]
        signed: bool,
        /// Use the restricted-sum construction (same value, independent path)
        #[arg(long)]
        restricted: bool,
        #[arg(long, value_enum, default_value_t)]
        format: FormatArg,
    },
    /// Iterated limit; the first listed variable is sent to zero first
    LimitOrdered {
        #[arg(short = 'p', long)]
        point: String,
        #[arg(long)]
        signed: bool,
        /// Comma-separated variable indices, e.g. "1,2,3"
        #[arg(long)]
        order: String,
        #[arg(long, value_enum, default_value_t)]
        format: FormatArg,
    },
    /// Directional limit along e = delta * theta
    LimitDirection {
        #[arg(short = 'p', long)]
        point: String,
        #[arg(long)]
        signed: bool,
        /// Comma-separated rationals, e.g. "1,1,1" or "1,-1/2"
        #[arg(long)]
        theta: String,
        #[arg(long, value_enum, default_value_t)]
        format: FormatArg,
    },
    /// Limit along a monomial path e_j = c_j * delta^k_j
    LimitPath {
        #[arg(short = 'p', long)]
        point: String,
        #[arg(long)]
        signed: bool,
        /// Comma-separated monomials "c*d^k"; "d" means 1*d^1, "d^2" means 1*d^2
        #[arg(long)]
        path: String,
        /// Report violations of the bounded-ratio hypothesis as WARN lines
        #[arg(long)]
        check_path_condition: bool,
        #[arg(long, value_enum, default_value_t)]
        format: FormatArg,
    },
    /// Classify a parameter-space point against the singular set
    Singular {
        /// Comma-separated exact rational coordinates, e.g. "1/2,1"
        #[arg(short = 's', long)]
        spoint: String,
        #[arg(long, value_enum, default_value_t)]
        format: FormatArg,
    },
    /// Verification oracles (exact zeta values, stuffle constants,
    /// Euler-Maclaurin continuation, direct summation)
    Oracle {
        #[command(subcommand)]
        oracle: OracleCommand,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Exact zeta(-m)
    Zeta {
        #[arg(short = 'm', long)]
        m: u32,
    },
    /// Exact depth-2 stuffle constant zeta(-m1)zeta(-m2) - zeta(-m1-m2)
    Stuffle {
        /// Comma-separated pair, e.g. "1,1"
        #[arg(short = 'm', long)]
        m: String,
    },
    /// Euler-Maclaurin Hurwitz zeta sum_{k>=0} (a+k)^{-s}
    Hurwitz {
        #[arg(long)]
        s: f64,
        #[arg(long)]
        a: f64,
        #[arg(long = "em-N")]
        em_n: Option<u32>,
        #[arg(long = "em-J")]
        em_j: Option<u32>,
    },
    /// Euler-Maclaurin continuation of the depth-2 function
    Zeta2 {
        /// Comma-separated pair, e.g. "0.0001,0.0001"
        #[arg(long)]
        s: String,
        #[arg(long = "em-N")]
        em_n: Option<u32>,
        #[arg(long = "em-J")]
        em_j: Option<u32>,
        #[arg(long = "em-R")]
        em_r: Option<u32>,
    },
    /// Truncated direct summation inside the convergence domain
    Direct {
        /// Comma-separated real exponents, e.g. "2,3"
        #[arg(long)]
        s: String,
        #[arg(long, default_value_t = 2000)]
        cutoff: u32,
    },
}

/// Failure carrying the process exit code (2 = DNE, 3 = bad input).
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn parse(message: impl Into<String>) -> Failure {
        Failure {
            code: 3,
            message: message.into(),
        }
    }
}

impl From<EngineError> for Failure {
    fn from(e: EngineError) -> Failure {
        let code = match &e {
            EngineError::Divergent { .. } => 2,
            EngineError::Symbolic(SymbolicError::LimitDoesNotExist { .. }) => 2,
            _ => 3,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
            // clap renders its own message (help text or error).
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::Expand {
            point,
            signed,
            restricted,
            format,
        } => {
            let p = parse_point(&point, signed)?;
            let f = if restricted {
                leading_term_restricted(&p)
            } else {
                leading_term(&p)
            };
            Ok(format!("{}\n", f.render(format.into())))
        }
        Command::LimitOrdered {
            point,
            signed,
            order,
            format,
        } => {
            let p = parse_point(&point, signed)?;
            let order = parse_indices(&order)?;
            let value = engine::ordered_limit(&p, &order)?;
            Ok(render_value(&value, format, &[]))
        }
        Command::LimitDirection {
            point,
            signed,
            theta,
            format,
        } => {
            let p = parse_point(&point, signed)?;
            let theta = parse_rationals(&theta)?;
            let value = engine::directional_limit(&p, &theta)?;
            Ok(render_value(&value, format, &[]))
        }
        Command::LimitPath {
            point,
            signed,
            path,
            check_path_condition,
            format,
        } => {
            let p = parse_point(&point, signed)?;
            let path = parse_path(&path)?;
            if path.len() != p.depth() {
                return Err(Failure::parse(format!(
                    "path has {} monomials, point has depth {}",
                    path.len(),
                    p.depth()
                )));
            }
            let warnings: Vec<String> = if check_path_condition {
                path_condition_check(&p, &path)
                    .iter()
                    .map(|w| w.to_string())
                    .collect()
            } else {
                Vec::new()
            };
            match engine::path_limit(&p, &path) {
                Ok(value) => Ok(render_value(&value, format, &warnings)),
                Err(e) => {
                    // Warnings still surface alongside the failure.
                    for w in &warnings {
                        println!("WARN: {w}");
                    }
                    Err(e.into())
                }
            }
        }
        Command::Singular { spoint, format } => {
            let coords = parse_rationals(&spoint)?;
            let sp = SPoint::new(coords).map_err(|e| Failure::parse(e.to_string()))?;
            let verdict = is_singular(&sp);
            match format {
                FormatArg::Json => {
                    let loci: Vec<String> =
                        verdict.loci.iter().map(|l| l.to_string()).collect();
                    let value = serde_json::json!({
                        "singular": verdict.is_singular(),
                        "loci": loci,
                    });
                    Ok(format!("{value}\n"))
                }
                _ => {
                    if verdict.is_singular() {
                        let mut out = String::new();
                        for locus in &verdict.loci {
                            out.push_str(&format!("SINGULAR: {locus}\n"));
                        }
                        Ok(out)
                    } else {
                        Ok("REGULAR\n".to_string())
                    }
                }
            }
        }
        Command::Oracle { oracle } => run_oracle(oracle),
    }
}

fn run_oracle(oracle: OracleCommand) -> Result<String, Failure> {
    match oracle {
        OracleCommand::Zeta { m } => Ok(format!("{}\n", zeta_nonpositive(m))),
        OracleCommand::Stuffle { m } => {
            let pair = parse_indices(&m)?;
            let [m1, m2] = pair.as_slice() else {
                return Err(Failure::parse("expected two comma-separated values"));
            };
            Ok(format!("{}\n", stuffle_constant(*m1 as u32, *m2 as u32)))
        }
        OracleCommand::Hurwitz { s, a, em_n, em_j } => {
            let params = em_params(em_n, em_j, None)?;
            let value =
                hurwitz_zeta_em(s, a, &params).map_err(|e| Failure::parse(e.to_string()))?;
            Ok(format!("{value}\n"))
        }
        OracleCommand::Zeta2 { s, em_n, em_j, em_r } => {
            let coords = parse_floats(&s)?;
            let [s1, s2] = coords.as_slice() else {
                return Err(Failure::parse("expected two comma-separated values"));
            };
            let params = em_params(em_n, em_j, em_r)?;
            let value =
                zeta2_em(*s1, *s2, &params).map_err(|e| Failure::parse(e.to_string()))?;
            Ok(format!("{value}\n"))
        }
        OracleCommand::Direct { s, cutoff } => {
            let coords = parse_floats(&s)?;
            let value =
                direct_series(&coords, cutoff).map_err(|e| Failure::parse(e.to_string()))?;
            Ok(format!("{value}\n"))
        }
    }
}

fn em_params(n: Option<u32>, j: Option<u32>, r: Option<u32>) -> Result<EMParams, Failure> {
    let defaults = EMParams::default();
    EMParams::new(
        n.unwrap_or(defaults.n()),
        j.unwrap_or(defaults.j()),
        r.unwrap_or(defaults.r()),
    )
    .map_err(|e| Failure::parse(e.to_string()))
}

fn render_value(value: &Rational, format: FormatArg, warnings: &[String]) -> String {
    let mut out = String::new();
    match format {
        FormatArg::Json => {
            let warns: Vec<&str> = warnings.iter().map(String::as_str).collect();
            let v = if warnings.is_empty() {
                serde_json::json!({ "value": value.to_string() })
            } else {
                serde_json::json!({ "value": value.to_string(), "warnings": warns })
            };
            out.push_str(&format!("{v}\n"));
        }
        FormatArg::Latex => {
            for w in warnings {
                out.push_str(&format!("WARN: {w}\n"));
            }
            out.push_str(&format!("{}\n", rational_latex(value)));
        }
        FormatArg::Plain => {
            for w in warnings {
                out.push_str(&format!("WARN: {w}\n"));
            }
            out.push_str(&format!("{value}\n"));
        }
    }
    out
}

/// Parse "0,0,0" (m-values) or, with `signed`, literal "-1,-1".
fn parse_point(s: &str, signed: bool) -> Result<Point, Failure> {
    let values: Result<Vec<i64>, _> = s.split(',').map(|t| t.trim().parse::<i64>()).collect();
    let values = values.map_err(|_| Failure::parse(format!("invalid point {s:?}")))?;
    let mut m = Vec::with_capacity(values.len());
    for v in values {
        let part = if signed {
            if v > 0 {
                return Err(Failure::parse(format!(
                    "signed point must have non-positive coordinates, got {v}"
                )));
            }
            -v
        } else {
            if v < 0 {
                return Err(Failure::parse(format!(
                    "m-values must be non-negative, got {v} (use --signed for literal coordinates)"
                )));
            }
            v
        };
        m.push(part as u32);
    }
    Point::new(m).map_err(|e| Failure::parse(e.to_string()))
}

fn parse_indices(s: &str) -> Result<Vec<usize>, Failure> {
    s.split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| Failure::parse(format!("invalid index list {s:?}")))
}

fn parse_rationals(s: &str) -> Result<Vec<Rational>, Failure> {
    s.split(',')
        .map(|t| t.trim().parse::<Rational>())
        .collect::<Result<_, _>>()
        .map_err(|e| Failure::parse(e.to_string()))
}

fn parse_floats(s: &str) -> Result<Vec<f64>, Failure> {
    s.split(',')
        .map(|t| t.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| Failure::parse(format!("invalid number list {s:?}")))
}

/// Parse the path grammar: comma-separated monomials `c*d^k` with `c` a
/// rational and `k` a positive integer; bare `d` means `1*d^1`, `d^2` means
/// `1*d^2`, and a leading `-` negates the coefficient.
fn parse_path(s: &str) -> Result<PathAssignment, Failure> {
    let mut steps = Vec::new();
    for item in s.split(',') {
        let item = item.trim();
        let (coeff_part, exp_part) = item
            .split_once('d')
            .ok_or_else(|| Failure::parse(format!("path monomial {item:?} is missing 'd'")))?;
        let coeff = match coeff_part.trim().trim_end_matches('*').trim() {
            "" => Rational::one(),
            "-" => -Rational::one(),
            c => c
                .parse::<Rational>()
                .map_err(|e| Failure::parse(e.to_string()))?,
        };
        let exponent = match exp_part.trim() {
            "" => 1u32,
            e => {
                let digits = e
                    .strip_prefix('^')
                    .ok_or_else(|| Failure::parse(format!("bad path monomial {item:?}")))?;
                digits
                    .trim()
                    .parse::<u32>()
                    .map_err(|_| Failure::parse(format!("bad exponent in {item:?}")))?
            }
        };
        steps.push(PathStep { coeff, exponent });
    }
    PathAssignment::new(steps).map_err(|e| Failure::parse(e.to_string()))
}
