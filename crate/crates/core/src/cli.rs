//! Command-line front end: degree computations by selectable routes,
//! reproduction of the small-matrix degree table, stabilization scans and
//! singular-pair decisions on user-supplied matrices.
//!
//! Exit codes: 0 success, 2 parameter error, 3 route disagreement,
//! 4 input parse error.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::degrees;
use crate::exactlin::Scalar;
use crate::io;
use crate::kalman::{self, Route};
use crate::pairs::{self, EqualLambdaDecision, SingularPair};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Param(String),
    #[error("route disagreement: {0}")]
    RouteDisagreement(String),
    #[error("{0}")]
    Parse(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Param(_) => 2,
            CliError::RouteDisagreement(_) => 3,
            CliError::Parse(_) => 4,
        }
    }
}

impl From<degrees::ParamError> for CliError {
    fn from(e: degrees::ParamError) -> Self {
        CliError::Param(e.to_string())
    }
}

impl From<io::IoError> for CliError {
    fn from(e: io::IoError) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<pairs::PairError> for CliError {
    fn from(e: pairs::PairError) -> Self {
        CliError::Param(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    Closed,
    Chern,
    Homogeneous,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Parser)]
#[command(
    name = "kalmanv",
    about = "Exact degrees of Kalman varieties of matrices and tensors, plus singular-pair decision procedures"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Output format
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Degree route; `all` cross-checks every applicable route
    #[arg(long, global = true, value_enum, default_value = "all")]
    pub route: RouteArg,
    /// Write output to a file instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Degree of the symmetric Kalman variety (eigenvectors in a subspace)
    DegreeSym {
        #[arg(short, long)]
        d: u32,
        #[arg(short, long)]
        n: u32,
        #[arg(short, long)]
        k: u32,
    },
    /// Degree of the general Kalman variety of a tensor shape
    DegreeTensor {
        #[arg(short, long)]
        d: u32,
        /// Comma-separated factor dimensions, e.g. 4,3
        #[arg(long)]
        dims: String,
    },
    /// Degree of the matrix Kalman variety
    DegreeMatrix {
        #[arg(short, long)]
        d: u32,
        #[arg(short, long)]
        n: u32,
        #[arg(short, long)]
        m: u32,
    },
    /// Degrees for all 1 <= d <= n <= max-n, 2 <= m <= max-m, all routes
    Table {
        #[arg(long, default_value_t = 4)]
        max_n: u32,
        #[arg(long, default_value_t = 3)]
        max_m: u32,
    },
    /// Scan the last dimension and report the stabilization boundary
    Stabilize {
        #[arg(short, long)]
        d: u32,
        /// Comma-separated prefix dimensions n_1,...,n_{k-1}
        #[arg(long)]
        prefix: String,
        #[arg(long, default_value_t = 1)]
        m_min: u32,
        #[arg(long)]
        m_max: u32,
    },
    /// Decide singular-pair existence with v on a given line
    DecidePair {
        /// JSON matrix file (array of arrays; entries integer, "p/q", or [re, im])
        #[arg(long)]
        matrix: PathBuf,
        /// Comma-separated rational coordinates of v0, e.g. 0,1
        #[arg(long)]
        v0: String,
    },
    /// Generic number of singular k-tuples of a tensor shape
    TupleCount {
        /// Comma-separated factor dimensions, e.g. 2,2,2
        #[arg(long)]
        dims: String,
    },
}

fn parse_dims(s: &str) -> Result<Vec<u32>, CliError> {
    let dims: Result<Vec<u32>, _> = s.split(',').map(|p| p.trim().parse::<u32>()).collect();
    let dims = dims.map_err(|_| CliError::Param(format!("bad dimension list `{}`", s)))?;
    if dims.is_empty() {
        return Err(CliError::Param("dimension list must be nonempty".into()));
    }
    Ok(dims)
}

struct RouteResult {
    route: Route,
    degree: BigInt,
}

fn check_agreement(results: &[RouteResult], what: &str) -> Result<(), CliError> {
    if results
        .windows(2)
        .any(|w| w[0].degree != w[1].degree)
    {
        let detail: Vec<String> = results
            .iter()
            .map(|r| format!("{}={}", r.route, r.degree))
            .collect();
        return Err(CliError::RouteDisagreement(format!(
            "{}: {}",
            what,
            detail.join(", ")
        )));
    }
    Ok(())
}

fn degree_output(
    command: &str,
    d: u32,
    dims: &[u32],
    results: &[RouteResult],
    format: Format,
) -> String {
    match format {
        Format::Json => {
            let routes: Vec<Value> = results
                .iter()
                .map(|r| {
                    json!({"route": r.route.to_string(), "degree": r.degree.to_string()})
                })
                .collect();
            let v = json!({
                "command": command,
                "d": d,
                "dims": dims,
                "degrees": routes,
            });
            serde_json::to_string_pretty(&v).expect("serializable")
        }
        Format::Csv => {
            let mut s = String::new();
            let header: Vec<String> = (1..=dims.len()).map(|i| format!("n_{}", i)).collect();
            writeln!(s, "d,{},degree,route", header.join(",")).unwrap();
            for r in results {
                let dims_s: Vec<String> = dims.iter().map(|n| n.to_string()).collect();
                writeln!(s, "{},{},{},{}", d, dims_s.join(","), r.degree, r.route).unwrap();
            }
            s
        }
        Format::Text => {
            let dims_s: Vec<String> = dims.iter().map(|n| n.to_string()).collect();
            let mut s = String::new();
            for r in results {
                writeln!(
                    s,
                    "deg(d={}, dims=({})) = {}  [{}]",
                    d,
                    dims_s.join(","),
                    r.degree,
                    r.route
                )
                .unwrap();
            }
            s
        }
    }
}

fn run_degree_sym(d: u32, n: u32, k: u32, route: RouteArg, format: Format) -> Result<String, CliError> {
    let mut results = Vec::new();
    if matches!(route, RouteArg::Closed | RouteArg::All) {
        results.push(RouteResult {
            route: Route::ClosedForm,
            degree: degrees::symmetric_degree_closed(d, n, k)?,
        });
    }
    if matches!(route, RouteArg::Chern | RouteArg::All) {
        results.push(RouteResult {
            route: Route::ChernSeries,
            degree: kalman::symmetric_degree_chern(d, n, k)?.degree,
        });
    }
    if results.is_empty() {
        return Err(CliError::Param(
            "route `homogeneous` does not apply to the symmetric case".into(),
        ));
    }
    check_agreement(&results, &format!("degree-sym d={} n={} k={}", d, n, k))?;
    Ok(degree_output("degree-sym", d, &[n, k], &results, format))
}

fn run_degree_tensor(d: u32, dims: &[u32], route: RouteArg, format: Format) -> Result<String, CliError> {
    let mut results = Vec::new();
    if matches!(route, RouteArg::Homogeneous | RouteArg::All) {
        results.push(RouteResult {
            route: Route::HomogeneousSum,
            degree: kalman::general_degree_homogeneous(d, dims)?.degree,
        });
    }
    if matches!(route, RouteArg::Chern | RouteArg::All) {
        results.push(RouteResult {
            route: Route::ChernSeries,
            degree: kalman::general_degree_chern(d, dims)?.degree,
        });
    }
    if results.is_empty() {
        return Err(CliError::Param(
            "route `closed` does not apply to general tensors".into(),
        ));
    }
    check_agreement(&results, &format!("degree-tensor d={} dims={:?}", d, dims))?;
    Ok(degree_output("degree-tensor", d, dims, &results, format))
}

fn run_degree_matrix(d: u32, n: u32, m: u32, route: RouteArg, format: Format) -> Result<String, CliError> {
    let mut results = Vec::new();
    if matches!(route, RouteArg::Closed | RouteArg::All) {
        results.push(RouteResult {
            route: Route::ClosedForm,
            degree: degrees::matrix_degree_closed(d, n, m)?,
        });
    }
    if matches!(route, RouteArg::Homogeneous | RouteArg::All) {
        results.push(RouteResult {
            route: Route::HomogeneousSum,
            degree: kalman::general_degree_homogeneous(d, &[n, m])?.degree,
        });
    }
    if matches!(route, RouteArg::Chern | RouteArg::All) {
        results.push(RouteResult {
            route: Route::ChernSeries,
            degree: kalman::general_degree_chern(d, &[n, m])?.degree,
        });
    }
    check_agreement(&results, &format!("degree-matrix d={} n={} m={}", d, n, m))?;
    Ok(degree_output("degree-matrix", d, &[n, m], &results, format))
}

fn run_table(max_n: u32, max_m: u32, format: Format) -> Result<String, CliError> {
    if max_n > 12 || max_m > 12 {
        return Err(CliError::Param("table bounds must be <= 12".into()));
    }
    if max_n < 1 || max_m < 2 {
        return Err(CliError::Param("need max-n >= 1 and max-m >= 2".into()));
    }
    let mut rows: Vec<(u32, u32, u32)> = Vec::new();
    for n in 1..=max_n {
        for m in 2..=max_m {
            for d in 1..=n {
                rows.push((d, n, m));
            }
        }
    }
    // graded lexicographic on (d, n, m)
    rows.sort_by_key(|&(d, n, m)| (d + n + m, d, n, m));
    let mut out_rows: Vec<(u32, u32, u32, BigInt)> = Vec::new();
    for (d, n, m) in rows {
        let results = vec![
            RouteResult {
                route: Route::ClosedForm,
                degree: degrees::matrix_degree_closed(d, n, m)?,
            },
            RouteResult {
                route: Route::HomogeneousSum,
                degree: kalman::general_degree_homogeneous(d, &[n, m])?.degree,
            },
            RouteResult {
                route: Route::ChernSeries,
                degree: kalman::general_degree_chern(d, &[n, m])?.degree,
            },
        ];
        check_agreement(&results, &format!("table row d={} n={} m={}", d, n, m))?;
        out_rows.push((d, n, m, results[0].degree.clone()));
    }
    Ok(match format {
        Format::Json => {
            let rows: Vec<Value> = out_rows
                .iter()
                .map(|(d, n, m, deg)| {
                    json!({"d": d, "n": n, "m": m, "degree": deg.to_string(), "route": "all"})
                })
                .collect();
            serde_json::to_string_pretty(&json!({"command": "table", "rows": rows}))
                .expect("serializable")
        }
        Format::Csv => {
            let mut s = String::from("d,n_1,n_2,degree,route\n");
            for (d, n, m, deg) in &out_rows {
                writeln!(s, "{},{},{},{},all", d, n, m, deg).unwrap();
            }
            s
        }
        Format::Text => {
            let mut s = String::from("  d  n  m  degree\n");
            for (d, n, m, deg) in &out_rows {
                writeln!(s, "{:>3}{:>3}{:>3}  {}", d, n, m, deg).unwrap();
            }
            s
        }
    })
}

fn run_stabilize(
    d: u32,
    prefix: &[u32],
    m_min: u32,
    m_max: u32,
    format: Format,
) -> Result<String, CliError> {
    if m_min < 1 || m_min > m_max {
        return Err(CliError::Param("need 1 <= m-min <= m-max".into()));
    }
    let m_range: Vec<u32> = (m_min..=m_max).collect();
    let report = kalman::stabilization_check(d, prefix, &m_range)?;
    Ok(match format {
        Format::Json => {
            let rows: Vec<Value> = report
                .rows
                .iter()
                .map(|r| json!({"m": r.m, "degree": r.degree.to_string()}))
                .collect();
            serde_json::to_string_pretty(&json!({
                "command": "stabilize",
                "d": report.d,
                "prefix": report.dims_prefix,
                "boundary": report.boundary,
                "rows": rows,
                "stabilized": report.stabilized,
            }))
            .expect("serializable")
        }
        Format::Csv => {
            let mut s = String::from("m,degree\n");
            for r in &report.rows {
                writeln!(s, "{},{}", r.m, r.degree).unwrap();
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for r in &report.rows {
                let marker = if r.m == report.boundary { "  <- boundary format" } else { "" };
                writeln!(s, "m={:<3} degree={}{}", r.m, r.degree, marker).unwrap();
            }
            if report.stabilized {
                writeln!(s, "stabilized at m = {}", report.boundary).unwrap();
            } else {
                writeln!(s, "NOT stabilized at m = {}", report.boundary).unwrap();
            }
            s
        }
    })
}

fn scalar_json(s: &Scalar) -> Value {
    let (re, im) = s.parts();
    if s.is_rational() {
        json!(re.to_string())
    } else {
        json!([re.to_string(), im.to_string()])
    }
}

fn pair_json(p: &SingularPair) -> Value {
    json!({
        "v": p.v.0.iter().map(scalar_json).collect::<Vec<_>>(),
        "w": p.w.0.iter().map(scalar_json).collect::<Vec<_>>(),
        "lambda1": scalar_json(&p.lambda1),
        "lambda2": scalar_json(&p.lambda2),
    })
}

fn run_decide(matrix_path: &PathBuf, v0: &str, format: Format) -> Result<String, CliError> {
    let text = std::fs::read_to_string(matrix_path)
        .map_err(|e| CliError::Parse(format!("cannot read {}: {}", matrix_path.display(), e)))?;
    let a = io::parse_matrix(&text)?;
    let v0 = io::parse_vector(v0)?;
    if v0.len() != a.nrows() {
        return Err(CliError::Param(format!(
            "v0 has length {}, matrix has {} rows",
            v0.len(),
            a.nrows()
        )));
    }

    let direct = pairs::decide_pair_in_line(&a, &v0)?;
    let proposition = pairs::decide_pair_in_line_proposition(&a, &v0)?;
    let equal_lambda = pairs::decide_equal_lambda_pair_in_line(&a, &v0)?;

    Ok(match format {
        Format::Json => {
            let witness = direct.as_ref().map(pair_json).unwrap_or(Value::Null);
            let eq = match &equal_lambda {
                EqualLambdaDecision::No => json!({"answer": "no"}),
                EqualLambdaDecision::Yes { witness } => {
                    json!({"answer": "yes", "witness": pair_json(witness)})
                }
                EqualLambdaDecision::YesOverClosure { mu } => {
                    json!({"answer": "yes_over_closure", "mu": scalar_json(mu)})
                }
            };
            serde_json::to_string_pretty(&json!({
                "command": "decide-pair",
                "pair_exists": direct.is_some(),
                "witness": witness,
                "proposition": proposition,
                "agreement": direct.is_some() == proposition,
                "equal_lambda": eq,
            }))
            .expect("serializable")
        }
        Format::Csv | Format::Text => {
            let mut s = String::new();
            match &direct {
                Some(p) => {
                    writeln!(s, "pair exists: yes").unwrap();
                    writeln!(
                        s,
                        "witness: v=({}), w=({}), lambda1={}, lambda2={}",
                        p.v.0.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "),
                        p.w.0.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "),
                        p.lambda1,
                        p.lambda2
                    )
                    .unwrap();
                }
                None => writeln!(s, "pair exists: no").unwrap(),
            }
            writeln!(s, "annihilator/rank procedure: {}", if proposition { "yes" } else { "no" })
                .unwrap();
            writeln!(
                s,
                "procedures agree: {}",
                if direct.is_some() == proposition { "yes" } else { "NO" }
            )
            .unwrap();
            match &equal_lambda {
                EqualLambdaDecision::No => writeln!(s, "equal-lambda pair: no").unwrap(),
                EqualLambdaDecision::Yes { witness } => writeln!(
                    s,
                    "equal-lambda pair: yes (lambda = {})",
                    witness.lambda1
                )
                .unwrap(),
                EqualLambdaDecision::YesOverClosure { mu } => writeln!(
                    s,
                    "equal-lambda pair: yes over the algebraic closure (mu = {}), no exact witness in Q(i)",
                    mu
                )
                .unwrap(),
            }
            s
        }
    })
}

fn run_tuple_count(dims: &[u32], format: Format) -> Result<String, CliError> {
    let count = degrees::singular_tuple_count(dims)?;
    let results = [RouteResult {
        route: Route::HomogeneousSum,
        degree: count,
    }];
    Ok(degree_output("tuple-count", dims[0], dims, &results, format))
}

/// Execute a parsed configuration, returning the rendered output.
pub fn execute(config: &RunConfig) -> Result<String, CliError> {
    match &config.command {
        Command::DegreeSym { d, n, k } => {
            run_degree_sym(*d, *n, *k, config.route, config.format)
        }
        Command::DegreeTensor { d, dims } => {
            run_degree_tensor(*d, &parse_dims(dims)?, config.route, config.format)
        }
        Command::DegreeMatrix { d, n, m } => {
            run_degree_matrix(*d, *n, *m, config.route, config.format)
        }
        Command::Table { max_n, max_m } => run_table(*max_n, *max_m, config.format),
        Command::Stabilize {
            d,
            prefix,
            m_min,
            m_max,
        } => run_stabilize(*d, &parse_dims(prefix)?, *m_min, *m_max, config.format),
        Command::DecidePair { matrix, v0 } => run_decide(matrix, v0, config.format),
        Command::TupleCount { dims } => run_tuple_count(&parse_dims(dims)?, config.format),
    }
}

/// Parse arguments, run, and emit output; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            // clap handles --help/--version with success
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&config) {
        Ok(output) => {
            if let Some(path) = &config.out {
                if let Err(e) = std::fs::write(path, &output) {
                    eprintln!("error: cannot write {}: {}", path.display(), e);
                    return 1;
                }
            } else {
                print!("{}", output);
            }
            0
        }
        Err(e) => {
            eprintln!("error: {}", e);
            e.exit_code()
        }
    }
}
