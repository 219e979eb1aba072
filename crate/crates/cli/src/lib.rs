//! The `bseries` command line: argument parsing and the text each subcommand prints.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use bseries::bseries::{
    check_geometric, convolve_bck, delta_bck, delta_cefm, delta_cefm_tree, elementary_weights, exact_gamma,
    order_of, solve_modified, substitute_b, tree_table, BCoeff, CoeffKind, GeometricKind, ModifiedMode, RKTableau,
};
use bseries::forest::{
    enumerate_planar_trees, enumerate_trees, planar_forests_up_to, trees_up_to, Forest, DEFAULT_MAX_ORDER,
};
use bseries::integrators::lie::ActionKind;
use bseries::integrators::problems::{default_problem, translation};
use bseries::integrators::{convergence_order, integrate, trajectory_csv, Invariant, LGMethod, LGProblem};
use bseries::lbseries::{
    delta_mkw, exact_flow_lb, fdb_coproduct, method_series, q_apply, BellWord, LBCoeff, LbMethod, Representation,
};
use bseries::TensorDisplay;
use clap::{Args, Parser, Subcommand, ValueEnum};

pub const MAX_ORDER_VAR: &str = "BF_MAX_ORDER";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Domain(bseries::Error),
    /// Help or version text; printed to stdout with exit code 0.
    #[error("{0}")]
    Display(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Display(_) => 0,
            CliError::Usage(_) => 1,
            CliError::Domain(_) => 2,
        }
    }
}

impl From<bseries::Error> for CliError {
    fn from(e: bseries::Error) -> Self {
        match e {
            bseries::Error::Parse { .. } => CliError::Usage(e.to_string()),
            other => CliError::Domain(other),
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "bseries", version, about = "B-series, Lie-Butcher series and Lie group integrators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List rooted trees up to an order with σ(τ) and τ!
    Trees {
        #[arg(short = 'N', default_value_t = 4)]
        n: usize,
        /// list planar trees instead
        #[arg(long)]
        planar: bool,
    },
    /// Print a coproduct of one element, or a table of them
    Coproduct {
        #[arg(value_enum)]
        algebra: Algebra,
        /// forest (bck, cefm), planar forest (mkw) or word such as d1.d2 (fdb)
        element: Option<String>,
        /// print every basis element up to this order instead
        #[arg(long, conflicts_with = "element")]
        table: Option<usize>,
    },
    /// Coefficients of the composition: the second method applied after the first
    Compose {
        #[arg(long)]
        first: String,
        #[arg(long)]
        second: String,
        #[arg(short = 'N', default_value_t = 4)]
        n: usize,
    },
    /// Substitute a vector-field series into a B-series
    Substitute {
        /// `dot`, or a file of `tree<TAB>value` lines
        #[arg(long)]
        field: String,
        /// builtin tableau, `exact`, or a tableau file
        #[arg(long)]
        series: String,
        #[arg(short = 'N', default_value_t = 4)]
        n: usize,
    },
    /// Modified-equation coefficients of a method
    Modified {
        #[command(flatten)]
        method: MethodArg,
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(short = 'N', default_value_t = 4)]
        n: usize,
    },
    /// Order of a method and the first violated condition
    Order {
        #[command(flatten)]
        method: MethodArg,
        #[arg(short = 'N', default_value_t = 6)]
        n: usize,
    },
    /// Check the symplectic or Hamiltonian coefficient conditions
    Geometric {
        #[command(flatten)]
        method: MethodArg,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(short = 'N', default_value_t = 4)]
        n: usize,
    },
    /// Lie-Butcher series of a Lie group method or of the exact flow
    Series {
        /// exact, exponential_euler (lie_euler) or lie_implicit_midpoint (lie_midpoint)
        #[arg(long)]
        method: String,
        /// type1, type3 or generator
        #[arg(long, default_value = "type1")]
        rep: String,
        #[arg(short = 'N', default_value_t = 3)]
        n: usize,
    },
    /// Integrate a bundled problem and print the trajectory as CSV
    Integrate {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, default_value_t = 10)]
        steps: usize,
        #[arg(long, default_value_t = 0.1)]
        h: f64,
        #[arg(long, default_value_t = 0.0)]
        t0: f64,
        /// append the drift of an invariant
        #[arg(long, value_enum)]
        check_invariant: Option<InvariantArg>,
    },
    /// Empirical order of convergence over a list of step sizes
    Converge {
        #[command(flatten)]
        run: RunArgs,
        /// comma-separated step sizes
        #[arg(long, value_delimiter = ',', required = true)]
        h: Vec<f64>,
        #[arg(long, default_value_t = 2.0)]
        t_end: f64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum Algebra {
    Bck,
    Cefm,
    Mkw,
    Fdb,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum Mode {
    BackwardError,
    ModifyingIntegrator,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum Kind {
    Symplectic,
    Hamiltonian,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum InvariantArg {
    Norm,
    Spectrum,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum FieldArg {
    Linear,
    Quadratic,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct MethodArg {
    /// euler, explicit_midpoint, implicit_midpoint or rk4
    #[arg(long)]
    builtin: Option<String>,
    /// tableau file: stage count, rows of a, then b
    #[arg(long)]
    tableau: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct RunArgs {
    /// lie_euler, lie_midpoint, lie_rk4, cf4, rkmk:<tableau>[:m] or a classical tableau
    #[arg(long)]
    method: String,
    /// rotation, isospectral, affine or translation
    #[arg(long)]
    action: String,
    /// field for the translation action
    #[arg(long, value_enum, default_value = "linear")]
    f: FieldArg,
    /// write to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Parses `args` (program name first) and returns the text to print.
pub fn run<I, T>(args: I) -> Result<String>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| match e.kind() {
        clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => CliError::Display(e.to_string()),
        _ => CliError::Usage(e.to_string().trim_end().to_string()),
    })?;
    let cap = max_order()?;
    let check = |n: usize| -> Result<usize> {
        if n > cap {
            return Err(bseries::Error::Capacity { requested: n, max: cap }.into());
        }
        Ok(n)
    };
    match cli.command {
        Command::Trees { n, planar } => cmd_trees(check(n)?, planar, cap),
        Command::Coproduct { algebra, element, table } => match (element, table) {
            (_, Some(n)) => cmd_coproduct_table(algebra, check(n)?),
            (Some(x), None) => cmd_coproduct(algebra, &x),
            (None, None) => Err(CliError::Usage("coproduct needs an element or --table N".into())),
        },
        Command::Compose { first, second, n } => {
            let n = check(n)?;
            let a = series_arg(&first, n)?;
            let b = series_arg(&second, n)?;
            Ok(tree_rows(&convolve_bck(&a, &b, n)?, n))
        }
        Command::Substitute { field, series, n } => {
            let n = check(n)?;
            let beta = field_arg(&field, n)?;
            let a = series_arg(&series, n)?;
            Ok(tree_rows(&substitute_b(&beta, &a, n)?, n))
        }
        Command::Modified { method, mode, n } => cmd_analyze(Analysis::Modified(mode), &method, check(n)?),
        Command::Order { method, n } => cmd_analyze(Analysis::Order, &method, check(n)?),
        Command::Geometric { method, kind, n } => cmd_analyze(Analysis::Geometric(kind), &method, check(n)?),
        Command::Series { method, rep, n } => cmd_series(&method, &rep, check(n)?),
        Command::Integrate { run, steps, h, t0, check_invariant } => {
            let text = cmd_integrate(&run, steps, h, t0, check_invariant)?;
            emit(&run.out, text)
        }
        Command::Converge { run, h, t_end } => {
            let (method, problem) = method_and_problem(&run)?;
            let text = convergence_order(&method, &problem, t_end, &h)?.to_csv();
            emit(&run.out, text)
        }
    }
}

fn max_order() -> Result<usize> {
    match std::env::var(MAX_ORDER_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{MAX_ORDER_VAR} must be a non-negative integer, got `{v}`"))),
        Err(_) => Ok(DEFAULT_MAX_ORDER),
    }
}

fn emit(out: &Option<PathBuf>, text: String) -> Result<String> {
    match out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn read(path: &std::path::Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn cmd_trees(n: usize, planar: bool, cap: usize) -> Result<String> {
    let mut out = String::new();
    if planar {
        out.push_str("tree\torder\n");
        for k in 1..=n {
            for t in enumerate_planar_trees(k, cap)? {
                let _ = writeln!(out, "{}\t{k}", t.key());
            }
        }
    } else {
        out.push_str("tree\torder\tsigma\tfactorial\n");
        for k in 1..=n {
            for t in enumerate_trees(k, cap)? {
                let _ = writeln!(out, "{t}\t{k}\t{}\t{}", t.sigma(), t.factorial());
            }
        }
    }
    Ok(out)
}

fn coproduct_line(algebra: Algebra, x: &str) -> Result<String> {
    Ok(match algebra {
        Algebra::Bck => TensorDisplay(&delta_bck(&x.parse::<Forest>()?)).to_string(),
        Algebra::Cefm => {
            let w: Forest = x.parse()?;
            match w.as_tree() {
                Some(t) => TensorDisplay(&delta_cefm_tree(t)).to_string(),
                None => TensorDisplay(&delta_cefm(&w)).to_string(),
            }
        }
        Algebra::Mkw => TensorDisplay(&delta_mkw(&x.parse()?)).to_string(),
        Algebra::Fdb => TensorDisplay(&fdb_coproduct(&x.parse::<BellWord>()?)).to_string(),
    })
}

/// One coproduct, printed as a formal tensor sum.
fn cmd_coproduct(algebra: Algebra, x: &str) -> Result<String> {
    Ok(coproduct_line(algebra, x)? + "\n")
}

fn compositions(n: u32) -> Vec<BellWord> {
    if n == 0 {
        return vec![BellWord::empty()];
    }
    (1..=n)
        .flat_map(|first| compositions(n - first).into_iter().map(move |rest| BellWord::letter(first).concat(&rest)))
        .collect()
}

fn cmd_coproduct_table(algebra: Algebra, n: usize) -> Result<String> {
    let keys: Vec<String> = match algebra {
        Algebra::Bck | Algebra::Cefm => trees_up_to(n).iter().map(|t| t.to_string()).collect(),
        Algebra::Mkw => planar_forests_up_to(n).iter().map(|w| w.to_string()).collect(),
        Algebra::Fdb => (1..=n as u32).flat_map(compositions).map(|w| w.to_string()).collect(),
    };
    let mut out = String::new();
    for k in keys {
        let _ = writeln!(out, "{k}\t{}", coproduct_line(algebra, &k)?);
    }
    Ok(out)
}

fn tableau(m: &MethodArg) -> Result<RKTableau> {
    match (&m.builtin, &m.tableau) {
        (Some(name), _) => RKTableau::builtin(name).map_err(|e| CliError::Usage(e.to_string())),
        (None, Some(path)) => Ok(RKTableau::parse(&read(path)?)?),
        (None, None) => Err(CliError::Usage("give --builtin NAME or --tableau FILE".into())),
    }
}

/// `exact`, a builtin tableau name, or a tableau file.
fn series_arg(name: &str, n: usize) -> Result<BCoeff> {
    if name == "exact" {
        return Ok(exact_gamma(n));
    }
    match RKTableau::builtin(name) {
        Ok(t) => Ok(elementary_weights(&t, n)),
        Err(_) => Ok(elementary_weights(&RKTableau::parse(&read(name.as_ref())?)?, n)),
    }
}

fn field_arg(name: &str, n: usize) -> Result<BCoeff> {
    if name == "dot" {
        return Ok(BCoeff::delta_dot(n));
    }
    Ok(BCoeff::from_dump(CoeffKind::Infinitesimal, n, &read(name.as_ref())?)?)
}

fn tree_rows(a: &BCoeff, n: usize) -> String {
    let mut out = String::new();
    for (t, v) in tree_table(a, n) {
        let _ = writeln!(out, "{t}\t{v}");
    }
    out
}

enum Analysis {
    Order,
    Geometric(Kind),
    Modified(Mode),
}

/// Order, geometric conditions or modified-equation coefficients of a tableau.
fn cmd_analyze(what: Analysis, method: &MethodArg, n: usize) -> Result<String> {
    let t = tableau(method)?;
    let w = elementary_weights(&t, n);
    Ok(match what {
        Analysis::Order => {
            let r = order_of(&w, n);
            let mut out = format!("order: {}\n", r.order);
            match r.violation {
                Some(v) => {
                    let _ = writeln!(out, "first violation: {}\tgot {}\texpected {}", v.tree, v.got, v.expected);
                }
                None => {
                    let _ = writeln!(out, "all conditions up to order {n} hold");
                }
            }
            out
        }
        Analysis::Geometric(kind) => {
            let kind = match kind {
                Kind::Symplectic => GeometricKind::SymplecticMethod,
                Kind::Hamiltonian => GeometricKind::HamiltonianField,
            };
            let v = check_geometric(&w, kind, n);
            if v.is_empty() {
                "OK\n".into()
            } else {
                v.iter().map(|x| format!("{x}\n")).collect()
            }
        }
        Analysis::Modified(mode) => {
            let mode = match mode {
                Mode::BackwardError => ModifiedMode::BackwardError,
                Mode::ModifyingIntegrator => ModifiedMode::ModifyingIntegrator,
            };
            tree_rows(&solve_modified(&w, mode, n)?, n)
        }
    })
}

fn cmd_series(method: &str, rep: &str, n: usize) -> Result<String> {
    let rep: Representation = rep.parse().map_err(|e: bseries::Error| CliError::Usage(e.to_string()))?;
    let series: LBCoeff = if method == "exact" {
        let g = exact_flow_lb(n);
        match rep {
            Representation::Type3 => g,
            Representation::Type1 => q_apply(&g, n)?,
            Representation::Generator => {
                return Err(bseries::Error::Unsupported("the exact flow has no generator representation here".into()).into())
            }
        }
    } else {
        let m: LbMethod = method.parse().map_err(|e: bseries::Error| CliError::Usage(e.to_string()))?;
        method_series(m, rep, n)?
    };
    let mut out = String::new();
    for (w, v) in series.table() {
        let _ = writeln!(out, "{w}\t{v}");
    }
    Ok(out)
}

fn method_and_problem(run: &RunArgs) -> Result<(LGMethod, LGProblem)> {
    let method: LGMethod = run.method.parse().map_err(|e: bseries::Error| CliError::Usage(e.to_string()))?;
    let kind: ActionKind = run.action.parse().map_err(|e: bseries::Error| CliError::Usage(e.to_string()))?;
    let problem = match kind {
        ActionKind::Translation => translation(match run.f {
            FieldArg::Linear => "linear",
            FieldArg::Quadratic => "quadratic",
        })?,
        other => default_problem(other),
    };
    Ok((method, problem))
}

/// Trajectory CSV for `steps` steps of size `h`.
fn cmd_integrate(run: &RunArgs, steps: usize, h: f64, t0: f64, inv: Option<InvariantArg>) -> Result<String> {
    let (method, problem) = method_and_problem(run)?;
    let states = integrate(&method, &problem, t0, h, steps)?;
    let inv = inv.map(|i| match i {
        InvariantArg::Norm => Invariant::Norm,
        InvariantArg::Spectrum => Invariant::Spectrum,
    });
    Ok(trajectory_csv(&problem, &states, t0, h, inv))
}
