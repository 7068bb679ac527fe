mod config;
mod families;

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use polycauchy::cache::{cache_dir_from_env, load_triangles, save_triangles};
use polycauchy::series::{gf_cauchy1, gf_cauchy2, gf_gen_bernoulli, gf_harmonic, gf_hyperharmonic};
use polycauchy::{parse_rational, Rational};
use polycauchy_identities::{catalog, find, run_cases, IdentityCase, Mode, ParameterGrid, RunOptions};
use serde::Serialize;

use families::{Family, Kind, Method, Params, Row, Shape};

#[derive(Parser)]
#[command(name = "polycauchy", version, about = "Exact tables and identity checks for Cauchy-type polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a family as TSV, one row per index.
    Table(TableArgs),
    /// Print a single value.
    Eval(EvalArgs),
    /// Print generating-function coefficients.
    Series(SeriesArgs),
    /// Run identity checks.
    Verify(VerifyArgs),
    /// Write a family to a JSON or TSV file.
    Export(ExportArgs),
}

#[derive(Args, Clone, Copy)]
struct FamilyOpts {
    #[arg(long, value_enum, default_value = "first")]
    kind: Kind,
    /// Order of poly-Cauchy and poly-Bernoulli families; the order of the
    /// generalized Bernoulli polynomials.
    #[arg(long, default_value_t = 1)]
    k: usize,
    #[arg(long, value_enum, default_value = "gsn")]
    construction: Method,
    /// The `m` of r-Whitney numbers.
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    m: i64,
    /// The `r` of r-Whitney numbers.
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    r: i64,
}

impl FamilyOpts {
    fn params(self) -> Params {
        Params { kind: self.kind, k: self.k, construction: self.construction, m: self.m, r: self.r }
    }
}

#[derive(Args)]
struct TableArgs {
    #[arg(value_enum)]
    family: Family,
    #[command(flatten)]
    opts: FamilyOpts,
    #[arg(long, default_value_t = 0)]
    min_n: usize,
    #[arg(long, default_value_t = 10)]
    max_n: usize,
}

#[derive(Args)]
struct EvalArgs {
    #[arg(value_enum)]
    family: Family,
    #[command(flatten)]
    opts: FamilyOpts,
    #[arg(long)]
    n: usize,
    /// Evaluation point for polynomial families.
    #[arg(long, value_parser = rational, default_value = "0", allow_hyphen_values = true)]
    x: Rational,
    /// Column of triangle families.
    #[arg(long, default_value_t = 0)]
    col: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Gf {
    Cauchy1,
    Cauchy2,
    Bernoulli,
    Hyperharmonic,
    Harmonic,
}

#[derive(Args)]
struct SeriesArgs {
    #[arg(value_enum)]
    gf: Gf,
    #[arg(long, default_value_t = 8)]
    order: usize,
    /// Order of the generalized Bernoulli series.
    #[arg(long, default_value_t = 1)]
    alpha: usize,
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity id such as G04.int1; repeatable. All identities when absent.
    #[arg(long)]
    id: Vec<String>,
    /// Caps `n` for single and nested sums alike.
    #[arg(long)]
    max_n: Option<usize>,
    /// key = value file overriding grid axes.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    sequential: bool,
    /// Omit timings so the report is byte-reproducible.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Args)]
struct ExportArgs {
    #[arg(value_enum, default_value = "cauchy")]
    family: Family,
    #[arg(long, value_enum)]
    format: Format,
    #[arg(long)]
    out: PathBuf,
    #[command(flatten)]
    opts: FamilyOpts,
    #[arg(long, default_value_t = 0)]
    min_n: usize,
    #[arg(long, default_value_t = 10)]
    max_n: usize,
}

enum Failure {
    Usage(String),
    Runtime(String),
    IdentitiesFailed,
}

impl From<polycauchy::Error> for Failure {
    fn from(e: polycauchy::Error) -> Self {
        match e {
            polycauchy::Error::Io { .. } => Failure::Runtime(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn table(a: &TableArgs) -> Result<String, Failure> {
    let p = a.opts.params();
    let mut out = String::new();
    out.push_str(match a.family.shape() {
        Shape::Number => "n\tvalue\n",
        Shape::Poly => "n\tpolynomial\n",
        Shape::Triangle => "n\tm\tvalue\n",
    });
    for n in a.min_n..=a.max_n {
        match a.family.row(n, &p)? {
            Row::Number(v) => writeln!(out, "{n}\t{v}"),
            Row::Poly(poly) => writeln!(out, "{n}\t{poly}"),
            Row::Triangle(r) => r.iter().enumerate().try_for_each(|(m, v)| writeln!(out, "{n}\t{m}\t{v}")),
        }
        .expect("write to string");
    }
    Ok(out)
}

fn eval(a: &EvalArgs) -> Result<String, Failure> {
    let v = match a.family.row(a.n, &a.opts.params())? {
        Row::Number(v) => v,
        Row::Poly(p) => p.eval(&a.x),
        Row::Triangle(r) => r
            .get(a.col)
            .cloned()
            .ok_or_else(|| Failure::Usage(format!("--col {} exceeds n = {}", a.col, a.n)))?,
    };
    Ok(format!("{v}\n"))
}

fn series(a: &SeriesArgs) -> String {
    let s = match a.gf {
        Gf::Cauchy1 => gf_cauchy1(a.order),
        Gf::Cauchy2 => gf_cauchy2(a.order),
        Gf::Bernoulli => gf_gen_bernoulli(a.alpha, a.order),
        Gf::Hyperharmonic => gf_hyperharmonic(a.order),
        Gf::Harmonic => gf_harmonic(a.order),
    };
    let mut out = String::from("n\tcoefficient\n");
    for (n, c) in s.coeffs().iter().enumerate() {
        let _ = writeln!(out, "{n}\t{c}");
    }
    out
}

fn verify(a: &VerifyArgs) -> Result<String, Failure> {
    let mut grid = ParameterGrid::default();
    if let Some(path) = &a.config {
        let text = fs::read_to_string(path).map_err(|e| Failure::Runtime(format!("{}: {e}", path.display())))?;
        config::apply(&mut grid, &text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    }
    if let Some(max_n) = a.max_n {
        grid.set_max_n(max_n);
    }
    let cases: Vec<&IdentityCase> = if a.id.is_empty() {
        catalog().iter().collect()
    } else {
        a.id.iter()
            .map(|id| find(id).ok_or_else(|| Failure::Usage(format!("unknown identity id {id:?}"))))
            .collect::<Result<_, _>>()?
    };
    let mode = if a.sequential { Mode::Sequential } else { Mode::Parallel };
    let suite = run_cases(&cases, &grid, RunOptions { mode, timing: !a.no_timing })
        .map_err(|e| Failure::Usage(e.to_string()))?;
    let out = if a.json { suite.to_json() + "\n" } else { suite.summary() };
    if suite.all_passed() {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::IdentitiesFailed)
    }
}

#[derive(Serialize)]
struct Entry {
    family: String,
    params: families::ParamsJson,
    coefficients: Vec<String>,
}

fn export(a: &ExportArgs) -> Result<String, Failure> {
    let p = a.opts.params();
    let mut rows = Vec::new();
    for n in a.min_n..=a.max_n {
        rows.push((n, a.family.row(n, &p)?.values()));
    }
    let text = match a.format {
        Format::Json => {
            let entries: Vec<Entry> = rows
                .into_iter()
                .map(|(n, vs)| Entry {
                    family: a.family.name(),
                    params: a.family.params_json(n, &p),
                    coefficients: vs.iter().map(Rational::to_string).collect(),
                })
                .collect();
            serde_json::to_string_pretty(&entries).expect("entries serialize") + "\n"
        }
        Format::Tsv => {
            let number = a.family.shape() == Shape::Number;
            let mut out = String::from(if number { "n\tvalue\n" } else { "n\ti\tvalue\n" });
            for (n, vs) in rows {
                for (i, v) in vs.iter().enumerate() {
                    let _ = if number { writeln!(out, "{n}\t{v}") } else { writeln!(out, "{n}\t{i}\t{v}") };
                }
            }
            out
        }
    };
    fs::write(&a.out, text).map_err(|e| Failure::Runtime(format!("{}: {e}", a.out.display())))?;
    Ok(String::new())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cache = cache_dir_from_env();
    if let Some(dir) = &cache {
        if let Err(e) = load_triangles(dir) {
            eprintln!("warning: ignoring triangle cache: {e}");
        }
    }
    let result = match &cli.command {
        Command::Table(a) => table(a),
        Command::Eval(a) => eval(a),
        Command::Series(a) => Ok(series(a)),
        Command::Verify(a) => verify(a),
        Command::Export(a) => export(a),
    };
    if let Some(dir) = &cache {
        if let Err(e) = save_triangles(dir) {
            eprintln!("warning: could not save triangle cache: {e}");
        }
    }
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::IdentitiesFailed) => ExitCode::from(1),
    }
}
