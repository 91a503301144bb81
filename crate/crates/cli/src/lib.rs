//! Command-line front end. [`run`] takes the argument vector and returns the
//! exit code with everything that would be printed, so the binary is a thin
//! wrapper and tests can call it directly.
//!
//! Exit codes: 0 success, 1 negative or absent answer (or any disagreement in
//! `verify`), 2 usage, parse or precondition error, 3 budget exceeded.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rainbow_matroid::antiramsey::{
    ar_bruteforce_with, ar_number, cross_verify, extremal_coloring_with, ArBranch, CrossReport,
    FamilyParams,
};
use rainbow_matroid::document::{parse_coloring, parse_spec, write_coloring};
use rainbow_matroid::flats::enumerate_flats_with_budget;
use rainbow_matroid::packing::{
    find_rainbow_bases_with, has_color_disjoint_bases_with, has_disjoint_bases_with, BasePacking,
    PackingCertificate, SearchOptions, Witness, DEFAULT_NODE_BUDGET,
};
use rainbow_matroid::{Coloring, Matroid, MatroidError};
use rayon::prelude::*;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "rmat", version, about = "Anti-Ramsey numbers and base packings of matroids")]
struct Cli {
    /// Node budget for witness searches and closure budget for flat enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
    /// Maximum number of worker threads.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Rank of the ground set, or of a subset.
    Rank {
        spec: PathBuf,
        /// Comma-separated element ids.
        #[arg(long, value_delimiter = ',')]
        subset: Option<Vec<usize>>,
    },
    /// All flats in (rank, subset) order.
    Flats {
        spec: PathBuf,
        #[arg(long)]
        max_rank: Option<usize>,
    },
    /// The anti-Ramsey number ar(M, t).
    Ar {
        spec: PathBuf,
        #[arg(long)]
        t: usize,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
    },
    /// A coloring with ar(M, t) colors and no t disjoint rainbow bases.
    Extremal {
        spec: PathBuf,
        #[arg(long)]
        t: usize,
        /// Write the coloring here instead of printing it.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Searches a coloring for t disjoint rainbow bases.
    Check {
        spec: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        t: usize,
    },
    /// t disjoint bases, or with a coloring t bases whose union is rainbow.
    Pack {
        spec: PathBuf,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        coloring: Option<PathBuf>,
    },
    /// Compares closed forms, the flat formula and brute force over a grid.
    Verify {
        family: VerifyFamily,
        /// Vertex count, uniform ground size, or |T| for cubes. `a..b` is inclusive.
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<usize>,
        #[arg(long, value_parser = parse_range)]
        t: RangeInclusive<usize>,
        #[arg(long, value_parser = parse_range)]
        k: Option<RangeInclusive<usize>>,
        #[arg(long, value_parser = parse_range)]
        d: Option<RangeInclusive<usize>>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Formula,
    Brute,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum VerifyFamily {
    #[value(name = "graphic-Kn")]
    GraphicKn,
    #[value(name = "bicircular-Kn")]
    BicircularKn,
    #[value(name = "signed-Kn")]
    SignedKn,
    Uniform,
    Cube,
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let bound = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("`{x}`: {e}"));
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (bound(a)?, bound(b.trim_start_matches('='))?);
            if a > b {
                return Err(format!("empty range {s}"));
            }
            Ok(a..=b)
        }
        None => {
            let a = bound(s)?;
            Ok(a..=a)
        }
    }
}

/// What a command printed and how it exits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    code: i32,
    message: String,
}

impl From<MatroidError> for Failure {
    fn from(e: MatroidError) -> Self {
        let code = match e {
            MatroidError::FlatBudgetExceeded { .. } | MatroidError::SearchBudgetExceeded { .. } => EXIT_BUDGET,
            MatroidError::Contract(_) => EXIT_NEGATIVE,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    let mut out = String::new();
    match dispatch(&cli, &mut out) {
        Ok(code) => Outcome { code, stdout: out, stderr: String::new() },
        Err(f) => Outcome {
            code: f.code,
            stdout: out,
            stderr: format!("error: {}\n", f.message),
        },
    }
}

fn dispatch(cli: &Cli, out: &mut String) -> Result<i32, Failure> {
    let options = SearchOptions {
        node_budget: cli.budget,
        ..SearchOptions::default()
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return Err(usage("--jobs must be at least 1"));
        }
        pool = pool.num_threads(jobs);
    }
    let pool = pool.build().map_err(|e| usage(format!("thread pool: {e}")))?;
    pool.install(|| match &cli.command {
        Command::Rank { spec, subset } => rank(&load_spec(spec)?, subset.as_deref(), out),
        Command::Flats { spec, max_rank } => flats(&load_spec(spec)?, *max_rank, cli.budget, out),
        Command::Ar { spec, t, method } => ar(&load_spec(spec)?, *t, *method, options, out),
        Command::Extremal { spec, t, out: path } => extremal(&load_spec(spec)?, *t, path.as_deref(), options, out),
        Command::Check { spec, coloring, t } => {
            let m = load_spec(spec)?;
            check(&m, &load_coloring(coloring, &m)?, *t, options, out)
        }
        Command::Pack { spec, t, coloring } => {
            let m = load_spec(spec)?;
            let c = coloring.as_deref().map(|p| load_coloring(p, &m)).transpose()?;
            pack(&m, c.as_ref(), *t, options, out)
        }
        Command::Verify { family, n, t, k, d } => verify(*family, n, t, k.as_ref(), d.as_ref(), out),
    })
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load_spec(path: &Path) -> Result<Matroid, Failure> {
    parse_spec(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load_coloring(path: &Path, m: &Matroid) -> Result<Coloring, Failure> {
    parse_coloring(&read(path)?, Some(m.ground_size())).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn line(out: &mut String, text: std::fmt::Arguments<'_>) {
    out.write_fmt(text).expect("writing to a String cannot fail");
    out.push('\n');
}

macro_rules! say {
    ($out:expr, $($arg:tt)*) => { line($out, format_args!($($arg)*)) };
}

fn rank(m: &Matroid, subset: Option<&[usize]>, out: &mut String) -> Result<i32, Failure> {
    say!(out, "ground = {}", m.ground_size());
    say!(out, "rank = {}", m.full_rank());
    say!(out, "loops = {}", m.loops());
    if let Some(ids) = subset {
        let s = m.subset(ids)?;
        say!(out, "subset = {s}");
        say!(out, "subset rank = {}", m.rank(s)?);
        say!(out, "independent = {}", yes_no(m.is_independent(s)?));
        say!(out, "closure = {}", m.closure(s)?);
    }
    Ok(EXIT_OK)
}

fn flats(m: &Matroid, max_rank: Option<usize>, budget: u64, out: &mut String) -> Result<i32, Failure> {
    let flats = enumerate_flats_with_budget(m, max_rank, budget)?;
    for f in &flats {
        say!(out, "rank {} size {} {}", f.rank, f.len(), f.elements);
    }
    say!(out, "flats = {}", flats.len());
    Ok(EXIT_OK)
}

fn ar(m: &Matroid, t: usize, method: Method, options: SearchOptions, out: &mut String) -> Result<i32, Failure> {
    let mut formula = None;
    if method != Method::Brute {
        let res = ar_number(m, t)?;
        say!(out, "ar = {}", res.value);
        say!(out, "branch = {}", res.branch);
        if let Some(f) = res.argmax_flat {
            say!(out, "argmax flat = {} (rank {}, size {})", f.elements, f.rank, f.len());
        }
        if let Some(f) = res.degenerate_flat {
            say!(out, "degenerate flat = {} (rank {}, size {})", f.elements, f.rank, f.len());
        }
        formula = Some(res.value);
    }
    if method != Method::Formula {
        let brute = ar_bruteforce_with(m, t, options)?;
        say!(out, "ar (brute force) = {brute}");
        if let Some(v) = formula {
            say!(out, "agree = {}", yes_no(v == brute));
            if v != brute {
                return Ok(EXIT_NEGATIVE);
            }
        }
    }
    Ok(EXIT_OK)
}

fn extremal(
    m: &Matroid,
    t: usize,
    path: Option<&Path>,
    options: SearchOptions,
    out: &mut String,
) -> Result<i32, Failure> {
    let ex = extremal_coloring_with(m, t, options)?;
    say!(out, "colors = {}", ex.coloring.num_colors());
    if let Some(f) = ex.flat_used {
        say!(out, "flat = {} (rank {}, size {})", f.elements, f.rank, f.len());
    }
    if let Some(c) = ex.shared_color {
        say!(out, "shared color = {c}");
    }
    let doc = write_coloring(&ex.coloring);
    match path {
        Some(p) => {
            fs::write(p, &doc).map_err(|e| usage(format!("{}: {e}", p.display())))?;
            say!(out, "wrote {}", p.display());
        }
        None => out.push_str(&doc),
    }
    Ok(EXIT_OK)
}

fn check(m: &Matroid, c: &Coloring, t: usize, options: SearchOptions, out: &mut String) -> Result<i32, Failure> {
    say!(out, "colors = {}", c.num_colors());
    match find_rainbow_bases_with(m, c, t, options)? {
        Some(p) => {
            say!(out, "found {t} disjoint rainbow bases");
            print_bases(&p, out);
            Ok(EXIT_OK)
        }
        None => {
            say!(out, "no t disjoint rainbow bases (t = {t})");
            Ok(EXIT_NEGATIVE)
        }
    }
}

fn pack(m: &Matroid, c: Option<&Coloring>, t: usize, options: SearchOptions, out: &mut String) -> Result<i32, Failure> {
    let cert = match c {
        Some(c) => has_color_disjoint_bases_with(m, c, t, options)?,
        None => has_disjoint_bases_with(m, t, options)?,
    };
    match cert {
        PackingCertificate::Feasible(Witness::Found(p)) => {
            say!(out, "feasible");
            print_bases(&p, out);
            Ok(EXIT_OK)
        }
        PackingCertificate::Feasible(Witness::BudgetExceeded { budget }) => {
            say!(out, "feasible");
            say!(out, "witness search stopped after {budget} nodes");
            Ok(EXIT_BUDGET)
        }
        PackingCertificate::Infeasible(v) => {
            say!(out, "infeasible");
            say!(
                out,
                "violated flat = {} (rank {}, size {}): {} < {}",
                v.flat.elements,
                v.flat.rank,
                v.flat.len(),
                v.lhs,
                v.rhs
            );
            Ok(EXIT_NEGATIVE)
        }
    }
}

fn print_bases(p: &BasePacking, out: &mut String) {
    for (i, b) in p.bases.iter().enumerate() {
        say!(out, "basis {} = {}", i + 1, b);
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn verify(
    family: VerifyFamily,
    n: &RangeInclusive<usize>,
    t: &RangeInclusive<usize>,
    k: Option<&RangeInclusive<usize>>,
    d: Option<&RangeInclusive<usize>>,
    out: &mut String,
) -> Result<i32, Failure> {
    let mut points: Vec<(FamilyParams, usize)> = Vec::new();
    let mut shapes: Vec<FamilyParams> = Vec::new();
    for n in n.clone() {
        match family {
            VerifyFamily::GraphicKn => shapes.push(FamilyParams::GraphicComplete { n }),
            VerifyFamily::BicircularKn => shapes.push(FamilyParams::BicircularComplete { n }),
            VerifyFamily::SignedKn => shapes.push(FamilyParams::SignedComplete { n }),
            VerifyFamily::Uniform => {
                let ks = k.ok_or_else(|| usage("uniform needs --k"))?;
                shapes.extend(ks.clone().filter(|&k| k <= n).map(|k| FamilyParams::Uniform { n, k }));
            }
            VerifyFamily::Cube => {
                let ds = d.ok_or_else(|| usage("cube needs --d"))?;
                shapes.extend(ds.clone().map(|d| FamilyParams::Cube { size: n, d }));
            }
        }
    }
    for p in shapes {
        points.extend(t.clone().map(|t| (p, t)));
    }

    let reports: Vec<Result<CrossReport, MatroidError>> =
        points.par_iter().map(|&(p, t)| cross_verify(p, t)).collect();

    let (mut agree, mut disagree, mut skipped) = (0, 0, 0);
    for ((p, t), rep) in points.iter().zip(reports) {
        match rep {
            Ok(r) => {
                let brute = r.brute_force.map_or("-".to_string(), |b| b.to_string());
                let verdict = if r.all_agree() { "agree" } else { "DISAGREE" };
                let branch = match r.formula.branch {
                    ArBranch::Formula => String::new(),
                    b => format!(" [{b}]"),
                };
                say!(
                    out,
                    "{p} t={t} |E|={}: closed={} formula={}{branch} brute={brute} {verdict}",
                    r.ground_size,
                    r.closed_form,
                    r.formula.value
                );
                if r.all_agree() {
                    agree += 1;
                } else {
                    disagree += 1;
                }
            }
            Err(e @ (MatroidError::FlatBudgetExceeded { .. } | MatroidError::SearchBudgetExceeded { .. })) => {
                return Err(e.into());
            }
            Err(e) => {
                say!(out, "{p} t={t}: skipped ({e})");
                skipped += 1;
            }
        }
    }
    say!(out, "points = {}, agree = {agree}, disagree = {disagree}, skipped = {skipped}", agree + disagree + skipped);
    Ok(if disagree > 0 { EXIT_NEGATIVE } else { EXIT_OK })
}

