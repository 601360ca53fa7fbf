//! Command-line front end. Exit codes: 0 success, 2 input error,
//! 3 theorem or consistency violation.

pub mod corpus;
pub mod theorems;

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Signed;

use crate::classify::{classify, polar_dual_polytope};
use crate::ehrhart::{drop_points, step_function};
use crate::exact_math::{format_rational, parse_rational, rat, Rational};
use crate::families::{generate_polytope, CubicGraph, FamilySpec, Poset};
use crate::formats::{
    classification_json, polytope_json, read_polytope, step_function_csv, step_function_json,
    step_function_svg,
};
use crate::polytope::Polytope;
use corpus::{family_items, generate_corpus, CorpusConfig, CorpusItem, ItemKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

/// Environment variable capping the worker thread count.
pub const THREADS_VAR: &str = "SEMIREFLEX_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "semireflex",
    version,
    about = "Exact lattice-point counts of real dilates of rational polytopes"
)]
pub struct Cli {
    /// Write the result to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Seed for the random corpus.
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
    /// Largest dilation examined, as `p/q`.
    #[arg(long, global = true, default_value = "6")]
    pub smax: String,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Cube,
    Simplex,
    Cross,
    Order,
    Chain,
    Quasimetric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StepFormat {
    Csv,
    Json,
    Svg,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a family member as polytope JSON. The argument is a dimension
    /// for cube/simplex/cross, a poset file for order/chain, and a graph
    /// file for quasimetric.
    Generate { family: Family, arg: String },
    /// Exact step function of the lattice count on [0, smax].
    Ehrhart {
        polytope: PathBuf,
        /// Count relative-interior points instead.
        #[arg(long)]
        interior: bool,
        #[arg(long, value_enum, default_value_t = StepFormat::Csv)]
        format: StepFormat,
    },
    /// Structural, numeric and reflexive classification as JSON.
    Classify { polytope: PathBuf },
    /// Polar dual; the origin must be interior.
    Dual { polytope: PathBuf },
    /// Vertex list as JSON.
    Vertices { polytope: PathBuf },
    /// Run the theorem checks over a seeded corpus or a directory.
    CheckTheorems {
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 2)]
        dim_min: usize,
        #[arg(long, default_value_t = 3)]
        dim_max: usize,
        #[arg(long, default_value_t = 4)]
        bound: i64,
        #[arg(long, default_value_t = 0.25)]
        constructed_weight: f64,
        /// Leave out the standard family members.
        #[arg(long)]
        no_families: bool,
        /// Check every `*.json` polytope in this directory instead.
        #[arg(long)]
        dir: Option<PathBuf>,
    },
}

/// Text produced by a command and, for exit code 3, what was violated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub text: String,
    pub violation: Option<String>,
}

impl CommandOutput {
    fn ok(text: String) -> Self {
        Self {
            text,
            violation: None,
        }
    }
}

fn read_file(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_polytope(path: &Path) -> Result<Polytope, String> {
    read_polytope(&read_file(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn parse_smax(text: &str) -> Result<Rational, String> {
    let s = parse_rational(text).map_err(|e| format!("--smax: {e}"))?;
    if !s.is_positive() {
        return Err("--smax must be positive".into());
    }
    Ok(s)
}

fn family_spec(family: Family, arg: &str) -> Result<FamilySpec, String> {
    let dim = || -> Result<usize, String> {
        match arg.parse::<usize>() {
            Ok(d) if d >= 1 => Ok(d),
            _ => Err(format!("expected a positive dimension, found `{arg}`")),
        }
    };
    let poset = || -> Result<Poset, String> {
        Poset::parse(&read_file(Path::new(arg))?).map_err(|e| format!("{arg}: {e}"))
    };
    Ok(match family {
        Family::Cube => FamilySpec::Cube(dim()?),
        Family::Simplex => FamilySpec::Simplex(dim()?),
        Family::Cross => FamilySpec::Cross(dim()?),
        Family::Order => FamilySpec::Order(poset()?),
        Family::Chain => FamilySpec::Chain(poset()?),
        Family::Quasimetric => FamilySpec::Quasimetric(
            CubicGraph::parse(&read_file(Path::new(arg))?).map_err(|e| format!("{arg}: {e}"))?,
        ),
    })
}

fn vertices_json(p: &Polytope) -> String {
    let vertices: Vec<Vec<String>> = p
        .vertices()
        .iter()
        .map(|v| v.iter().map(format_rational).collect())
        .collect();
    let doc = serde_json::json!({ "dim": p.dim(), "vertices": vertices });
    let mut out = serde_json::to_string_pretty(&doc).expect("plain data serializes");
    out.push('\n');
    out
}

fn directory_items(dir: &Path) -> Result<Vec<CorpusItem>, String> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| format!("{}: {e}", dir.display()))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    if paths.is_empty() {
        return Err(format!("{}: no .json polytopes", dir.display()));
    }
    paths
        .iter()
        .enumerate()
        .map(|(id, path)| {
            Ok(CorpusItem {
                id,
                name: path
                    .file_name()
                    .map_or_else(String::new, |n| n.to_string_lossy().into_owned()),
                kind: ItemKind::File,
                polytope: load_polytope(path)?,
            })
        })
        .collect()
}

/// Runs one command; `Err` is an input error.
pub fn execute(cli: &Cli) -> Result<CommandOutput, String> {
    let s_max = parse_smax(&cli.smax)?;
    match &cli.command {
        Command::Generate { family, arg } => {
            let spec = family_spec(*family, arg)?;
            let p = generate_polytope(&spec).map_err(|e| e.to_string())?;
            Ok(CommandOutput::ok(polytope_json(&p, true)))
        }
        Command::Ehrhart {
            polytope,
            interior,
            format,
        } => {
            let p = load_polytope(polytope)?;
            let f = step_function(&p, &s_max, *interior).map_err(|e| e.to_string())?;
            Ok(CommandOutput::ok(match format {
                StepFormat::Csv => step_function_csv(&f),
                StepFormat::Json => step_function_json(&f),
                StepFormat::Svg => step_function_svg(&f),
            }))
        }
        Command::Classify { polytope } => {
            let p = load_polytope(polytope)?;
            let numeric_smax = if s_max < rat(2, 1) {
                return Err("--smax must be at least 2 for classification".into());
            } else {
                s_max.clone()
            };
            let c = classify(&p, Some(&numeric_smax)).map_err(|e| e.to_string())?;
            let f = step_function(&p, &s_max, false).map_err(|e| e.to_string())?;
            let text = classification_json(&c, Some(&drop_points(&f)));
            let violation = c.is_inconsistent().then(|| {
                format!(
                    "defect: structural classification {} disagrees with the floor check on [0, {}]",
                    c.semi_reflexive_structural, s_max
                )
            });
            Ok(CommandOutput { text, violation })
        }
        Command::Dual { polytope } => {
            let p = load_polytope(polytope)?;
            let dual = polar_dual_polytope(&p)
                .map_err(|e| e.to_string())?
                .filter(|_| p.origin_in_interior())
                .ok_or("the origin must lie in the interior of the polytope")?;
            Ok(CommandOutput::ok(polytope_json(&dual, true)))
        }
        Command::Vertices { polytope } => {
            Ok(CommandOutput::ok(vertices_json(&load_polytope(polytope)?)))
        }
        Command::CheckTheorems {
            count,
            dim_min,
            dim_max,
            bound,
            constructed_weight,
            no_families,
            dir,
        } => {
            let (items, header) = match dir {
                Some(dir) => {
                    let items = directory_items(dir)?;
                    let header = format!("source: directory, smax={}", format_rational(&s_max));
                    (items, header)
                }
                None => {
                    let cfg = CorpusConfig {
                        count: *count,
                        dim_min: *dim_min,
                        dim_max: *dim_max,
                        bound: *bound,
                        seed: cli.seed,
                        constructed_weight: *constructed_weight,
                        ..CorpusConfig::default()
                    };
                    cfg.validate()?;
                    let mut items = generate_corpus(&cfg);
                    if !no_families {
                        items.extend(family_items(items.len()));
                    }
                    let header = format!(
                        "source: corpus seed={} count={} dims={}..{} bound={} constructed_weight={} families={} smax={}",
                        cfg.seed,
                        cfg.count,
                        cfg.dim_min,
                        cfg.dim_max,
                        cfg.bound,
                        cfg.constructed_weight,
                        !no_families,
                        format_rational(&s_max)
                    );
                    (items, header)
                }
            };
            let results = theorems::check_all(&items, &s_max);
            let text = theorems::render_report(
                &["semireflex check-theorems".to_string(), header],
                &results,
            );
            let failed = results.iter().filter(|r| !r.passed()).count();
            Ok(CommandOutput {
                text,
                violation: (failed > 0).then(|| format!("{failed} item(s) failed a theorem check")),
            })
        }
    }
}

fn configure_threads() -> Result<(), String> {
    let Ok(value) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let n: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("{THREADS_VAR} must be a positive integer, found `{value}`"))?;
    // a second initialization in the same process keeps the first pool
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global();
    Ok(())
}

/// Parses arguments, runs the command, writes its output, and returns the
/// process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    if let Err(msg) = configure_threads() {
        eprintln!("error: {msg}");
        return EXIT_INPUT;
    }
    let output = match execute(&cli) {
        Ok(output) => output,
        Err(msg) => {
            eprintln!("error: {msg}");
            return EXIT_INPUT;
        }
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = fs::write(path, &output.text) {
                eprintln!("error: {}: {e}", path.display());
                return EXIT_INPUT;
            }
        }
        None => print!("{}", output.text),
    }
    match output.violation {
        Some(msg) => {
            eprintln!("{msg}");
            EXIT_VIOLATION
        }
        None => EXIT_OK,
    }
}
