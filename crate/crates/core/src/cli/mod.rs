//! The `hnp` command line: argument parsing, input loading and dispatch.
//!
//! Exit codes: 0 success, 1 usage, 2 parse or I/O, 3 order cap exceeded,
//! 4 a mathematical precondition failed (e.g. `H` not inside `G`).

mod render;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::fixtures::{self, FixtureError, FixtureSet};
use crate::obstruction::{
    classify_decomposition_groups, evaluate_scenario, h1_flabby_invariants, ClassRep, ObstructionError, SchurTrivial,
    SubgroupInfo, SCHEMA_VERSION,
};
use crate::perm::{fingerprint, GeneratorFile, Group, PermError, Subgroup, DEFAULT_ORDER_CAP};

pub use render::format_invariants;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_MATH: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "hnp", version, about = "First obstruction to the Hasse norm principle")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Md,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Fixture {
    M11,
}

#[derive(Debug, Clone, clap::Args)]
pub struct Inputs {
    /// Use the embedded M11 data for G, classes and the Schur multiplier fact
    #[arg(long, value_enum, conflicts_with = "group")]
    pub fixture: Option<Fixture>,
    /// Generator file for G
    #[arg(long)]
    pub group: Option<PathBuf>,
    /// Generator file for H
    #[arg(long, conflicts_with = "class")]
    pub subgroup: Option<PathBuf>,
    /// Fixture class for H: id, GAP name or table name
    #[arg(long)]
    pub class: Option<String>,
    /// Decomposition group: fixture class or generator file (repeatable)
    #[arg(long = "place")]
    pub places: Vec<String>,
    /// Maximum group order to enumerate
    #[arg(long, default_value_t = DEFAULT_ORDER_CAP)]
    pub cap: usize,
    /// Assert that the Schur multiplier of G is trivial; the value records why
    #[arg(long, value_name = "PROVENANCE")]
    pub assume_trivial_schur: Option<String>,
    /// Worker threads (default: all cores)
    #[arg(long)]
    pub threads: Option<usize>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Ker ψ1, Dnr, H^1 and a verdict for every candidate decomposition group
    Analyze(Inputs),
    /// The two M11 tables split by H^1
    Tables(Inputs),
    /// Obstruction for a given set of ramified decomposition groups
    Scenario {
        #[command(flatten)]
        inputs: Inputs,
        /// Leave the unramified contribution out of the obstruction
        #[arg(long)]
        strict: bool,
    },
    /// Minimal decomposition groups making the obstruction vanish
    Minimal(Inputs),
    /// Re-check the embedded M11 data
    VerifyFixtures {
        #[command(flatten)]
        inputs: Inputs,
        /// Also write the fixtures as generator files into this directory
        #[arg(long, value_name = "DIR")]
        export_fixtures: Option<PathBuf>,
    },
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<PermError> for CliError {
    fn from(e: PermError) -> Self {
        let code = match e {
            PermError::CapExceeded { .. } => EXIT_CAP,
            PermError::Syntax(_)
            | PermError::PointOutOfRange { .. }
            | PermError::RepeatedPoint(_)
            | PermError::NotBijective
            | PermError::Io(_) => EXIT_PARSE,
            _ => EXIT_MATH,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl From<ObstructionError> for CliError {
    fn from(e: ObstructionError) -> Self {
        match e {
            ObstructionError::Perm(p) => p.into(),
            other => Self {
                code: EXIT_MATH,
                message: other.to_string(),
            },
        }
    }
}

impl From<FixtureError> for CliError {
    fn from(e: FixtureError) -> Self {
        match e {
            FixtureError::Perm(p) => p.into(),
            FixtureError::UnknownClass(_) | FixtureError::AmbiguousClass { .. } => Self::usage(e.to_string()),
            FixtureError::Io(m) => Self {
                code: EXIT_PARSE,
                message: m,
            },
            other => Self {
                code: EXIT_MATH,
                message: other.to_string(),
            },
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}

fn inputs(cmd: &Command) -> &Inputs {
    match cmd {
        Command::Analyze(i) | Command::Tables(i) | Command::Minimal(i) => i,
        Command::Scenario { inputs, .. } | Command::VerifyFixtures { inputs, .. } => inputs,
    }
}

/// Runs a parsed command and returns its output.
pub fn execute(cmd: &Command) -> Result<String, CliError> {
    let threads = inputs(cmd).threads;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.unwrap_or(0))
        .build()
        .map_err(|e| CliError::usage(e.to_string()))?;
    pool.install(|| dispatch(cmd))
}

fn dispatch(cmd: &Command) -> Result<String, CliError> {
    match cmd {
        Command::Analyze(i) => analyze(i),
        Command::Minimal(i) => minimal(i),
        Command::Tables(i) => tables(i),
        Command::Scenario { inputs, strict } => scenario(inputs, *strict),
        Command::VerifyFixtures {
            inputs,
            export_fixtures,
        } => verify(inputs, export_fixtures.as_deref()),
    }
}

/// Resolved inputs: the group, optional fixture data, and the Schur assertion.
struct Setting {
    group: Arc<Group>,
    fixtures: Option<FixtureSet>,
    schur: Option<SchurTrivial>,
}

impl Setting {
    fn load(i: &Inputs) -> Result<Self, CliError> {
        let user_schur = i.assume_trivial_schur.as_ref().map(SchurTrivial::assert);
        match (&i.fixture, &i.group) {
            (Some(Fixture::M11), _) => {
                let fs = fixtures::load_subgroup_table()?;
                Ok(Self {
                    group: Arc::clone(&fs.group),
                    fixtures: Some(fs),
                    schur: Some(user_schur.unwrap_or_else(fixtures::m11_schur_assertion)),
                })
            }
            (None, Some(path)) => {
                let f = GeneratorFile::read(path)?;
                let group = Group::from_generators(f.degree, &f.generators, i.cap)?;
                Ok(Self {
                    group,
                    fixtures: None,
                    schur: user_schur,
                })
            }
            (None, None) => Err(CliError::usage("one of --fixture or --group is required")),
        }
    }

    fn fixtures(&self) -> Result<&FixtureSet, CliError> {
        self.fixtures
            .as_ref()
            .ok_or_else(|| CliError::usage("this needs --fixture m11"))
    }

    fn subgroup_file(&self, path: &Path) -> Result<Subgroup, CliError> {
        let f = GeneratorFile::read(path)?;
        let gens = f
            .generators
            .iter()
            .map(|p| p.extended(self.group.degree()))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| CliError {
                code: EXIT_MATH,
                message: format!("{}: degree exceeds that of G", path.display()),
            })?;
        Ok(Subgroup::from_generators(&self.group, &gens)?)
    }

    fn subgroup(&self, i: &Inputs) -> Result<Subgroup, CliError> {
        match (&i.class, &i.subgroup) {
            (Some(key), _) => Ok(self.fixtures()?.find(key)?.subgroup.clone()),
            (None, Some(path)) => self.subgroup_file(path),
            (None, None) => Err(CliError::usage("one of --class or --subgroup is required")),
        }
    }

    /// A place is a fixture class when fixtures are loaded and the key names
    /// one; otherwise a generator file.
    fn place(&self, key: &str) -> Result<Subgroup, CliError> {
        if let Some(fs) = &self.fixtures {
            match fs.find(key) {
                Ok(c) => return Ok(c.subgroup.clone()),
                Err(e @ FixtureError::AmbiguousClass { .. }) => return Err(e.into()),
                Err(_) if Path::new(key).exists() => {}
                Err(e) => return Err(e.into()),
            }
        }
        self.subgroup_file(Path::new(key))
    }

    /// Candidate decomposition groups: every fixture class, or the given places.
    fn classes(&self, i: &Inputs) -> Result<Vec<ClassRep>, CliError> {
        if i.places.is_empty() {
            if let Some(fs) = &self.fixtures {
                return Ok(fs.class_reps());
            }
        }
        i.places
            .iter()
            .enumerate()
            .map(|(k, key)| {
                let subgroup = self.place(key)?;
                Ok(ClassRep {
                    id: k + 1,
                    name: fingerprint(&subgroup).label,
                    subgroup,
                })
            })
            .collect()
    }
}

fn format_or(i: &Inputs, default: Format) -> Format {
    i.format.unwrap_or(default)
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

fn analyze(i: &Inputs) -> Result<String, CliError> {
    let s = Setting::load(i)?;
    let h = s.subgroup(i)?;
    let classes = s.classes(i)?;
    let report = classify_decomposition_groups(&h, &classes, s.schur.as_ref())?;
    Ok(match format_or(i, Format::Json) {
        Format::Json => to_json(&report),
        Format::Md => render::analyze_md(&report),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalClass {
    pub id: usize,
    pub name: String,
    pub order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalReport {
    pub schema_version: String,
    pub subgroup: SubgroupInfo,
    pub true_count: usize,
    pub false_count: usize,
    pub minimal_true: Vec<MinimalClass>,
}

fn minimal(i: &Inputs) -> Result<String, CliError> {
    let s = Setting::load(i)?;
    let h = s.subgroup(i)?;
    let classes = s.classes(i)?;
    let report = classify_decomposition_groups(&h, &classes, s.schur.as_ref())?;
    let out = MinimalReport {
        schema_version: SCHEMA_VERSION.to_string(),
        subgroup: report.subgroup.clone(),
        true_count: report.true_count,
        false_count: report.false_count,
        minimal_true: report
            .minimal_true
            .iter()
            .map(|id| {
                let c = classes
                    .iter()
                    .find(|c| c.id == *id)
                    .expect("minimal ids come from classes");
                MinimalClass {
                    id: *id,
                    name: c.name.clone(),
                    order: c.subgroup.order(),
                }
            })
            .collect(),
    };
    Ok(match format_or(i, Format::Json) {
        Format::Json => to_json(&out),
        Format::Md => render::minimal_md(&out),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub id: usize,
    pub name: String,
    pub syl2: String,
    pub order: usize,
    pub index: usize,
    pub h1: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tables {
    pub schema_version: String,
    /// classes with trivial H^1
    pub table1: Vec<TableRow>,
    /// classes with nontrivial H^1
    pub table2: Vec<TableRow>,
}

/// H^1 for every proper class of the fixture group, split by triviality.
pub fn compute_tables(fs: &FixtureSet, schur: &SchurTrivial) -> Result<Tables, ObstructionError> {
    let rows = fs
        .proper()
        .par_iter()
        .map(|c| {
            let h1 = h1_flabby_invariants(&c.subgroup, Some(schur))?;
            let syl = fingerprint(&c.subgroup.sylow(2)).label;
            Ok(TableRow {
                id: c.meta.id,
                name: c.meta.table_name.to_string(),
                syl2: fixtures::table_label(&syl).to_string(),
                order: c.subgroup.order(),
                index: fs.group.order() / c.subgroup.order(),
                h1,
            })
        })
        .collect::<Result<Vec<_>, ObstructionError>>()?;
    let (table1, table2) = rows.into_iter().partition(|r| r.h1.is_empty());
    Ok(Tables {
        schema_version: SCHEMA_VERSION.to_string(),
        table1,
        table2,
    })
}

fn tables(i: &Inputs) -> Result<String, CliError> {
    let s = Setting::load(i)?;
    let fs = s.fixtures()?;
    let check = fixtures::verify_fixtures(fs);
    if !check.all_ok() {
        return Err(CliError {
            code: EXIT_MATH,
            message: format!("fixture verification failed: {}", check.summary()),
        });
    }
    let schur = s.schur.as_ref().expect("fixtures carry the Schur assertion");
    let t = compute_tables(fs, schur)?;
    Ok(match format_or(i, Format::Md) {
        Format::Json => to_json(&t),
        Format::Md => render::tables_md(&t),
    })
}

fn scenario(i: &Inputs, strict: bool) -> Result<String, CliError> {
    let s = Setting::load(i)?;
    let h = s.subgroup(i)?;
    let places = i.places.iter().map(|p| s.place(p)).collect::<Result<Vec<_>, _>>()?;
    let report = evaluate_scenario(&h, &places, s.schur.as_ref(), strict)?;
    Ok(match format_or(i, Format::Json) {
        Format::Json => to_json(&report),
        Format::Md => render::scenario_md(&report),
    })
}

fn verify(i: &Inputs, export: Option<&Path>) -> Result<String, CliError> {
    let s = Setting::load(i)?;
    let fs = s.fixtures()?;
    let report = fixtures::verify_fixtures(fs);
    let mut text = match format_or(i, Format::Md) {
        Format::Json => to_json(&report),
        Format::Md => render::verify_md(&report),
    };
    if let Some(dir) = export {
        let files = fs.export(dir)?;
        if format_or(i, Format::Md) == Format::Md {
            text.push_str(&format!(
                "\nwrote {} generator files to {}\n",
                files.len(),
                dir.display()
            ));
        }
    }
    if !report.all_ok() {
        return Err(CliError {
            code: EXIT_MATH,
            message: format!("fixture verification failed: {}\n{text}", report.summary()),
        });
    }
    Ok(text)
}
