//! Command-line front end for the `totalcolor` library.
//!
//! Every command is a thin wrapper around library calls. [`run`] writes to
//! the given streams and returns the process exit code, so tests can drive
//! it without spawning a process.

mod args;
mod input;
mod tables;

use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};

use totalcolor::coloring::{render_matrix, write_coloring, TotalColoring};
use totalcolor::constructions::{construct, ConstructionError, Method, Strategy};
use totalcolor::graph::dimacs::write_dimacs;
use totalcolor::oracles::{
    classify_type, conformable_exists, exact_chromatic, exact_total_chromatic, is_perfect,
    maximal_cliques, oracle_stats, GraphType, OracleError, SearchBudget,
};
use totalcolor::{verify_total, Exec, Graph};

pub use args::{parse_args, Cli};
pub use input::{load_coloring, load_graph, parse_method};
pub use tables::{golden, unitary_tables, TableSet, GOLDEN_NAMES};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONFLICTS: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;
pub const EXIT_IO: i32 = 4;

/// Output format of `color`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Coloring,
    CsvMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenTarget {
    Unitary(usize),
    /// Full symmetric connection set.
    Circulant { n: usize, connection: Vec<usize> },
    Cayley { table: PathBuf, generators: Vec<usize> },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleQuery {
    All,
    Total,
    Chromatic,
    Cliques,
    Perfect,
    Conformable(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Gen(GenTarget),
    Color {
        graph: String,
        method: Option<Method>,
        strategy: Strategy,
        format: Format,
    },
    Verify {
        graph: String,
        coloring: PathBuf,
    },
    Oracle {
        graph: String,
        query: OracleQuery,
    },
    Classify {
        graph: String,
    },
    Tables {
        graph: Option<String>,
        out_dir: Option<PathBuf>,
    },
}

/// One invocation: the command plus shared flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobSpec {
    pub command: Command,
    pub output: Option<PathBuf>,
    pub budget: SearchBudget,
    pub exec: Exec,
}

/// A failure mapped to an exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn io(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_IO,
            message: message.into(),
        }
    }

    pub fn precondition(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_PRECONDITION,
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<ConstructionError> for CliError {
    fn from(e: ConstructionError) -> Self {
        let code = match &e {
            ConstructionError::VerificationFailed { .. } => EXIT_CONFLICTS,
            ConstructionError::Oracle(o) => return o.clone().into(),
            _ => EXIT_PRECONDITION,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        let code = match e {
            OracleError::Inconclusive { .. } => EXIT_INCONCLUSIVE,
            OracleError::InvalidBudget(_) | OracleError::NotRegular => EXIT_PRECONDITION,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

/// Runs a job; artifacts go to `job.output` (or `out`), diagnostics to `err`.
pub fn run(job: &JobSpec, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(job, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.code
        }
    }
}

/// Parses `argv` (program name first) and runs it.
pub fn run_args<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    match parse_args(argv) {
        Ok(job) => run(&job, out, err),
        Err(e) => {
            let _ = write!(err, "{e}");
            e.code
        }
    }
}

fn emit(job: &JobSpec, out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    match &job.output {
        Some(path) => write_file(path, text),
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| CliError::io(format!("writing output: {e}"))),
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::io(format!("{}: {e}", path.display())))
}

fn say(err: &mut dyn Write, text: impl fmt::Display) {
    let _ = writeln!(err, "{text}");
}

fn dispatch(job: &JobSpec, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    job.budget.validate()?;
    match &job.command {
        Command::Gen(target) => {
            let g = input::generate(target)?;
            emit(job, out, &write_dimacs(&g))?;
            Ok(EXIT_OK)
        }
        Command::Color {
            graph,
            method,
            strategy,
            format,
        } => {
            let g = load_graph(graph)?;
            let c = construct(&g, *method, *strategy, &job.budget)?;
            say(err, format!("method: {}", c.method));
            for note in &c.notes {
                say(err, format!("note: {note}"));
            }
            say(err, &c.report);
            let text = match format {
                Format::Coloring => write_coloring(&c.coloring),
                Format::CsvMatrix => render_matrix(&g, &c.coloring)
                    .map_err(|e| CliError::io(e.to_string()))?
                    .to_csv(),
            };
            emit(job, out, &text)?;
            Ok(EXIT_OK)
        }
        Command::Verify { graph, coloring } => {
            let g = load_graph(graph)?;
            let c = load_coloring(coloring, &g)?;
            let report = totalcolor::coloring::verify_total_with(&g, &c, job.exec);
            emit(job, out, &report.to_string())?;
            Ok(if report.is_valid() { EXIT_OK } else { EXIT_CONFLICTS })
        }
        Command::Oracle { graph, query } => {
            let g = load_graph(graph)?;
            oracle(job, &g, *query, out)
        }
        Command::Classify { graph } => {
            let g = load_graph(graph)?;
            let c = classify_type(&g, &job.budget, job.exec)?;
            let mut text = c.to_string();
            if let Some(cert) = &c.certificate {
                text.push_str(&format!("certificate colors: {}\n", cert.colors().len()));
            }
            write_certificate(job, &g, c.certificate.as_ref())?;
            out.write_all(text.as_bytes())
                .map_err(|e| CliError::io(e.to_string()))?;
            Ok(match c.verdict {
                GraphType::Inconclusive => EXIT_INCONCLUSIVE,
                _ => EXIT_OK,
            })
        }
        Command::Tables { graph, out_dir } => {
            let n = match graph {
                None => 24,
                Some(src) => {
                    let g = load_graph(src)?;
                    match g.circulant_spec() {
                        Some(spec) if spec.is_unitary() => spec.n(),
                        _ => return Err(CliError::precondition("tables need a unitary Cayley graph")),
                    }
                }
            };
            tables::run_tables(n, out_dir.as_deref(), out)
        }
    }
}

fn oracle(
    job: &JobSpec,
    g: &Graph,
    query: OracleQuery,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let b = &job.budget;
    let mut code = EXIT_OK;
    let mut cert: Option<TotalColoring> = None;
    let text = match query {
        OracleQuery::All => {
            let s = oracle_stats(g, b, job.exec);
            if s.total.is_err() || s.chromatic.is_err() {
                code = EXIT_INCONCLUSIVE;
            }
            if let Ok(t) = &s.total {
                cert = Some(t.certificate.clone());
            }
            s.to_string()
        }
        OracleQuery::Total => {
            let t = exact_total_chromatic(g, b, job.exec)?;
            let text = format!(
                "total chromatic number: {}\nrefuted color counts: {:?}\n",
                t.value, t.refuted
            );
            cert = Some(t.certificate);
            text
        }
        OracleQuery::Chromatic => {
            let c = exact_chromatic(g, b, job.exec)?;
            format!("chromatic number: {}\nclasses: {:?}\n", c.value, c.classes)
        }
        OracleQuery::Cliques => {
            let s = maximal_cliques(g);
            let mut text = format!(
                "clique number: {}\nmaximal cliques: {}\nmaximum cliques: {}\n",
                s.omega, s.maximal_count, s.maximum_count
            );
            for q in &s.cliques {
                text.push_str(&format!("clique {q:?}\n"));
            }
            text
        }
        OracleQuery::Perfect => format!("perfect: {}\n", is_perfect(g)?),
        OracleQuery::Conformable(q) => {
            let q = if q == 0 { g.max_degree() + 1 } else { q };
            match conformable_exists(g, q)? {
            Some(p) => format!("conformable with {q} classes: true\nclasses: {:?}\n", p.classes()),
            None => format!("conformable with {q} classes: false\n"),
            }
        }
    };
    write_certificate(job, g, cert.as_ref())?;
    out.write_all(text.as_bytes())
        .map_err(|e| CliError::io(e.to_string()))?;
    Ok(code)
}

/// Re-verifies a certificate and writes it to `--output`, if given.
fn write_certificate(job: &JobSpec, g: &Graph, cert: Option<&TotalColoring>) -> Result<(), CliError> {
    let (Some(c), Some(path)) = (cert, &job.output) else {
        return Ok(());
    };
    let report = verify_total(g, c);
    if !report.is_valid() {
        return Err(CliError {
            code: EXIT_CONFLICTS,
            message: format!("certificate failed verification\n{report}"),
        });
    }
    write_file(path, &write_coloring(c))
}
