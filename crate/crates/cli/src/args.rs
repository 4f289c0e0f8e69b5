use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use totalcolor::constructions::Strategy;
use totalcolor::oracles::SearchBudget;
use totalcolor::Exec;

use crate::{
    input, CliError, Command, Format, GenTarget, JobSpec, OracleQuery, EXIT_IO, EXIT_OK,
    EXIT_PRECONDITION,
};

/// Total colorings of circulant and Cayley graphs.
///
/// GRAPH arguments take a DIMACS file or an inline `unitary:N` /
/// `circulant:N:s1,s2,...` (full symmetric connection set).
#[derive(Debug, Parser)]
#[command(name = "totalcolor", version)]
pub struct Cli {
    #[command(subcommand)]
    command: Sub,

    #[command(flatten)]
    shared: Shared,
}

#[derive(Debug, Args)]
struct Shared {
    /// Write the artifact here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Largest color count an oracle may try.
    #[arg(long, global = true, default_value_t = 64)]
    max_colors: usize,
    #[arg(long, global = true, default_value_t = 2_000_000_000)]
    node_limit: u64,
    #[arg(long, global = true, default_value_t = 600)]
    time_limit_secs: u64,
    /// Run every parallel stage sequentially.
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Debug, Subcommand)]
enum Sub {
    /// Write a graph in DIMACS format.
    Gen {
        #[command(subcommand)]
        target: GenSub,
    },
    /// Run a construction and write the coloring.
    Color {
        graph: String,
        /// auto, complete-bipartite, unitary-even, odd-circulant,
        /// even-dense-circulant, perfect-cayley or complete-odd.
        #[arg(long, default_value = "auto")]
        method: String,
        #[arg(long, default_value = "auto")]
        strategy: Strategy,
        #[arg(long, value_enum, default_value_t = FormatArg::Coloring)]
        format: FormatArg,
    },
    /// Check a coloring (text or CSV matrix) against a graph.
    Verify {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        coloring: PathBuf,
    },
    /// Run exact solvers.
    Oracle {
        graph: String,
        #[arg(long, value_enum, default_value_t = QueryArg::All)]
        query: QueryArg,
        /// Class count for `--query conformable` (default: max degree + 1).
        #[arg(long)]
        classes: Option<usize>,
    },
    /// Decide type I or type II.
    Classify { graph: String },
    /// Regenerate the U_n worked-example matrices and diff against golden copies.
    Tables {
        /// A unitary graph; defaults to U_24.
        #[arg(long)]
        graph: Option<String>,
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
enum GenSub {
    Unitary { n: usize },
    Circulant {
        n: usize,
        #[arg(required = true)]
        connection: Vec<usize>,
        /// Treat the list as a half set and add the negatives.
        #[arg(long)]
        half: bool,
    },
    Cayley {
        /// Multiplication table, one whitespace-separated row per line.
        #[arg(long)]
        table: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<usize>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Coloring,
    CsvMatrix,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum QueryArg {
    All,
    Total,
    Chromatic,
    Cliques,
    Perfect,
    Conformable,
}

/// Parses `argv` (program name first). `--help` and `--version` come back
/// as an error with exit code 0 carrying the rendered text.
pub fn parse_args<I, S>(argv: I) -> Result<JobSpec, CliError>
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| {
        use clap::error::ErrorKind;
        let code = match e.kind() {
            ErrorKind::DisplayHelp
            | ErrorKind::DisplayVersion
            | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => EXIT_OK,
            ErrorKind::ValueValidation | ErrorKind::InvalidValue => EXIT_PRECONDITION,
            _ => EXIT_IO,
        };
        CliError {
            code,
            message: e.render().to_string(),
        }
    })?;
    cli.into_job()
}

impl Cli {
    fn into_job(self) -> Result<JobSpec, CliError> {
        let s = self.shared;
        let budget = SearchBudget::new(s.max_colors, s.node_limit, Duration::from_secs(s.time_limit_secs))
            .map_err(|e| CliError::precondition(e.to_string()))?;
        let exec = if s.sequential { Exec::Sequential } else { Exec::default() };
        let command = match self.command {
            Sub::Gen { target } => Command::Gen(match target {
                GenSub::Unitary { n } => GenTarget::Unitary(n),
                GenSub::Circulant { n, connection, half } => {
                    let connection = if half {
                        let mut full: Vec<usize> = connection
                            .iter()
                            .flat_map(|&x| [x % n.max(1), (n - x % n.max(1)) % n.max(1)])
                            .collect();
                        full.sort_unstable();
                        full.dedup();
                        full
                    } else {
                        connection
                    };
                    GenTarget::Circulant { n, connection }
                }
                GenSub::Cayley { table, gens } => GenTarget::Cayley {
                    table,
                    generators: gens,
                },
            }),
            Sub::Color {
                graph,
                method,
                strategy,
                format,
            } => Command::Color {
                graph,
                method: input::parse_method(&method).map_err(CliError::precondition)?,
                strategy,
                format: match format {
                    FormatArg::Coloring => Format::Coloring,
                    FormatArg::CsvMatrix => Format::CsvMatrix,
                },
            },
            Sub::Verify { graph, coloring } => Command::Verify { graph, coloring },
            Sub::Oracle { graph, query, classes } => {
                let query = match query {
                    QueryArg::All => OracleQuery::All,
                    QueryArg::Total => OracleQuery::Total,
                    QueryArg::Chromatic => OracleQuery::Chromatic,
                    QueryArg::Cliques => OracleQuery::Cliques,
                    QueryArg::Perfect => OracleQuery::Perfect,
                    // 0 means "max degree + 1", resolved once the graph is loaded
                    QueryArg::Conformable => OracleQuery::Conformable(classes.unwrap_or(0)),
                };
                Command::Oracle { graph, query }
            }
            Sub::Classify { graph } => Command::Classify { graph },
            Sub::Tables { graph, out_dir } => Command::Tables { graph, out_dir },
        };
        Ok(JobSpec {
            command,
            output: s.output,
            budget,
            exec,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use totalcolor::constructions::Method;

    fn parse(args: &[&str]) -> Result<JobSpec, CliError> {
        parse_args(std::iter::once("totalcolor").chain(args.iter().copied()))
    }

    #[test]
    fn color_flags() {
        let job = parse(&["color", "circulant:21:1,3,4,17,18,20", "--method", "odd-circulant", "--strategy", "starter", "--format", "csv-matrix"]).unwrap();
        assert_eq!(
            job.command,
            Command::Color {
                graph: "circulant:21:1,3,4,17,18,20".into(),
                method: Some(Method::OddCirculant),
                strategy: Strategy::Starter,
                format: Format::CsvMatrix,
            }
        );
        let job = parse(&["--sequential", "color", "unitary:24"]).unwrap();
        assert_eq!(job.exec, Exec::Sequential);
        assert!(matches!(job.command, Command::Color { method: None, .. }));
    }

    #[test]
    fn gen_half_set() {
        let job = parse(&["gen", "circulant", "10", "1", "2", "--half"]).unwrap();
        assert_eq!(
            job.command,
            Command::Gen(GenTarget::Circulant {
                n: 10,
                connection: vec![1, 2, 8, 9]
            })
        );
    }

    #[test]
    fn budget_and_errors() {
        let job = parse(&["oracle", "unitary:8", "--query", "total", "--max-colors", "7", "--node-limit", "1000"]).unwrap();
        assert_eq!(job.budget.max_colors, 7);
        assert_eq!(job.budget.node_limit, 1000);
        assert_eq!(parse(&["oracle", "x", "--max-colors", "0"]).unwrap_err().code, EXIT_PRECONDITION);
        assert_eq!(parse(&["color", "x", "--method", "nope"]).unwrap_err().code, EXIT_PRECONDITION);
        assert_eq!(parse(&["frobnicate"]).unwrap_err().code, EXIT_IO);
        assert_eq!(parse(&["--help"]).unwrap_err().code, EXIT_OK);
    }
}
