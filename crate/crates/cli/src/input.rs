//! Reading graphs, colorings and group tables.

use std::path::Path;
use std::sync::Arc;

use totalcolor::coloring::{parse_coloring, parse_matrix, parse_matrix_csv};
use totalcolor::constructions::Method;
use totalcolor::graph::dimacs::parse_dimacs;
use totalcolor::graph::{build_cayley, build_circulant, build_unitary, GroupTable};
use totalcolor::{CirculantSpec, Graph, TotalColoring};

use crate::{CliError, GenTarget};

pub(crate) fn generate(target: &GenTarget) -> Result<Graph, CliError> {
    let g = match target {
        GenTarget::Unitary(n) => build_unitary(*n),
        GenTarget::Circulant { n, connection } => {
            CirculantSpec::new(*n, connection.iter().copied()).map(|s| build_circulant(&s))
        }
        GenTarget::Cayley { table, generators } => {
            let t = read_group_table(table)?;
            build_cayley(Arc::new(t), generators)
        }
    };
    g.map_err(|e| CliError::precondition(e.to_string()))
}

/// Whitespace-separated multiplication table, one row per line; `#` starts
/// a comment.
fn read_group_table(path: &Path) -> Result<GroupTable, CliError> {
    let text = read(path)?;
    let mut rows = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| CliError::io(format!("{}:{}: {e}", path.display(), idx + 1)))?;
        rows.push(row);
    }
    GroupTable::new(rows).map_err(|e| CliError::io(format!("{}: {e}", path.display())))
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::io(format!("{}: {e}", path.display())))
}

/// A DIMACS file, or an inline `unitary:N` / `circulant:N:s1,s2,...`
/// (full connection set).
pub fn load_graph(src: &str) -> Result<Graph, CliError> {
    if let Some(rest) = src.strip_prefix("unitary:") {
        let n = parse_usize(rest)?;
        return generate(&GenTarget::Unitary(n));
    }
    if let Some(rest) = src.strip_prefix("circulant:") {
        let (n, conn) = rest
            .split_once(':')
            .ok_or_else(|| CliError::io(format!("expected circulant:N:s1,s2,..., got `{src}`")))?;
        let connection = parse_list(conn)?;
        return generate(&GenTarget::Circulant {
            n: parse_usize(n)?,
            connection,
        });
    }
    let path = Path::new(src);
    parse_dimacs(&read(path)?).map_err(|e| CliError::io(format!("{}: {e}", path.display())))
}

/// A coloring in the text format, or a CSV matrix (detected by a leading
/// comma in the first non-blank line).
pub fn load_coloring(path: &Path, g: &Graph) -> Result<TotalColoring, CliError> {
    let text = read(path)?;
    let wrap = |e: totalcolor::coloring::ColoringError| CliError::io(format!("{}: {e}", path.display()));
    let first = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
    if first.trim_start().starts_with(',') {
        let m = parse_matrix_csv(&text).map_err(wrap)?;
        parse_matrix(&m, Some(g)).map_err(wrap)
    } else {
        parse_coloring(&text).map_err(wrap)
    }
}

/// `auto` maps to `None`.
pub fn parse_method(s: &str) -> Result<Option<Method>, String> {
    let all = [
        Method::CompleteBipartite,
        Method::UnitaryEven,
        Method::OddCirculant,
        Method::EvenDenseCirculant,
        Method::PerfectCayley,
        Method::CompleteOdd,
    ];
    if s == "auto" {
        return Ok(None);
    }
    all.into_iter()
        .find(|m| m.name() == s)
        .map(Some)
        .ok_or_else(|| {
            let names: Vec<&str> = all.iter().map(|m| m.name()).collect();
            format!("unknown method `{s}`; expected auto, {}", names.join(", "))
        })
}

pub(crate) fn parse_usize(s: &str) -> Result<usize, CliError> {
    s.trim()
        .parse()
        .map_err(|_| CliError::io(format!("invalid number `{s}`")))
}

pub(crate) fn parse_list(s: &str) -> Result<Vec<usize>, CliError> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(parse_usize)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inline_graphs() {
        let g = load_graph("unitary:24").unwrap();
        assert_eq!(g.n(), 24);
        assert_eq!(g.max_degree(), 8);
        let g = load_graph("circulant:21:1,3,4,17,18,20").unwrap();
        assert_eq!(g.max_degree(), 6);
        assert!(load_graph("circulant:21").is_err());
        assert_eq!(load_graph("/no/such/file").unwrap_err().code, crate::EXIT_IO);
    }

    #[test]
    fn methods() {
        assert_eq!(parse_method("auto").unwrap(), None);
        assert_eq!(parse_method("odd-circulant").unwrap(), Some(Method::OddCirculant));
        assert!(parse_method("fancy").is_err());
    }
}
