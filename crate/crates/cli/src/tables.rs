//! The four worked-example matrices for `U_n`: adjacency, part 1, part 2 and
//! the merged coloring, plus the bundled golden copies for `n = 24`.

use std::io::Write;
use std::path::Path;

use totalcolor::coloring::{adjacency_csv, render_matrix, render_partial};
use totalcolor::constructions::{color_unitary_even, unitary_parts};
use totalcolor::graph::build_unitary;

use crate::{CliError, EXIT_CONFLICTS, EXIT_OK};

pub const GOLDEN_NAMES: [&str; 4] = [
    "u24_table1_adjacency.csv",
    "u24_table2_part1.csv",
    "u24_table3_part2.csv",
    "u24_table4_final.csv",
];

const GOLDEN: [&str; 4] = [
    include_str!("../golden/u24_table1_adjacency.csv"),
    include_str!("../golden/u24_table2_part1.csv"),
    include_str!("../golden/u24_table3_part2.csv"),
    include_str!("../golden/u24_table4_final.csv"),
];

/// Bundled CSVs in the order of [`GOLDEN_NAMES`].
pub fn golden() -> [&'static str; 4] {
    GOLDEN
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableSet {
    pub n: usize,
    pub adjacency: String,
    pub part1: String,
    pub part2: String,
    pub final_matrix: String,
}

impl TableSet {
    pub fn as_array(&self) -> [&str; 4] {
        [&self.adjacency, &self.part1, &self.part2, &self.final_matrix]
    }

    pub fn file_names(&self) -> [String; 4] {
        let n = self.n;
        [
            format!("u{n}_table1_adjacency.csv"),
            format!("u{n}_table2_part1.csv"),
            format!("u{n}_table3_part2.csv"),
            format!("u{n}_table4_final.csv"),
        ]
    }
}

/// Regenerates the four matrices; the final one is verified.
pub fn unitary_tables(n: usize) -> Result<TableSet, CliError> {
    let g = build_unitary(n).map_err(|e| CliError::precondition(e.to_string()))?;
    let parts = unitary_parts(n)?;
    let full = color_unitary_even(n)?;
    let final_matrix = render_matrix(&g, &full.coloring)
        .map_err(|e| CliError::io(e.to_string()))?
        .to_csv();
    Ok(TableSet {
        n,
        adjacency: adjacency_csv(&g),
        part1: render_partial(&parts.part1).to_csv(),
        part2: render_partial(&parts.part2).to_csv(),
        final_matrix,
    })
}

/// Cells that differ between two CSVs, as `(row, column)` labels.
fn diff_cells(got: &str, want: &str) -> Vec<(usize, usize)> {
    let grid = |s: &str| -> Vec<Vec<String>> {
        s.lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| l.split(',').map(|c| c.trim().to_string()).collect())
            .collect()
    };
    let (a, b) = (grid(got), grid(want));
    let rows = a.len().max(b.len());
    let mut out = Vec::new();
    for i in 0..rows {
        let ra = a.get(i).map(Vec::as_slice).unwrap_or(&[]);
        let rb = b.get(i).map(Vec::as_slice).unwrap_or(&[]);
        for j in 0..ra.len().max(rb.len()) {
            if ra.get(j) != rb.get(j) {
                // header row and label column are offset by one
                out.push((i.wrapping_sub(1), j.wrapping_sub(1)));
            }
        }
    }
    out
}

/// Writes the tables (if `out_dir` is given) and, for `n = 24`, diffs each
/// against its golden copy. Exit 1 on any mismatch.
pub(crate) fn run_tables(n: usize, out_dir: Option<&Path>, out: &mut dyn Write) -> Result<i32, CliError> {
    let set = unitary_tables(n)?;
    let names = set.file_names();
    if let Some(dir) = out_dir {
        std::fs::create_dir_all(dir).map_err(|e| CliError::io(format!("{}: {e}", dir.display())))?;
        for (name, text) in names.iter().zip(set.as_array()) {
            let path = dir.join(name);
            std::fs::write(&path, text).map_err(|e| CliError::io(format!("{}: {e}", path.display())))?;
        }
    }
    let io = |e: std::io::Error| CliError::io(e.to_string());
    if n != 24 {
        for name in &names {
            writeln!(out, "{name}: generated (no golden copy)").map_err(io)?;
        }
        return Ok(EXIT_OK);
    }
    let mut code = EXIT_OK;
    for ((name, got), want) in names.iter().zip(set.as_array()).zip(golden()) {
        let diffs = diff_cells(got, want);
        if diffs.is_empty() {
            writeln!(out, "{name}: 0 differing cells").map_err(io)?;
        } else {
            code = EXIT_CONFLICTS;
            writeln!(out, "{name}: {} differing cells", diffs.len()).map_err(io)?;
            for (i, j) in diffs.iter().take(10) {
                writeln!(out, "  cell ({}, {})", *i as isize, *j as isize).map_err(io)?;
            }
        }
    }
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn u24_matches_golden() {
        let set = unitary_tables(24).unwrap();
        for (got, want) in set.as_array().into_iter().zip(golden()) {
            assert!(diff_cells(got, want).is_empty());
        }
    }

    #[test]
    fn diff_reports_cells() {
        let a = ",0,1\n0,1,2\n1,2,3\n";
        let b = ",0,1\n0,1,2\n1,2,1\n";
        assert_eq!(diff_cells(a, b), vec![(1, 1)]);
    }

    #[test]
    fn odd_n_is_rejected() {
        assert_eq!(unitary_tables(9).unwrap_err().code, crate::EXIT_PRECONDITION);
    }
}
