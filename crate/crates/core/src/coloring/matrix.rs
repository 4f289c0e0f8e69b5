use std::fmt::Write;

use super::{verify_total, Color, ColoringError, TotalColoring};
use crate::graph::{Edge, Graph};
use crate::parse_error::ParseError;

/// Square grid: diagonal cells hold vertex colors, cell `(i, j)` the color of
/// edge `{i, j}`; `None` is a blank cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TotalColorMatrix {
    n: usize,
    cells: Vec<Option<Color>>,
}

impl TotalColorMatrix {
    pub fn blank(n: usize) -> Self {
        TotalColorMatrix {
            n,
            cells: vec![None; n * n],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Option<Color>>>) -> Result<Self, ColoringError> {
        let n = rows.len();
        let mut m = Self::blank(n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(ColoringError::NotSquare {
                    rows: n,
                    cols: row.len(),
                });
            }
            for (j, cell) in row.into_iter().enumerate() {
                if cell == Some(0) {
                    return Err(ColoringError::ZeroColor);
                }
                m.cells[i * n + j] = cell;
            }
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Option<Color> {
        self.cells[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, c: Option<Color>) {
        self.cells[i * self.n + j] = c;
    }

    /// CSV in the tabular layout: a header row of column labels, then one
    /// row per vertex led by its label; blank cells are empty.
    pub fn to_csv(&self) -> String {
        grid_csv(self.n, |i, j| self.get(i, j).map(|c| c.to_string()))
    }
}

fn grid_csv(n: usize, cell: impl Fn(usize, usize) -> Option<String>) -> String {
    let mut out = String::new();
    for j in 0..n {
        write!(out, ",{j}").unwrap();
    }
    out.push('\n');
    for i in 0..n {
        write!(out, "{i}").unwrap();
        for j in 0..n {
            out.push(',');
            if let Some(s) = cell(i, j) {
                out.push_str(&s);
            }
        }
        out.push('\n');
    }
    out
}

/// Adjacency matrix in the same CSV layout: `0` on the diagonal, `1` for
/// edges, empty otherwise.
pub fn adjacency_csv(g: &Graph) -> String {
    grid_csv(g.n(), |i, j| {
        if i == j {
            Some("0".into())
        } else if g.has_edge(i, j) {
            Some("1".into())
        } else {
            None
        }
    })
}

/// Renders a coloring that covers `g` exactly.
pub fn render_matrix(g: &Graph, c: &TotalColoring) -> Result<TotalColorMatrix, ColoringError> {
    let report = verify_total(g, c);
    if let Some(first) = report.coverage.first() {
        return Err(ColoringError::Coverage(first.to_string()));
    }
    Ok(render_partial(c))
}

/// Renders whatever is assigned, leaving unassigned cells blank.
pub fn render_partial(c: &TotalColoring) -> TotalColorMatrix {
    let mut m = TotalColorMatrix::blank(c.n());
    for (v, col) in c.vertex_colors().iter().enumerate() {
        m.set(v, v, *col);
    }
    for (e, col) in c.edge_colors() {
        m.set(e.u(), e.v(), Some(col));
        m.set(e.v(), e.u(), Some(col));
    }
    m
}

/// Reads a matrix back into a coloring. With a graph, colored cells on
/// non-edges are rejected.
pub fn parse_matrix(m: &TotalColorMatrix, g: Option<&Graph>) -> Result<TotalColoring, ColoringError> {
    let n = m.n();
    let mut c = TotalColoring::new(n);
    for i in 0..n {
        if let Some(col) = m.get(i, i) {
            c.set_vertex(i, col);
        }
        for j in i + 1..n {
            if m.get(i, j) != m.get(j, i) {
                return Err(ColoringError::AsymmetricMatrix { i, j });
            }
            if let Some(col) = m.get(i, j) {
                if let Some(g) = g {
                    if !g.has_edge(i, j) {
                        return Err(ColoringError::ColoredNonEdge { i, j });
                    }
                }
                c.set_edge(Edge::new(i, j), col);
            }
        }
    }
    Ok(c)
}

/// Parses the CSV layout written by [`TotalColorMatrix::to_csv`].
pub fn parse_matrix_csv(text: &str) -> Result<TotalColorMatrix, ColoringError> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines
        .next()
        .ok_or_else(|| ParseError::new(1, "empty matrix"))?;
    let labels: Vec<&str> = header.split(',').map(str::trim).collect();
    if labels.first() != Some(&"") {
        return Err(ParseError::new(1, "header must start with an empty cell").into());
    }
    let n = labels.len() - 1;
    for (j, l) in labels[1..].iter().enumerate() {
        if *l != j.to_string() {
            return Err(ParseError::new(1, format!("column label `{l}`, expected {j}")).into());
        }
    }
    let mut rows = Vec::with_capacity(n);
    for (idx, line) in lines {
        let lineno = idx + 1;
        let cells: Vec<&str> = line.split(',').map(str::trim).collect();
        let i = rows.len();
        if cells[0] != i.to_string() {
            return Err(ParseError::new(lineno, format!("row label `{}`, expected {i}", cells[0])).into());
        }
        if cells.len() != n + 1 {
            return Err(ParseError::new(lineno, format!("{} cells, expected {}", cells.len() - 1, n)).into());
        }
        let row = cells[1..]
            .iter()
            .map(|s| {
                if s.is_empty() {
                    Ok(None)
                } else {
                    s.parse::<Color>()
                        .map(Some)
                        .map_err(|_| ParseError::new(lineno, format!("invalid color `{s}`")))
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    if rows.len() != n {
        return Err(ColoringError::NotSquare {
            rows: rows.len(),
            cols: n,
        });
    }
    TotalColorMatrix::from_rows(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3_coloring() -> TotalColoring {
        let mut c = TotalColoring::new(3);
        for i in 0..3 {
            c.set_vertex(i, (2 * i % 3) as Color + 1);
            for j in i + 1..3 {
                c.set_edge(Edge::new(i, j), ((i + j) % 3) as Color + 1);
            }
        }
        c
    }

    #[test]
    fn render_and_parse_k3() {
        let g = Graph::complete(3);
        let c = k3_coloring();
        let m = render_matrix(&g, &c).unwrap();
        assert_eq!(m.to_csv(), ",0,1,2\n0,1,2,3\n1,2,3,1\n2,3,1,2\n");
        let back = parse_matrix(&parse_matrix_csv(&m.to_csv()).unwrap(), Some(&g)).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn single_vertex_grid() {
        let mut c = TotalColoring::new(1);
        c.set_vertex(0, 1);
        let m = render_matrix(&Graph::empty(1), &c).unwrap();
        assert_eq!(m.n(), 1);
        assert_eq!(m.get(0, 0), Some(1));
    }

    #[test]
    fn parse_errors() {
        let asym = ",0,1\n0,1,2\n1,3,2\n";
        assert_eq!(
            parse_matrix(&parse_matrix_csv(asym).unwrap(), None),
            Err(ColoringError::AsymmetricMatrix { i: 0, j: 1 })
        );
        let g = Graph::empty(2);
        let m = parse_matrix_csv(",0,1\n0,1,2\n1,2,2\n").unwrap();
        assert_eq!(
            parse_matrix(&m, Some(&g)),
            Err(ColoringError::ColoredNonEdge { i: 0, j: 1 })
        );
        assert!(parse_matrix_csv(",0,1\n0,1,x\n1,2,2\n").is_err());
        assert!(parse_matrix_csv(",0,1\n0,1,2\n").is_err());
        assert!(render_matrix(&Graph::complete(2), &TotalColoring::new(2)).is_err());
    }

    #[test]
    fn adjacency_layout() {
        assert_eq!(adjacency_csv(&Graph::complete(2)), ",0,1\n0,0,1\n1,1,0\n");
    }
}
