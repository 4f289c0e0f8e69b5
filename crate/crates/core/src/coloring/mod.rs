//! Total colorings: representation, strict verification, the total color
//! matrix view, vertex partitions and the line-oriented file format.

mod matrix;
mod partition;
mod text;
mod verify;

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::graph::{Edge, Graph};

pub use matrix::{
    adjacency_csv, parse_matrix, parse_matrix_csv, render_matrix, render_partial, TotalColorMatrix,
};
pub use partition::{check_partition, residue_partition, PartitionMode, VertexPartition};
pub use text::{parse_coloring, write_coloring};
pub use verify::{verify_total, verify_total_with, Conflict, CoverageError, VerificationReport};

/// Color ids are 1-based; 0 never denotes a color.
pub type Color = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("color 0 is reserved for blank cells")]
    ZeroColor,
    #[error("vertex {v} out of range for {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("matrix is not symmetric at ({i}, {j})")]
    AsymmetricMatrix { i: usize, j: usize },
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("cell ({i}, {j}) is colored but {{{i},{j}}} is not an edge")]
    ColoredNonEdge { i: usize, j: usize },
    #[error("{0} does not divide the vertex count")]
    NotDivisible(usize),
    #[error("coloring does not cover the graph: {0}")]
    Coverage(String),
    #[error("conformable mode needs a regular graph")]
    NotRegular,
    #[error(transparent)]
    Parse(#[from] crate::ParseError),
}

/// Vertex and edge colors over vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TotalColoring {
    n: usize,
    vertex: Vec<Option<Color>>,
    edge: BTreeMap<Edge, Color>,
}

impl TotalColoring {
    pub fn new(n: usize) -> Self {
        TotalColoring {
            n,
            vertex: vec![None; n],
            edge: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn set_vertex(&mut self, v: usize, c: Color) {
        assert!(c > 0, "color ids are 1-based");
        self.vertex[v] = Some(c);
    }

    pub fn set_edge(&mut self, e: Edge, c: Color) {
        assert!(c > 0, "color ids are 1-based");
        assert!(e.v() < self.n, "edge {e} out of range");
        self.edge.insert(e, c);
    }

    pub fn vertex_color(&self, v: usize) -> Option<Color> {
        self.vertex.get(v).copied().flatten()
    }

    pub fn edge_color(&self, e: Edge) -> Option<Color> {
        self.edge.get(&e).copied()
    }

    pub fn vertex_colors(&self) -> &[Option<Color>] {
        &self.vertex
    }

    /// Edge assignments in lexicographic edge order.
    pub fn edge_colors(&self) -> impl Iterator<Item = (Edge, Color)> + '_ {
        self.edge.iter().map(|(e, c)| (*e, *c))
    }

    pub fn edge_assignment_count(&self) -> usize {
        self.edge.len()
    }

    /// Copies every assignment from `other`, overwriting on overlap.
    pub fn merge(&mut self, other: &TotalColoring) {
        assert_eq!(self.n, other.n);
        for (v, c) in other.vertex.iter().enumerate() {
            if let Some(c) = c {
                self.vertex[v] = Some(*c);
            }
        }
        self.edge.extend(other.edge.iter().map(|(e, c)| (*e, *c)));
    }

    /// Relabels every color through `f`.
    pub fn map_colors(&self, f: impl Fn(Color) -> Color) -> TotalColoring {
        TotalColoring {
            n: self.n,
            vertex: self.vertex.iter().map(|c| c.map(&f)).collect(),
            edge: self.edge.iter().map(|(e, c)| (*e, f(*c))).collect(),
        }
    }

    /// Distinct color ids in use.
    pub fn colors(&self) -> BTreeSet<Color> {
        self.vertex
            .iter()
            .flatten()
            .copied()
            .chain(self.edge.values().copied())
            .collect()
    }

    pub fn max_color(&self) -> Color {
        self.colors().last().copied().unwrap_or(0)
    }
}

/// Number of distinct colors used (not the minimum possible).
pub fn color_count(c: &TotalColoring) -> usize {
    c.colors().len()
}

/// A proper edge coloring, colors `1..`.
pub type EdgeColoring = BTreeMap<Edge, Color>;

/// Checks an edge coloring covers exactly `g`'s edges with no two edges at a
/// vertex sharing a color.
pub fn is_proper_edge_coloring(g: &Graph, coloring: &EdgeColoring) -> bool {
    let edges = g.edges();
    if edges.len() != coloring.len() || edges.iter().any(|e| !coloring.contains_key(e)) {
        return false;
    }
    (0..g.n()).all(|v| {
        let mut seen = BTreeSet::new();
        g.neighbors(v)
            .all(|w| seen.insert(coloring[&Edge::new(v, w)]))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn color_count_examples() {
        let mut k1 = TotalColoring::new(1);
        k1.set_vertex(0, 1);
        assert_eq!(color_count(&k1), 1);

        let mut k3 = TotalColoring::new(3);
        for i in 0..3 {
            k3.set_vertex(i, (2 * i % 3) as Color + 1);
            for j in i + 1..3 {
                k3.set_edge(Edge::new(i, j), ((i + j) % 3) as Color + 1);
            }
        }
        assert_eq!(color_count(&k3), 3);
    }
}
