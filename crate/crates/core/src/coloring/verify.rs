use std::fmt;

use super::{Color, TotalColoring};
use crate::exec::Exec;
use crate::graph::{Edge, Graph};

/// One violated total-coloring constraint.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Conflict {
    /// Adjacent vertices `u < v` share a color.
    VertexVertex(usize, usize),
    /// Edges `e1 < e2` meeting at `shared` share a color.
    EdgeEdge(Edge, Edge, usize),
    /// Vertex `v` shares a color with incident edge `e`.
    VertexEdge(usize, Edge),
}

impl fmt::Display for Conflict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Conflict::VertexVertex(u, v) => write!(f, "VertexVertex({u},{v})"),
            Conflict::EdgeEdge(a, b, x) => write!(f, "EdgeEdge({a},{b} at {x})"),
            Conflict::VertexEdge(v, e) => write!(f, "VertexEdge({v},{e})"),
        }
    }
}

/// An assignment that does not match the graph's vertex/edge set.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CoverageError {
    VertexCountMismatch { graph: usize, coloring: usize },
    UncoloredVertex(usize),
    UncoloredEdge(Edge),
    NonEdgeColored(Edge),
}

impl fmt::Display for CoverageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverageError::VertexCountMismatch { graph, coloring } => {
                write!(f, "graph has {graph} vertices, coloring has {coloring}")
            }
            CoverageError::UncoloredVertex(v) => write!(f, "vertex {v} uncolored"),
            CoverageError::UncoloredEdge(e) => write!(f, "edge {e} uncolored"),
            CoverageError::NonEdgeColored(e) => write!(f, "non-edge {e} colored"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    /// Sorted by conflict key.
    pub conflicts: Vec<Conflict>,
    pub coverage: Vec<CoverageError>,
    pub color_count: usize,
}

impl VerificationReport {
    /// True iff the assignment is a proper total coloring of the graph.
    pub fn is_valid(&self) -> bool {
        self.conflicts.is_empty() && self.coverage.is_empty()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "colors: {}\nconflicts: {}\ncoverage errors: {}",
            self.color_count,
            self.conflicts.len(),
            self.coverage.len()
        )?;
        for c in &self.coverage {
            writeln!(f, "  coverage {c}")?;
        }
        for c in &self.conflicts {
            writeln!(f, "  conflict {c}")?;
        }
        Ok(())
    }
}

/// Exhaustive check of all three conflict families.
pub fn verify_total(g: &Graph, c: &TotalColoring) -> VerificationReport {
    verify_total_with(g, c, Exec::default())
}

/// As [`verify_total`], choosing how vertex neighborhoods are scanned.
pub fn verify_total_with(g: &Graph, c: &TotalColoring, exec: Exec) -> VerificationReport {
    let color_count = c.colors().len();
    if g.n() != c.n() {
        return VerificationReport {
            conflicts: Vec::new(),
            coverage: vec![CoverageError::VertexCountMismatch {
                graph: g.n(),
                coloring: c.n(),
            }],
            color_count,
        };
    }

    let mut coverage = Vec::new();
    for v in 0..g.n() {
        if c.vertex_color(v).is_none() {
            coverage.push(CoverageError::UncoloredVertex(v));
        }
    }
    for e in g.edges() {
        if c.edge_color(e).is_none() {
            coverage.push(CoverageError::UncoloredEdge(e));
        }
    }
    for (e, _) in c.edge_colors() {
        if !g.has_edge(e.u(), e.v()) {
            coverage.push(CoverageError::NonEdgeColored(e));
        }
    }
    coverage.sort();

    // Each conflict is attributed to exactly one vertex: vertex-vertex pairs
    // to the smaller endpoint, vertex-edge pairs to the vertex, edge-edge
    // pairs to the shared vertex.
    let per_vertex = exec.map_range(g.n(), |v| conflicts_at(g, c, v));
    let mut conflicts: Vec<Conflict> = per_vertex.into_iter().flatten().collect();
    conflicts.sort();

    VerificationReport {
        conflicts,
        coverage,
        color_count,
    }
}

fn conflicts_at(g: &Graph, c: &TotalColoring, v: usize) -> Vec<Conflict> {
    let mut out = Vec::new();
    let vc = c.vertex_color(v);
    let incident: Vec<(Edge, Color)> = g
        .neighbors(v)
        .filter_map(|w| {
            let e = Edge::new(v, w);
            c.edge_color(e).map(|col| (e, col))
        })
        .collect();
    for w in g.neighbors(v).filter(|&w| w > v) {
        if vc.is_some() && vc == c.vertex_color(w) {
            out.push(Conflict::VertexVertex(v, w));
        }
    }
    for (i, &(e, col)) in incident.iter().enumerate() {
        if vc == Some(col) {
            out.push(Conflict::VertexEdge(v, e));
        }
        for &(f, col2) in &incident[i + 1..] {
            if col == col2 {
                out.push(Conflict::EdgeEdge(e, f, v));
            }
        }
    }
    out
}
