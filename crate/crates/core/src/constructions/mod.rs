//! Explicit total colorings for structured circulant and Cayley graphs.
//!
//! Every pipeline ends in [`verify_total`]; a construction that does not
//! verify is reported as an error, never returned.

mod auto;
mod bipartite;
mod dense;
mod edge;
mod matching;
mod odd;
mod perfect;
mod starter;
mod unitary;

use std::fmt;

use thiserror::Error;

use crate::coloring::{verify_total, TotalColoring, VerificationReport};
use crate::graph::{Edge, Graph, GraphError};
use crate::oracles::OracleError;

pub use auto::{construct, select_method, MethodChoice};
pub use bipartite::{color_bipartite, color_complete_bipartite, complete_bipartite_graph};
pub use dense::{
    color_even_dense_circulant, color_even_dense_circulant_with, h_candidates, HCandidate, HRejection,
    RemainderMethod,
};
pub use edge::{edge_color_bipartite, edge_color_vizing, VizingColoring};
pub use matching::{perfect_matching, Matching};
pub use odd::{color_odd_circulant, Strategy};
pub use perfect::{clique_cover_disjoint, color_complete_odd, color_perfect_cayley, CliqueCover};
pub use starter::{
    fill_diagonals, normalize, start_entries, starter_search, StartEntry, StartEntryTable,
    StarterPair, StarterPairing,
};
pub use unitary::{color_unitary_even, unitary_parts, UnitaryParts};

#[derive(Debug, Error)]
pub enum ConstructionError {
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("{context}: coloring failed verification\n{report}")]
    VerificationFailed {
        context: String,
        report: Box<VerificationReport>,
    },
    #[error("every strategy failed: {0}")]
    StrategiesExhausted(String),
    #[error("no admissible subgraph H among {} candidates", .0.len())]
    NoAdmissibleSubgraph(Vec<HCandidate>),
    #[error("no vertex-disjoint cover by maximum cliques")]
    NoCliqueCover,
    #[error("structural: {0}")]
    Structural(String),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Which pipeline produced a coloring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    CompleteBipartite,
    UnitaryEven,
    OddCirculant,
    EvenDenseCirculant,
    PerfectCayley,
    CompleteOdd,
}

impl Method {
    /// CLI name of the method.
    pub fn name(self) -> &'static str {
        match self {
            Method::CompleteBipartite => "complete-bipartite",
            Method::UnitaryEven => "unitary-even",
            Method::OddCirculant => "odd-circulant",
            Method::EvenDenseCirculant => "even-dense-circulant",
            Method::PerfectCayley => "perfect-cayley",
            Method::CompleteOdd => "complete-odd",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Edges colored by the diagonal pattern and the rest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgraphSplit {
    pub part1: Vec<Edge>,
    pub remainder: Vec<Edge>,
}

/// A verified coloring and how it was obtained.
#[derive(Clone, Debug)]
pub struct Construction {
    pub method: Method,
    pub coloring: TotalColoring,
    pub report: VerificationReport,
    /// Human-readable remarks, e.g. which strategy succeeded.
    pub notes: Vec<String>,
    pub split: Option<SubgraphSplit>,
}

impl Construction {
    pub fn color_count(&self) -> usize {
        self.report.color_count
    }
}

/// Verifies and packages, or fails with the full report.
pub(crate) fn finish(
    g: &Graph,
    method: Method,
    coloring: TotalColoring,
    notes: Vec<String>,
    split: Option<SubgraphSplit>,
) -> Result<Construction, ConstructionError> {
    let report = verify_total(g, &coloring);
    if !report.is_valid() {
        return Err(ConstructionError::VerificationFailed {
            context: method.name().to_string(),
            report: Box::new(report),
        });
    }
    log::debug!("{method}: verified with {} colors", report.color_count);
    Ok(Construction {
        method,
        coloring,
        report,
        notes,
        split,
    })
}
