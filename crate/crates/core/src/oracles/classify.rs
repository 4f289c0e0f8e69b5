use std::fmt;

use super::{
    exact_chromatic, exact_total_chromatic, maximal_cliques, total_colorable, Chromatic,
    CliqueStats, OracleError, SearchBudget, TotalChromatic,
};
use crate::coloring::{verify_total, TotalColoring};
use crate::constructions::{construct, Strategy};
use crate::exec::Exec;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphType {
    TypeI,
    TypeII,
    Inconclusive,
}

impl fmt::Display for GraphType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphType::TypeI => "TypeI",
            GraphType::TypeII => "TypeII",
            GraphType::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub verdict: GraphType,
    pub delta: usize,
    pub evidence: Vec<String>,
    /// A verified coloring with the smallest color count established.
    pub certificate: Option<TotalColoring>,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "type: {}", self.verdict)?;
        writeln!(f, "max degree: {}", self.delta)?;
        for e in &self.evidence {
            writeln!(f, "evidence: {e}")?;
        }
        Ok(())
    }
}

/// Type I needs a Δ+1 coloring; type II needs a refutation at Δ+1 and a
/// Δ+2 coloring. Anything else is inconclusive.
pub fn classify_type(g: &Graph, budget: &SearchBudget, exec: Exec) -> Result<Classification, OracleError> {
    budget.validate()?;
    let delta = g.max_degree();
    let mut evidence = Vec::new();
    let mut upper: Option<TotalColoring> = None;

    match construct(g, None, Strategy::Auto, budget) {
        Ok(c) => {
            evidence.push(format!(
                "construction {} gives a verified coloring with {} colors",
                c.method,
                c.color_count()
            ));
            if c.color_count() == delta + 1 {
                return Ok(Classification {
                    verdict: GraphType::TypeI,
                    delta,
                    evidence,
                    certificate: Some(c.coloring),
                });
            }
            if c.color_count() == delta + 2 {
                upper = Some(c.coloring);
            }
        }
        Err(e) => evidence.push(format!("no construction: {e}")),
    }

    let inconclusive = |mut evidence: Vec<String>, e: OracleError, upper| {
        evidence.push(e.to_string());
        Classification {
            verdict: GraphType::Inconclusive,
            delta,
            evidence,
            certificate: upper,
        }
    };

    match total_colorable(g, delta + 1, budget, exec) {
        Ok(Some(c)) => {
            evidence.push(format!("search found a coloring with Δ+1 = {} colors", delta + 1));
            return Ok(Classification {
                verdict: GraphType::TypeI,
                delta,
                evidence,
                certificate: Some(c),
            });
        }
        Ok(None) => evidence.push(format!(
            "exhaustive search: no coloring with Δ+1 = {} colors",
            delta + 1
        )),
        Err(e) => return Ok(inconclusive(evidence, e, upper)),
    }

    if upper.is_none() {
        match total_colorable(g, delta + 2, budget, exec) {
            Ok(Some(c)) => {
                evidence.push(format!("search found a coloring with Δ+2 = {} colors", delta + 2));
                upper = Some(c);
            }
            Ok(None) => {
                evidence.push(format!("no coloring with Δ+2 = {} colors", delta + 2));
                return Ok(Classification {
                    verdict: GraphType::Inconclusive,
                    delta,
                    evidence,
                    certificate: None,
                });
            }
            Err(e) => return Ok(inconclusive(evidence, e, None)),
        }
    }
    debug_assert!(upper.as_ref().is_some_and(|c| verify_total(g, c).is_valid()));
    Ok(Classification {
        verdict: GraphType::TypeII,
        delta,
        evidence,
        certificate: upper,
    })
}

/// Everything the exact solvers can say about a small graph.
#[derive(Clone, Debug)]
pub struct OracleStats {
    pub delta: usize,
    pub total: Result<TotalChromatic, OracleError>,
    pub chromatic: Result<Chromatic, OracleError>,
    pub cliques: CliqueStats,
}

impl fmt::Display for OracleStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "max degree: {}", self.delta)?;
        match &self.total {
            Ok(t) => {
                writeln!(f, "total chromatic number: {}", t.value)?;
                if !t.refuted.is_empty() {
                    writeln!(f, "refuted color counts: {:?}", t.refuted)?;
                }
            }
            Err(e) => writeln!(f, "total chromatic number: {e}")?,
        }
        match &self.chromatic {
            Ok(c) => writeln!(f, "chromatic number: {}", c.value)?,
            Err(e) => writeln!(f, "chromatic number: {e}")?,
        }
        writeln!(f, "clique number: {}", self.cliques.omega)?;
        writeln!(f, "maximal cliques: {}", self.cliques.maximal_count)?;
        writeln!(f, "maximum cliques: {}", self.cliques.maximum_count)
    }
}

pub fn oracle_stats(g: &Graph, budget: &SearchBudget, exec: Exec) -> OracleStats {
    OracleStats {
        delta: g.max_degree(),
        total: exact_total_chromatic(g, budget, exec),
        chromatic: exact_chromatic(g, budget, exec),
        cliques: maximal_cliques(g),
    }
}
