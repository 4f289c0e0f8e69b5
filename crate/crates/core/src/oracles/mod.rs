//! Exact solvers for small graphs: total and vertex chromatic numbers,
//! clique enumeration, perfectness and conformable partitions.
//!
//! Every solver either answers exactly or returns
//! [`OracleError::Inconclusive`]; a budget never turns into a wrong answer.

mod classify;
mod cliques;
mod conformable;
mod perfect;
mod search;
mod total;

use std::fmt;
use std::time::Duration;

use thiserror::Error;

pub use classify::{classify_type, oracle_stats, Classification, GraphType, OracleStats};
pub use cliques::{maximal_cliques, CliqueStats};
pub use conformable::conformable_exists;
pub use perfect::{is_perfect, PERFECT_VERTEX_LIMIT};
pub use total::{
    exact_chromatic, exact_total_chromatic, total_colorable, Chromatic, TotalChromatic,
};

/// Which budget ran out.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Limit {
    Nodes,
    Time,
    Colors,
    Size,
}

impl fmt::Display for Limit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Limit::Nodes => "node limit",
            Limit::Time => "time limit",
            Limit::Colors => "color limit",
            Limit::Size => "size limit",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("inconclusive: {what} ({limit} reached after {nodes} nodes)")]
    Inconclusive {
        what: String,
        limit: Limit,
        nodes: u64,
    },
    #[error("invalid budget: {0}")]
    InvalidBudget(String),
    #[error("graph is not regular")]
    NotRegular,
}

/// Limits for one oracle call.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// Largest color count to try.
    pub max_colors: usize,
    /// Search nodes across all color counts of one call at a single `k`.
    pub node_limit: u64,
    pub time_limit: Duration,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_colors: 64,
            node_limit: 2_000_000_000,
            time_limit: Duration::from_secs(600),
        }
    }
}

impl SearchBudget {
    pub fn new(max_colors: usize, node_limit: u64, time_limit: Duration) -> Result<Self, OracleError> {
        let b = SearchBudget {
            max_colors,
            node_limit,
            time_limit,
        };
        b.validate()?;
        Ok(b)
    }

    pub fn validate(&self) -> Result<(), OracleError> {
        if self.max_colors == 0 || self.max_colors > search::MAX_COLORS {
            return Err(OracleError::InvalidBudget(format!(
                "max colors must be in 1..={}",
                search::MAX_COLORS
            )));
        }
        if self.node_limit == 0 {
            return Err(OracleError::InvalidBudget("node limit must be positive".into()));
        }
        if self.time_limit.is_zero() {
            return Err(OracleError::InvalidBudget("time limit must be positive".into()));
        }
        Ok(())
    }
}
