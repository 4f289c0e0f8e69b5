//! Δ+1 total coloring of dense circulants of order `n = 2(2k+1)`.
//!
//! Vertex `v` gets `(v mod (2k+1)) + 1`, so `v` and `v + n/2` share a color.
//! A subgraph `H` spanned by `k` generator pairs is colored by the diagonal
//! pattern from a starter pairing mod `2k+1`, which together with the vertex
//! color uses all `2k+1` colors at every vertex. The remainder `G - E(H)` is
//! edge-colored with `Δ - 2k` fresh colors.

use std::fmt;

use super::{
    edge_color_bipartite, edge_color_vizing, fill_diagonals, finish, perfect_matching,
    starter_search, Construction, ConstructionError, Method, SubgraphSplit,
};
use crate::coloring::{Color, EdgeColoring};
use crate::exec::Exec;
use crate::graph::{
    bipartition, build_circulant, complement, connected, two_factors, CirculantSpec, Edge,
    FactorKind, Graph,
};

const BATCH: usize = 32;

/// Why a candidate `H` was rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HRejection {
    NoStarter,
    RemainderDisconnected,
    OverBudget { used: usize, budget: usize },
}

/// How the remainder was edge-colored.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RemainderMethod {
    EvenCycleFactors,
    Bipartite,
    FanRecoloring,
}

/// One evaluated choice of `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HCandidate {
    pub generators: Vec<usize>,
    pub remainder_connected: bool,
    pub outcome: Result<RemainderMethod, HRejection>,
}

impl fmt::Display for HCandidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H = {:?}: ", self.generators)?;
        match &self.outcome {
            Ok(m) if self.remainder_connected => write!(f, "accepted, remainder colored by {m:?}"),
            Ok(m) => write!(f, "accepted, disconnected remainder colored by {m:?}"),
            Err(HRejection::NoStarter) => write!(f, "rejected, no starter pairing"),
            Err(HRejection::RemainderDisconnected) => write!(f, "rejected, remainder disconnected"),
            Err(HRejection::OverBudget { used, budget }) => {
                write!(f, "rejected, remainder needs {used} > {budget} colors")
            }
        }
    }
}

/// Evaluates every candidate `H` (not only up to the first accepted one),
/// without requiring a connected remainder.
pub fn h_candidates(spec: &CirculantSpec, exec: Exec) -> Result<Vec<HCandidate>, ConstructionError> {
    let k = check_preconditions(spec)?;
    let n = spec.n();
    let half = spec.half_set();
    let budget = spec.degree() - 2 * k;
    let all: Vec<Vec<usize>> = Combinations::new(half.len(), k)
        .map(|idx| idx.iter().map(|&i| half[i]).collect())
        .collect();
    Ok(exec.map(&all, |h| evaluate(n, 2 * k + 1, &half, h, budget, false).0))
}

struct Accepted {
    starts: Vec<(usize, Color)>,
    remainder_spec: CirculantSpec,
    remainder: EdgeColoring,
}

pub(crate) fn check_preconditions(spec: &CirculantSpec) -> Result<usize, ConstructionError> {
    let n = spec.n();
    let delta = spec.degree();
    let pre = |msg: String| Err(ConstructionError::Precondition(msg));
    if n % 4 != 2 || n < 6 {
        return pre(format!("n = {n} is not of the form 2(2k+1) with k >= 1"));
    }
    if spec.contains(n / 2) {
        return pre(format!("n/2 = {} is in the connection set (unsupported)", n / 2));
    }
    if delta < n / 2 || delta >= n - 1 {
        return pre(format!("Δ = {delta} outside n/2 <= Δ < n-1"));
    }
    Ok((n / 2 - 1) / 2)
}

/// As [`color_even_dense_circulant_with`] with the default executor.
pub fn color_even_dense_circulant(spec: &CirculantSpec) -> Result<Construction, ConstructionError> {
    color_even_dense_circulant_with(spec, Exec::default())
}

/// Candidates `H` are tried as `k`-subsets of the half set in lexicographic
/// order; the first admissible one is used, whatever the executor.
pub fn color_even_dense_circulant_with(
    spec: &CirculantSpec,
    exec: Exec,
) -> Result<Construction, ConstructionError> {
    let k = check_preconditions(spec)?;
    let n = spec.n();
    let q = 2 * k + 1;
    let g = build_circulant(spec);
    let half = spec.half_set();
    let budget = spec.degree() - 2 * k;

    let mut notes = Vec::new();
    let comp = complement(&g);
    notes.push(format!(
        "complement {} connected; complement perfect matching {}",
        if connected(&comp) { "is" } else { "is not" },
        if perfect_matching(&comp).is_some() { "found" } else { "absent" },
    ));

    // Connected remainders first; a disconnected one is fine as long as it
    // still edge-colors within budget.
    let mut tried: Vec<HCandidate> = Vec::new();
    for require_connected in [true, false] {
        if !require_connected {
            notes.push("no H with a connected remainder; allowing disconnected remainders".into());
        }
        let mut subsets = Combinations::new(half.len(), k);
        loop {
            let batch: Vec<Vec<usize>> = subsets
                .by_ref()
                .take(BATCH)
                .map(|idx| idx.iter().map(|&i| half[i]).collect())
                .collect();
            if batch.is_empty() {
                break;
            }
            let results = exec.map(&batch, |h| evaluate(n, q, &half, h, budget, require_connected));
            for (h, (candidate, accepted)) in batch.into_iter().zip(results) {
                notes.push(candidate.to_string());
                tried.push(candidate);
                let Some(acc) = accepted else { continue };
                let mut c = fill_diagonals(n, q, &acc.starts);
                for (e, col) in &acc.remainder {
                    c.set_edge(*e, q as Color + col);
                }
                let h_spec = CirculantSpec::from_half_set(n, h.iter().copied())?;
                let split = SubgraphSplit {
                    part1: build_circulant(&h_spec).edges(),
                    remainder: build_circulant(&acc.remainder_spec).edges(),
                };
                return finish(&g, Method::EvenDenseCirculant, c, notes, Some(split));
            }
        }
    }
    Err(ConstructionError::NoAdmissibleSubgraph(tried))
}

fn evaluate(
    n: usize,
    q: usize,
    half: &[usize],
    h: &[usize],
    budget: usize,
    require_connected: bool,
) -> (HCandidate, Option<Accepted>) {
    let rest: Vec<usize> = half.iter().copied().filter(|s| !h.contains(s)).collect();
    let remainder_spec = CirculantSpec::from_half_set(n, rest).expect("subset of a valid set");
    let rg = build_circulant(&remainder_spec);
    let remainder_connected = connected(&rg);
    let reject = |why| {
        let c = HCandidate {
            generators: h.to_vec(),
            remainder_connected,
            outcome: Err(why),
        };
        (c, None)
    };
    let diffs: Vec<usize> = h.iter().map(|s| s % q).collect();
    let Some(pairing) = starter_search(q, &diffs) else {
        return reject(HRejection::NoStarter);
    };
    if require_connected && !remainder_connected {
        return reject(HRejection::RemainderDisconnected);
    }
    let (method, remainder) = match color_remainder(&rg, &remainder_spec, budget) {
        Ok(ok) => ok,
        Err(used) => return reject(HRejection::OverBudget { used, budget }),
    };
    let starts = h
        .iter()
        .zip(&pairing.pairs)
        .map(|(&s, p)| (s, p.high as Color + 1))
        .collect();
    let c = HCandidate {
        generators: h.to_vec(),
        remainder_connected,
        outcome: Ok(method),
    };
    (
        c,
        Some(Accepted {
            starts,
            remainder_spec,
            remainder,
        }),
    )
}

/// Edge coloring with colors `1..=budget`, or the count that was needed.
fn color_remainder(
    rg: &Graph,
    spec: &CirculantSpec,
    budget: usize,
) -> Result<(RemainderMethod, EdgeColoring), usize> {
    let factors = two_factors(spec).factors;
    let all_even = factors
        .iter()
        .all(|f| matches!(f.kind, FactorKind::Cycles(_)) && f.cycle_length() % 2 == 0);
    if all_even && 2 * factors.len() <= budget {
        let mut out = EdgeColoring::new();
        for (t, f) in factors.iter().enumerate() {
            let FactorKind::Cycles(cycles) = &f.kind else { unreachable!() };
            for cycle in cycles {
                for i in 0..cycle.len() {
                    let e = Edge::new(cycle[i], cycle[(i + 1) % cycle.len()]);
                    out.insert(e, (2 * t + 1 + i % 2) as Color);
                }
            }
        }
        return Ok((RemainderMethod::EvenCycleFactors, out));
    }
    if bipartition(rg).is_some() {
        let c = edge_color_bipartite(rg).expect("bipartite");
        return Ok((RemainderMethod::Bipartite, c));
    }
    let v = edge_color_vizing(rg);
    if v.colors_used <= budget {
        Ok((RemainderMethod::FanRecoloring, v.coloring))
    } else {
        Err(v.colors_used)
    }
}

/// `k`-subsets of `0..n` in lexicographic order.
struct Combinations {
    idx: Vec<usize>,
    n: usize,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations {
            idx: (0..k).collect(),
            n,
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        match (0..k).rev().find(|&i| self.idx[i] < self.n - k + i) {
            Some(i) => {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
            }
            None => self.done = true,
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(n: usize, half: &[usize]) -> CirculantSpec {
        CirculantSpec::from_half_set(n, half.iter().copied()).unwrap()
    }

    #[test]
    fn combinations_are_lexicographic() {
        let all: Vec<_> = Combinations::new(4, 2).collect();
        assert_eq!(all, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(Combinations::new(3, 0).count(), 1);
        assert_eq!(Combinations::new(2, 3).count(), 0);
    }

    #[test]
    fn first_candidate_accepted() {
        let r = color_even_dense_circulant(&spec(10, &[1, 2, 3])).unwrap();
        assert_eq!(r.color_count(), 7);
        assert!(r.notes.iter().any(|n| n.starts_with("H = [1, 2]: accepted")));
        assert_eq!(r.coloring.edge_color(Edge::new(0, 1)), Some(4));
        assert_eq!(r.coloring.edge_color(Edge::new(0, 2)), Some(2));
    }

    #[test]
    fn odd_cycle_remainder_rejected() {
        let r = color_even_dense_circulant(&spec(10, &[1, 3, 4])).unwrap();
        assert_eq!(r.color_count(), 7);
        assert!(r.notes.iter().any(|n| n.starts_with("H = [1, 3]: rejected")));
        assert!(r.notes.iter().any(|n| n.starts_with("H = [1, 4]: accepted")));

        let all = h_candidates(&spec(10, &[1, 3, 4]), Exec::Sequential).unwrap();
        assert_eq!(all.len(), 3);
        for c in &all {
            assert_eq!(c.outcome.is_ok(), c.generators.contains(&4), "{c}");
        }
    }

    #[test]
    fn disconnected_remainder_fallback() {
        // every single leftover generator shares a factor with 18
        let r = color_even_dense_circulant(&spec(18, &[2, 3, 4, 6, 8])).unwrap();
        assert_eq!(r.color_count(), 11);
        assert!(r.notes.iter().any(|n| n.starts_with("no H with a connected remainder")));
        assert!(r.notes.iter().any(|n| n.starts_with("H = [2, 4, 6, 8]: accepted, disconnected")));
    }

    #[test]
    fn small_instance() {
        let r = color_even_dense_circulant(&spec(6, &[1, 2])).unwrap();
        assert_eq!(r.color_count(), 5);
    }

    #[test]
    fn preconditions() {
        assert!(color_even_dense_circulant(&spec(12, &[1, 2, 3, 4])).is_err());
        assert!(color_even_dense_circulant(&spec(10, &[1, 5, 2])).is_err());
        assert!(color_even_dense_circulant(&spec(10, &[1])).is_err());
        assert!(color_even_dense_circulant(&spec(14, &[1, 2])).is_err());
    }

    #[test]
    fn executors_agree() {
        for half in [vec![1, 2, 3], vec![1, 3, 4], vec![2, 3, 4]] {
            let s = spec(10, &half);
            let a = color_even_dense_circulant_with(&s, Exec::Sequential).unwrap();
            let b = color_even_dense_circulant_with(&s, Exec::Parallel).unwrap();
            assert_eq!(a.coloring, b.coloring);
            assert_eq!(a.notes, b.notes);
        }
    }
}
