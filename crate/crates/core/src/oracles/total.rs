use super::search::{color_search, ConflictGraph, Outcome};
use super::{Limit, OracleError, SearchBudget};
use crate::coloring::{verify_total, Color, TotalColoring};
use crate::exec::Exec;
use crate::graph::{Edge, Graph};

/// Vertices `0..n` followed by edges in lexicographic order; conflicts are
/// adjacency and incidence. Each vertex with its incident edges forms a group.
fn total_conflicts(g: &Graph) -> (ConflictGraph, Vec<Edge>) {
    let n = g.n();
    let edges = g.edges();
    let mut incident: Vec<Vec<u32>> = vec![Vec::new(); n];
    for (idx, e) in edges.iter().enumerate() {
        let item = (n + idx) as u32;
        incident[e.u()].push(item);
        incident[e.v()].push(item);
    }
    let mut adj: Vec<Vec<u32>> = Vec::with_capacity(n + edges.len());
    for (v, inc) in incident.iter().enumerate() {
        let mut row: Vec<u32> = g.neighbors(v).map(|w| w as u32).collect();
        row.extend(inc);
        adj.push(row);
    }
    for (idx, e) in edges.iter().enumerate() {
        let me = (n + idx) as u32;
        let mut row = vec![e.u() as u32, e.v() as u32];
        for x in [e.u(), e.v()] {
            row.extend(incident[x].iter().copied().filter(|&f| f != me));
        }
        adj.push(row);
    }
    let mut cg = ConflictGraph::new(adj);
    for (v, inc) in incident.into_iter().enumerate() {
        let mut group = vec![v as u32];
        group.extend(inc);
        cg.add_group(group);
    }
    (cg, edges)
}

fn to_total(n: usize, edges: &[Edge], colors: &[u8]) -> TotalColoring {
    let mut c = TotalColoring::new(n);
    for (v, &col) in colors[..n].iter().enumerate() {
        c.set_vertex(v, col as Color + 1);
    }
    for (i, e) in edges.iter().enumerate() {
        c.set_edge(*e, colors[n + i] as Color + 1);
    }
    c
}

/// Looks for a rotation-equivariant coloring of a circulant when `k | n`:
/// vertex `v` gets `v mod k` and edge `{v, v+s}` gets `(v + a_s) mod k`.
/// Such a coloring is proper iff the colors seen at vertex 0 are distinct,
/// so the offsets `a_s` are found by a tiny backtracking search. Cheap, and
/// it settles some instances that defeat the general search.
fn cyclic_witness(g: &Graph, k: usize) -> Option<TotalColoring> {
    let spec = g.circulant_spec()?;
    let n = spec.n();
    if k == 0 || n % k != 0 || k > 64 {
        return None;
    }
    let half: Vec<usize> = spec.connection().iter().copied().filter(|&s| 2 * s <= n).collect();
    if half.iter().any(|&s| s % k == 0) {
        return None;
    }
    fn place(half: &[usize], k: usize, i: usize, seen: u64, offs: &mut Vec<usize>) -> bool {
        let Some(&s) = half.get(i) else { return true };
        let s = s % k;
        for a in 0..k {
            // the edge to +s shows a, the edge from -s shows a - s
            let b = (a + k - s) % k;
            let mask = 1u64 << a | 1u64 << b;
            if a == b || seen & mask != 0 {
                continue;
            }
            offs.push(a);
            if place(half, k, i + 1, seen | mask, offs) {
                return true;
            }
            offs.pop();
        }
        false
    }
    let mut offs = Vec::with_capacity(half.len());
    if !place(&half, k, 0, 1, &mut offs) {
        return None;
    }
    let mut c = TotalColoring::new(n);
    for v in 0..n {
        c.set_vertex(v, (v % k) as Color + 1);
        for (&s, &a) in half.iter().zip(&offs) {
            c.set_edge(Edge::new(v, (v + s) % n), ((v + a) % k) as Color + 1);
        }
    }
    verify_total(g, &c).is_valid().then_some(c)
}

/// A total coloring with at most `k` colors (`Some`), a proof that none
/// exists (`None`), or an inconclusive error.
pub fn total_colorable(
    g: &Graph,
    k: usize,
    budget: &SearchBudget,
    exec: Exec,
) -> Result<Option<TotalColoring>, OracleError> {
    budget.validate()?;
    if k == 0 {
        return Ok((g.n() == 0).then(|| TotalColoring::new(0)));
    }
    if k > budget.max_colors {
        return Err(OracleError::Inconclusive {
            what: format!("total coloring with {k} colors"),
            limit: Limit::Colors,
            nodes: 0,
        });
    }
    if g.max_degree() + 1 > k {
        return Ok(None);
    }
    if let Some(c) = cyclic_witness(g, k) {
        log::debug!("total coloring with {k} colors: cyclic witness");
        return Ok(Some(c));
    }
    let (cg, edges) = total_conflicts(g);
    let r = color_search(&cg, k, budget, exec);
    log::debug!("total coloring with {k} colors: {:?} after {} nodes", r.outcome, r.nodes);
    match r.outcome {
        Outcome::Found(colors) => {
            let c = to_total(g.n(), &edges, &colors);
            debug_assert!(verify_total(g, &c).is_valid());
            Ok(Some(c))
        }
        Outcome::Infeasible => Ok(None),
        Outcome::Inconclusive(limit) => Err(OracleError::Inconclusive {
            what: format!("total coloring with {k} colors"),
            limit,
            nodes: r.nodes,
        }),
    }
}

/// Exact total chromatic number with a certificate.
#[derive(Clone, Debug)]
pub struct TotalChromatic {
    pub value: usize,
    pub certificate: TotalColoring,
    /// Color counts from Δ+1 up that were proven infeasible.
    pub refuted: Vec<usize>,
}

/// Tries `Δ+1, Δ+2, ...` until a coloring is found.
pub fn exact_total_chromatic(g: &Graph, budget: &SearchBudget, exec: Exec) -> Result<TotalChromatic, OracleError> {
    budget.validate()?;
    if g.n() == 0 {
        return Ok(TotalChromatic {
            value: 0,
            certificate: TotalColoring::new(0),
            refuted: Vec::new(),
        });
    }
    let mut refuted = Vec::new();
    for k in g.max_degree() + 1..=budget.max_colors {
        if let Some(c) = total_colorable(g, k, budget, exec)? {
            return Ok(TotalChromatic {
                value: k,
                certificate: c,
                refuted,
            });
        }
        refuted.push(k);
    }
    Err(OracleError::Inconclusive {
        what: format!("no total coloring with at most {} colors", budget.max_colors),
        limit: Limit::Colors,
        nodes: 0,
    })
}

/// Exact chromatic number with a proper coloring (classes `0..value`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chromatic {
    pub value: usize,
    pub classes: Vec<usize>,
}

pub fn exact_chromatic(g: &Graph, budget: &SearchBudget, exec: Exec) -> Result<Chromatic, OracleError> {
    budget.validate()?;
    if g.n() == 0 {
        return Ok(Chromatic {
            value: 0,
            classes: Vec::new(),
        });
    }
    let adj = (0..g.n())
        .map(|v| g.neighbors(v).map(|w| w as u32).collect())
        .collect();
    let cg = ConflictGraph::new(adj);
    for k in 1..=budget.max_colors.min(g.n()) {
        let r = color_search(&cg, k, budget, exec);
        match r.outcome {
            Outcome::Found(colors) => {
                return Ok(Chromatic {
                    value: k,
                    classes: colors.into_iter().map(usize::from).collect(),
                })
            }
            Outcome::Infeasible => {}
            Outcome::Inconclusive(limit) => {
                return Err(OracleError::Inconclusive {
                    what: format!("vertex coloring with {k} colors"),
                    limit,
                    nodes: r.nodes,
                })
            }
        }
    }
    Err(OracleError::Inconclusive {
        what: format!("no vertex coloring with at most {} colors", budget.max_colors),
        limit: Limit::Colors,
        nodes: 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_circulant, build_unitary, CirculantSpec};

    fn chi2(g: &Graph) -> usize {
        exact_total_chromatic(g, &SearchBudget::default(), Exec::default())
            .unwrap()
            .value
    }

    #[test]
    fn total_examples() {
        assert_eq!(chi2(&Graph::cycle(4)), 4);
        assert_eq!(chi2(&Graph::complete(3)), 3);
        assert_eq!(chi2(&Graph::cycle(5)), 4);
        assert_eq!(chi2(&Graph::cycle(6)), 3);
        assert_eq!(chi2(&Graph::complete(4)), 5);
        assert_eq!(chi2(&Graph::empty(3)), 1);
    }

    #[test]
    fn certificate_verifies() {
        let g = build_circulant(&CirculantSpec::from_half_set(9, [1, 3]).unwrap());
        let r = exact_total_chromatic(&g, &SearchBudget::default(), Exec::default()).unwrap();
        assert!(verify_total(&g, &r.certificate).is_valid());
        assert_eq!(r.certificate.colors().len(), r.value);
    }

    #[test]
    fn cyclic_witness_on_circulants() {
        let g = build_circulant(&CirculantSpec::from_half_set(21, [1, 2, 3]).unwrap());
        let c = cyclic_witness(&g, 7).expect("offsets 3, 6, 1 work");
        assert!(verify_total(&g, &c).is_valid());
        // 7 does not divide 20
        let g = build_circulant(&CirculantSpec::from_half_set(20, [1, 2, 3]).unwrap());
        assert!(cyclic_witness(&g, 7).is_none());
        // C_5 needs 4 colors, and 3 | 5 fails anyway
        assert!(cyclic_witness(&Graph::cycle(5), 3).is_none());
    }

    #[test]
    fn chromatic_examples() {
        let b = SearchBudget::default();
        let x = |g: &Graph| exact_chromatic(g, &b, Exec::default()).unwrap().value;
        assert_eq!(x(&build_unitary(9).unwrap()), 3);
        assert_eq!(x(&Graph::cycle(5)), 3);
        assert_eq!(x(&Graph::petersen()), 3);
        assert_eq!(x(&Graph::empty(4)), 1);
        let c = exact_chromatic(&Graph::petersen(), &b, Exec::default()).unwrap();
        let g = Graph::petersen();
        for e in g.edges() {
            assert_ne!(c.classes[e.u()], c.classes[e.v()]);
        }
    }

    #[test]
    fn too_few_colors_budget() {
        let b = SearchBudget {
            max_colors: 3,
            ..SearchBudget::default()
        };
        assert!(matches!(
            exact_total_chromatic(&Graph::complete(4), &b, Exec::default()),
            Err(OracleError::Inconclusive { limit: Limit::Colors, .. })
        ));
    }
}
