//! Perfect Cayley graphs with odd chromatic number: a cover by disjoint
//! maximum cliques, each totally colored like `K_χ`, plus an edge coloring
//! of what is left.

use super::{
    edge_color_bipartite, edge_color_vizing, finish, Construction, ConstructionError, Method,
};
use crate::coloring::{Color, EdgeColoring, TotalColoring};
use crate::exec::Exec;
use crate::graph::{bipartition, Edge, Graph};
use crate::oracles::{exact_chromatic, is_perfect, maximal_cliques, SearchBudget};

/// Vertex-disjoint cliques of size ω covering every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueCover {
    pub omega: usize,
    pub cliques: Vec<Vec<usize>>,
}

impl CliqueCover {
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for q in &self.cliques {
            for (i, &a) in q.iter().enumerate() {
                for &b in &q[i + 1..] {
                    out.push(Edge::new(a, b));
                }
            }
        }
        out.sort();
        out
    }
}

/// `K_q`, `q` odd: vertex `i` gets `(2i mod q) + 1`, edge `{i, j}` gets
/// `((i + j) mod q) + 1`.
pub fn color_complete_odd(q: usize) -> Result<Construction, ConstructionError> {
    if q.is_multiple_of(2) {
        return Err(ConstructionError::Precondition(format!("q = {q} is even")));
    }
    let g = Graph::complete(q);
    let c = complete_odd_coloring(q);
    finish(&g, Method::CompleteOdd, c, Vec::new(), None)
}

fn complete_odd_coloring(q: usize) -> TotalColoring {
    let mut c = TotalColoring::new(q);
    for i in 0..q {
        c.set_vertex(i, (2 * i % q) as Color + 1);
        for j in i + 1..q {
            c.set_edge(Edge::new(i, j), ((i + j) % q) as Color + 1);
        }
    }
    c
}

/// Exact cover of the vertices by maximum cliques. `Ok(None)` when no such
/// cover exists; a structural error when ω does not divide `n`.
pub fn clique_cover_disjoint(g: &Graph) -> Result<Option<CliqueCover>, ConstructionError> {
    let n = g.n();
    if n == 0 {
        return Ok(Some(CliqueCover {
            omega: 0,
            cliques: Vec::new(),
        }));
    }
    let stats = maximal_cliques(g);
    let omega = stats.omega;
    if !n.is_multiple_of(omega) {
        return Err(ConstructionError::Structural(format!(
            "clique number {omega} does not divide {n}"
        )));
    }
    let maximum: Vec<&Vec<usize>> = stats.cliques.iter().filter(|c| c.len() == omega).collect();
    let mut by_vertex: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (idx, q) in maximum.iter().enumerate() {
        for &v in q.iter() {
            by_vertex[v].push(idx);
        }
    }
    let mut covered = vec![false; n];
    let mut chosen = Vec::new();
    if exact_cover(&maximum, &by_vertex, &mut covered, &mut chosen) {
        let cliques = chosen.iter().map(|&i| maximum[i].clone()).collect();
        Ok(Some(CliqueCover { omega, cliques }))
    } else {
        Ok(None)
    }
}

fn exact_cover(
    cliques: &[&Vec<usize>],
    by_vertex: &[Vec<usize>],
    covered: &mut [bool],
    chosen: &mut Vec<usize>,
) -> bool {
    let Some(v) = covered.iter().position(|&c| !c) else {
        return true;
    };
    for &idx in &by_vertex[v] {
        let q = cliques[idx];
        if q.iter().any(|&w| covered[w]) {
            continue;
        }
        for &w in q.iter() {
            covered[w] = true;
        }
        chosen.push(idx);
        if exact_cover(cliques, by_vertex, covered, chosen) {
            return true;
        }
        chosen.pop();
        for &w in q.iter() {
            covered[w] = false;
        }
    }
    false
}

/// At most Δ+2 colors; Δ+1 when the leftover edges are class I.
pub fn color_perfect_cayley(g: &Graph, budget: &SearchBudget) -> Result<Construction, ConstructionError> {
    if g.origin().is_none() {
        return Err(ConstructionError::Precondition("not a Cayley graph".into()));
    }
    let n = g.n();
    if g.is_complete() {
        if n.is_multiple_of(2) {
            return Err(ConstructionError::Precondition(format!(
                "complete graph of even order {n}"
            )));
        }
        let notes = vec!["complete graph: cyclic coloring of K_n".to_string()];
        return finish(g, Method::PerfectCayley, complete_odd_coloring(n), notes, None);
    }
    if !is_perfect(g)? {
        return Err(ConstructionError::Precondition("graph is not perfect".into()));
    }
    let chi = exact_chromatic(g, budget, Exec::default())?;
    let x = chi.value;
    if x % 2 == 0 {
        return Err(ConstructionError::Precondition(format!("χ = {x} is even")));
    }
    if !n.is_multiple_of(x) {
        return Err(ConstructionError::Precondition(format!("χ = {x} does not divide {n}")));
    }
    let cover = clique_cover_disjoint(g)?.ok_or(ConstructionError::NoCliqueCover)?;

    let mut c = TotalColoring::new(n);
    for v in 0..n {
        c.set_vertex(v, chi.classes[v] as Color + 1);
    }
    let half = x.div_ceil(2);
    let pos: Vec<usize> = chi.classes.iter().map(|&cv| cv * half % x).collect();
    for e in cover.edges() {
        c.set_edge(e, ((pos[e.u()] + pos[e.v()]) % x) as Color + 1);
    }

    let clique_edges = cover.edges();
    let rest = g.without_edges(&clique_edges);
    let delta = g.max_degree();
    let (edge_coloring, how): (EdgeColoring, &str) = if bipartition(&rest).is_some() {
        (edge_color_bipartite(&rest)?, "bipartite")
    } else {
        (edge_color_vizing(&rest).coloring, "fan recoloring")
    };
    for (e, col) in &edge_coloring {
        c.set_edge(*e, x as Color + col);
    }
    let fresh = edge_coloring
        .values()
        .collect::<std::collections::BTreeSet<_>>()
        .len();
    let class_one = fresh <= rest.max_degree();
    let mut notes = vec![
        format!("χ = {x}; cover {:?}", cover.cliques),
        format!(
            "remainder edge-colored by {how} with {fresh} colors ({})",
            if class_one { "class I" } else { "class II" }
        ),
    ];
    notes.push(format!(
        "total {} colors = Δ+{}",
        x + fresh,
        (x + fresh) as isize - delta as isize
    ));
    let split = crate::constructions::SubgraphSplit {
        part1: clique_edges,
        remainder: rest.edges(),
    };
    finish(g, Method::PerfectCayley, c, notes, Some(split))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_circulant, build_unitary, CirculantSpec};

    #[test]
    fn complete_odd() {
        assert_eq!(color_complete_odd(1).unwrap().color_count(), 1);
        assert_eq!(color_complete_odd(3).unwrap().color_count(), 3);
        assert_eq!(color_complete_odd(5).unwrap().color_count(), 5);
        assert!(color_complete_odd(4).is_err());
    }

    #[test]
    fn covers() {
        let u9 = build_unitary(9).unwrap();
        let cover = clique_cover_disjoint(&u9).unwrap().unwrap();
        assert_eq!(cover.cliques, vec![vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8]]);

        let k6 = Graph::complete(6);
        let cover = clique_cover_disjoint(&k6).unwrap().unwrap();
        assert_eq!(cover.cliques, vec![(0..6).collect::<Vec<_>>()]);

        assert!(matches!(
            clique_cover_disjoint(&Graph::cycle(5)),
            Err(ConstructionError::Structural(_))
        ));
    }

    #[test]
    fn unitary_nine() {
        let u9 = build_unitary(9).unwrap();
        let r = color_perfect_cayley(&u9, &SearchBudget::default()).unwrap();
        assert!(r.color_count() <= 8);
    }

    #[test]
    fn complete_and_imperfect() {
        let k5 = build_unitary(5).unwrap();
        assert_eq!(color_perfect_cayley(&k5, &SearchBudget::default()).unwrap().color_count(), 5);
        let c9 = build_circulant(&CirculantSpec::new(9, [1, 8]).unwrap());
        assert!(matches!(
            color_perfect_cayley(&c9, &SearchBudget::default()),
            Err(ConstructionError::Precondition(_))
        ));
    }
}
