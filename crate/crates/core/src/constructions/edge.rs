//! Proper edge colorings: alternating-path recoloring for bipartite graphs
//! (exactly Δ colors) and fan recoloring for general graphs (at most Δ+1).

use super::ConstructionError;
use crate::coloring::{Color, EdgeColoring};
use crate::graph::{bipartition, Edge, Graph};

const NONE: usize = usize::MAX;

/// Mutable edge-coloring state with `slots` colors `0..slots`.
struct Palette {
    slots: usize,
    // at[v * slots + c] = neighbor joined to v by an edge of color c
    at: Vec<usize>,
}

impl Palette {
    fn new(n: usize, slots: usize) -> Self {
        Palette {
            slots,
            at: vec![NONE; n * slots],
        }
    }

    #[inline]
    fn neighbor(&self, v: usize, c: usize) -> usize {
        self.at[v * self.slots + c]
    }

    #[inline]
    fn is_free(&self, v: usize, c: usize) -> bool {
        self.neighbor(v, c) == NONE
    }

    fn first_free(&self, v: usize) -> usize {
        (0..self.slots)
            .find(|&c| self.is_free(v, c))
            .expect("a free color always exists")
    }

    fn color_of(&self, u: usize, v: usize) -> Option<usize> {
        (0..self.slots).find(|&c| self.neighbor(u, c) == v)
    }

    fn set(&mut self, u: usize, v: usize, c: usize) {
        debug_assert!(self.is_free(u, c) && self.is_free(v, c));
        self.at[u * self.slots + c] = v;
        self.at[v * self.slots + c] = u;
    }

    fn clear(&mut self, u: usize, v: usize, c: usize) {
        self.at[u * self.slots + c] = NONE;
        self.at[v * self.slots + c] = NONE;
    }

    /// Swaps colors `a` and `b` along the maximal path that starts at `start`
    /// with an edge colored `a`.
    fn flip_path(&mut self, start: usize, a: usize, b: usize) {
        let mut path = vec![start];
        let mut cur = start;
        let mut want = a;
        loop {
            let next = self.neighbor(cur, want);
            if next == NONE {
                break;
            }
            path.push(next);
            cur = next;
            want = if want == a { b } else { a };
        }
        let mut colors = Vec::with_capacity(path.len());
        for w in path.windows(2) {
            let c = self.color_of(w[0], w[1]).unwrap();
            colors.push(c);
        }
        for (w, &c) in path.windows(2).zip(&colors) {
            self.clear(w[0], w[1], c);
        }
        for (w, &c) in path.windows(2).zip(&colors) {
            self.set(w[0], w[1], if c == a { b } else { a });
        }
    }

    fn into_coloring(self, edges: &[Edge]) -> EdgeColoring {
        edges
            .iter()
            .map(|e| {
                let c = self.color_of(e.u(), e.v()).expect("every edge colored");
                (*e, c as Color + 1)
            })
            .collect()
    }
}

/// Edge-colors a bipartite graph with exactly Δ colors.
pub fn edge_color_bipartite(g: &Graph) -> Result<EdgeColoring, ConstructionError> {
    if bipartition(g).is_none() {
        return Err(ConstructionError::Precondition("graph is not bipartite".into()));
    }
    let delta = g.max_degree();
    let edges = g.edges();
    let mut p = Palette::new(g.n(), delta.max(1));
    for e in &edges {
        let (u, v) = (e.u(), e.v());
        let a = p.first_free(u);
        if !p.is_free(v, a) {
            let b = p.first_free(v);
            // the a/b path from v cannot reach u in a bipartite graph
            p.flip_path(v, a, b);
        }
        p.set(u, v, a);
    }
    Ok(p.into_coloring(&edges))
}

/// Result of fan recoloring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VizingColoring {
    pub coloring: EdgeColoring,
    pub colors_used: usize,
    pub max_degree: usize,
}

impl VizingColoring {
    /// True when only Δ colors were needed.
    pub fn achieved_max_degree(&self) -> bool {
        self.colors_used <= self.max_degree
    }
}

/// Misra–Gries fan recoloring: a proper edge coloring with at most Δ+1
/// colors, edges processed in lexicographic order.
pub fn edge_color_vizing(g: &Graph) -> VizingColoring {
    let delta = g.max_degree();
    let edges = g.edges();
    let mut p = Palette::new(g.n(), delta + 1);
    for e in &edges {
        color_edge_with_fan(g, &mut p, e.u(), e.v());
    }
    if delta > 0 {
        drop_extra_color(&mut p, &edges, delta);
    }
    let coloring = p.into_coloring(&edges);
    let colors_used = coloring
        .values()
        .copied()
        .collect::<std::collections::BTreeSet<_>>()
        .len();
    VizingColoring {
        coloring,
        colors_used,
        max_degree: delta,
    }
}

fn color_edge_with_fan(g: &Graph, p: &mut Palette, u: usize, v: usize) {
    // maximal fan of u starting at v
    let mut fan = vec![v];
    let mut in_fan = vec![false; g.n()];
    in_fan[v] = true;
    loop {
        let last = *fan.last().unwrap();
        let next = g.neighbors(u).find(|&w| {
            !in_fan[w]
                && p
                    .color_of(u, w)
                    .is_some_and(|c| p.is_free(last, c))
        });
        match next {
            Some(w) => {
                in_fan[w] = true;
                fan.push(w);
            }
            None => break,
        }
    }
    let c = p.first_free(u);
    let d = p.first_free(*fan.last().unwrap());
    if !p.is_free(u, d) {
        // invert the cd-path through u; afterwards d is free on u
        p.flip_path(u, d, c);
    }
    // w: first fan vertex with d free whose prefix is still a fan
    let mut end = None;
    for j in 0..fan.len() {
        if !prefix_is_fan(p, u, &fan[..=j]) {
            break;
        }
        if p.is_free(fan[j], d) {
            end = Some(j);
            break;
        }
    }
    let j = end.expect("fan recoloring always finds a rotation point");
    // rotate the prefix: (u, f_i) takes the color of (u, f_{i+1})
    for i in 0..j {
        let next_color = p.color_of(u, fan[i + 1]).unwrap();
        p.clear(u, fan[i + 1], next_color);
        p.set(u, fan[i], next_color);
    }
    p.set(u, fan[j], d);
}

/// Tries to move every edge of color `extra` into `0..extra` by swapping a
/// two-colored path at one endpoint. Edges that cannot move keep `extra`.
fn drop_extra_color(p: &mut Palette, edges: &[Edge], extra: usize) {
    for e in edges {
        let (u, v) = (e.u(), e.v());
        if p.neighbor(u, extra) != v {
            continue;
        }
        p.clear(u, v, extra);
        let mut placed = false;
        let free_u: Vec<usize> = (0..extra).filter(|&a| p.is_free(u, a)).collect();
        let free_v: Vec<usize> = (0..extra).filter(|&b| p.is_free(v, b)).collect();
        'search: for &a in &free_u {
            if p.is_free(v, a) {
                p.set(u, v, a);
                placed = true;
                break;
            }
            for &b in &free_v {
                p.flip_path(v, a, b);
                if p.is_free(u, a) && p.is_free(v, a) {
                    p.set(u, v, a);
                    placed = true;
                    break 'search;
                }
                p.flip_path(v, b, a);
            }
        }
        if !placed {
            p.set(u, v, extra);
        }
    }
}

fn prefix_is_fan(p: &Palette, u: usize, fan: &[usize]) -> bool {
    fan.windows(2).all(|w| {
        p.color_of(u, w[1])
            .is_some_and(|c| p.is_free(w[0], c))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_proper_edge_coloring;
    use crate::graph::{build_circulant, build_unitary, CirculantSpec};

    fn count(c: &EdgeColoring) -> usize {
        c.values().collect::<std::collections::BTreeSet<_>>().len()
    }

    fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
    }

    fn k33() -> Graph {
        Graph::from_edges(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap()
    }

    #[test]
    fn bipartite_examples() {
        let c6 = Graph::cycle(6);
        let c = edge_color_bipartite(&c6).unwrap();
        assert!(is_proper_edge_coloring(&c6, &c));
        assert_eq!(count(&c), 2);

        let g = k33();
        let c = edge_color_bipartite(&g).unwrap();
        assert!(is_proper_edge_coloring(&g, &c));
        assert_eq!(count(&c), 3);

        let s = star(4);
        let c = edge_color_bipartite(&s).unwrap();
        assert!(is_proper_edge_coloring(&s, &c));
        assert_eq!(count(&c), 4);

        assert!(edge_color_bipartite(&Graph::complete(3)).is_err());
    }

    #[test]
    fn bipartite_unitary_graphs_are_class_one() {
        for n in [12, 30, 48, 64] {
            let g = build_unitary(n).unwrap();
            let c = edge_color_bipartite(&g).unwrap();
            assert!(is_proper_edge_coloring(&g, &c));
            assert_eq!(count(&c), g.max_degree());
        }
    }

    #[test]
    fn vizing_examples() {
        let k4 = Graph::complete(4);
        let r = edge_color_vizing(&k4);
        assert!(is_proper_edge_coloring(&k4, &r.coloring));
        assert_eq!(r.colors_used, 3);
        assert!(r.achieved_max_degree());

        let c5 = Graph::cycle(5);
        let r = edge_color_vizing(&c5);
        assert!(is_proper_edge_coloring(&c5, &r.coloring));
        assert_eq!(r.colors_used, 3);
        assert!(!r.achieved_max_degree());

        let pet = Graph::petersen();
        let r = edge_color_vizing(&pet);
        assert!(is_proper_edge_coloring(&pet, &r.coloring));
        assert_eq!(r.colors_used, 4);
    }

    #[test]
    fn vizing_never_exceeds_bound_on_circulants() {
        for n in 5..40 {
            for half in [vec![1, 2], vec![1, 3, 4], vec![2, 5], vec![1, 2, 3, 4]] {
                if half.iter().any(|&s| 2 * s > n) {
                    continue;
                }
                let g = build_circulant(&CirculantSpec::from_half_set(n, half).unwrap());
                let r = edge_color_vizing(&g);
                assert!(is_proper_edge_coloring(&g, &r.coloring), "n={n}");
                assert!(r.colors_used <= g.max_degree() + 1);
            }
        }
    }
}
