//! Maximum matching in general graphs (Edmonds, blossom contraction).

use std::collections::VecDeque;

use crate::graph::{Edge, Graph};

const NONE: usize = usize::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<Edge>,
    n: usize,
}

impl Matching {
    /// Builds a matching, rejecting edges that share an endpoint.
    pub fn new(n: usize, mut edges: Vec<Edge>) -> Option<Self> {
        let mut seen = vec![false; n];
        for e in &edges {
            for x in [e.u(), e.v()] {
                if x >= n || seen[x] {
                    return None;
                }
                seen[x] = true;
            }
        }
        edges.sort();
        Some(Matching { edges, n })
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_perfect(&self) -> bool {
        2 * self.edges.len() == self.n
    }
}

/// A perfect matching of `g`, or `None` if none exists.
pub fn perfect_matching(g: &Graph) -> Option<Matching> {
    if g.n() % 2 == 1 {
        return None;
    }
    let m = maximum_matching(g);
    m.is_perfect().then_some(m)
}

/// A maximum-cardinality matching.
pub fn maximum_matching(g: &Graph) -> Matching {
    let mut b = Blossom::new(g);
    for v in 0..g.n() {
        if b.mate[v] == NONE {
            b.augment_from(v);
        }
    }
    let edges = (0..g.n())
        .filter(|&v| b.mate[v] != NONE && v < b.mate[v])
        .map(|v| Edge::new(v, b.mate[v]))
        .collect();
    Matching::new(g.n(), edges).expect("blossom output is a matching")
}

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.n();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.used.fill(false);
        self.parent.fill(NONE);
        for i in 0..n {
            self.base[i] = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            let nbrs: Vec<usize> = self.g.neighbors(v).collect();
            for to in nbrs {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment_from(&mut self, root: usize) {
        let Some(mut v) = self.find_path(root) else {
            return;
        };
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_circulant, complement, CirculantSpec};

    fn assert_perfect(g: &Graph, m: &Matching) {
        assert!(m.is_perfect());
        for e in m.edges() {
            assert!(g.has_edge(e.u(), e.v()));
        }
    }

    #[test]
    fn examples() {
        let g = build_circulant(&CirculantSpec::new(10, [1, 2, 5, 8, 9]).unwrap());
        let h = complement(&g);
        let m = perfect_matching(&h).unwrap();
        assert_eq!(m.len(), 5);
        assert_perfect(&h, &m);

        let c6 = Graph::cycle(6);
        let m = perfect_matching(&c6).unwrap();
        assert_eq!(m.len(), 3);
        assert_perfect(&c6, &m);

        assert!(perfect_matching(&Graph::complete(5)).is_none());
    }

    #[test]
    fn needs_blossoms() {
        // two triangles joined by an edge
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_perfect(&g, &perfect_matching(&g).unwrap());
        let pet = Graph::petersen();
        assert_perfect(&pet, &perfect_matching(&pet).unwrap());
        // a star has maximum matching size one
        let star = Graph::from_edges(5, (1..5).map(|i| (0, i))).unwrap();
        assert_eq!(maximum_matching(&star).len(), 1);
        assert!(perfect_matching(&Graph::empty(4)).is_none());
    }
}
