//! Circulant, unitary Cayley and table-defined Cayley graphs.
//!
//! Vertices are always `0..n`. Adjacency is stored densely, one bit per
//! ordered pair, so membership queries used by the verifier and the exact
//! solvers are constant time.

pub mod arith;
pub mod dimacs;
mod factors;
mod group;

use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::bitset::BitSet;

pub use arith::{gcd, least_prime_factor, totient, units};
pub use factors::{two_factors, FactorKind, TwoFactor, TwoFactorDecomposition};
pub use group::GroupTable;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count must be at least {min}, got {n}")]
    TooSmall { n: usize, min: usize },
    #[error("connection set contains the identity 0")]
    IdentityInConnection,
    #[error("connection element {s} is outside 1..{n}")]
    ConnectionOutOfRange { s: usize, n: usize },
    #[error("connection set is not symmetric: {s} present but {inverse} missing")]
    Asymmetric { s: usize, inverse: usize },
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid group table: {0}")]
    InvalidTable(String),
    #[error("generating set contains the identity element {0}")]
    IdentityInGenerators(usize),
    #[error("generating set is not closed under inverses: {s} present but {inverse} missing")]
    GeneratorsAsymmetric { s: usize, inverse: usize },
}

/// An undirected edge stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Normalizes the endpoint order. Panics on a loop.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "loops are not edges");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    #[inline]
    pub fn u(&self) -> usize {
        self.u
    }

    #[inline]
    pub fn v(&self) -> usize {
        self.v
    }

    #[inline]
    pub fn touches(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint other than `x`.
    pub fn other(&self, x: usize) -> usize {
        if self.u == x {
            self.v
        } else {
            debug_assert_eq!(self.v, x);
            self.u
        }
    }

    /// Shared endpoint of two distinct edges, if any.
    pub fn shared_vertex(&self, other: &Edge) -> Option<usize> {
        if self == other {
            return None;
        }
        [self.u, self.v].into_iter().find(|&x| other.touches(x))
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.u, self.v)
    }
}

/// Vertex count plus a symmetric, identity-free connection set over `Z_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CirculantSpec {
    n: usize,
    connection: Vec<usize>,
}

impl CirculantSpec {
    pub fn new(n: usize, connection: impl IntoIterator<Item = usize>) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::TooSmall { n, min: 1 });
        }
        let mut conn: Vec<usize> = connection.into_iter().collect();
        conn.sort_unstable();
        conn.dedup();
        for &s in &conn {
            if s == 0 {
                return Err(GraphError::IdentityInConnection);
            }
            if s >= n {
                return Err(GraphError::ConnectionOutOfRange { s, n });
            }
        }
        for &s in &conn {
            if conn.binary_search(&(n - s)).is_err() {
                return Err(GraphError::Asymmetric { s, inverse: n - s });
            }
        }
        Ok(CirculantSpec {
            n,
            connection: conn,
        })
    }

    /// Builds the spec from representatives, adding every inverse `n - s`.
    pub fn from_half_set(n: usize, half: impl IntoIterator<Item = usize>) -> Result<Self, GraphError> {
        let mut conn = Vec::new();
        for s in half {
            if s == 0 {
                return Err(GraphError::IdentityInConnection);
            }
            if s >= n {
                return Err(GraphError::ConnectionOutOfRange { s, n });
            }
            conn.push(s);
            conn.push(n - s);
        }
        Self::new(n, conn)
    }

    pub fn unitary(n: usize) -> Result<Self, GraphError> {
        if n < 2 {
            return Err(GraphError::TooSmall { n, min: 2 });
        }
        Self::new(n, units(n))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// The full connection set, ascending, both inverses present.
    pub fn connection(&self) -> &[usize] {
        &self.connection
    }

    /// Representatives `s <= n/2`, ascending.
    pub fn half_set(&self) -> Vec<usize> {
        self.connection
            .iter()
            .copied()
            .filter(|&s| 2 * s <= self.n)
            .collect()
    }

    pub fn degree(&self) -> usize {
        self.connection.len()
    }

    pub fn contains(&self, d: usize) -> bool {
        self.connection.binary_search(&(d % self.n)).is_ok()
    }

    pub fn is_unitary(&self) -> bool {
        self.n >= 2 && self.connection == units(self.n)
    }

    /// The connection set of the complement graph.
    pub fn complement(&self) -> CirculantSpec {
        let conn = (1..self.n).filter(|&d| !self.contains(d)).collect();
        CirculantSpec {
            n: self.n,
            connection: conn,
        }
    }
}

impl fmt::Display for CirculantSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C_{}(", self.n)?;
        for (i, s) in self.connection.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

/// How a graph was constructed, when known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Origin {
    Circulant(CirculantSpec),
    Cayley {
        table: Arc<GroupTable>,
        generators: Vec<usize>,
    },
}

/// A simple undirected graph with dense adjacency.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<BitSet>,
    origin: Option<Origin>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edge_count())
            .field("origin", &self.origin)
            .finish()
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: (0..n).map(|_| BitSet::new(n)).collect(),
            origin: None,
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge_unchecked(u, v);
            }
        }
        g
    }

    /// The cycle `0-1-...-(n-1)-0`, as a circulant.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        build_circulant(&CirculantSpec::new(n, [1, n - 1]).expect("valid cycle"))
    }

    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut g = Self::empty(n);
        for (a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { v, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            g.add_edge_unchecked(a, b);
        }
        Ok(g)
    }

    /// The Petersen graph: outer 5-cycle, inner pentagram, spokes.
    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, 5 + i));
        }
        Self::from_edges(10, edges).expect("valid petersen")
    }

    fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter()
    }

    pub fn adjacency_row(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// `Some(Δ)` when every vertex has degree `Δ`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = if self.n == 0 { 0 } else { self.degree(0) };
        (0..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BitSet::count).sum::<usize>() / 2
    }

    /// All edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push(Edge { u, v });
            }
        }
        out
    }

    pub fn origin(&self) -> Option<&Origin> {
        self.origin.as_ref()
    }

    pub fn circulant_spec(&self) -> Option<&CirculantSpec> {
        match &self.origin {
            Some(Origin::Circulant(spec)) => Some(spec),
            _ => None,
        }
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &a)| vertices[i + 1..].iter().all(|&b| self.has_edge(a, b)))
    }

    pub fn is_independent(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &a)| vertices[i + 1..].iter().all(|&b| !self.has_edge(a, b)))
    }

    /// A copy of this graph without the listed edges. Provenance is dropped.
    pub fn without_edges<'a>(&self, edges: impl IntoIterator<Item = &'a Edge>) -> Graph {
        let mut g = Graph {
            n: self.n,
            adj: self.adj.clone(),
            origin: None,
        };
        for e in edges {
            g.adj[e.u].remove(e.v);
            g.adj[e.v].remove(e.u);
        }
        g
    }

    /// The spanning subgraph holding exactly the listed edges.
    pub fn edge_subgraph<'a>(&self, edges: impl IntoIterator<Item = &'a Edge>) -> Graph {
        let mut g = Graph::empty(self.n);
        for e in edges {
            debug_assert!(self.has_edge(e.u, e.v));
            g.add_edge_unchecked(e.u, e.v);
        }
        g
    }

    pub(crate) fn with_origin(mut self, origin: Origin) -> Graph {
        self.origin = Some(origin);
        self
    }
}

pub fn build_circulant(spec: &CirculantSpec) -> Graph {
    let n = spec.n();
    let mut g = Graph::empty(n);
    for u in 0..n {
        for &s in spec.connection() {
            g.adj[u].insert((u + s) % n);
        }
    }
    g.with_origin(Origin::Circulant(spec.clone()))
}

/// The unitary Cayley graph `U_n`.
pub fn build_unitary(n: usize) -> Result<Graph, GraphError> {
    Ok(build_circulant(&CirculantSpec::unitary(n)?))
}

/// Cayley graph with `g ~ g*s` for every `s` in `generators`.
pub fn build_cayley(table: Arc<GroupTable>, generators: &[usize]) -> Result<Graph, GraphError> {
    let n = table.order();
    let mut gens: Vec<usize> = generators.to_vec();
    gens.sort_unstable();
    gens.dedup();
    for &s in &gens {
        if s >= n {
            return Err(GraphError::VertexOutOfRange { v: s, n });
        }
        if s == table.identity() {
            return Err(GraphError::IdentityInGenerators(s));
        }
        let inv = table.inverse(s);
        if gens.binary_search(&inv).is_err() {
            return Err(GraphError::GeneratorsAsymmetric { s, inverse: inv });
        }
    }
    let mut g = Graph::empty(n);
    for x in 0..n {
        for &s in &gens {
            g.add_edge_unchecked(x, table.mul(x, s));
        }
    }
    Ok(g.with_origin(Origin::Cayley {
        table,
        generators: gens,
    }))
}

/// Complement graph. Circulant and Cayley provenance carries over with the
/// complementary connection set.
pub fn complement(g: &Graph) -> Graph {
    let n = g.n;
    let mut out = Graph::empty(n);
    for u in 0..n {
        let mut row = BitSet::full(n);
        row.difference_with(&g.adj[u]);
        row.remove(u);
        out.adj[u] = row;
    }
    match &g.origin {
        Some(Origin::Circulant(spec)) => out.with_origin(Origin::Circulant(spec.complement())),
        Some(Origin::Cayley { table, generators }) => {
            let gens = (0..n)
                .filter(|&x| x != table.identity() && generators.binary_search(&x).is_err())
                .collect();
            out.with_origin(Origin::Cayley {
                table: Arc::clone(table),
                generators: gens,
            })
        }
        None => out,
    }
}

/// Connected components, each sorted, ordered by smallest vertex.
pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.n];
    let mut out = Vec::new();
    for start in 0..g.n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub fn connected(g: &Graph) -> bool {
    components(g).len() <= 1
}

/// A 2-coloring of the vertices, if one exists. The smallest vertex of each
/// component lands in the first part.
pub fn bipartition(g: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut side: Vec<Option<bool>> = vec![None; g.n];
    for start in 0..g.n {
        if side[start].is_some() {
            continue;
        }
        side[start] = Some(false);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let sv = side[v].unwrap();
            for w in g.neighbors(v) {
                match side[w] {
                    Some(sw) if sw == sv => return None,
                    Some(_) => {}
                    None => {
                        side[w] = Some(!sv);
                        queue.push_back(w);
                    }
                }
            }
        }
    }
    let a = (0..g.n).filter(|&v| side[v] == Some(false)).collect();
    let b = (0..g.n).filter(|&v| side[v] == Some(true)).collect();
    Some((a, b))
}
