use crate::bitset::BitSet;
use crate::graph::Graph;

/// All maximal cliques, each sorted, in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueStats {
    pub cliques: Vec<Vec<usize>>,
    pub omega: usize,
    pub maximal_count: usize,
    pub maximum_count: usize,
}

impl CliqueStats {
    pub fn maximum(&self) -> impl Iterator<Item = &Vec<usize>> + '_ {
        self.cliques.iter().filter(move |c| c.len() == self.omega)
    }
}

/// Bron–Kerbosch with Tomita pivoting.
pub fn maximal_cliques(g: &Graph) -> CliqueStats {
    let n = g.n();
    let mut out = Vec::new();
    if n > 0 {
        let mut r = Vec::new();
        expand(g, &mut r, BitSet::full(n), BitSet::new(n), &mut out);
    }
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    let omega = out.iter().map(Vec::len).max().unwrap_or(0);
    let maximum_count = out.iter().filter(|c| c.len() == omega).count();
    CliqueStats {
        maximal_count: out.len(),
        cliques: out,
        omega,
        maximum_count,
    }
}

fn expand(g: &Graph, r: &mut Vec<usize>, mut p: BitSet, mut x: BitSet, out: &mut Vec<Vec<usize>>) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&u| (p.intersection_count(g.adjacency_row(u)), std::cmp::Reverse(u)))
        .expect("p is non-empty");
    let mut candidates = p.clone();
    candidates.difference_with(g.adjacency_row(pivot));
    for v in candidates.iter().collect::<Vec<_>>() {
        let row = g.adjacency_row(v);
        r.push(v);
        expand(g, r, p.intersection(row), x.intersection(row), out);
        r.pop();
        p.remove(v);
        x.insert(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_circulant, CirculantSpec};

    #[test]
    fn examples() {
        let z9 = build_circulant(&CirculantSpec::new(9, [1, 2, 3, 6, 7, 8]).unwrap());
        let s = maximal_cliques(&z9);
        assert_eq!(s.omega, 4);
        assert_eq!(s.maximum_count, 9);
        assert_eq!(s.maximal_count, 12);
        assert!(s.cliques.contains(&vec![0, 3, 6]));

        let k4 = maximal_cliques(&Graph::complete(4));
        assert_eq!(k4.cliques, vec![vec![0, 1, 2, 3]]);

        let c5 = maximal_cliques(&Graph::cycle(5));
        assert_eq!(c5.maximal_count, 5);
        assert_eq!(c5.omega, 2);

        let e = maximal_cliques(&Graph::empty(3));
        assert_eq!(e.cliques, vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn matches_brute_force() {
        let g = Graph::petersen();
        let s = maximal_cliques(&g);
        // triangle-free and no isolated vertices: maximal cliques are the edges
        let edges: Vec<Vec<usize>> = g.edges().iter().map(|e| vec![e.u(), e.v()]).collect();
        assert_eq!(s.cliques, edges);
    }
}
