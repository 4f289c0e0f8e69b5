use super::{Limit, OracleError};
use crate::coloring::VertexPartition;
use crate::graph::Graph;

const NODE_LIMIT: u64 = 500_000_000;

/// A partition of the vertices of a regular graph into exactly `q`
/// independent classes (empty ones allowed) whose sizes all have the parity
/// of `n`, or `None` when there is none.
pub fn conformable_exists(g: &Graph, q: usize) -> Result<Option<VertexPartition>, OracleError> {
    if g.n() > 0 && g.regular_degree().is_none() {
        return Err(OracleError::NotRegular);
    }
    let n = g.n();
    let mut s = State {
        g,
        q,
        class: vec![usize::MAX; n],
        sizes: Vec::new(),
        nodes: 0,
    };
    if s.place(0)? {
        let mut classes = vec![Vec::new(); q];
        for (v, &c) in s.class.iter().enumerate() {
            classes[c].push(v);
        }
        Ok(Some(VertexPartition::new(n, classes).expect("valid partition")))
    } else {
        Ok(None)
    }
}

struct State<'a> {
    g: &'a Graph,
    q: usize,
    class: Vec<usize>,
    sizes: Vec<usize>,
    nodes: u64,
}

impl State<'_> {
    /// Classes with the wrong parity, counting unopened classes as size 0.
    fn mismatched(&self) -> usize {
        let n = self.g.n();
        let open = self.sizes.iter().filter(|&&s| s % 2 != n % 2).count();
        let unopened = if n % 2 == 1 { self.q - self.sizes.len() } else { 0 };
        open + unopened
    }

    fn place(&mut self, v: usize) -> Result<bool, OracleError> {
        self.nodes += 1;
        if self.nodes > NODE_LIMIT {
            return Err(OracleError::Inconclusive {
                what: format!("conformable partition into {} classes", self.q),
                limit: Limit::Nodes,
                nodes: self.nodes,
            });
        }
        let remaining = self.g.n() - v;
        let m = self.mismatched();
        // each remaining vertex flips the parity of exactly one class
        if m > remaining || (remaining - m) % 2 == 1 {
            return Ok(false);
        }
        if remaining == 0 {
            return Ok(true);
        }
        // existing classes, then at most one new class
        let opened = self.sizes.len();
        let limit = if opened < self.q { opened + 1 } else { opened };
        for c in 0..limit {
            if c < opened && self.g.neighbors(v).any(|w| w < v && self.class[w] == c) {
                continue;
            }
            if c == opened {
                self.sizes.push(0);
            }
            self.sizes[c] += 1;
            self.class[v] = c;
            if self.place(v + 1)? {
                return Ok(true);
            }
            self.class[v] = usize::MAX;
            self.sizes[c] -= 1;
            if c == opened {
                self.sizes.pop();
            }
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{check_partition, PartitionMode};
    use crate::graph::{build_circulant, CirculantSpec};

    #[test]
    fn examples() {
        let z9 = build_circulant(&CirculantSpec::new(9, [1, 2, 3, 6, 7, 8]).unwrap());
        assert!(conformable_exists(&z9, 7).unwrap().is_none());

        let k3 = Graph::complete(3);
        let p = conformable_exists(&k3, 3).unwrap().unwrap();
        assert!(check_partition(&k3, &p, PartitionMode::Conformable(3)).unwrap());

        let c4 = Graph::cycle(4);
        let p = conformable_exists(&c4, 3).unwrap().unwrap();
        assert!(check_partition(&c4, &p, PartitionMode::Conformable(3)).unwrap());
        assert_eq!(p.classes(), &[vec![0, 2], vec![1, 3], vec![]]);

        assert!(conformable_exists(&Graph::cycle(5), 2).unwrap().is_none());
        assert!(conformable_exists(&Graph::cycle(5), 3).unwrap().is_none());
        assert!(conformable_exists(&Graph::cycle(5), 5).unwrap().is_some());
    }

    #[test]
    fn needs_regular() {
        let path = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(conformable_exists(&path, 2), Err(OracleError::NotRegular));
    }
}
