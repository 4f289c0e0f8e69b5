use super::ColoringError;
use crate::graph::Graph;

/// Ordered, pairwise-disjoint vertex classes covering `0..n`. Empty classes
/// are kept.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPartition {
    n: usize,
    classes: Vec<Vec<usize>>,
}

impl VertexPartition {
    pub fn new(n: usize, classes: Vec<Vec<usize>>) -> Result<Self, ColoringError> {
        let mut seen = vec![false; n];
        let mut classes = classes;
        for class in &mut classes {
            class.sort_unstable();
            for &v in class.iter() {
                if v >= n {
                    return Err(ColoringError::VertexOutOfRange { v, n });
                }
                if seen[v] {
                    return Err(ColoringError::Coverage(format!("vertex {v} in two classes")));
                }
                seen[v] = true;
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(ColoringError::Coverage(format!("vertex {v} in no class")));
        }
        Ok(VertexPartition { n, classes })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// Class index per vertex.
    pub fn class_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.n];
        for (i, class) in self.classes.iter().enumerate() {
            for &v in class {
                out[v] = i;
            }
        }
        out
    }
}

/// Class `i` holds the vertices congruent to `i` modulo `q`.
pub fn residue_partition(n: usize, q: usize) -> Result<VertexPartition, ColoringError> {
    if q == 0 || !n.is_multiple_of(q) {
        return Err(ColoringError::NotDivisible(q));
    }
    let classes = (0..q).map(|i| (i..n).step_by(q).collect()).collect();
    VertexPartition::new(n, classes)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartitionMode {
    /// Every class is an independent set.
    Independent,
    /// Exactly `q` independent classes whose sizes all have the parity of
    /// `n`; the graph must be regular.
    Conformable(usize),
}

pub fn check_partition(g: &Graph, p: &VertexPartition, mode: PartitionMode) -> Result<bool, ColoringError> {
    if p.n() != g.n() {
        return Err(ColoringError::Coverage(format!(
            "partition covers {} vertices, graph has {}",
            p.n(),
            g.n()
        )));
    }
    let independent = p.classes().iter().all(|c| g.is_independent(c));
    match mode {
        PartitionMode::Independent => Ok(independent),
        PartitionMode::Conformable(q) => {
            if g.regular_degree().is_none() {
                return Err(ColoringError::NotRegular);
            }
            let parity = g.n() % 2;
            Ok(independent
                && p.classes().len() == q
                && p.classes().iter().all(|c| c.len() % 2 == parity))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_circulant, build_unitary, CirculantSpec};

    #[test]
    fn residue_examples() {
        let p = residue_partition(21, 7).unwrap();
        assert_eq!(p.classes()[0], vec![0, 7, 14]);
        assert_eq!(p.classes()[1], vec![1, 8, 15]);
        assert_eq!(p.classes()[6], vec![6, 13, 20]);
        let p = residue_partition(24, 3).unwrap();
        assert!(p.classes().iter().all(|c| c.len() == 8));
        let p = residue_partition(6, 6).unwrap();
        assert!(p.classes().iter().all(|c| c.len() == 1));
        assert_eq!(residue_partition(10, 3), Err(ColoringError::NotDivisible(3)));
    }

    #[test]
    fn conformable_examples() {
        let u24 = build_unitary(24).unwrap();
        let p = residue_partition(24, 3).unwrap();
        assert!(check_partition(&u24, &p, PartitionMode::Conformable(3)).unwrap());

        let k3 = Graph::complete(3);
        let p = VertexPartition::new(3, vec![vec![0], vec![1], vec![2]]).unwrap();
        assert!(check_partition(&k3, &p, PartitionMode::Conformable(3)).unwrap());

        let c4 = Graph::cycle(4);
        let p = VertexPartition::new(4, vec![vec![0, 2], vec![1, 3], vec![]]).unwrap();
        assert!(check_partition(&c4, &p, PartitionMode::Conformable(3)).unwrap());
        assert!(!check_partition(&c4, &p, PartitionMode::Conformable(2)).unwrap());

        let path = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let p = VertexPartition::new(3, vec![vec![0, 2], vec![1]]).unwrap();
        assert_eq!(
            check_partition(&path, &p, PartitionMode::Conformable(2)),
            Err(ColoringError::NotRegular)
        );
        assert!(check_partition(&path, &p, PartitionMode::Independent).unwrap());
    }

    #[test]
    fn partition_validation() {
        assert!(VertexPartition::new(3, vec![vec![0, 1], vec![1, 2]]).is_err());
        assert!(VertexPartition::new(3, vec![vec![0, 1]]).is_err());
        assert!(VertexPartition::new(2, vec![vec![0, 5]]).is_err());
    }

    #[test]
    fn residue_independence_matches_divisibility() {
        // classes independent iff no generator is a multiple of q
        for n in (6..=60).step_by(3) {
            let spec = CirculantSpec::from_half_set(n, [1, 3, n / 3]).unwrap();
            let g = build_circulant(&spec);
            let p = residue_partition(n, 3).unwrap();
            let no_multiple = spec.connection().iter().all(|s| s % 3 != 0);
            assert_eq!(
                check_partition(&g, &p, PartitionMode::Independent).unwrap(),
                no_multiple
            );
        }
    }
}
