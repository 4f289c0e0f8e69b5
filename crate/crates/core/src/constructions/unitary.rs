//! Δ+1 total coloring of `U_n` for `n = 2^k·m`, `m` odd and greater than 1.
//!
//! Part 1 colors the vertices and the factors of the odd generators below
//! `r` (the least prime factor of `m`) with the diagonal pattern mod `r`.
//! Part 2 gives every remaining generator pair two fresh colors, alternating
//! with the parity of the lower endpoint along the row index.

use super::{fill_diagonals, finish, start_entries, Construction, ConstructionError, Method, SubgraphSplit};
use crate::coloring::{Color, TotalColoring};
use crate::graph::arith::{least_prime_factor, split_two_power};
use crate::graph::{build_unitary, units, Edge};

/// The two halves of the coloring, before merging.
#[derive(Clone, Debug)]
pub struct UnitaryParts {
    pub r: usize,
    /// Generators colored in part 1 (`1, 3, ..., r-2`).
    pub part1_generators: Vec<usize>,
    /// Remaining half-set generators, ascending; pair index is position + 1.
    pub part2_generators: Vec<usize>,
    /// Vertices plus part-1 edges.
    pub part1: TotalColoring,
    /// Part-2 edges only.
    pub part2: TotalColoring,
}

/// Computes both parts without verifying.
pub fn unitary_parts(n: usize) -> Result<UnitaryParts, ConstructionError> {
    if n % 2 == 1 || n < 2 {
        return Err(ConstructionError::Precondition(format!("n = {n} is not even")));
    }
    let (_, m) = split_two_power(n);
    let r = least_prime_factor(m).ok_or_else(|| {
        ConstructionError::Precondition(format!(
            "n = {n} is a power of two; U_n is complete bipartite"
        ))
    })?;

    let part1_generators: Vec<usize> = (1..r).step_by(2).collect();
    let mut columns = vec![1];
    columns.extend(part1_generators.iter().map(|s| s + 1));
    let table = start_entries(r, &columns, n)?;
    let gens: Vec<(usize, Color)> = part1_generators
        .iter()
        .map(|&s| (s, table.start(s + 1)))
        .collect();
    let part1 = fill_diagonals(n, r, &gens);

    let part2_generators: Vec<usize> = units(n)
        .into_iter()
        .filter(|&s| 2 * s < n && s >= r)
        .collect();
    let mut part2 = TotalColoring::new(n);
    for (idx, &s) in part2_generators.iter().enumerate() {
        let p = idx + 1;
        let odd_color = (r + 2 * p - 1) as Color;
        for i in 0..n {
            let c = if i % 2 == 0 { odd_color } else { odd_color + 1 };
            part2.set_edge(Edge::new(i, (i + s) % n), c);
        }
    }
    Ok(UnitaryParts {
        r,
        part1_generators,
        part2_generators,
        part1,
        part2,
    })
}

pub fn color_unitary_even(n: usize) -> Result<Construction, ConstructionError> {
    let parts = unitary_parts(n)?;
    let g = build_unitary(n)?;
    let mut c = parts.part1.clone();
    c.merge(&parts.part2);
    let split = SubgraphSplit {
        part1: parts.part1.edge_colors().map(|(e, _)| e).collect(),
        remainder: parts.part2.edge_colors().map(|(e, _)| e).collect(),
    };
    let notes = vec![format!(
        "r = {}; diagonal generators {:?}; paired generators {:?}",
        parts.r, parts.part1_generators, parts.part2_generators
    )];
    finish(&g, Method::UnitaryEven, c, notes, Some(split))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::arith::totient;

    #[test]
    fn color_counts() {
        for n in [6, 10, 12, 18, 20, 24, 30, 36, 42, 48, 90, 210] {
            let r = color_unitary_even(n).unwrap();
            assert_eq!(r.color_count(), totient(n) + 1, "n={n}");
        }
    }

    #[test]
    fn table3_calibration() {
        let p = unitary_parts(24).unwrap();
        assert_eq!(p.r, 3);
        assert_eq!(p.part2_generators, vec![5, 7, 11]);
        let c = |a, b| p.part2.edge_color(Edge::new(a, b));
        assert_eq!(c(0, 5), Some(4));
        assert_eq!(c(5, 10), Some(5));
        assert_eq!(c(0, 7), Some(6));
        assert_eq!(c(0, 11), Some(8));
        assert_eq!(c(0, 13), Some(9));
        assert_eq!(c(0, 17), Some(7));
        assert_eq!(c(0, 19), Some(5));
    }

    #[test]
    fn rejects_odd_and_powers_of_two() {
        assert!(color_unitary_even(9).is_err());
        assert!(color_unitary_even(16).is_err());
    }

    #[test]
    fn six_has_no_part2() {
        let p = unitary_parts(6).unwrap();
        assert!(p.part2_generators.is_empty());
        assert_eq!(color_unitary_even(6).unwrap().color_count(), 3);
    }
}
