use super::GraphError;

/// Largest order for which associativity is checked exhaustively.
const ASSOCIATIVITY_CHECK_LIMIT: usize = 64;

/// A finite group given by its multiplication table over element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupTable {
    n: usize,
    product: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

impl GroupTable {
    /// Validates closure, the identity law and inverses. Associativity is
    /// checked on all triples when `n <= 64`; larger tables skip it with a
    /// warning.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        let n = rows.len();
        if n == 0 {
            return Err(GraphError::InvalidTable("empty table".into()));
        }
        let mut product = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GraphError::InvalidTable(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for &x in row {
                if x >= n {
                    return Err(GraphError::InvalidTable(format!(
                        "entry {x} in row {i} is not an element index"
                    )));
                }
            }
            product.extend_from_slice(row);
        }
        let mul = |a: usize, b: usize| product[a * n + b];
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| mul(e, x) == x && mul(x, e) == x))
            .ok_or_else(|| GraphError::InvalidTable("no identity element".into()))?;
        let mut inverse = vec![0; n];
        for (x, inv) in inverse.iter_mut().enumerate() {
            *inv = (0..n)
                .find(|&y| mul(x, y) == identity && mul(y, x) == identity)
                .ok_or_else(|| GraphError::InvalidTable(format!("element {x} has no inverse")))?;
        }
        if n <= ASSOCIATIVITY_CHECK_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    let ab = mul(a, b);
                    for c in 0..n {
                        if mul(ab, c) != mul(a, mul(b, c)) {
                            return Err(GraphError::InvalidTable(format!(
                                "associativity fails on ({a}, {b}, {c})"
                            )));
                        }
                    }
                }
            }
        } else {
            log::warn!("group of order {n}: associativity not verified");
        }
        Ok(GroupTable {
            n,
            product,
            identity,
            inverse,
        })
    }

    /// The cyclic group `Z_n` under addition.
    pub fn cyclic(n: usize) -> Self {
        let rows = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::new(rows).expect("Z_n is a group")
    }

    /// The dihedral group of order `2m`: rotations `0..m`, reflections `m..2m`.
    pub fn dihedral(m: usize) -> Self {
        assert!(m >= 1);
        let n = 2 * m;
        let decode = |x: usize| (x / m, x % m);
        let encode = |f: usize, r: usize| f * m + r;
        let rows = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        let (fa, ra) = decode(a);
                        let (fb, rb) = decode(b);
                        // (s^fa r^ra)(s^fb r^rb) with r s = s r^-1
                        let r = if fb == 0 { ra + rb } else { m - ra % m + rb };
                        encode(fa ^ fb, r % m)
                    })
                    .collect()
            })
            .collect();
        Self::new(rows).expect("dihedral table is a group")
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.product[a * self.n + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_and_dihedral_are_groups() {
        let z5 = GroupTable::cyclic(5);
        assert_eq!(z5.identity(), 0);
        assert_eq!(z5.inverse(2), 3);
        assert!(z5.is_abelian());

        let d3 = GroupTable::dihedral(3);
        assert_eq!(d3.order(), 6);
        assert!(!d3.is_abelian());
        for x in 0..6 {
            assert_eq!(d3.mul(x, d3.inverse(x)), d3.identity());
        }
    }

    #[test]
    fn rejects_bad_tables() {
        assert!(GroupTable::new(vec![]).is_err());
        assert!(GroupTable::new(vec![vec![0, 1], vec![1]]).is_err());
        assert!(GroupTable::new(vec![vec![0, 2], vec![1, 0]]).is_err());
        // no identity
        assert!(GroupTable::new(vec![vec![0, 0], vec![0, 0]]).is_err());
        // identity 0 and inverses, but not associative
        let rows = vec![
            vec![0, 1, 2],
            vec![1, 0, 0],
            vec![2, 0, 0],
        ];
        let err = GroupTable::new(rows).unwrap_err();
        assert!(matches!(err, GraphError::InvalidTable(ref m) if m.contains("inverse") || m.contains("associativity")));
    }
}
