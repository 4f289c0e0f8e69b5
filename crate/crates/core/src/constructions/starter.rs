//! Start values for the diagonal-pattern colorings.
//!
//! In the total color matrix of a circulant on `Z_n`, row 0 column `j`
//! (1-indexed) holds the color of edge `{0, j-1}`; the generator `s = j - 1`
//! edge color then shifts by one (mod `q`) per row, exactly like the vertex
//! colors `1, 2, ..., q, 1, 2, ...` on the diagonal. Whether this is proper
//! depends only on the start values in row 0.

use std::collections::BTreeMap;

use super::ConstructionError;
use crate::coloring::{Color, TotalColoring};
use crate::graph::Edge;

/// Maps a residue into `1..=q`, sending multiples of `q` to `q`.
pub fn normalize(x: i64, q: usize) -> Color {
    let q = q as i64;
    let r = x.rem_euclid(q);
    (if r == 0 { q } else { r }) as Color
}

/// Start value of a column and the value it forces at column `n + 2 - j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StartEntry {
    pub start: Color,
    pub wrap: Color,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StartEntryTable {
    q: usize,
    entries: BTreeMap<usize, StartEntry>,
}

impl StartEntryTable {
    pub fn modulus(&self) -> usize {
        self.q
    }

    pub fn get(&self, column: usize) -> Option<StartEntry> {
        self.entries.get(&column).copied()
    }

    pub fn start(&self, column: usize) -> Color {
        self.entries[&column].start
    }

    pub fn wrap(&self, column: usize) -> Color {
        self.entries[&column].wrap
    }

    pub fn columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.keys().copied()
    }

    /// All start and wrap values, column 1 counted once.
    pub fn values(&self) -> Vec<Color> {
        let mut out = Vec::new();
        for (&j, e) in &self.entries {
            out.push(e.start);
            if j != 1 {
                out.push(e.wrap);
            }
        }
        out
    }
}

/// Row-0 start values by the column rules:
///
/// * `j = 1` gets 1;
/// * odd `j > 1` gets `2 + (j-3)/2`, forcing `q - (j-3)/2` at the wrap column;
/// * even `j` gets `(q+1)/2 + (j-2)/2 + 1`, forcing `(q+1)/2 - (j-2)/2`.
///
/// All values are normalized into `1..=q`.
pub fn start_entries(q: usize, columns: &[usize], n: usize) -> Result<StartEntryTable, ConstructionError> {
    if q < 3 || q.is_multiple_of(2) {
        return Err(ConstructionError::Precondition(format!(
            "start-entry modulus must be odd and at least 3, got {q}"
        )));
    }
    if !n.is_multiple_of(q) {
        return Err(ConstructionError::Precondition(format!(
            "modulus {q} does not divide {n}"
        )));
    }
    let half = (q as i64 + 1) / 2;
    let mut entries = BTreeMap::new();
    for &j in columns {
        if j < 1 || j > n / 2 + 1 {
            return Err(ConstructionError::Precondition(format!(
                "column {j} outside 1..={}",
                n / 2 + 1
            )));
        }
        let ji = j as i64;
        let entry = if j == 1 {
            StartEntry { start: 1, wrap: 1 }
        } else if j % 2 == 1 {
            let t = (ji - 3) / 2;
            StartEntry {
                start: normalize(2 + t, q),
                wrap: normalize(q as i64 - t, q),
            }
        } else {
            let t = (ji - 2) / 2;
            StartEntry {
                start: normalize(half + t + 1, q),
                wrap: normalize(half - t, q),
            }
        };
        entries.insert(j, entry);
    }
    Ok(StartEntryTable { q, entries })
}

/// One requested difference and the residues realizing it:
/// `high - low ≡ diff (mod q)`, both nonzero.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StarterPair {
    pub diff: usize,
    pub high: usize,
    pub low: usize,
}

/// Disjoint pairs of nonzero residues mod `q`, one per requested difference.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarterPairing {
    pub q: usize,
    pub pairs: Vec<StarterPair>,
}

impl StarterPairing {
    /// Checks disjointness, nonzero members and the difference of each pair.
    pub fn is_valid(&self) -> bool {
        let mut used = vec![false; self.q];
        for p in &self.pairs {
            for x in [p.high, p.low] {
                if x == 0 || x >= self.q || used[x] {
                    return false;
                }
                used[x] = true;
            }
            if (p.high + self.q - p.low) % self.q != p.diff % self.q {
                return false;
            }
        }
        true
    }
}

/// Finds pairwise-disjoint pairs `{x, x - d}` of nonzero residues mod `q`,
/// one for each requested `d` (taken mod `q`, must be nonzero). Backtracks
/// over `x` ascending in request order, so the result is the
/// lexicographically least solution. `None` when no pairing exists.
pub fn starter_search(q: usize, diffs: &[usize]) -> Option<StarterPairing> {
    if q == 0 || diffs.len() > q.saturating_sub(1) / 2 {
        return None;
    }
    let ds: Vec<usize> = diffs.iter().map(|d| d % q).collect();
    if ds.contains(&0) {
        return None;
    }
    let mut used = vec![false; q];
    used[0] = true;
    let mut pairs = Vec::with_capacity(ds.len());
    if extend_pairing(q, &ds, &mut used, &mut pairs) {
        Some(StarterPairing { q, pairs })
    } else {
        None
    }
}

fn extend_pairing(q: usize, ds: &[usize], used: &mut [bool], pairs: &mut Vec<StarterPair>) -> bool {
    let Some(&d) = ds.get(pairs.len()) else {
        return true;
    };
    for high in 1..q {
        let low = (high + q - d) % q;
        if used[high] || used[low] {
            continue;
        }
        used[high] = true;
        used[low] = true;
        pairs.push(StarterPair { diff: d, high, low });
        if extend_pairing(q, ds, used, pairs) {
            return true;
        }
        pairs.pop();
        used[high] = false;
        used[low] = false;
    }
    false
}

/// Vertex `v` gets `(v mod q) + 1`; edge `{i, i+s}` gets
/// `((start - 1 + i) mod q) + 1` for each `(s, start)`.
pub fn fill_diagonals(n: usize, q: usize, generators: &[(usize, Color)]) -> TotalColoring {
    let mut c = TotalColoring::new(n);
    for v in 0..n {
        c.set_vertex(v, (v % q) as Color + 1);
    }
    for &(s, start) in generators {
        let rows = if 2 * s == n { n / 2 } else { n };
        for i in 0..rows {
            let color = ((start as usize - 1 + i) % q) as Color + 1;
            c.set_edge(Edge::new(i, (i + s) % n), color);
        }
    }
    c
}
