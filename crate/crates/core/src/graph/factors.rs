use super::{gcd, CirculantSpec, Edge};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FactorKind {
    /// Vertex-disjoint cycles covering all vertices, each listed from its
    /// smallest vertex in generator order.
    Cycles(Vec<Vec<usize>>),
    /// The involution `s = n/2` gives a perfect matching.
    Matching(Vec<Edge>),
}

/// The spanning subgraph generated by one pair `{s, n - s}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoFactor {
    pub generator: usize,
    pub kind: FactorKind,
}

impl TwoFactor {
    pub fn edges(&self) -> Vec<Edge> {
        match &self.kind {
            FactorKind::Matching(m) => m.clone(),
            FactorKind::Cycles(cycles) => cycles
                .iter()
                .flat_map(|c| (0..c.len()).map(move |i| Edge::new(c[i], c[(i + 1) % c.len()])))
                .collect(),
        }
    }

    pub fn cycle_length(&self) -> usize {
        match &self.kind {
            FactorKind::Matching(_) => 2,
            FactorKind::Cycles(c) => c[0].len(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoFactorDecomposition {
    pub n: usize,
    pub factors: Vec<TwoFactor>,
}

/// One factor per representative `s <= n/2`, ascending.
pub fn two_factors(spec: &CirculantSpec) -> TwoFactorDecomposition {
    let n = spec.n();
    let factors = spec
        .half_set()
        .into_iter()
        .map(|s| {
            if 2 * s == n {
                let m = (0..n / 2).map(|v| Edge::new(v, v + s)).collect();
                return TwoFactor {
                    generator: s,
                    kind: FactorKind::Matching(m),
                };
            }
            let count = gcd(n, s);
            let len = n / count;
            let cycles = (0..count)
                .map(|start| (0..len).map(|t| (start + t * s) % n).collect())
                .collect();
            TwoFactor {
                generator: s,
                kind: FactorKind::Cycles(cycles),
            }
        })
        .collect();
    TwoFactorDecomposition { n, factors }
}
