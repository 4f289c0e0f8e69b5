use std::collections::BTreeSet;
use std::sync::Arc;

use proptest::prelude::*;
use totalcolor::graph::dimacs::{parse_dimacs, write_dimacs};
use totalcolor::graph::{
    bipartition, build_cayley, build_circulant, build_unitary, two_factors, GroupTable,
};
use totalcolor::oracles::maximal_cliques;
use totalcolor::{CirculantSpec, Edge, Graph};

fn half_set() -> impl Strategy<Value = (usize, Vec<usize>)> {
    (3usize..40).prop_flat_map(|n| {
        (Just(n), proptest::collection::btree_set(1..=n / 2, 1..=(n / 2).max(1)))
            .prop_map(|(n, s)| (n, s.into_iter().collect()))
    })
}

fn circulant((n, half): &(usize, Vec<usize>)) -> Graph {
    build_circulant(&CirculantSpec::from_half_set(*n, half.iter().copied()).unwrap())
}

proptest! {
    #[test]
    fn adjacency_symmetric_irreflexive(inst in half_set()) {
        let g = circulant(&inst);
        for u in 0..g.n() {
            prop_assert!(!g.has_edge(u, u));
            for v in 0..g.n() {
                prop_assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
        }
    }

    #[test]
    fn translations_are_automorphisms(inst in half_set(), t in 0usize..40) {
        let g = circulant(&inst);
        let n = g.n();
        for u in 0..n {
            for v in 0..n {
                prop_assert_eq!(g.has_edge(u, v), g.has_edge((u + t) % n, (v + t) % n));
            }
        }
    }

    #[test]
    fn two_factors_partition_edges(inst in half_set()) {
        let g = circulant(&inst);
        let spec = g.circulant_spec().unwrap();
        let mut seen = BTreeSet::new();
        for f in two_factors(spec).factors {
            for e in f.edges() {
                prop_assert!(g.has_edge(e.u(), e.v()));
                prop_assert!(seen.insert(e), "edge {} in two factors", e);
            }
        }
        let all: BTreeSet<Edge> = g.edges().into_iter().collect();
        prop_assert_eq!(seen, all);
    }

    #[test]
    fn maximum_cliques_closed_under_translation(inst in half_set().prop_filter("small", |(n, _)| *n <= 24)) {
        let g = circulant(&inst);
        let n = g.n();
        let stats = maximal_cliques(&g);
        let maximum: BTreeSet<Vec<usize>> = stats.maximum().cloned().collect();
        for q in &maximum {
            for t in 0..n {
                let mut moved: Vec<usize> = q.iter().map(|&v| (v + t) % n).collect();
                moved.sort_unstable();
                prop_assert!(g.is_clique(&moved));
                prop_assert!(maximum.contains(&moved));
            }
        }
    }

    #[test]
    fn dimacs_round_trip(inst in half_set()) {
        let g = circulant(&inst);
        let text = write_dimacs(&g);
        let back = parse_dimacs(&text).unwrap();
        prop_assert_eq!(back.edges(), g.edges());
        prop_assert_eq!(back.circulant_spec(), g.circulant_spec());
        prop_assert_eq!(write_dimacs(&back), text);
    }
}

#[test]
fn even_unitary_graphs_are_bipartite() {
    for n in (4..=200).step_by(2) {
        let g = build_unitary(n).unwrap();
        let (a, b) = bipartition(&g).unwrap_or_else(|| panic!("U_{n} not bipartite"));
        assert_eq!(a.len() + b.len(), n);
    }
}

#[test]
fn left_translates_of_cliques_in_a_dihedral_cayley_graph() {
    // D_4 with generators r, r^3 and one reflection
    let table = Arc::new(GroupTable::dihedral(4));
    let r = 1;
    let r3 = table.inverse(r);
    let g = build_cayley(table.clone(), &[r, r3, 4]).unwrap();
    let stats = maximal_cliques(&g);
    assert!(stats.omega >= 2);
    for q in stats.maximum() {
        for x in 0..table.order() {
            let moved: Vec<usize> = q.iter().map(|&v| table.mul(x, v)).collect();
            assert!(g.is_clique(&moved));
            assert_eq!(moved.iter().collect::<BTreeSet<_>>().len(), q.len());
        }
    }
}
