use std::collections::BTreeSet;

use proptest::prelude::*;
use totalcolor::coloring::{
    check_partition, parse_coloring, parse_matrix, parse_matrix_csv, render_matrix,
    residue_partition, verify_total, write_coloring, Conflict, CoverageError, PartitionMode,
    VertexPartition,
};
use totalcolor::graph::build_circulant;
use totalcolor::oracles::conformable_exists;
use totalcolor::{CirculantSpec, Edge, Graph, TotalColoring};

/// A small random graph with a random (usually improper) coloring. Some
/// vertices or edges are left blank and some non-edges get a color.
fn graph_and_coloring() -> impl Strategy<Value = (Graph, TotalColoring)> {
    (1usize..=12).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let m = pairs.len();
        (
            Just(n),
            Just(pairs),
            proptest::collection::vec(any::<bool>(), m),
            proptest::collection::vec(0u32..=4, m),
            proptest::collection::vec(0u32..=4, n),
        )
            .prop_map(|(n, pairs, present, ecol, vcol)| {
                let edges: Vec<(usize, usize)> =
                    pairs.iter().zip(&present).filter(|(_, &p)| p).map(|(&e, _)| e).collect();
                let g = Graph::from_edges(n, edges).unwrap();
                let mut c = TotalColoring::new(n);
                for (v, &col) in vcol.iter().enumerate() {
                    if col > 0 {
                        c.set_vertex(v, col);
                    }
                }
                for (&(u, v), &col) in pairs.iter().zip(&ecol) {
                    // mostly color real edges; occasionally a non-edge
                    if col > 0 && (g.has_edge(u, v) || col == 4) {
                        c.set_edge(Edge::new(u, v), col);
                    }
                }
                (g, c)
            })
    })
}

fn brute_conflicts(g: &Graph, c: &TotalColoring) -> (BTreeSet<Conflict>, BTreeSet<CoverageError>) {
    let n = g.n();
    let mut conflicts = BTreeSet::new();
    let mut coverage = BTreeSet::new();
    let edges = g.edges();
    for v in 0..n {
        if c.vertex_color(v).is_none() {
            coverage.insert(CoverageError::UncoloredVertex(v));
        }
    }
    for e in &edges {
        if c.edge_color(*e).is_none() {
            coverage.insert(CoverageError::UncoloredEdge(*e));
        }
    }
    for (e, _) in c.edge_colors() {
        if !g.has_edge(e.u(), e.v()) {
            coverage.insert(CoverageError::NonEdgeColored(e));
        }
    }
    for e in &edges {
        let (u, v) = (e.u(), e.v());
        if let (Some(a), Some(b)) = (c.vertex_color(u), c.vertex_color(v)) {
            if a == b {
                conflicts.insert(Conflict::VertexVertex(u, v));
            }
        }
        for x in [u, v] {
            if c.vertex_color(x).is_some() && c.vertex_color(x) == c.edge_color(*e) {
                conflicts.insert(Conflict::VertexEdge(x, *e));
            }
        }
    }
    for (i, a) in edges.iter().enumerate() {
        for b in &edges[i + 1..] {
            if let Some(x) = a.shared_vertex(b) {
                if c.edge_color(*a).is_some() && c.edge_color(*a) == c.edge_color(*b) {
                    conflicts.insert(Conflict::EdgeEdge(*a, *b, x));
                }
            }
        }
    }
    (conflicts, coverage)
}

proptest! {
    #[test]
    fn verifier_matches_brute_force((g, c) in graph_and_coloring()) {
        let report = verify_total(&g, &c);
        let (conflicts, coverage) = brute_conflicts(&g, &c);
        let got: BTreeSet<Conflict> = report.conflicts.iter().cloned().collect();
        let got_cov: BTreeSet<CoverageError> = report.coverage.iter().cloned().collect();
        prop_assert_eq!(&got, &conflicts);
        prop_assert_eq!(&got_cov, &coverage);
        prop_assert_eq!(report.conflicts.len(), got.len(), "duplicate conflicts");
        prop_assert!(report.conflicts.windows(2).all(|w| w[0] < w[1]), "report not sorted");
        prop_assert_eq!(report.is_valid(), conflicts.is_empty() && coverage.is_empty());
    }

    #[test]
    fn text_format_round_trips((_g, c) in graph_and_coloring()) {
        let text = write_coloring(&c);
        let back = parse_coloring(&text).unwrap();
        prop_assert_eq!(&back, &c);
        prop_assert_eq!(write_coloring(&back), text);
    }

    #[test]
    fn residue_classes_independent_iff_no_generator_divisible(
        (n, q, half) in (2usize..=60).prop_flat_map(|n| {
            let divisors: Vec<usize> = (1..=n).filter(|d| n % d == 0).collect();
            (
                Just(n),
                proptest::sample::select(divisors),
                proptest::collection::btree_set(1..=n / 2, 1..5),
            )
        })
    ) {
        let g = build_circulant(&CirculantSpec::from_half_set(n, half).unwrap());
        let p = residue_partition(n, q).unwrap();
        let independent = check_partition(&g, &p, PartitionMode::Independent).unwrap();
        let divisible = g.circulant_spec().unwrap().connection().iter().any(|s| s % q == 0);
        prop_assert_eq!(independent, !divisible);
    }

    #[test]
    fn conformable_is_label_invariant(
        n in 5usize..=13,
        seed in any::<u64>(),
    ) {
        let g = Graph::cycle(n);
        let q = 3 + (seed % 3) as usize;
        let Some(p) = conformable_exists(&g, q).unwrap() else { return Ok(()) };
        prop_assert!(check_partition(&g, &p, PartitionMode::Conformable(q)).unwrap());
        // rotate class order and relabel vertices within the same sets
        let mut classes = p.classes().to_vec();
        classes.rotate_left((seed as usize) % q);
        let shuffled = VertexPartition::new(n, classes).unwrap();
        prop_assert!(check_partition(&g, &shuffled, PartitionMode::Conformable(q)).unwrap());
    }
}

#[test]
fn matrix_round_trip_on_a_construction() {
    use totalcolor::constructions::color_unitary_even;
    for n in [6, 12, 24, 30] {
        let c = color_unitary_even(n).unwrap();
        let g = totalcolor::graph::build_unitary(n).unwrap();
        let csv = render_matrix(&g, &c.coloring).unwrap().to_csv();
        let m = parse_matrix_csv(&csv).unwrap();
        assert_eq!(m.to_csv(), csv);
        assert_eq!(parse_matrix(&m, Some(&g)).unwrap(), c.coloring);
    }
}
