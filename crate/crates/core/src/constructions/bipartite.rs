//! Total colorings of bipartite graphs with Δ+2 colors.

use super::{edge_color_bipartite, finish, Construction, ConstructionError, Method};
use crate::coloring::{Color, TotalColoring};
use crate::graph::{bipartition, build_circulant, CirculantSpec, Edge, Graph};

/// `K_{m,m}` as the circulant on `Z_{2m}` with all odd differences; left
/// vertex `i` is `2i`, right vertex `j` is `2j + 1`.
pub fn complete_bipartite_graph(m: usize) -> Graph {
    assert!(m >= 1);
    let odd = (1..2 * m).step_by(2);
    build_circulant(&CirculantSpec::new(2 * m, odd).expect("odd residues are symmetric"))
}

/// Latin-square coloring of `K_{m,m}`: edge (left `i`, right `j`) gets
/// `((i + j) mod m) + 1`, left vertices `m + 1`, right vertices `m + 2`.
pub fn color_complete_bipartite(m: usize) -> Result<Construction, ConstructionError> {
    if m == 0 {
        return Err(ConstructionError::Precondition("m must be positive".into()));
    }
    let g = complete_bipartite_graph(m);
    let mut c = TotalColoring::new(2 * m);
    for i in 0..m {
        c.set_vertex(2 * i, m as Color + 1);
        c.set_vertex(2 * i + 1, m as Color + 2);
        for j in 0..m {
            c.set_edge(Edge::new(2 * i, 2 * j + 1), ((i + j) % m) as Color + 1);
        }
    }
    finish(&g, Method::CompleteBipartite, c, Vec::new(), None)
}

/// Any bipartite graph: a Δ-edge-coloring plus one color per side.
pub fn color_bipartite(g: &Graph) -> Result<Construction, ConstructionError> {
    let (a, b) = bipartition(g)
        .ok_or_else(|| ConstructionError::Precondition("graph is not bipartite".into()))?;
    let delta = g.max_degree() as Color;
    let mut c = TotalColoring::new(g.n());
    for (e, col) in edge_color_bipartite(g)? {
        c.set_edge(e, col);
    }
    for v in a {
        c.set_vertex(v, delta + 1);
    }
    for v in b {
        c.set_vertex(v, delta + 2);
    }
    finish(g, Method::CompleteBipartite, c, Vec::new(), None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_unitary;

    #[test]
    fn examples() {
        let r = color_complete_bipartite(4).unwrap();
        assert_eq!(r.color_count(), 6);
        assert_eq!(&complete_bipartite_graph(4), &build_unitary(8).unwrap());

        let r = color_complete_bipartite(1).unwrap();
        assert_eq!(r.color_count(), 3);
        assert_eq!(complete_bipartite_graph(1).edge_count(), 1);

        let r = color_complete_bipartite(2).unwrap();
        assert_eq!(r.color_count(), 4);
    }

    #[test]
    fn powers_of_two() {
        for k in 1..=6 {
            let n = 1usize << k;
            let r = color_complete_bipartite(n / 2).unwrap();
            assert_eq!(r.color_count(), (1 << (k - 1)) + 2);
        }
    }

    #[test]
    fn general_bipartite() {
        let g = build_unitary(30).unwrap();
        let r = color_bipartite(&g).unwrap();
        assert_eq!(r.color_count(), g.max_degree() + 2);
        assert!(color_bipartite(&Graph::complete(3)).is_err());
    }
}
