use super::{Limit, OracleError};
use crate::graph::{complement, Graph};

/// Largest order accepted by [`is_perfect`].
pub const PERFECT_VERTEX_LIMIT: usize = 30;
const STEP_LIMIT: u64 = 200_000_000;

/// True iff neither `g` nor its complement has an induced odd cycle of
/// length at least 5.
pub fn is_perfect(g: &Graph) -> Result<bool, OracleError> {
    if g.n() > PERFECT_VERTEX_LIMIT {
        return Err(OracleError::Inconclusive {
            what: format!("perfectness of a graph on {} vertices", g.n()),
            limit: Limit::Size,
            nodes: 0,
        });
    }
    let mut steps = 0;
    for h in [g.clone(), complement(g)] {
        if has_odd_hole(&h, &mut steps)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Induced paths `s, p1, ..., pt` with every vertex above `s`; a hole is
/// closed when the last vertex is adjacent to `s` and to nothing else on the
/// path.
fn has_odd_hole(g: &Graph, steps: &mut u64) -> Result<bool, OracleError> {
    let mut path = Vec::new();
    for s in 0..g.n() {
        path.clear();
        path.push(s);
        if extend(g, &mut path, steps)? {
            return Ok(true);
        }
    }
    Ok(false)
}

fn extend(g: &Graph, path: &mut Vec<usize>, steps: &mut u64) -> Result<bool, OracleError> {
    *steps += 1;
    if *steps > STEP_LIMIT {
        return Err(OracleError::Inconclusive {
            what: "odd hole search".into(),
            limit: Limit::Nodes,
            nodes: *steps,
        });
    }
    let s = path[0];
    let last = *path.last().unwrap();
    for w in g.neighbors(last) {
        if w <= s || path.contains(&w) {
            continue;
        }
        let interior = if path.len() > 2 { &path[1..path.len() - 1] } else { &[][..] };
        if interior.iter().any(|&p| g.has_edge(p, w)) {
            continue;
        }
        if path.len() >= 2 && g.has_edge(s, w) {
            // path.len() + 1 vertices close into a cycle; length 3 is a triangle
            let len = path.len() + 1;
            if len >= 5 && len % 2 == 1 {
                return Ok(true);
            }
            continue;
        }
        path.push(w);
        let found = extend(g, path, steps)?;
        path.pop();
        if found {
            return Ok(true);
        }
    }
    Ok(false)
}
