//! DIMACS-style edge lists.
//!
//! ```text
//! c circulant 5 1 4
//! p edge 5 5
//! e 1 2
//! ```
//!
//! Vertices are 1-indexed on disk. Circulant provenance travels in a
//! `c circulant <n> <s1> <s2> ...` comment; group-table provenance in one
//! `c group <row>` comment per table row plus `c cayley <s1> <s2> ...`
//! (elements 0-indexed, as in the table).

use std::fmt::Write;
use std::sync::Arc;

use super::{build_cayley, build_circulant, CirculantSpec, GroupTable, Graph, Origin};
use crate::parse_error::{parse_num, ParseError};

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = String::new();
    match g.origin() {
        Some(Origin::Circulant(spec)) => {
            write!(out, "c circulant {}", spec.n()).unwrap();
            for s in spec.connection() {
                write!(out, " {s}").unwrap();
            }
            out.push('\n');
        }
        Some(Origin::Cayley { table, generators }) => {
            for a in 0..table.order() {
                out.push_str("c group");
                for b in 0..table.order() {
                    write!(out, " {}", table.mul(a, b)).unwrap();
                }
                out.push('\n');
            }
            out.push_str("c cayley");
            for s in generators {
                write!(out, " {s}").unwrap();
            }
            out.push('\n');
        }
        None => {}
    }
    let edges = g.edges();
    writeln!(out, "p edge {} {}", g.n(), edges.len()).unwrap();
    for e in edges {
        writeln!(out, "e {} {}", e.u() + 1, e.v() + 1).unwrap();
    }
    out
}

pub fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut circulant: Option<(usize, CirculantSpec)> = None;
    let mut group_rows: Vec<Vec<usize>> = Vec::new();
    let mut cayley: Option<(usize, Vec<usize>)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut toks = raw.split_whitespace();
        match toks.next() {
            None => continue,
            Some("c") => match toks.next() {
                Some("circulant") => {
                    let n: usize = parse_num(toks.next(), line, "circulant order")?;
                    let conn = toks
                        .map(|t| parse_num::<usize>(Some(t), line, "connection element"))
                        .collect::<Result<Vec<_>, _>>()?;
                    let spec = CirculantSpec::new(n, conn)
                        .map_err(|e| ParseError::new(line, e.to_string()))?;
                    circulant = Some((line, spec));
                }
                Some("group") => {
                    let row = toks
                        .map(|t| parse_num::<usize>(Some(t), line, "group element"))
                        .collect::<Result<Vec<_>, _>>()?;
                    group_rows.push(row);
                }
                Some("cayley") => {
                    let gens = toks
                        .map(|t| parse_num::<usize>(Some(t), line, "generator"))
                        .collect::<Result<Vec<_>, _>>()?;
                    cayley = Some((line, gens));
                }
                _ => {}
            },
            Some("p") => {
                if header.is_some() {
                    return Err(ParseError::new(line, "duplicate problem line"));
                }
                match toks.next() {
                    Some("edge") | Some("col") => {}
                    other => {
                        return Err(ParseError::new(
                            line,
                            format!("unsupported problem type {other:?}"),
                        ))
                    }
                }
                let n = parse_num(toks.next(), line, "vertex count")?;
                let m = parse_num(toks.next(), line, "edge count")?;
                header = Some((line, n, m));
            }
            Some("e") => {
                let Some((_, n, _)) = header else {
                    return Err(ParseError::new(line, "edge before problem line"));
                };
                let a: usize = parse_num(toks.next(), line, "endpoint")?;
                let b: usize = parse_num(toks.next(), line, "endpoint")?;
                if a == 0 || b == 0 || a > n || b > n {
                    return Err(ParseError::new(line, format!("endpoint out of range 1..={n}")));
                }
                if a == b {
                    return Err(ParseError::new(line, "self-loop"));
                }
                edges.push((a - 1, b - 1));
            }
            Some(tok) => return Err(ParseError::new(line, format!("unknown line type `{tok}`"))),
        }
    }
    let (hline, n, m) = header.ok_or_else(|| ParseError::new(0, "missing problem line"))?;
    let g = Graph::from_edges(n, edges).map_err(|e| ParseError::new(hline, e.to_string()))?;
    if g.edge_count() != m {
        return Err(ParseError::new(
            hline,
            format!("header declares {m} edges, found {} distinct", g.edge_count()),
        ));
    }
    if let Some((line, gens)) = cayley {
        let table = GroupTable::new(group_rows).map_err(|e| ParseError::new(line, e.to_string()))?;
        if table.order() != n {
            return Err(ParseError::new(line, "group order disagrees with header"));
        }
        let c = build_cayley(Arc::new(table), &gens).map_err(|e| ParseError::new(line, e.to_string()))?;
        if c.edges() != g.edges() {
            return Err(ParseError::new(line, "edges disagree with Cayley provenance"));
        }
        return Ok(c);
    }
    match circulant {
        None => Ok(g),
        Some((line, spec)) => {
            if spec.n() != n {
                return Err(ParseError::new(line, "circulant order disagrees with header"));
            }
            let c = build_circulant(&spec);
            if c.edges() != g.edges() {
                return Err(ParseError::new(line, "edges disagree with circulant provenance"));
            }
            Ok(c)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_unitary;

    #[test]
    fn round_trip_keeps_cayley_provenance() {
        let t = Arc::new(GroupTable::dihedral(3));
        let g = build_cayley(t, &[1, 2]).unwrap();
        let back = parse_dimacs(&write_dimacs(&g)).unwrap();
        assert_eq!(back, g);
        assert!(matches!(back.origin(), Some(Origin::Cayley { .. })));
    }

    #[test]
    fn round_trip_keeps_provenance() {
        let g = build_unitary(10).unwrap();
        let text = write_dimacs(&g);
        assert!(text.starts_with("c circulant 10 1 3 7 9\np edge 10 20\ne 1 2\n"));
        let back = parse_dimacs(&text).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn plain_edge_list() {
        let g = parse_dimacs("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 3 1\n").unwrap();
        assert!(g.is_complete());
        assert!(g.origin().is_none());
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_dimacs("e 1 2\n").is_err());
        assert!(parse_dimacs("p edge 3 1\ne 1 4\n").is_err());
        assert!(parse_dimacs("p edge 3 2\ne 1 2\n").is_err());
        assert!(parse_dimacs("p edge 3 1\ne 1 1\n").is_err());
        assert!(parse_dimacs("c circulant 4 1 3\np edge 4 1\ne 1 2\n").is_err());
        let err = parse_dimacs("p edge 3 1\nx 1 2\n").unwrap_err();
        assert_eq!(err.line, 2);
    }
}
