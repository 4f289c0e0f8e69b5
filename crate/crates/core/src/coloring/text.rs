//! Line-oriented coloring files:
//!
//! ```text
//! t <n> <color-count>
//! v <vertex> <color>
//! e <u> <v> <color>
//! ```
//!
//! Vertices are 0-indexed. Output lists vertices ascending, then edges in
//! lexicographic order, so equal colorings serialize to equal bytes.

use std::fmt::Write;

use super::{color_count, Color, ColoringError, TotalColoring};
use crate::graph::Edge;
use crate::parse_error::{parse_num, ParseError};

pub fn write_coloring(c: &TotalColoring) -> String {
    let mut out = String::new();
    writeln!(out, "t {} {}", c.n(), color_count(c)).unwrap();
    for (v, col) in c.vertex_colors().iter().enumerate() {
        if let Some(col) = col {
            writeln!(out, "v {v} {col}").unwrap();
        }
    }
    for (e, col) in c.edge_colors() {
        writeln!(out, "e {} {} {col}", e.u(), e.v()).unwrap();
    }
    out
}

pub fn parse_coloring(text: &str) -> Result<TotalColoring, ColoringError> {
    let mut coloring: Option<(usize, TotalColoring, usize)> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut toks = raw.split_whitespace();
        let Some(kind) = toks.next() else { continue };
        if kind == "c" || kind.starts_with('#') {
            continue;
        }
        if kind == "t" {
            if coloring.is_some() {
                return Err(ParseError::new(line, "duplicate header").into());
            }
            let n = parse_num(toks.next(), line, "vertex count")?;
            let k = parse_num(toks.next(), line, "color count")?;
            coloring = Some((line, TotalColoring::new(n), k));
            continue;
        }
        let Some((_, c, _)) = coloring.as_mut() else {
            return Err(ParseError::new(line, "assignment before header").into());
        };
        let n = c.n();
        let vertex = |tok: Option<&str>| -> Result<usize, ParseError> {
            let v: usize = parse_num(tok, line, "vertex")?;
            if v >= n {
                return Err(ParseError::new(line, format!("vertex {v} out of range")));
            }
            Ok(v)
        };
        match kind {
            "v" => {
                let v = vertex(toks.next())?;
                let col: Color = parse_num(toks.next(), line, "color")?;
                if col == 0 {
                    return Err(ParseError::new(line, "color ids start at 1").into());
                }
                if c.vertex_color(v).is_some() {
                    return Err(ParseError::new(line, format!("vertex {v} colored twice")).into());
                }
                c.set_vertex(v, col);
            }
            "e" => {
                let a = vertex(toks.next())?;
                let b = vertex(toks.next())?;
                if a == b {
                    return Err(ParseError::new(line, "loop edge").into());
                }
                let col: Color = parse_num(toks.next(), line, "color")?;
                if col == 0 {
                    return Err(ParseError::new(line, "color ids start at 1").into());
                }
                let e = Edge::new(a, b);
                if c.edge_color(e).is_some() {
                    return Err(ParseError::new(line, format!("edge {e} colored twice")).into());
                }
                c.set_edge(e, col);
            }
            other => {
                return Err(ParseError::new(line, format!("unknown line type `{other}`")).into())
            }
        }
    }
    let (line, c, declared) = coloring.ok_or_else(|| ParseError::new(0, "missing `t` header"))?;
    if color_count(&c) != declared {
        return Err(ParseError::new(
            line,
            format!("header declares {declared} colors, found {}", color_count(&c)),
        )
        .into());
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn writes_sorted_lines() {
        let mut c = TotalColoring::new(2);
        c.set_edge(Edge::new(1, 0), 3);
        c.set_vertex(1, 2);
        c.set_vertex(0, 1);
        let text = write_coloring(&c);
        assert_eq!(text, "t 2 3\nv 0 1\nv 1 2\ne 0 1 3\n");
        assert_eq!(parse_coloring(&text).unwrap(), c);
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_coloring("v 0 1\n").is_err());
        assert!(parse_coloring("t 1 1\nv 3 1\n").is_err());
        assert!(parse_coloring("t 1 1\nv 0 0\n").is_err());
        assert!(parse_coloring("t 2 2\nv 0 1\nv 1 1\n").is_err());
        assert!(parse_coloring("t 2 1\nv 0 1\nv 0 1\n").is_err());
        assert!(parse_coloring("t 2 1\ne 0 0 1\n").is_err());
        assert!(parse_coloring("t 2 1\nq 0 0 1\n").is_err());
    }
}
