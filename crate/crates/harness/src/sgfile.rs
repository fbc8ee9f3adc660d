//! The SG text format:
//!
//! ```text
//! c optional comment
//! p sg <n> <m>
//! e <u> <v> <+|->
//! ```
//!
//! Vertices are 1-based on disk. The writer emits edges sorted by `(u, v)`.

use std::fs;
use std::path::Path;

use sgraph::{Sign, SignedGraph};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SgFileError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn parse_err(line: usize, msg: impl Into<String>) -> SgFileError {
    SgFileError::Parse { line, msg: msg.into() }
}

pub fn parse_sg(text: &str) -> Result<SignedGraph, SgFileError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut tok = raw.split_whitespace();
        let Some(kind) = tok.next() else { continue };
        let fields: Vec<&str> = tok.collect();
        match kind {
            "c" => {}
            "p" => {
                if header.is_some() {
                    return Err(parse_err(line, "second problem line"));
                }
                let [fmt, n, m] = fields[..] else {
                    return Err(parse_err(line, "expected `p sg <n> <m>`"));
                };
                if fmt != "sg" {
                    return Err(parse_err(line, format!("unknown format `{fmt}`")));
                }
                let n = n.parse().map_err(|_| parse_err(line, "bad vertex count"))?;
                let m = m.parse().map_err(|_| parse_err(line, "bad edge count"))?;
                header = Some((n, m, line));
            }
            "e" => {
                let Some((n, _, _)) = header else {
                    return Err(parse_err(line, "edge before problem line"));
                };
                let [u, v, s] = fields[..] else {
                    return Err(parse_err(line, "expected `e <u> <v> <+|->`"));
                };
                let vertex = |t: &str| -> Result<usize, SgFileError> {
                    let x: usize = t.parse().map_err(|_| parse_err(line, format!("bad vertex `{t}`")))?;
                    if x == 0 || x > n {
                        return Err(parse_err(line, format!("vertex {x} outside 1..={n}")));
                    }
                    Ok(x - 1)
                };
                let (u, v) = (vertex(u)?, vertex(v)?);
                if u == v {
                    return Err(parse_err(line, format!("self-loop at {}", u + 1)));
                }
                let sign = match s {
                    "+" => Sign::Positive,
                    "-" => Sign::Negative,
                    _ => return Err(parse_err(line, format!("bad sign `{s}`"))),
                };
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(parse_err(line, format!("duplicate edge {} {}", u + 1, v + 1)));
                }
                edges.push((u, v, sign));
            }
            other => return Err(parse_err(line, format!("unknown line type `{other}`"))),
        }
    }
    let Some((n, m, line)) = header else {
        return Err(parse_err(text.lines().count().max(1), "missing problem line"));
    };
    if edges.len() != m {
        return Err(parse_err(line, format!("header announces {m} edges, found {}", edges.len())));
    }
    SignedGraph::new(n, edges).map_err(|e| parse_err(line, e.to_string()))
}

pub fn format_sg(g: &SignedGraph) -> String {
    let mut out = format!("p sg {} {}\n", g.n(), g.m());
    for (u, v, s) in g.edges() {
        out.push_str(&format!("e {} {} {}\n", u + 1, v + 1, s.as_char()));
    }
    out
}

pub fn read_sg(path: impl AsRef<Path>) -> Result<SignedGraph, SgFileError> {
    parse_sg(&fs::read_to_string(path)?)
}

pub fn write_sg(g: &SignedGraph, path: impl AsRef<Path>) -> Result<(), SgFileError> {
    fs::write(path, format_sg(g))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn negative_edge() {
        let g = parse_sg("p sg 2 1\ne 1 2 -\n").unwrap();
        assert_eq!(g, SignedGraph::complete(2, Sign::Negative));
    }

    #[test]
    fn errors_carry_lines() {
        let cases = [
            ("p sg 2 1\ne 1 1 +\n", 2),
            ("c x\np sg 2 1\ne 1 3 +\n", 3),
            ("e 1 2 +\n", 1),
            ("p sg 3 2\ne 1 2 +\ne 2 1 -\n", 3),
            ("p sg 3 2\ne 1 2 +\n", 1),
            ("p sg 3 1\ne 1 2 *\n", 2),
            ("p col 3 0\n", 1),
        ];
        for (text, line) in cases {
            match parse_sg(text) {
                Err(SgFileError::Parse { line: l, .. }) => assert_eq!(l, line, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
    }

    #[test]
    fn sorted_output() {
        let g = SignedGraph::new(3, [(2, 1, Sign::Positive), (0, 2, Sign::Negative)]).unwrap();
        assert_eq!(format_sg(&g), "p sg 3 2\ne 1 3 -\ne 2 3 +\n");
    }
}
