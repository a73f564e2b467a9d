//! Edge-list and DIMACS `.col` readers and writers.
//!
//! Edge list: optional `#` comment lines, a header `n m`, then `m` lines of
//! 0-based `u v` pairs. DIMACS: `c` comments, `p edge n m`, then `e u v`
//! lines with 1-based ids. Line numbers in errors are 1-based.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, ParseErrorKind as K, Result};

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    it.next().is_none().then_some((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, K::MalformedHeader("empty input".into())))?;
    let (n, m) = parse_pair(header)
        .ok_or_else(|| Error::parse(header_line, K::MalformedHeader(header.into())))?;
    if n == 0 {
        return Err(Error::parse(
            header_line,
            K::MalformedHeader("n must be positive".into()),
        ));
    }

    let mut seen = BTreeSet::new();
    let mut last_line = header_line;
    for (lineno, line) in lines {
        last_line = lineno;
        let (u, v) =
            parse_pair(line).ok_or_else(|| Error::parse(lineno, K::MalformedEdge(line.into())))?;
        for x in [u, v] {
            if x >= n {
                return Err(Error::parse(lineno, K::VertexOutOfRange { vertex: x, n }));
            }
        }
        if u == v {
            return Err(Error::parse(lineno, K::SelfLoop(u)));
        }
        let e = (u.min(v), u.max(v));
        if !seen.insert(e) {
            return Err(Error::parse(lineno, K::DuplicateEdge(e.0, e.1)));
        }
    }
    if seen.len() != m {
        return Err(Error::parse(
            last_line,
            K::EdgeCountMismatch {
                declared: m,
                found: seen.len(),
            },
        ));
    }
    Graph::from_edges(n, seen)
}

pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = BTreeSet::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        last_line = lineno;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut parts = line.split_whitespace();
        match parts.next() {
            Some("p") => {
                let fields: Vec<&str> = parts.collect();
                let parsed = match fields.as_slice() {
                    [fmt, nv, _ne] if *fmt == "edge" || *fmt == "col" => nv.parse::<usize>().ok(),
                    _ => None,
                };
                match parsed {
                    Some(nv) if nv > 0 && n.is_none() => n = Some(nv),
                    _ => return Err(Error::parse(lineno, K::MalformedHeader(line.into()))),
                }
            }
            Some("e") => {
                let nv = n.ok_or(Error::parse(lineno, K::MissingProblemLine))?;
                let rest: Vec<&str> = parts.collect();
                let (u, v) = match rest.as_slice() {
                    [a, b] => match (a.parse::<usize>(), b.parse::<usize>()) {
                        (Ok(a), Ok(b)) => (a, b),
                        _ => return Err(Error::parse(lineno, K::MalformedEdge(line.into()))),
                    },
                    _ => return Err(Error::parse(lineno, K::MalformedEdge(line.into()))),
                };
                for x in [u, v] {
                    if x == 0 || x > nv {
                        return Err(Error::parse(
                            lineno,
                            K::VertexOutOfRange { vertex: x, n: nv },
                        ));
                    }
                }
                if u == v {
                    return Err(Error::parse(lineno, K::SelfLoop(u - 1)));
                }
                edges.insert(((u - 1).min(v - 1), (u - 1).max(v - 1)));
            }
            _ => return Err(Error::parse(lineno, K::UnknownLine(line.into()))),
        }
    }
    let n = n.ok_or(Error::parse(last_line.max(1), K::MissingProblemLine))?;
    Graph::from_edges(n, edges)
}

/// Edge-list text with edges sorted lexicographically.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn to_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn edge_list_examples() {
        let p5 = parse_edge_list("5 4\n0 1\n1 2\n2 3\n3 4").unwrap();
        assert_eq!(p5, Family::path(5).unwrap());
        let e3 = parse_edge_list("3 0").unwrap();
        assert_eq!((e3.n(), e3.m()), (3, 0));
        assert_eq!(
            parse_edge_list("2 1\n0 0"),
            Err(Error::parse(2, K::SelfLoop(0)))
        );
    }

    #[test]
    fn edge_list_errors_name_the_line() {
        assert!(matches!(
            parse_edge_list("five four\n"),
            Err(Error::Parse {
                line: 1,
                kind: K::MalformedHeader(_)
            })
        ));
        assert_eq!(
            parse_edge_list("# comment\n3 2\n0 1\n0 3\n"),
            Err(Error::parse(4, K::VertexOutOfRange { vertex: 3, n: 3 }))
        );
        assert_eq!(
            parse_edge_list("3 2\n0 1\n1 0\n"),
            Err(Error::parse(3, K::DuplicateEdge(0, 1)))
        );
        assert!(matches!(
            parse_edge_list("3 2\n0 1\n"),
            Err(Error::Parse {
                kind: K::EdgeCountMismatch {
                    declared: 2,
                    found: 1
                },
                ..
            })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n0 1 2\n"),
            Err(Error::Parse {
                line: 2,
                kind: K::MalformedEdge(_)
            })
        ));
        assert!(matches!(
            parse_edge_list("0 0\n"),
            Err(Error::Parse {
                line: 1,
                kind: K::MalformedHeader(_)
            })
        ));
    }

    #[test]
    fn dimacs_examples() {
        let k3 = parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3").unwrap();
        assert_eq!(k3, Family::complete(3).unwrap());
        let p4 = parse_dimacs("c a path\np edge 4 3\ne 1 2\ne 2 3\ne 3 4\n").unwrap();
        assert_eq!(p4, Family::path(4).unwrap());
        assert_eq!(
            parse_dimacs("p edge 2 1\ne 1 3"),
            Err(Error::parse(2, K::VertexOutOfRange { vertex: 3, n: 2 }))
        );
    }

    #[test]
    fn dimacs_collapses_duplicates() {
        let g = parse_dimacs("p edge 3 3\ne 1 2\ne 2 1\ne 1 2\n").unwrap();
        assert_eq!(g.edges(), &[(0, 1)]);
    }

    #[test]
    fn dimacs_errors() {
        assert_eq!(
            parse_dimacs("e 1 2\n"),
            Err(Error::parse(1, K::MissingProblemLine))
        );
        assert!(matches!(
            parse_dimacs("c nothing\n"),
            Err(Error::Parse {
                kind: K::MissingProblemLine,
                ..
            })
        ));
        assert!(matches!(
            parse_dimacs("p edge 3 1\ne 0 1\n"),
            Err(Error::Parse {
                line: 2,
                kind: K::VertexOutOfRange { vertex: 0, .. }
            })
        ));
        assert!(matches!(
            parse_dimacs("p edge 3 1\ne 2 2\n"),
            Err(Error::Parse {
                line: 2,
                kind: K::SelfLoop(1)
            })
        ));
    }

    #[test]
    fn writers_sort_edges() {
        let g = Graph::from_edges(4, [(3, 2), (1, 0), (0, 3)]).unwrap();
        assert_eq!(to_edge_list(&g), "4 3\n0 1\n0 3\n2 3\n");
        assert_eq!(to_dimacs(&g), "p edge 4 3\ne 1 2\ne 1 4\ne 3 4\n");
    }
}
