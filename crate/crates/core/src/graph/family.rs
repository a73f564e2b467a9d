use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Edgeless,
    Rigid6,
}

impl FamilyKind {
    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Path => "path",
            FamilyKind::Cycle => "cycle",
            FamilyKind::Complete => "complete",
            FamilyKind::CompleteBipartite => "complete_bipartite",
            FamilyKind::Edgeless => "edgeless",
            FamilyKind::Rigid6 => "rigid6",
        }
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "path" => FamilyKind::Path,
            "cycle" => FamilyKind::Cycle,
            "complete" => FamilyKind::Complete,
            "complete_bipartite" => FamilyKind::CompleteBipartite,
            "edgeless" => FamilyKind::Edgeless,
            "rigid6" => FamilyKind::Rigid6,
            other => return Err(Error::InvalidFamily(format!("unknown family '{other}'"))),
        })
    }
}

/// A named deterministic graph family with its parameters, written
/// `name:p1,p2` on the command line (e.g. `path:5`, `complete_bipartite:2,3`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Family {
    pub kind: FamilyKind,
    pub params: Vec<usize>,
}

/// Edges of the fixed 6-vertex asymmetric graph: triangle {1,2,5} with the
/// pendant vertex 0 on 1 and the pendant path 2-3-4.
pub const RIGID6_EDGES: [(usize, usize); 6] = [(0, 1), (1, 2), (1, 5), (2, 3), (2, 5), (3, 4)];

impl Family {
    pub fn new(kind: FamilyKind, params: Vec<usize>) -> Self {
        Family { kind, params }
    }

    /// Builds the family member.
    pub fn build(&self) -> Result<Graph> {
        let bad = |msg: &str| Error::InvalidFamily(format!("{}: {msg}", self.kind.name()));
        let one = |min: usize| -> Result<usize> {
            match self.params.as_slice() {
                [n] if *n >= min => Ok(*n),
                [_] => Err(bad(&format!("needs n >= {min}"))),
                _ => Err(bad("expects one parameter")),
            }
        };
        match self.kind {
            FamilyKind::Path => {
                let n = one(1)?;
                Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
            }
            FamilyKind::Cycle => {
                let n = one(3)?;
                Graph::from_edges(n, (1..n).map(|i| (i - 1, i)).chain([(0, n - 1)]))
            }
            FamilyKind::Complete => {
                let n = one(1)?;
                Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
            }
            FamilyKind::Edgeless => Graph::edgeless(one(1)?),
            FamilyKind::CompleteBipartite => match self.params.as_slice() {
                &[m, n] if m >= 1 && n >= 1 => {
                    Graph::from_edges(m + n, (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v))))
                }
                [_, _] => Err(bad("needs m, n >= 1")),
                _ => Err(bad("expects two parameters m,n")),
            },
            FamilyKind::Rigid6 => {
                if !self.params.is_empty() {
                    return Err(bad("takes no parameters"));
                }
                Graph::from_edges(6, RIGID6_EDGES)
            }
        }
    }

    pub fn path(n: usize) -> Result<Graph> {
        Family::new(FamilyKind::Path, vec![n]).build()
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        Family::new(FamilyKind::Cycle, vec![n]).build()
    }

    pub fn complete(n: usize) -> Result<Graph> {
        Family::new(FamilyKind::Complete, vec![n]).build()
    }

    pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
        Family::new(FamilyKind::CompleteBipartite, vec![m, n]).build()
    }

    pub fn rigid6() -> Graph {
        Family::new(FamilyKind::Rigid6, vec![])
            .build()
            .expect("fixed edge list is valid")
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, rest) = match s.split_once(':') {
            Some((name, rest)) => (name, Some(rest)),
            None => (s, None),
        };
        let kind: FamilyKind = name.trim().parse()?;
        let params = match rest {
            None => Vec::new(),
            Some(rest) => rest
                .split(',')
                .map(|p| {
                    p.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::InvalidFamily(format!("bad parameter '{p}' in '{s}'")))
                })
                .collect::<Result<_>>()?,
        };
        Ok(Family { kind, params })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.kind.name())?;
        if !self.params.is_empty() {
            let ps: Vec<String> = self.params.iter().map(|p| p.to_string()).collect();
            write!(f, ":{}", ps.join(","))?;
        }
        Ok(())
    }
}
