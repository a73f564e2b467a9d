//! Simple undirected graphs on dense vertex ids `0..n`.

use std::borrow::Cow;
use std::collections::BTreeMap;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

mod family;
mod io;

pub use family::{Family, FamilyKind};
pub use io::{parse_dimacs, parse_edge_list, to_dimacs, to_edge_list};

/// An immutable simple graph. Edges are stored once as `(u, v)` with `u < v`,
/// sorted lexicographically; adjacency lists are sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    labels: BTreeMap<usize, String>,
}

impl Graph {
    /// Builds a graph from an edge list. Repeated edges (in either
    /// orientation) collapse; self-loops and out-of-range endpoints are errors.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: u.max(v),
                    n,
                });
            }
            if u == v {
                return Err(Error::InvalidEdge(u, v, "self-loop"));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        list.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &list {
            adj[u].push(v);
            adj[v].push(u);
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: list,
            adj,
            labels: BTreeMap::new(),
        })
    }

    /// Edgeless graph on `n` vertices.
    pub fn edgeless(n: usize) -> Result<Graph> {
        Graph::from_edges(n, std::iter::empty())
    }

    pub fn with_labels(mut self, labels: BTreeMap<usize, String>) -> Result<Graph> {
        if let Some((&v, _)) = labels.iter().next_back() {
            if v >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
        }
        self.labels = labels;
        Ok(self)
    }

    /// Order of the graph.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Size of the graph.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Sorted neighbour slice; panics if `v >= n`.
    pub fn adjacent(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Open neighbourhood `N(x)`.
    pub fn neighbors(&self, x: usize) -> Result<VertexSet> {
        if x >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: x,
                n: self.n,
            });
        }
        Ok(VertexSet::from_sorted(self.adj[x].clone()))
    }

    /// Display label of `v`, defaulting to its id.
    pub fn label(&self, v: usize) -> Cow<'_, str> {
        match self.labels.get(&v) {
            Some(s) => Cow::Borrowed(s.as_str()),
            None => Cow::Owned(v.to_string()),
        }
    }

    pub fn labels(&self) -> &BTreeMap<usize, String> {
        &self.labels
    }

    /// Same vertex set, complementary edge set.
    pub fn complement(&self) -> Graph {
        let edges = (0..self.n)
            .flat_map(|u| (u + 1..self.n).map(move |v| (u, v)))
            .filter(|&(u, v)| !self.has_edge(u, v));
        Graph::from_edges(self.n, edges).expect("valid by construction")
    }

    /// Erdős–Rényi `G(n, p)`: each pair is an edge independently with
    /// probability `p`.
    pub fn random<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, edges)
    }

    /// Plain `{n, edges}` view for JSON output.
    pub fn summary(&self) -> GraphSummary {
        GraphSummary {
            n: self.n,
            m: self.edges.len(),
            edges: self.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub n: usize,
    pub m: usize,
    pub edges: Vec<[usize; 2]>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn collapses_duplicates_and_rejects_loops() {
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (2, 1)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(
            Graph::from_edges(3, [(1, 1)]),
            Err(Error::InvalidEdge(1, 1, "self-loop"))
        );
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::edgeless(0), Err(Error::EmptyGraph));
    }

    #[test]
    fn neighbours() {
        let p5 = Family::path(5).unwrap();
        assert_eq!(p5.neighbors(2).unwrap().as_slice(), &[1, 3]);
        let k4 = Family::complete(4).unwrap();
        assert_eq!(k4.neighbors(0).unwrap().as_slice(), &[1, 2, 3]);
        let e = Graph::edgeless(4).unwrap();
        assert!(e.neighbors(3).unwrap().is_empty());
        assert_eq!(
            p5.neighbors(5),
            Err(Error::VertexOutOfRange { vertex: 5, n: 5 })
        );
    }

    #[test]
    fn complement_and_random() {
        use rand::SeedableRng;
        let c = Family::path(4).unwrap().complement();
        assert_eq!(c.edges(), &[(0, 2), (0, 3), (1, 3)]);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0);
        let g = Graph::random(7, 0.5, &mut rng).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0);
        assert_eq!(g, Graph::random(7, 0.5, &mut rng).unwrap());
        assert_eq!(Graph::random(5, 1.0, &mut rng).unwrap().m(), 10);
    }

    #[test]
    fn labels_default_to_ids() {
        let g = Graph::edgeless(3)
            .unwrap()
            .with_labels(BTreeMap::from([(1, "b".to_string())]))
            .unwrap();
        assert_eq!(g.label(0), "0");
        assert_eq!(g.label(1), "b");
    }
}
