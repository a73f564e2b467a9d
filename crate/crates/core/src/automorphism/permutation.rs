use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A bijection on `0..n`, stored as its image array.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Permutation> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &x in &image {
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!("{image:?}")));
            }
            seen[x] = true;
        }
        Ok(Permutation { image })
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation {
            image: (0..n).collect(),
        }
    }

    /// Builds a permutation from disjoint cycles, e.g. `[[0, 4], [1, 3]]`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Permutation> {
        let mut image: Vec<usize> = (0..n).collect();
        for c in cycles {
            for (i, &x) in c.iter().enumerate() {
                if x >= n {
                    return Err(Error::InvalidPermutation(format!("{cycles:?}")));
                }
                image[x] = c[(i + 1) % c.len()];
            }
        }
        Permutation::new(image)
    }

    pub(crate) fn from_image_unchecked(image: Vec<usize>) -> Permutation {
        debug_assert!(Permutation::new(image.clone()).is_ok());
        Permutation { image }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation {
            image: other.image.iter().map(|&x| self.image[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.image.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { image: inv }
    }

    /// True iff every vertex in `points` is fixed.
    pub fn fixes_all(&self, points: &[usize]) -> bool {
        points.iter().all(|&p| self.image[p] == p)
    }

    /// `{π(x) : x ∈ s}`.
    pub fn apply_to_set(&self, s: &VertexSet) -> VertexSet {
        VertexSet::from_unsorted(s.iter().map(|x| self.image[x]).collect())
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(image: Vec<usize>) -> Result<Self> {
        Permutation::new(image)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.image
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation, omitting fixed points; `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.len()];
        let mut wrote = false;
        for start in 0..self.len() {
            if seen[start] || self.image[start] == start {
                continue;
            }
            f.write_str("(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
                first = false;
                x = self.image[x];
            }
            f.write_str(")")?;
            wrote = true;
        }
        if !wrote {
            f.write_str("()")?;
        }
        Ok(())
    }
}

/// True iff `p` preserves adjacency and non-adjacency of `g`.
pub fn is_automorphism(g: &Graph, p: &Permutation) -> Result<bool> {
    if p.len() != g.n() {
        return Err(Error::SizeMismatch {
            left: p.len(),
            right: g.n(),
        });
    }
    // p is a bijection on vertices, so it is a bijection on unordered pairs;
    // mapping every edge onto an edge is then enough for both directions.
    Ok(g.edges()
        .iter()
        .all(|&(u, v)| g.has_edge(p.apply(u), p.apply(v))))
}
