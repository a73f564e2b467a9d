//! Automorphism groups and orbit partitions.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::Partition;
use crate::vertex_set::VertexSet;

mod brute;
mod permutation;
mod refine;
mod search;
mod union_find;

pub use brute::{brute_force_automorphisms, DEFAULT_ORACLE_BOUND};
pub use permutation::{is_automorphism, Permutation};
pub use refine::{color_refinement, is_equitable};
pub use search::automorphism_generators;

use union_find::UnionFind;

/// Generators of `Aut(G)`. Empty when the group is trivial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSet {
    pub generators: Vec<Permutation>,
    /// Exact group order; `None` when it was not computed or overflowed.
    pub group_order: Option<u128>,
}

/// The partition of `V` into automorphism orbits.
///
/// Orbit ids follow the order of each orbit's smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPartition {
    orbit_of: Vec<usize>,
    orbits: Vec<VertexSet>,
}

#[derive(Serialize, Deserialize)]
struct OrbitRepr {
    k: usize,
    orbits: Vec<VertexSet>,
}

impl Serialize for OrbitPartition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        OrbitRepr {
            k: self.k(),
            orbits: self.orbits.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for OrbitPartition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = OrbitRepr::deserialize(d)?;
        if repr.k != repr.orbits.len() {
            return Err(D::Error::custom("k does not match the number of orbits"));
        }
        let n = repr.orbits.iter().map(VertexSet::len).sum();
        let p = Partition::from_blocks(n, repr.orbits).map_err(D::Error::custom)?;
        Ok(OrbitPartition::from_partition(&p))
    }
}

impl OrbitPartition {
    /// Orbits of the group generated by `generators` acting on `0..n`.
    pub fn from_generators(n: usize, generators: &[Permutation]) -> Result<OrbitPartition> {
        let mut uf = UnionFind::new(n);
        for p in generators {
            if p.len() != n {
                return Err(Error::SizeMismatch {
                    left: p.len(),
                    right: n,
                });
            }
            for v in 0..n {
                uf.union(v, p.apply(v));
            }
        }
        let roots: Vec<usize> = (0..n).map(|v| uf.find(v)).collect();
        Ok(OrbitPartition::from_partition(&Partition::from_keys(
            &roots,
        )))
    }

    /// Reinterprets a partition as an orbit partition. The caller vouches
    /// that the blocks really are orbits.
    pub fn from_partition(p: &Partition) -> OrbitPartition {
        OrbitPartition {
            orbit_of: (0..p.n()).map(|v| p.block_index(v)).collect(),
            orbits: p.blocks().to_vec(),
        }
    }

    pub fn n(&self) -> usize {
        self.orbit_of.len()
    }

    /// Number of orbits.
    pub fn k(&self) -> usize {
        self.orbits.len()
    }

    pub fn orbits(&self) -> &[VertexSet] {
        &self.orbits
    }

    pub fn orbit_id(&self, v: usize) -> usize {
        self.orbit_of[v]
    }

    /// `O(v)`.
    pub fn orbit(&self, v: usize) -> &VertexSet {
        &self.orbits[self.orbit_of[v]]
    }

    pub fn same_orbit(&self, u: usize, v: usize) -> bool {
        self.orbit_of[u] == self.orbit_of[v]
    }

    /// Ids of the orbits that meet `a`, ascending.
    pub fn orbits_meeting(&self, a: &VertexSet) -> Vec<usize> {
        let mut ids: Vec<usize> = a.iter().map(|v| self.orbit_of[v]).collect();
        ids.sort_unstable();
        ids.dedup();
        ids
    }

    /// `O(A)`: union of the orbits of members of `a`.
    pub fn closure(&self, a: &VertexSet) -> VertexSet {
        let mut hit = vec![false; self.k()];
        for v in a.iter() {
            hit[self.orbit_of[v]] = true;
        }
        VertexSet::from_sorted((0..self.n()).filter(|&v| hit[self.orbit_of[v]]).collect())
    }

    pub fn to_partition(&self) -> Partition {
        Partition::from_keys(&self.orbit_of)
    }

    /// True when every orbit is a singleton.
    pub fn is_rigid(&self) -> bool {
        self.k() == self.n()
    }
}

/// Orbit partition of `g` computed with the refinement search.
pub fn orbits(g: &Graph) -> OrbitPartition {
    let gens = automorphism_generators(g);
    OrbitPartition::from_generators(g.n(), &gens.generators).expect("generators match graph order")
}

/// Orbit partition computed from the exhaustive n! oracle.
pub fn orbits_brute_force(g: &Graph, bound: usize) -> Result<OrbitPartition> {
    let gens = brute_force_automorphisms(g, bound)?;
    OrbitPartition::from_generators(g.n(), &gens.generators)
}

/// `O(A)` for a set of vertices.
pub fn orbit_closure(op: &OrbitPartition, a: &VertexSet) -> VertexSet {
    op.closure(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn sets(op: &OrbitPartition) -> Vec<Vec<usize>> {
        op.orbits().iter().map(|o| o.as_slice().to_vec()).collect()
    }

    #[test]
    fn path_orbits() {
        let op = orbits(&Family::path(5).unwrap());
        assert_eq!(sets(&op), vec![vec![0, 4], vec![1, 3], vec![2]]);
        assert_eq!(op.k(), 3);
        assert_eq!(
            serde_json::to_string(&op).unwrap(),
            r#"{"k":3,"orbits":[[0,4],[1,3],[2]]}"#
        );
    }

    #[test]
    fn complete_and_bipartite_orbits() {
        let op = orbits(&Family::complete(6).unwrap());
        assert_eq!(op.k(), 1);
        let op = orbits(&Family::complete_bipartite(2, 3).unwrap());
        assert_eq!(sets(&op), vec![vec![0, 1], vec![2, 3, 4]]);
        let op = orbits(&Family::complete_bipartite(4, 2).unwrap());
        assert_eq!(sets(&op), vec![vec![0, 1, 2, 3], vec![4, 5]]);
    }

    #[test]
    fn closure_examples() {
        let op = orbits(&Family::path(5).unwrap());
        assert_eq!(op.closure(&VertexSet::from([0])).as_slice(), &[0, 4]);
        assert!(op.closure(&VertexSet::new()).is_empty());
        let k = orbits(&Family::complete(4).unwrap());
        assert_eq!(orbit_closure(&k, &VertexSet::from([0])), VertexSet::full(4));
    }

    #[test]
    fn orbits_agree_with_oracle() {
        for g in [
            Family::path(6).unwrap(),
            Family::cycle(5).unwrap(),
            Family::rigid6(),
        ] {
            assert_eq!(
                orbits(&g),
                orbits_brute_force(&g, DEFAULT_ORACLE_BOUND).unwrap()
            );
        }
    }

    #[test]
    fn json_round_trip_checks_k() {
        let op: OrbitPartition = serde_json::from_str(r#"{"k":2,"orbits":[[1],[0,2]]}"#).unwrap();
        assert_eq!(op.orbit_id(2), 0);
        assert!(serde_json::from_str::<OrbitPartition>(r#"{"k":3,"orbits":[[1],[0,2]]}"#).is_err());
    }
}
