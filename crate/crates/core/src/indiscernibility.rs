//! The Boolean information table of a graph and the indiscernibility
//! partitions `γ_A` it induces.
//!
//! Two vertices are `A`-indiscernible when their orbits meet `A` in the same
//! set. The resulting partition has one block per orbit meeting `A`, plus
//! the complement of `O(A)` as a single block when that is non-empty.

use serde::{Deserialize, Serialize};

use crate::automorphism::OrbitPartition;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::vertex_set::VertexSet;

/// `F(x, y) = 1` iff `y ∈ O(x)`. Symmetric with a true diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InformationTable {
    n: usize,
    f: Vec<bool>,
}

impl InformationTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, x: usize, y: usize) -> bool {
        self.f[x * self.n + y]
    }

    pub fn row(&self, x: usize) -> &[bool] {
        &self.f[x * self.n..(x + 1) * self.n]
    }

    /// Row comparison restricted to the attributes in `a`.
    pub fn indiscernible_by_rows(&self, x: usize, y: usize, a: &VertexSet) -> bool {
        a.iter().all(|z| self.get(x, z) == self.get(y, z))
    }

    /// `γ_A` computed from table rows: vertices with equal rows on `a`
    /// share a block.
    pub fn partition_by_rows(&self, a: &VertexSet) -> Partition {
        let keys: Vec<Vec<bool>> = (0..self.n)
            .map(|x| a.iter().map(|z| self.get(x, z)).collect())
            .collect();
        Partition::from_keys(&keys)
    }
}

pub fn information_table(op: &OrbitPartition) -> InformationTable {
    let n = op.n();
    let mut f = vec![false; n * n];
    for x in 0..n {
        for y in op.orbit(x).iter() {
            f[x * n + y] = true;
        }
    }
    InformationTable { n, f }
}

fn check_vertex(op: &OrbitPartition, v: usize) -> Result<()> {
    if v >= op.n() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: op.n(),
        });
    }
    Ok(())
}

fn assert_within(op: &OrbitPartition, a: &VertexSet) {
    if let Err(e) = a.check_within(op.n()) {
        panic!("attribute set outside the vertex range: {e}");
    }
}

/// `x ≡_A y` iff `O(x) ∩ A = O(y) ∩ A`.
pub fn indiscernible(op: &OrbitPartition, x: usize, y: usize, a: &VertexSet) -> Result<bool> {
    check_vertex(op, x)?;
    check_vertex(op, y)?;
    assert_within(op, a);
    Ok(op.same_orbit(x, y) || (!op.orbit(x).intersects(a) && !op.orbit(y).intersects(a)))
}

/// `B_A = V \ O(A)`.
pub fn unreferenced_block(op: &OrbitPartition, a: &VertexSet) -> VertexSet {
    op.closure(a).complement(op.n())
}

/// `γ_A`: every orbit meeting `a` is a block, and `V \ O(A)` is one more
/// block when non-empty.
pub fn indiscernibility_partition(op: &OrbitPartition, a: &VertexSet) -> Partition {
    assert_within(op, a);
    let mut hit = vec![false; op.k()];
    for v in a.iter() {
        hit[op.orbit_id(v)] = true;
    }
    let keys: Vec<usize> = (0..op.n())
        .map(|v| {
            let o = op.orbit_id(v);
            if hit[o] {
                o
            } else {
                usize::MAX
            }
        })
        .collect();
    Partition::from_keys(&keys)
}

/// `γ_A` assembled from pairwise [`indiscernible`] checks: each vertex
/// joins the block of the first earlier representative it is
/// indiscernible from.
pub fn indiscernibility_partition_pairwise(op: &OrbitPartition, a: &VertexSet) -> Partition {
    let mut reps: Vec<usize> = Vec::new();
    let keys: Vec<usize> = (0..op.n())
        .map(|v| {
            let found = reps
                .iter()
                .position(|&r| indiscernible(op, r, v, a).expect("in range"));
            found.unwrap_or_else(|| {
                reps.push(v);
                reps.len() - 1
            })
        })
        .collect();
    Partition::from_keys(&keys)
}

pub fn partitions_equal(p1: &Partition, p2: &Partition) -> Result<bool> {
    p1.equals(p2)
}

/// `p1 ⪯ p2`.
pub fn refines(p1: &Partition, p2: &Partition) -> Result<bool> {
    p1.refines(p2)
}

/// Interior, exterior and delimiting vertices of an attribute set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    /// `O(x) ⊆ A`.
    pub interior: VertexSet,
    /// `O(x) ⊆ V \ A`.
    pub exterior: VertexSet,
    /// `O(x)` meets both `A` and `V \ A`.
    pub delimiting: VertexSet,
}

pub fn classify_vertices(op: &OrbitPartition, a: &VertexSet) -> Classification {
    assert_within(op, a);
    let mut interior = Vec::new();
    let mut exterior = Vec::new();
    let mut delimiting = Vec::new();
    for x in 0..op.n() {
        let orbit = op.orbit(x);
        let inside = orbit.iter().filter(|&v| a.contains(v)).count();
        if inside == orbit.len() {
            interior.push(x);
        } else if inside == 0 {
            exterior.push(x);
        } else {
            delimiting.push(x);
        }
    }
    Classification {
        interior: VertexSet::from_sorted(interior),
        exterior: VertexSet::from_sorted(exterior),
        delimiting: VertexSet::from_sorted(delimiting),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automorphism::orbits;
    use crate::graph::Family;

    fn blocks(p: &Partition) -> Vec<Vec<usize>> {
        p.blocks().iter().map(|b| b.as_slice().to_vec()).collect()
    }

    #[test]
    fn table_examples() {
        let t = information_table(&orbits(&Family::path(5).unwrap()));
        assert!(t.get(0, 4));
        assert!(!t.get(0, 1));
        assert!(t.get(2, 2));
        assert_eq!(t.row(1), t.row(3));

        let t = information_table(&orbits(&Family::complete(4).unwrap()));
        assert!(t.row(2).iter().all(|&b| b));

        let t = information_table(&orbits(&Family::rigid6()));
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(t.get(x, y), x == y);
            }
        }
    }

    #[test]
    fn path_counterexample_to_converse() {
        // A = {x_1}: x_2 ≡ x_3 although they are not similar.
        let op = orbits(&Family::path(5).unwrap());
        let a = VertexSet::from([0]);
        assert!(indiscernible(&op, 1, 2, &a).unwrap());
        assert!(!op.same_orbit(1, 2));
        assert!(!indiscernible(&op, 0, 1, &a).unwrap());
        assert!(indiscernible(&op, 0, 3, &VertexSet::new()).unwrap());
        assert!(indiscernible(&op, 0, 5, &a).is_err());
    }

    #[test]
    fn partition_examples() {
        let op = orbits(&Family::path(5).unwrap());
        let g = indiscernibility_partition(&op, &VertexSet::from([0]));
        assert_eq!(blocks(&g), vec![vec![0, 4], vec![1, 2, 3]]);
        assert_eq!(
            g,
            indiscernibility_partition_pairwise(&op, &VertexSet::from([0]))
        );
        assert_eq!(
            indiscernibility_partition(&op, &VertexSet::new()),
            Partition::unit(5)
        );

        let kmn = orbits(&Family::complete_bipartite(2, 3).unwrap());
        for a in [vec![0], vec![3], vec![1, 4]] {
            let g = indiscernibility_partition(&kmn, &VertexSet::from(a));
            assert_eq!(blocks(&g), vec![vec![0, 1], vec![2, 3, 4]]);
        }
    }

    #[test]
    fn equality_and_refinement_examples() {
        let op = orbits(&Family::path(5).unwrap());
        let g1 = indiscernibility_partition(&op, &VertexSet::from([0, 1, 2]));
        let g2 = indiscernibility_partition(&op, &VertexSet::from([0, 1]));
        assert!(partitions_equal(&g1, &g2).unwrap());

        let p7 = orbits(&Family::path(7).unwrap());
        let a = indiscernibility_partition(&p7, &VertexSet::from([0]));
        let b = indiscernibility_partition(&p7, &VertexSet::from([1]));
        assert!(!partitions_equal(&a, &b).unwrap());

        let finest = p7.to_partition();
        assert!(refines(&finest, &a).unwrap());
        assert!(refines(&a, &a).unwrap());
        assert!(partitions_equal(&a, &Partition::unit(6)).is_err());
    }

    #[test]
    fn classification_examples() {
        let k = orbits(&Family::complete(5).unwrap());
        let c = classify_vertices(&k, &VertexSet::from([0, 3]));
        assert!(c.interior.is_empty() && c.exterior.is_empty());
        assert_eq!(c.delimiting, VertexSet::full(5));
        let c = classify_vertices(&k, &VertexSet::full(5));
        assert_eq!(c.interior, VertexSet::full(5));
        let c = classify_vertices(&k, &VertexSet::new());
        assert_eq!(c.exterior, VertexSet::full(5));

        let op = orbits(&Family::path(5).unwrap());
        let c = classify_vertices(&op, &VertexSet::from([0, 4, 1]));
        assert_eq!(c.interior.as_slice(), &[0, 4]);
        assert_eq!(c.delimiting.as_slice(), &[1, 3]);
        assert_eq!(c.exterior.as_slice(), &[2]);
    }

    #[test]
    fn unreferenced_block_is_complement_of_closure() {
        let op = orbits(&Family::path(7).unwrap());
        assert_eq!(
            unreferenced_block(&op, &VertexSet::from([1])).as_slice(),
            &[0, 2, 3, 4, 6]
        );
    }

    #[test]
    #[should_panic(expected = "outside the vertex range")]
    fn out_of_range_attributes_panic() {
        let op = orbits(&Family::path(3).unwrap());
        indiscernibility_partition(&op, &VertexSet::from([7]));
    }
}
