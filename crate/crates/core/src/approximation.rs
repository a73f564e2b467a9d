//! Lower and upper approximations over `γ_A`, rough membership, positive
//! regions and the degree of dependency.

use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::automorphism::OrbitPartition;
use crate::error::{Error, Result};
use crate::indiscernibility::{indiscernibility_partition, indiscernible};
use crate::partition::Partition;
use crate::vertex_set::VertexSet;

/// Exact fraction used for membership values and dependency degrees.
pub type Fraction = Ratio<usize>;

fn union_of<'a>(blocks: impl Iterator<Item = &'a VertexSet>) -> VertexSet {
    VertexSet::from_unsorted(blocks.flat_map(|b| b.iter()).collect())
}

/// Union of the `γ_A` blocks contained in `q`.
pub fn lower_approx(op: &OrbitPartition, a: &VertexSet, q: &VertexSet) -> VertexSet {
    let gamma = indiscernibility_partition(op, a);
    union_of(gamma.blocks().iter().filter(|b| b.is_subset(q)))
}

/// Union of the `γ_A` blocks meeting `q`.
pub fn upper_approx(op: &OrbitPartition, a: &VertexSet, q: &VertexSet) -> VertexSet {
    let gamma = indiscernibility_partition(op, a);
    union_of(gamma.blocks().iter().filter(|b| b.intersects(q)))
}

pub fn is_exact(op: &OrbitPartition, a: &VertexSet, q: &VertexSet) -> bool {
    let gamma = indiscernibility_partition(op, a);
    gamma
        .blocks()
        .iter()
        .all(|b| b.is_subset(q) || !b.intersects(q))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApproximationReport {
    pub lower: VertexSet,
    pub upper: VertexSet,
    pub boundary: VertexSet,
    pub exact: bool,
}

pub fn approximate(op: &OrbitPartition, a: &VertexSet, q: &VertexSet) -> ApproximationReport {
    let lower = lower_approx(op, a, q);
    let upper = upper_approx(op, a, q);
    let boundary = upper.difference(&lower);
    let exact = boundary.is_empty();
    ApproximationReport {
        lower,
        upper,
        boundary,
        exact,
    }
}

/// `|γ_A(x) ∩ Q| / |γ_A(x)|`.
pub fn rough_membership(
    op: &OrbitPartition,
    a: &VertexSet,
    q: &VertexSet,
    x: usize,
) -> Result<Fraction> {
    if x >= op.n() {
        return Err(Error::VertexOutOfRange {
            vertex: x,
            n: op.n(),
        });
    }
    let gamma = indiscernibility_partition(op, a);
    let block = gamma.block(x);
    Ok(Ratio::new(block.intersection(q).len(), block.len()))
}

/// `{x : γ_A(x) ⊆ γ_D(x)}`.
pub fn positive_region(op: &OrbitPartition, a: &VertexSet, d: &VertexSet) -> VertexSet {
    let ga = indiscernibility_partition(op, a);
    let gd = indiscernibility_partition(op, d);
    positive_region_of(&ga, &gd)
}

fn positive_region_of(ga: &Partition, gd: &Partition) -> VertexSet {
    union_of(ga.blocks().iter().filter(|b| {
        let first = b.as_slice()[0];
        b.iter().all(|v| gd.block_index(v) == gd.block_index(first))
    }))
}

/// The positive region evaluated straight from its quantified form:
/// `x` qualifies when every `y` with `O(x)∩A = O(y)∩A` also has
/// `O(x)∩D = O(y)∩D`. Quadratic in `n`.
pub fn positive_region_quantified(op: &OrbitPartition, a: &VertexSet, d: &VertexSet) -> VertexSet {
    let n = op.n();
    VertexSet::from_sorted(
        (0..n)
            .filter(|&x| {
                (0..n).all(|y| {
                    !indiscernible(op, x, y, a).expect("in range")
                        || indiscernible(op, x, y, d).expect("in range")
                })
            })
            .collect(),
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DependencyReport {
    pub positive_region: VertexSet,
    pub degree: Fraction,
}

impl DependencyReport {
    pub fn degree_string(&self) -> String {
        format!("{}/{}", self.degree.numer(), self.degree.denom())
    }

    pub fn degree_decimal(&self) -> f64 {
        *self.degree.numer() as f64 / *self.degree.denom() as f64
    }
}

impl fmt::Display for DependencyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({:.6})", self.degree_string(), self.degree_decimal())
    }
}

#[derive(Serialize, Deserialize)]
struct DependencyRepr {
    positive_region: VertexSet,
    degree: String,
    decimal: f64,
}

impl Serialize for DependencyReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DependencyRepr {
            positive_region: self.positive_region.clone(),
            degree: self.degree_string(),
            decimal: self.degree_decimal(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for DependencyReport {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = DependencyRepr::deserialize(d)?;
        let (p, q) = repr
            .degree
            .split_once('/')
            .ok_or_else(|| D::Error::custom("degree must be p/q"))?;
        let p: usize = p.parse().map_err(D::Error::custom)?;
        let q: usize = q.parse().map_err(D::Error::custom)?;
        if q == 0 {
            return Err(D::Error::custom("zero denominator"));
        }
        Ok(DependencyReport {
            positive_region: repr.positive_region,
            degree: Ratio::new(p, q),
        })
    }
}

/// `deg_A(D) = |POS_A(D)| / n`.
pub fn degree_of_dependency(op: &OrbitPartition, a: &VertexSet, d: &VertexSet) -> DependencyReport {
    let positive_region = positive_region(op, a, d);
    let degree = Ratio::new(positive_region.len(), op.n());
    DependencyReport {
        positive_region,
        degree,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automorphism::orbits;
    use crate::graph::Family;

    fn k23() -> OrbitPartition {
        orbits(&Family::complete_bipartite(2, 3).unwrap())
    }

    #[test]
    fn bipartite_lower_and_upper() {
        let op = k23();
        let a = VertexSet::from([2]);
        assert_eq!(
            lower_approx(&op, &a, &VertexSet::from([0, 1, 3])).as_slice(),
            &[0, 1]
        );
        assert_eq!(
            upper_approx(&op, &a, &VertexSet::from([3])).as_slice(),
            &[2, 3, 4]
        );
        assert_eq!(
            upper_approx(&op, &a, &VertexSet::from([0, 4])),
            VertexSet::full(5)
        );
        assert!(upper_approx(&op, &a, &VertexSet::new()).is_empty());
        assert_eq!(
            lower_approx(&op, &a, &VertexSet::full(5)),
            VertexSet::full(5)
        );
    }

    #[test]
    fn complete_graph_is_all_or_nothing() {
        let op = orbits(&Family::complete(5).unwrap());
        let a = VertexSet::from([1]);
        let q = VertexSet::from([0, 2]);
        let r = approximate(&op, &a, &q);
        assert!(r.lower.is_empty());
        assert_eq!(r.upper, VertexSet::full(5));
        assert!(!r.exact);
        assert!(is_exact(&op, &a, &VertexSet::full(5)));
    }

    #[test]
    fn bipartite_exact_sets() {
        let op = k23();
        let a = VertexSet::from([0]);
        for q in [vec![], vec![0, 1], vec![2, 3, 4], vec![0, 1, 2, 3, 4]] {
            assert!(is_exact(&op, &a, &VertexSet::from(q)));
        }
        assert!(!is_exact(&op, &a, &VertexSet::from([0])));
        assert!(!is_exact(&op, &a, &VertexSet::from([0, 1, 2])));
    }

    #[test]
    fn rigid_graph_exact_when_blocks_are_singletons() {
        let op = orbits(&Family::rigid6());
        for a in [VertexSet::full(6), VertexSet::from([0, 1, 2, 3, 5])] {
            for bits in 0..64u64 {
                assert!(is_exact(&op, &a, &VertexSet::from_bits(bits, 6)));
            }
        }
        // Two or more unreferenced vertices share the block B_A.
        assert!(!is_exact(
            &op,
            &VertexSet::from([0, 3]),
            &VertexSet::from([1])
        ));
    }

    #[test]
    fn membership_values() {
        let op = k23();
        let a = VertexSet::from([3]);
        let q = VertexSet::from([1, 2]);
        assert_eq!(rough_membership(&op, &a, &q, 0).unwrap(), Ratio::new(1, 2));
        assert_eq!(rough_membership(&op, &a, &q, 4).unwrap(), Ratio::new(1, 3));
        assert_eq!(
            rough_membership(&op, &a, &VertexSet::new(), 0).unwrap(),
            Ratio::from_integer(0)
        );
        assert_eq!(
            rough_membership(&op, &a, &VertexSet::from([0, 1]), 1).unwrap(),
            Ratio::from_integer(1)
        );
        assert_eq!(
            rough_membership(&op, &VertexSet::new(), &q, 1).unwrap(),
            Ratio::new(2, 5)
        );
        assert!(rough_membership(&op, &a, &q, 5).is_err());
    }

    #[test]
    fn positive_region_examples() {
        let op = k23();
        let d = VertexSet::from([0]);
        assert!(positive_region(&op, &VertexSet::new(), &d).is_empty());
        assert_eq!(
            positive_region(&op, &VertexSet::from([4]), &d),
            VertexSet::full(5)
        );
        assert_eq!(
            positive_region(&op, &VertexSet::from([4]), &VertexSet::new()),
            VertexSet::full(5)
        );
        let p5 = orbits(&Family::path(5).unwrap());
        let a = VertexSet::from([0]);
        let d = VertexSet::from([1]);
        assert_eq!(positive_region(&p5, &a, &d).as_slice(), &[0, 4]);
        assert_eq!(
            positive_region(&p5, &a, &d),
            positive_region_quantified(&p5, &a, &d)
        );
    }

    #[test]
    fn dependency_degrees() {
        let op = k23();
        let r = degree_of_dependency(&op, &VertexSet::new(), &VertexSet::from([1]));
        assert_eq!(r.degree, Ratio::from_integer(0));
        let k = orbits(&Family::complete(4).unwrap());
        let r = degree_of_dependency(&k, &VertexSet::new(), &VertexSet::from([1, 2]));
        assert_eq!(r.degree, Ratio::from_integer(1));
        let p5 = orbits(&Family::path(5).unwrap());
        let a = VertexSet::from([0]);
        let r = degree_of_dependency(&p5, &a, &VertexSet::from([1]));
        assert_eq!(r.degree, Ratio::new(2, 5));
        assert_eq!(r.to_string(), "2/5 (0.400000)");
        assert_eq!(
            degree_of_dependency(&p5, &a, &a).degree,
            Ratio::from_integer(1)
        );
    }

    #[test]
    fn dependency_json_round_trip() {
        let p5 = orbits(&Family::path(5).unwrap());
        let r = degree_of_dependency(&p5, &VertexSet::from([0]), &VertexSet::from([1]));
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"positive_region":[0,4],"degree":"2/5","decimal":0.4}"#
        );
        let back: DependencyReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }
}
