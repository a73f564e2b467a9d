//! Reducts, the core, and essential sets of an attribute set.
//!
//! Everything here depends only on which orbits an attribute set meets.
//! Write `H` for the orbits meeting `A`. Then `γ_K = γ_A` for `K ⊆ A`
//! exactly when `K` meets every orbit of `H`, or `H` is all of the orbits
//! and `K` misses at most one of them. The structural enumerations below
//! follow from that; the `exhaustive_*` functions search the subset lattice
//! by definition and serve as oracles.

use serde::{Deserialize, Serialize};

use crate::automorphism::OrbitPartition;
use crate::error::{Error, Result};
use crate::indiscernibility::{indiscernibility_partition, information_table, InformationTable};
use crate::partition::Partition;
use crate::vertex_set::VertexSet;

/// Largest `|A|` the exhaustive searches accept by default.
pub const DEFAULT_SUBSET_BOUND: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductSet {
    /// Sorted lexicographically.
    pub reducts: Vec<VertexSet>,
    pub core: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EssentialSummary {
    /// Sorted by size, then lexicographically.
    pub essential_sets: Vec<VertexSet>,
    /// `ens[l - 1]` counts the essential sets of size `l`.
    pub ens: Vec<usize>,
    pub edim: Option<usize>,
}

impl EssentialSummary {
    fn from_sets(mut essential_sets: Vec<VertexSet>, attrs: usize) -> EssentialSummary {
        essential_sets.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
        let mut ens = vec![0; attrs];
        for s in &essential_sets {
            ens[s.len() - 1] += 1;
        }
        let edim = ens.iter().position(|&c| c != 0).map(|i| i + 1);
        EssentialSummary {
            essential_sets,
            ens,
            edim,
        }
    }
}

/// `A ∩ O_i` for each orbit `O_i` meeting `a`, in orbit order.
fn parts(op: &OrbitPartition, a: &VertexSet) -> Vec<VertexSet> {
    op.orbits_meeting(a)
        .into_iter()
        .map(|i| op.orbits()[i].intersection(a))
        .collect()
}

fn hits_every_orbit(op: &OrbitPartition, a: &VertexSet) -> bool {
    op.orbits_meeting(a).len() == op.k()
}

/// True iff `γ_{A∖{x}} = γ_A`.
pub fn is_dispensable(op: &OrbitPartition, a: &VertexSet, x: usize) -> Result<bool> {
    if !a.contains(x) {
        return Err(Error::NotInAttributes(x));
    }
    Ok(indiscernibility_partition(op, &a.without(x)) == indiscernibility_partition(op, a))
}

/// Every way of choosing one vertex from each set in `choices`.
fn transversals(choices: &[&VertexSet]) -> Vec<VertexSet> {
    let mut out = vec![Vec::new()];
    for c in choices {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<usize>| {
                c.iter().map(move |v| {
                    let mut next = prefix.clone();
                    next.push(v);
                    next
                })
            })
            .collect();
    }
    out.into_iter().map(VertexSet::from_unsorted).collect()
}

/// All reducts of `a` from the orbit structure, with the core.
pub fn enumerate_reducts(op: &OrbitPartition, a: &VertexSet) -> ReductSet {
    let parts = parts(op, a);
    let mut reducts = if hits_every_orbit(op, a) {
        let mut all = Vec::new();
        for skip in 0..parts.len() {
            let rest: Vec<&VertexSet> = parts
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, p)| p)
                .collect();
            all.extend(transversals(&rest));
        }
        all
    } else {
        transversals(&parts.iter().collect::<Vec<_>>())
    };
    reducts.sort();
    reducts.dedup();
    let core = intersect_all(&reducts);
    ReductSet { reducts, core }
}

fn intersect_all(sets: &[VertexSet]) -> VertexSet {
    let mut it = sets.iter();
    let first = it.next().cloned().unwrap_or_default();
    it.fold(first, |acc, s| acc.intersection(s))
}

/// Intersection of all reducts, computed without enumerating them.
pub fn core(op: &OrbitPartition, a: &VertexSet) -> VertexSet {
    if hits_every_orbit(op, a) {
        return VertexSet::new();
    }
    VertexSet::from_unsorted(
        parts(op, a)
            .into_iter()
            .filter(|p| p.len() == 1)
            .flat_map(VertexSet::into_vec)
            .collect(),
    )
}

/// Essential sets of `a`, restricted to proper subsets, from the orbit
/// structure.
pub fn essential_sets(op: &OrbitPartition, a: &VertexSet) -> EssentialSummary {
    let parts = parts(op, a);
    let mut sets = Vec::new();
    if hits_every_orbit(op, a) {
        for i in 0..parts.len() {
            for j in i + 1..parts.len() {
                sets.push(parts[i].union(&parts[j]));
            }
        }
    } else {
        sets = parts;
    }
    sets.retain(|s| s != a);
    EssentialSummary::from_sets(sets, a.len())
}

fn check_bound(a: &VertexSet, bound: usize) -> Result<()> {
    if a.len() > bound {
        return Err(Error::SizeLimit {
            what: "exhaustive subset search",
            size: a.len(),
            bound,
        });
    }
    Ok(())
}

/// Maps bit `i` of a mask to the `i`-th smallest member of `a`.
fn subset(a: &VertexSet, mask: usize) -> VertexSet {
    VertexSet::from_sorted(
        a.iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, v)| v)
            .collect(),
    )
}

/// `any_below[m]` is true iff some proper subset of `m` satisfies `pred`.
fn proper_subset_flags(pred: &[bool]) -> Vec<bool> {
    let mut any_below = vec![false; pred.len()];
    for mask in 1..pred.len() {
        let mut bits = mask;
        while bits != 0 {
            let low = bits & bits.wrapping_neg();
            let sub = mask ^ low;
            if pred[sub] || any_below[sub] {
                any_below[mask] = true;
                break;
            }
            bits ^= low;
        }
    }
    any_below
}

/// `γ_K` for every `K ⊆ A`, from row comparison in the information table.
fn table_partitions(table: &InformationTable, a: &VertexSet) -> Vec<Partition> {
    (0..1usize << a.len())
        .map(|mask| table.partition_by_rows(&subset(a, mask)))
        .collect()
}

/// Reducts by definition: minimal `K ⊆ A` with `γ_K = γ_A`, found by
/// checking every subset. Errors when `|A| > bound`.
pub fn exhaustive_reducts(op: &OrbitPartition, a: &VertexSet, bound: usize) -> Result<ReductSet> {
    check_bound(a, bound)?;
    let table = information_table(op);
    let gammas = table_partitions(&table, a);
    let full = gammas.last().expect("at least the empty subset");
    let good: Vec<bool> = gammas.iter().map(|g| g == full).collect();
    let below = proper_subset_flags(&good);
    let mut reducts: Vec<VertexSet> = (0..good.len())
        .filter(|&m| good[m] && !below[m])
        .map(|m| subset(a, m))
        .collect();
    reducts.sort();
    let core = intersect_all(&reducts);
    Ok(ReductSet { reducts, core })
}

/// Essential sets by definition: proper `S ⊊ A` with `γ_{A∖S} ≠ γ_A`
/// whose proper subsets all leave `γ_A` unchanged.
pub fn exhaustive_essential_sets(
    op: &OrbitPartition,
    a: &VertexSet,
    bound: usize,
) -> Result<EssentialSummary> {
    check_bound(a, bound)?;
    let table = information_table(op);
    let gammas = table_partitions(&table, a);
    let all = gammas.len() - 1;
    let full = &gammas[all];
    // Removing S from A leaves the complement mask.
    let changes: Vec<bool> = (0..gammas.len())
        .map(|s| &gammas[all ^ s] != full)
        .collect();
    let below = proper_subset_flags(&changes);
    let sets = (0..all)
        .filter(|&s| changes[s] && !below[s])
        .map(|s| subset(a, s))
        .collect();
    Ok(EssentialSummary::from_sets(sets, a.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automorphism::orbits;
    use crate::graph::{Family, Graph};

    fn op_of(g: &Graph) -> OrbitPartition {
        orbits(g)
    }

    #[test]
    fn dispensability_examples() {
        let p5 = op_of(&Family::path(5).unwrap());
        assert!(is_dispensable(&p5, &VertexSet::full(5), 4).unwrap());
        let k = op_of(&Family::complete(4).unwrap());
        assert!(is_dispensable(&k, &VertexSet::from([0]), 0).unwrap());
        let p7 = op_of(&Family::path(7).unwrap());
        assert!(!is_dispensable(&p7, &VertexSet::from([0, 1]), 1).unwrap());
        assert!(matches!(
            is_dispensable(&p7, &VertexSet::from([0]), 3),
            Err(Error::NotInAttributes(3))
        ));
    }

    #[test]
    fn path_reducts() {
        let p5 = op_of(&Family::path(5).unwrap());
        let r = enumerate_reducts(&p5, &VertexSet::full(5));
        assert_eq!(r.reducts.len(), 8);
        assert!(r.reducts.iter().all(|k| k.len() == 2));
        assert!(r.core.is_empty());
        assert_eq!(
            r,
            exhaustive_reducts(&p5, &VertexSet::full(5), DEFAULT_SUBSET_BOUND).unwrap()
        );
        assert!(core(&p5, &VertexSet::full(5)).is_empty());
    }

    #[test]
    fn single_orbit_has_empty_reduct() {
        let k = op_of(&Family::complete(5).unwrap());
        let r = enumerate_reducts(&k, &VertexSet::full(5));
        assert_eq!(r.reducts, vec![VertexSet::new()]);
        assert!(r.core.is_empty());
        assert_eq!(
            r,
            exhaustive_reducts(&k, &VertexSet::full(5), DEFAULT_SUBSET_BOUND).unwrap()
        );
    }

    #[test]
    fn rigid_reducts_are_five_sets() {
        let op = op_of(&Family::rigid6());
        let r = enumerate_reducts(&op, &VertexSet::full(6));
        assert_eq!(r.reducts.len(), 6);
        assert!(r.reducts.iter().all(|k| k.len() == 5));
        assert_eq!(
            r,
            exhaustive_reducts(&op, &VertexSet::full(6), DEFAULT_SUBSET_BOUND).unwrap()
        );
    }

    #[test]
    fn core_with_unreferenced_block() {
        // A meets {0,6}, {1,5}, {2,4} but not {3}; x_3 is the only representative of its orbit.
        let p7 = op_of(&Family::path(7).unwrap());
        let a = VertexSet::from([0, 1, 2, 6]);
        assert_eq!(core(&p7, &a).as_slice(), &[1, 2]);
        let r = enumerate_reducts(&p7, &a);
        assert_eq!(r.core.as_slice(), &[1, 2]);
        assert_eq!(
            r,
            exhaustive_reducts(&p7, &a, DEFAULT_SUBSET_BOUND).unwrap()
        );

        assert_eq!(
            core(&p7, &VertexSet::from([0, 1, 2])).as_slice(),
            &[0, 1, 2]
        );
        // {0,1,2,3} meets every orbit, so some reduct omits each vertex.
        assert!(core(&p7, &VertexSet::from([0, 1, 2, 3])).is_empty());
        assert!(enumerate_reducts(&p7, &VertexSet::from([0, 1, 2, 3]))
            .core
            .is_empty());
    }

    #[test]
    fn path_essential_sequences() {
        let p7 = op_of(&Family::path(7).unwrap());
        let e = essential_sets(&p7, &VertexSet::full(7));
        assert_eq!(e.ens, vec![0, 0, 3, 3, 0, 0, 0]);
        assert_eq!(e.edim, Some(3));
        assert_eq!(
            e,
            exhaustive_essential_sets(&p7, &VertexSet::full(7), DEFAULT_SUBSET_BOUND).unwrap()
        );

        let p8 = op_of(&Family::path(8).unwrap());
        let e = essential_sets(&p8, &VertexSet::full(8));
        assert_eq!(e.ens, vec![0, 0, 0, 6, 0, 0, 0, 0]);
        assert_eq!(e.edim, Some(4));
    }

    #[test]
    fn few_orbits_no_essentials() {
        for g in [
            Family::complete(5).unwrap(),
            Family::cycle(6).unwrap(),
            Family::complete_bipartite(2, 4).unwrap(),
        ] {
            let op = op_of(&g);
            let a = VertexSet::full(g.n());
            let e = essential_sets(&op, &a);
            assert!(e.essential_sets.is_empty());
            assert!(e.ens.iter().all(|&c| c == 0));
            assert_eq!(e.edim, None);
            assert_eq!(
                e,
                exhaustive_essential_sets(&op, &a, DEFAULT_SUBSET_BOUND).unwrap()
            );
        }
    }

    #[test]
    fn rigid_edim_is_two() {
        let op = op_of(&Family::rigid6());
        assert_eq!(essential_sets(&op, &VertexSet::full(6)).edim, Some(2));
    }

    #[test]
    fn bound_is_enforced() {
        let op = op_of(&Graph::edgeless(20).unwrap());
        let err = exhaustive_reducts(&op, &VertexSet::full(20), DEFAULT_SUBSET_BOUND).unwrap_err();
        assert!(matches!(
            err,
            Error::SizeLimit {
                size: 20,
                bound: 16,
                ..
            }
        ));
        assert!(exhaustive_essential_sets(&op, &VertexSet::full(20), 4).is_err());
    }

    #[test]
    fn json_shapes() {
        let p5 = op_of(&Family::path(5).unwrap());
        let r = enumerate_reducts(&p5, &VertexSet::from([0, 2]));
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"reducts":[[0,2]],"core":[0,2]}"#
        );
        let e = essential_sets(&p5, &VertexSet::from([0, 2]));
        assert_eq!(
            serde_json::to_string(&e).unwrap(),
            r#"{"essential_sets":[[0],[2]],"ens":[2,0],"edim":1}"#
        );
    }
}
