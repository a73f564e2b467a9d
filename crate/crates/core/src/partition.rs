//! Set partitions of `0..n` in canonical form.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// A partition of `0..n` into non-empty blocks.
///
/// Blocks are sorted by their minimum member, so two partitions of the same
/// set are equal exactly when they are structurally equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    blocks: Vec<VertexSet>,
    block_of: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct PartitionRepr {
    blocks: Vec<VertexSet>,
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PartitionRepr {
            blocks: self.blocks.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = PartitionRepr::deserialize(d)?;
        let n = repr.blocks.iter().map(VertexSet::len).sum();
        Partition::from_blocks(n, repr.blocks).map_err(serde::de::Error::custom)
    }
}

impl Partition {
    /// Validates and canonicalises a block family over `0..n`.
    pub fn from_blocks(n: usize, blocks: Vec<VertexSet>) -> Result<Partition> {
        let mut block_of = vec![usize::MAX; n];
        let mut blocks: Vec<VertexSet> = blocks;
        blocks.sort_by_key(|b| b.min_vertex());
        for (i, b) in blocks.iter().enumerate() {
            if b.is_empty() {
                return Err(Error::InvalidVertexSet("partition block is empty".into()));
            }
            for v in b.iter() {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if block_of[v] != usize::MAX {
                    return Err(Error::InvalidVertexSet(format!("vertex {v} in two blocks")));
                }
                block_of[v] = i;
            }
        }
        if let Some(v) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(Error::InvalidVertexSet(format!(
                "vertex {v} is in no block"
            )));
        }
        Ok(Partition { blocks, block_of })
    }

    /// Groups vertices by an arbitrary key: `v` and `w` share a block iff
    /// `keys[v] == keys[w]`.
    pub fn from_keys<K: std::hash::Hash + Eq>(keys: &[K]) -> Partition {
        let mut index: HashMap<&K, usize> = HashMap::new();
        let mut members: Vec<Vec<usize>> = Vec::new();
        for (v, k) in keys.iter().enumerate() {
            let b = *index.entry(k).or_insert_with(|| {
                members.push(Vec::new());
                members.len() - 1
            });
            members[b].push(v);
        }
        // First-seen order is already min-member order since v ascends.
        let mut block_of = vec![0; keys.len()];
        let blocks = members
            .into_iter()
            .enumerate()
            .map(|(i, vs)| {
                for &v in &vs {
                    block_of[v] = i;
                }
                VertexSet::from_sorted(vs)
            })
            .collect();
        Partition { blocks, block_of }
    }

    /// The one-block partition `{V}`.
    pub fn unit(n: usize) -> Partition {
        Partition {
            blocks: vec![VertexSet::full(n)],
            block_of: vec![0; n],
        }
    }

    /// All singletons.
    pub fn discrete(n: usize) -> Partition {
        Partition {
            blocks: (0..n).map(|v| VertexSet::from_sorted(vec![v])).collect(),
            block_of: (0..n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.block_of.len()
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_index(&self, v: usize) -> usize {
        self.block_of[v]
    }

    /// The block containing `v`.
    pub fn block(&self, v: usize) -> &VertexSet {
        &self.blocks[self.block_of[v]]
    }

    /// Set equality of the two block families.
    pub fn equals(&self, other: &Partition) -> Result<bool> {
        self.same_universe(other)?;
        Ok(self == other)
    }

    /// `self ⪯ other`: every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &Partition) -> Result<bool> {
        self.same_universe(other)?;
        Ok(self.blocks.iter().all(|b| {
            let target = other.block_of[b.as_slice()[0]];
            b.iter().all(|v| other.block_of[v] == target)
        }))
    }

    fn same_universe(&self, other: &Partition) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(())
    }

    /// Bar notation, e.g. `04|123`. Labels are concatenated inside a block
    /// when all of them are single characters and comma-separated otherwise.
    pub fn render_bar<F: Fn(usize) -> String>(&self, label: F) -> String {
        self.blocks
            .iter()
            .map(|b| {
                let ls: Vec<String> = b.iter().map(&label).collect();
                if ls.iter().all(|l| l.chars().count() == 1) {
                    ls.concat()
                } else {
                    ls.join(",")
                }
            })
            .collect::<Vec<_>>()
            .join("|")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, blocks: &[&[usize]]) -> Partition {
        Partition::from_blocks(
            n,
            blocks.iter().map(|b| VertexSet::from(b.to_vec())).collect(),
        )
        .unwrap()
    }

    #[test]
    fn canonical_block_order() {
        let a = p(5, &[&[2, 1, 3], &[4, 0]]);
        assert_eq!(a.blocks()[0].as_slice(), &[0, 4]);
        assert_eq!(a.block(3).as_slice(), &[1, 2, 3]);
        assert_eq!(a, Partition::from_keys(&['x', 'y', 'y', 'y', 'x']));
        assert_eq!(a.render_bar(|v| v.to_string()), "04|123");
    }

    #[test]
    fn rejects_bad_blocks() {
        let bad = |blocks: Vec<VertexSet>| Partition::from_blocks(3, blocks).is_err();
        assert!(bad(vec![VertexSet::from([0, 1])]));
        assert!(bad(vec![VertexSet::from([0, 1]), VertexSet::from([1, 2])]));
        assert!(bad(vec![VertexSet::from([0, 1, 2]), VertexSet::new()]));
        assert!(bad(vec![VertexSet::from([0, 1, 2, 3])]));
    }

    #[test]
    fn refinement_order() {
        let fine = p(4, &[&[0], &[1], &[2, 3]]);
        let coarse = p(4, &[&[0, 1], &[2, 3]]);
        assert!(fine.refines(&coarse).unwrap());
        assert!(!coarse.refines(&fine).unwrap());
        assert!(fine.refines(&fine).unwrap());
        assert!(Partition::discrete(4).refines(&Partition::unit(4)).unwrap());
        assert_eq!(
            fine.refines(&Partition::unit(3)),
            Err(Error::SizeMismatch { left: 4, right: 3 })
        );
        assert!(!fine.equals(&coarse).unwrap());
    }

    #[test]
    fn wide_labels_use_commas() {
        let a = p(12, &[&[0, 11], &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10]]);
        assert!(a.render_bar(|v| v.to_string()).starts_with("0,11|"));
    }

    #[test]
    fn json_shape() {
        let a = p(3, &[&[0, 2], &[1]]);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"blocks":[[0,2],[1]]}"#);
        let back: Partition = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a);
    }
}
