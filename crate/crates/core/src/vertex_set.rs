use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A sorted, duplicate-free set of vertex ids.
///
/// Ordering is lexicographic on the sorted member list, which is what the
/// reduct and essential-set listings sort by.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    /// The full vertex range `0..n`.
    pub fn full(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    /// Builds a set from arbitrary ids; sorts and removes duplicates.
    pub fn from_unsorted(mut ids: Vec<usize>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        VertexSet(ids)
    }

    /// Caller guarantees `ids` is strictly increasing.
    pub(crate) fn from_sorted(ids: Vec<usize>) -> Self {
        debug_assert!(ids.windows(2).all(|w| w[0] < w[1]));
        VertexSet(ids)
    }

    /// Builds a set from a membership mask of length n.
    pub fn from_mask(mask: &[bool]) -> Self {
        VertexSet(
            mask.iter()
                .enumerate()
                .filter_map(|(v, &m)| m.then_some(v))
                .collect(),
        )
    }

    /// Subset of `0..n` selected by the low `n` bits of `bits`.
    pub fn from_bits(bits: u64, n: usize) -> Self {
        VertexSet((0..n).filter(|&v| bits >> v & 1 == 1).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn min_vertex(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Errors with the first member that is not below `n`.
    pub fn check_within(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= n => Err(Error::VertexOutOfRange { vertex: v, n }),
            _ => Ok(()),
        }
    }

    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for v in self.iter() {
            m[v] = true;
        }
        m
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        VertexSet(out)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| other.contains(v)).collect())
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| !other.contains(v)).collect())
    }

    /// `V \ self` for `V = 0..n`.
    pub fn complement(&self, n: usize) -> VertexSet {
        VertexSet((0..n).filter(|&v| !self.contains(v)).collect())
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.len() <= other.len() && self.iter().all(|v| other.contains(v))
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.iter().any(|v| other.contains(v))
    }

    pub fn without(&self, v: usize) -> VertexSet {
        VertexSet(self.iter().filter(|&x| x != v).collect())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_unsorted(iter.into_iter().collect())
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(ids: Vec<usize>) -> Self {
        VertexSet::from_unsorted(ids)
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(ids: [usize; N]) -> Self {
        VertexSet::from_unsorted(ids.to_vec())
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, usize>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// Parses a vertex-set argument: comma-separated ids, `@all`, or `@none`.
pub fn parse_vertex_set(text: &str, n: usize) -> Result<VertexSet> {
    let text = text.trim();
    match text {
        "@all" => return Ok(VertexSet::full(n)),
        "@none" | "" => return Ok(VertexSet::new()),
        _ => {}
    }
    let mut ids = Vec::new();
    for part in text.split(',') {
        let part = part.trim();
        let v: usize = part
            .parse()
            .map_err(|_| Error::InvalidVertexSet(format!("'{part}' is not a vertex id")))?;
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        ids.push(v);
    }
    Ok(VertexSet::from_unsorted(ids))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_algebra() {
        let a = VertexSet::from([3, 1, 2, 3]);
        let b = VertexSet::from([2, 5]);
        assert_eq!(a.as_slice(), &[1, 2, 3]);
        assert_eq!(a.union(&b).as_slice(), &[1, 2, 3, 5]);
        assert_eq!(a.intersection(&b).as_slice(), &[2]);
        assert_eq!(a.difference(&b).as_slice(), &[1, 3]);
        assert_eq!(b.complement(6).as_slice(), &[0, 1, 3, 4]);
        assert!(VertexSet::from([1, 3]).is_subset(&a));
        assert!(!b.is_subset(&a));
        assert_eq!(VertexSet::from_bits(0b1010, 4).as_slice(), &[1, 3]);
    }

    #[test]
    fn parse_sets() {
        assert_eq!(parse_vertex_set("@all", 3).unwrap(), VertexSet::full(3));
        assert!(parse_vertex_set("@none", 3).unwrap().is_empty());
        assert_eq!(parse_vertex_set("2, 0,2", 3).unwrap().as_slice(), &[0, 2]);
        assert_eq!(
            parse_vertex_set("0,3", 3),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert!(matches!(
            parse_vertex_set("x", 3),
            Err(Error::InvalidVertexSet(_))
        ));
    }

    #[test]
    fn lexicographic_order() {
        let mut sets = [
            VertexSet::from([1, 2]),
            VertexSet::from([0, 4]),
            VertexSet::from([0, 1, 9]),
        ];
        sets.sort();
        assert_eq!(sets[0].as_slice(), &[0, 1, 9]);
        assert_eq!(sets[2].as_slice(), &[1, 2]);
    }
}
