//! Exhaustive automorphism enumeration, used as an oracle for the search.

use super::permutation::{is_automorphism, Permutation};
use super::GeneratorSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order the n! oracle accepts unless configured otherwise.
pub const DEFAULT_ORACLE_BOUND: usize = 9;

/// Enumerates all `n!` permutations and keeps every non-identity
/// automorphism. The returned list is the whole group minus the identity.
pub fn brute_force_automorphisms(g: &Graph, bound: usize) -> Result<GeneratorSet> {
    let n = g.n();
    if n > bound {
        return Err(Error::SizeLimit {
            what: "brute-force oracle graph",
            size: n,
            bound,
        });
    }
    let mut image: Vec<usize> = (0..n).collect();
    let mut found = Vec::new();
    let mut order: u128 = 0;
    loop {
        let p = Permutation::from_image_unchecked(image.clone());
        if is_automorphism(g, &p)? {
            order += 1;
            if !p.is_identity() {
                found.push(p);
            }
        }
        if !next_permutation(&mut image) {
            break;
        }
    }
    Ok(GeneratorSet {
        generators: found,
        group_order: Some(order),
    })
}

/// Advances to the next permutation in lexicographic order; false after the last.
fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn enumerates_every_permutation() {
        let mut a = vec![0, 1, 2, 3];
        let mut count = 1;
        while next_permutation(&mut a) {
            count += 1;
        }
        assert_eq!(count, 24);
        assert_eq!(a, vec![3, 2, 1, 0]);
    }

    #[test]
    fn known_group_orders() {
        let b = DEFAULT_ORACLE_BOUND;
        assert_eq!(
            brute_force_automorphisms(&Family::complete(3).unwrap(), b)
                .unwrap()
                .group_order,
            Some(6)
        );
        let p5 = brute_force_automorphisms(&Family::path(5).unwrap(), b).unwrap();
        assert_eq!(p5.group_order, Some(2));
        assert_eq!(p5.generators[0].image(), &[4, 3, 2, 1, 0]);
        let rigid = brute_force_automorphisms(&Family::rigid6(), b).unwrap();
        assert_eq!(rigid.group_order, Some(1));
        assert!(rigid.generators.is_empty());
    }

    #[test]
    fn enforces_bound() {
        let g = Family::path(10).unwrap();
        assert_eq!(
            brute_force_automorphisms(&g, DEFAULT_ORACLE_BOUND),
            Err(Error::SizeLimit {
                what: "brute-force oracle graph",
                size: 10,
                bound: 9
            })
        );
        assert!(brute_force_automorphisms(&Family::path(4).unwrap(), 3).is_err());
    }
}
