//! Individualization-refinement search for automorphism group generators.
//!
//! A first path is fixed by always individualizing the smallest vertex of
//! the first non-singleton cell. Levels of that path are then processed from
//! the deepest up. At level `i` every vertex `w` of the target cell that is
//! not yet known to lie in the orbit of the path vertex (under generators
//! fixing the path prefix) gets its own subtree search for a leaf whose
//! correspondence with the first leaf is an automorphism. A failed search
//! proves `w` lies outside that orbit, so after level `i` the generators
//! found generate the full pointwise stabilizer of the prefix and the group
//! order is the product of the per-level orbit lengths.

use std::collections::HashSet;

use super::permutation::{is_automorphism, Permutation};
use super::refine::{node_invariant, refine_cells, Cells};
use super::union_find::UnionFind;
use super::GeneratorSet;
use crate::graph::Graph;

fn target_cell(cells: &Cells) -> Option<usize> {
    cells.iter().position(|c| c.len() > 1)
}

fn individualize(cells: &Cells, t: usize, v: usize) -> Cells {
    let mut out = Vec::with_capacity(cells.len() + 1);
    out.extend_from_slice(&cells[..t]);
    out.push(vec![v]);
    out.push(cells[t].iter().copied().filter(|&x| x != v).collect());
    out.extend_from_slice(&cells[t + 1..]);
    out
}

struct Search<'g> {
    g: &'g Graph,
    path: Vec<usize>,
    invariants: Vec<Vec<usize>>,
    first_leaf: Vec<usize>,
    generators: Vec<Permutation>,
}

impl<'g> Search<'g> {
    /// Orbits of the subgroup generated by generators fixing `prefix`.
    fn stabilizer_orbits(&self, prefix: &[usize]) -> UnionFind {
        let mut uf = UnionFind::new(self.g.n());
        for p in self.generators.iter().filter(|p| p.fixes_all(prefix)) {
            for v in 0..self.g.n() {
                uf.union(v, p.apply(v));
            }
        }
        uf
    }

    /// Looks for an automorphism leaf below the child of `parent` obtained
    /// by individualizing `w` in cell `t`. `prefix` already ends with `w`.
    fn search_from(
        &self,
        parent: &Cells,
        t: usize,
        w: usize,
        prefix: &mut Vec<usize>,
    ) -> Option<Permutation> {
        let depth = prefix.len();
        let node = refine_cells(self.g, individualize(parent, t, w));
        if node_invariant(self.g, &node) != self.invariants[depth] {
            return None;
        }
        let Some(t2) = target_cell(&node) else {
            let mut image = vec![0; self.g.n()];
            for (j, cell) in node.iter().enumerate() {
                image[self.first_leaf[j]] = cell[0];
            }
            let p = Permutation::from_image_unchecked(image);
            return is_automorphism(self.g, &p)
                .expect("sizes match")
                .then_some(p);
        };
        let mut uf = self.stabilizer_orbits(prefix);
        let mut tried = HashSet::new();
        for &u in &node[t2] {
            if !tried.insert(uf.find(u)) {
                continue;
            }
            prefix.push(u);
            let found = self.search_from(&node, t2, u, prefix);
            prefix.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

/// Generators of the full automorphism group, with its exact order when
/// it fits in a `u128`.
pub fn automorphism_generators(g: &Graph) -> GeneratorSet {
    let n = g.n();
    let mut nodes = vec![refine_cells(g, vec![(0..n).collect()])];
    let mut targets = Vec::new();
    let mut path = Vec::new();
    while let Some(t) = target_cell(nodes.last().expect("non-empty")) {
        let node = nodes.last().expect("non-empty");
        let v = node[t][0];
        let child = refine_cells(g, individualize(node, t, v));
        targets.push(t);
        path.push(v);
        nodes.push(child);
    }
    let invariants = nodes.iter().map(|c| node_invariant(g, c)).collect();
    let first_leaf = nodes
        .last()
        .expect("non-empty")
        .iter()
        .map(|c| c[0])
        .collect();

    let mut search = Search {
        g,
        path,
        invariants,
        first_leaf,
        generators: Vec::new(),
    };

    let mut order: Option<u128> = Some(1);
    for level in (0..search.path.len()).rev() {
        let v = search.path[level];
        let cell = nodes[level][targets[level]].clone();
        let mut prefix: Vec<usize> = search.path[..level].to_vec();
        for &w in &cell {
            if w == v {
                continue;
            }
            let mut uf = search.stabilizer_orbits(&prefix);
            if uf.same(v, w) {
                continue;
            }
            prefix.push(w);
            let found = search.search_from(&nodes[level], targets[level], w, &mut prefix);
            prefix.pop();
            if let Some(p) = found {
                search.generators.push(p);
            }
        }
        let mut uf = search.stabilizer_orbits(&prefix);
        let orbit_len = cell.iter().filter(|&&w| uf.same(v, w)).count() as u128;
        order = order.and_then(|o| o.checked_mul(orbit_len));
    }

    GeneratorSet {
        generators: search.generators,
        group_order: order,
    }
}
