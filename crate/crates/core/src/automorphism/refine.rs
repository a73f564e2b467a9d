//! Colour refinement to the coarsest equitable partition.
//!
//! The search works on ordered cell lists. Cells are replaced in place by
//! their splits and the pieces are ordered by signature, never by vertex id,
//! so the whole procedure commutes with relabelling by an automorphism.

use crate::graph::Graph;
use crate::partition::Partition;

/// Ordered cells; each cell is kept sorted ascending.
pub(crate) type Cells = Vec<Vec<usize>>;

/// Neighbour counts into each cell, as sorted `(cell, count)` runs.
fn signature(g: &Graph, cell_of: &[usize], v: usize) -> Vec<(usize, usize)> {
    let mut cs: Vec<usize> = g.adjacent(v).iter().map(|&u| cell_of[u]).collect();
    cs.sort_unstable();
    let mut runs: Vec<(usize, usize)> = Vec::new();
    for c in cs {
        match runs.last_mut() {
            Some((last, count)) if *last == c => *count += 1,
            _ => runs.push((c, 1)),
        }
    }
    runs
}

fn cell_index(n: usize, cells: &Cells) -> Vec<usize> {
    let mut cell_of = vec![0; n];
    for (i, c) in cells.iter().enumerate() {
        for &v in c {
            cell_of[v] = i;
        }
    }
    cell_of
}

/// Refines `cells` until every cell is equitable with respect to all cells.
pub(crate) fn refine_cells(g: &Graph, mut cells: Cells) -> Cells {
    loop {
        let cell_of = cell_index(g.n(), &cells);
        let mut next: Cells = Vec::with_capacity(cells.len());
        let mut changed = false;
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<(usize, usize)>, usize)> = cell
                .iter()
                .map(|&v| (signature(g, &cell_of, v), v))
                .collect();
            keyed.sort_unstable();
            let before = next.len();
            let mut prev: Option<&Vec<(usize, usize)>> = None;
            for (sig, v) in &keyed {
                if prev != Some(sig) {
                    next.push(Vec::new());
                    prev = Some(sig);
                }
                next.last_mut().expect("pushed above").push(*v);
            }
            changed |= next.len() - before > 1;
        }
        cells = next;
        if !changed {
            return cells;
        }
    }
}

/// Label-invariant fingerprint of an equitable ordered partition: each
/// cell's size followed by the neighbour-count signature of its members.
pub(crate) fn node_invariant(g: &Graph, cells: &Cells) -> Vec<usize> {
    let cell_of = cell_index(g.n(), cells);
    let mut out = Vec::new();
    for c in cells {
        out.push(c.len());
        for (cell, count) in signature(g, &cell_of, c[0]) {
            out.push(cell);
            out.push(count);
        }
        out.push(usize::MAX);
    }
    out
}

/// Coarsest equitable partition refining `initial`.
pub fn color_refinement(g: &Graph, initial: &Partition) -> Partition {
    assert_eq!(initial.n(), g.n(), "partition and graph sizes differ");
    let cells: Cells = initial
        .blocks()
        .iter()
        .map(|b| b.as_slice().to_vec())
        .collect();
    let refined = refine_cells(g, cells);
    let mut keys = vec![0; g.n()];
    for (i, c) in refined.iter().enumerate() {
        for &v in c {
            keys[v] = i;
        }
    }
    Partition::from_keys(&keys)
}

/// True iff any two vertices sharing a block have equal neighbour counts
/// into every block.
pub fn is_equitable(g: &Graph, p: &Partition) -> bool {
    let count_into = |v: usize| {
        let mut counts = vec![0usize; p.len()];
        for &u in g.adjacent(v) {
            counts[p.block_index(u)] += 1;
        }
        counts
    };
    p.blocks().iter().all(|b| {
        let first = count_into(b.as_slice()[0]);
        b.iter().skip(1).all(|v| count_into(v) == first)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;
    use crate::vertex_set::VertexSet;

    fn blocks(p: &Partition) -> Vec<Vec<usize>> {
        p.blocks().iter().map(|b| b.as_slice().to_vec()).collect()
    }

    #[test]
    fn path_refines_by_distance_from_ends() {
        let p5 = Family::path(5).unwrap();
        let cells = refine_cells(&p5, vec![(0..5).collect()]);
        // Degree-1 cell first, then the split of the degree-2 cell.
        assert_eq!(cells, vec![vec![0, 4], vec![1, 3], vec![2]]);
        let p = color_refinement(&p5, &Partition::unit(5));
        assert_eq!(blocks(&p), vec![vec![0, 4], vec![1, 3], vec![2]]);
    }

    #[test]
    fn vertex_transitive_stays_whole() {
        for n in 1..7 {
            let k = Family::complete(n).unwrap();
            assert_eq!(
                color_refinement(&k, &Partition::unit(n)),
                Partition::unit(n)
            );
        }
    }

    #[test]
    fn bipartite_splits_by_degree() {
        let g = Family::complete_bipartite(2, 3).unwrap();
        let p = color_refinement(&g, &Partition::unit(5));
        assert_eq!(blocks(&p), vec![vec![0, 1], vec![2, 3, 4]]);
        assert!(is_equitable(&g, &p));
        assert!(!is_equitable(
            &Family::path(5).unwrap(),
            &Partition::unit(5)
        ));
    }

    #[test]
    fn respects_initial_partition() {
        let c4 = Family::cycle(4).unwrap();
        let initial =
            Partition::from_blocks(4, vec![VertexSet::from([0]), VertexSet::from([1, 2, 3])])
                .unwrap();
        let p = color_refinement(&c4, &initial);
        assert_eq!(blocks(&p), vec![vec![0], vec![1, 3], vec![2]]);
    }
}
