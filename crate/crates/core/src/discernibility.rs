//! Discernibility matrices over vertices and over orbits.

use serde::{Deserialize, Serialize};

use crate::automorphism::OrbitPartition;
use crate::error::{Error, Result};
use crate::indiscernibility::InformationTable;
use crate::reduct::essential_sets;
use crate::vertex_set::VertexSet;

/// `Δ(i, j)`: the attributes on which vertices `i` and `j` differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscernibilityMatrix {
    n: usize,
    entries: Vec<VertexSet>,
}

impl DiscernibilityMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &VertexSet {
        &self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[VertexSet] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }
}

/// `Δ(i, j) = O(i) ∪ O(j)` for vertices in different orbits, `∅` otherwise.
pub fn discernibility_matrix(op: &OrbitPartition) -> DiscernibilityMatrix {
    let n = op.n();
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            entries.push(if op.same_orbit(i, j) {
                VertexSet::new()
            } else {
                op.orbit(i).union(op.orbit(j))
            });
        }
    }
    DiscernibilityMatrix { n, entries }
}

/// `Δ(i, j) = {a : F(i, a) ≠ F(j, a)}` read off the information table.
pub fn discernibility_matrix_from_table(table: &InformationTable) -> DiscernibilityMatrix {
    let n = table.n();
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let (ri, rj) = (table.row(i), table.row(j));
            entries.push(VertexSet::from_sorted(
                (0..n).filter(|&a| ri[a] != rj[a]).collect(),
            ));
        }
    }
    DiscernibilityMatrix { n, entries }
}

/// The discernibility matrix with rows and columns indexed by orbits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientDiscernibilityMatrix {
    pub orbits: Vec<VertexSet>,
    /// `None` on the diagonal.
    pub entries: Vec<Vec<Option<VertexSet>>>,
}

impl QuotientDiscernibilityMatrix {
    pub fn k(&self) -> usize {
        self.orbits.len()
    }

    /// The entry as a set, with the diagonal read as `∅`.
    pub fn entry(&self, i: usize, j: usize) -> VertexSet {
        self.entries[i][j].clone().unwrap_or_default()
    }

    /// Lower-triangular text table: `∅` on the diagonal, `*` above it,
    /// `O(a)∪O(b)` below it, each orbit named by its smallest member.
    pub fn render_table<F: Fn(usize) -> String>(&self, label: F) -> String {
        let names: Vec<String> = self
            .orbits
            .iter()
            .map(|o| {
                format!(
                    "O({})",
                    label(o.min_vertex().expect("orbits are non-empty"))
                )
            })
            .collect();
        let k = self.k();
        let mut grid: Vec<Vec<String>> = Vec::with_capacity(k + 1);
        let mut header = vec![String::new()];
        header.extend(names.iter().cloned());
        grid.push(header);
        for i in 0..k {
            let mut row = vec![names[i].clone()];
            for j in 0..k {
                row.push(match i.cmp(&j) {
                    std::cmp::Ordering::Equal => "∅".to_string(),
                    std::cmp::Ordering::Less => "*".to_string(),
                    std::cmp::Ordering::Greater => format!("{}∪{}", names[j], names[i]),
                });
            }
            grid.push(row);
        }
        let widths: Vec<usize> = (0..=k)
            .map(|c| grid.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for row in &grid {
            let cells: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(s, &w)| format!("{s}{}", " ".repeat(w - s.chars().count())))
                .collect();
            out.push_str(cells.join(" | ").trim_end());
            out.push('\n');
        }
        out
    }
}

pub fn quotient_matrix(op: &OrbitPartition) -> QuotientDiscernibilityMatrix {
    let orbits = op.orbits().to_vec();
    let entries = (0..orbits.len())
        .map(|i| {
            (0..orbits.len())
                .map(|j| (i != j).then(|| orbits[i].union(&orbits[j])))
                .collect()
        })
        .collect();
    QuotientDiscernibilityMatrix { orbits, entries }
}

/// Distinct non-empty entries of the quotient matrix, sorted.
pub fn eqdm(op: &OrbitPartition) -> Vec<VertexSet> {
    let qdm = quotient_matrix(op);
    let mut out: Vec<VertexSet> = qdm.entries.into_iter().flatten().flatten().collect();
    out.sort();
    out.dedup();
    out
}

/// True iff the two graphs have identical discernibility matrices, which
/// happens exactly when their orbit partitions coincide.
pub fn same_orbit_structure(op1: &OrbitPartition, op2: &OrbitPartition) -> Result<bool> {
    if op1.n() != op2.n() {
        return Err(Error::SizeMismatch {
            left: op1.n(),
            right: op2.n(),
        });
    }
    Ok(op1 == op2)
}

/// True iff the distinct quotient entries are exactly the essential sets of
/// the full vertex set.
pub fn verify_eqdm_equals_ess(op: &OrbitPartition) -> bool {
    let mut ess = essential_sets(op, &VertexSet::full(op.n())).essential_sets;
    ess.sort();
    eqdm(op) == ess
}
