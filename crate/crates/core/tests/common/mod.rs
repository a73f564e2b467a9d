#![allow(dead_code)]

use orbitrough::graph::{Family, Graph};
use orbitrough::VertexSet;
use rand::Rng;

/// Triangle {0,1,5} joined completely to {2,4}, with 3 adjacent to 2 and 4.
/// Orbits: {0,1,5}, {2,4}, {3}.
pub fn figure1() -> Graph {
    Graph::from_edges(
        6,
        [
            (0, 1),
            (0, 5),
            (1, 5),
            (0, 2),
            (0, 4),
            (1, 2),
            (1, 4),
            (2, 5),
            (4, 5),
            (2, 3),
            (3, 4),
        ],
    )
    .unwrap()
}

/// Path 0-1-2-3 with two pendant leaves on each end.
/// Orbits: {0,3}, {1,2}, {4,5,6,7}.
pub fn figure2() -> Graph {
    Graph::from_edges(8, [(0, 1), (1, 2), (2, 3), (0, 4), (0, 5), (3, 6), (3, 7)]).unwrap()
}

pub fn family(spec: &str) -> Graph {
    spec.parse::<Family>().unwrap().build().unwrap()
}

/// Named fixtures with at most 8 vertices.
pub fn small_fixtures() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    for n in 1..=8 {
        out.push((format!("path:{n}"), family(&format!("path:{n}"))));
    }
    for n in 3..=8 {
        out.push((format!("cycle:{n}"), family(&format!("cycle:{n}"))));
    }
    for n in 1..=6 {
        out.push((format!("complete:{n}"), family(&format!("complete:{n}"))));
    }
    for (m, n) in [(1, 3), (2, 2), (2, 3), (3, 3), (2, 4), (2, 5), (3, 4)] {
        let s = format!("complete_bipartite:{m},{n}");
        out.push((s.clone(), family(&s)));
    }
    out.push(("edgeless:4".into(), family("edgeless:4")));
    out.push(("rigid6".into(), family("rigid6")));
    out.push(("figure1".into(), figure1()));
    out.push(("figure2".into(), figure2()));
    out
}

pub fn random_graphs<R: Rng>(count: usize, max_n: usize, rng: &mut R) -> Vec<Graph> {
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            let p = rng.gen_range(0.1..0.9);
            Graph::random(n, p, rng).unwrap()
        })
        .collect()
}

pub fn all_subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    (0..1u64 << n).map(move |b| VertexSet::from_bits(b, n))
}
