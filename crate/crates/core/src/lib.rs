//! Automorphism orbits of simple undirected graphs and the rough-set
//! machinery they induce: indiscernibility partitions, approximations,
//! rough membership, positive regions, reducts, cores, essential sets and
//! discernibility matrices.
//!
//! ```
//! use orbitrough::{graph::Family, automorphism::orbits, indiscernibility::indiscernibility_partition, VertexSet};
//!
//! let p5 = Family::path(5).unwrap();
//! let op = orbits(&p5);
//! let gamma = indiscernibility_partition(&op, &VertexSet::from([0]));
//! assert_eq!(gamma.render_bar(|v| v.to_string()), "04|123");
//! ```

pub mod approximation;
pub mod automorphism;
pub mod cli;
pub mod discernibility;
pub mod error;
pub mod graph;
pub mod indiscernibility;
pub mod partition;
pub mod reduct;
pub mod verify;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::Graph;
pub use partition::Partition;
pub use vertex_set::VertexSet;
