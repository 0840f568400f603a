//! Path cover, path partition, cycle cover and cycle partition numbers of
//! small graphs; generators for the extremal families; induced-subgraph
//! freeness; and a constructive, certified bounded path cover for graphs
//! free of a star, a pendant clique and two chain gadgets.
//!
//! ```
//! use pathcover_core::{path_cover_number, FamilySpec};
//!
//! let star: FamilySpec = "S(5)".parse().unwrap();
//! let (pc, cover) = path_cover_number(&star.generate().unwrap()).unwrap();
//! assert_eq!(pc, 3);
//! assert_eq!(cover.len(), 3);
//! ```

pub mod constructive;
pub mod error;
pub mod families;
pub mod freeness;
pub mod graph;
pub mod graph6;
pub mod sample;
pub mod solvers;

pub use constructive::{
    alpha_sequence, bounded_path_cover, bounded_path_partition, decompose, longest_induced_path,
    ramsey_upper, spine_cover, spine_hamiltonian, verify_ramsey_33, Bound, CoverCertificate,
    LayerDecomposition, RamseyBound,
};
pub use error::{Error, Result};
pub use families::FamilySpec;
pub use freeness::{
    family_leq, find_induced, first_occurrence, is_family_free, is_isomorphic,
    matches_characterization, Characterization, Embedding,
};
pub use graph::{Graph, VertexSet};
pub use graph6::{from_graph6, to_graph6};
pub use solvers::{
    cycle_cover_number, cycle_partition_number, greedy_cycle_partition, greedy_path_partition,
    has_hamiltonian_path, hamiltonian_path, independence_number, maximum_independent_set,
    path_cover_number, path_partition_number, CycleElement, CycleSystem, PathSystem, SystemMode,
};
