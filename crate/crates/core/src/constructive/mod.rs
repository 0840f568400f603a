//! The constructive bounded-cover pipeline: Ramsey and layer bounds, the
//! spine decomposition, spine covers and the assembled certificate.

mod decompose;
mod induced_path;
mod pipeline;
mod ramsey;
mod spine;

pub use decompose::{decompose, AttachmentSlot, LayerDecomposition, Predicates};
pub use induced_path::longest_induced_path;
pub use pipeline::{bounded_path_cover, bounded_path_partition, spine_region, CoverCertificate};
pub use ramsey::{
    alpha_sequence, ramsey_upper, spine_margin, verify_ramsey_33, Bound, RamseyBound,
    BOUND_BIT_CAP,
};
pub use spine::{spine_cover, spine_cover_bound, spine_hamiltonian};
