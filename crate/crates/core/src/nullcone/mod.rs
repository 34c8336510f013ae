//! The null cone: weights and unstable subsets, membership, the component
//! classifier with certificates, samplers, and dimension formulas.

mod classify;
mod dims;
mod sample;
mod weights;

pub use classify::{
    adapted_certificate, b_span, c_core, certificate_contracts, check_certificate,
    component_interval, in_null_cone, in_null_cone_by_nilpotency, Certificate, ComponentInterval,
};
pub use dims::{
    component_dim, generic_orbit_witness, nullcone_summary, transpose_dual, witness_family_point,
    NullconeSummary,
};
pub use sample::{component_tangent_dim, random_u_k, sample_component, tangent_dim_at};
pub use weights::{
    enumerate_maximal_unstable, u_k_pattern, unstable_subspace, weights_of_w,
    weights_of_w_general, x_k, CoordinatePattern, OnePsg, UnstableSubset, Weight,
};
pub(crate) use weights::permutations;
