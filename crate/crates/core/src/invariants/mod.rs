//! Generating invariants of the enhanced adjoint action and the maps built
//! from them.

mod point;
mod psi;
mod quotient;
mod sl;
mod words;

pub use point::{group_action, Point, TangentVector};
pub use psi::{
    nonclosed_image_demo, psi_map, toy_map, toy_value_excluded_from_z, NonClosedDemo, ToyValue,
};
pub use quotient::{
    differential, evaluate_invariants, jacobian, jacobian_rank, jacobian_rank_bound,
    InvariantVector,
};
pub use sl::{sl_relation_check, SlRelation};
pub use words::{word_invariants, Word, WordInvariants};

pub(crate) use quotient::require_same_shape;
