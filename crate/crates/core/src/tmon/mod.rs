//! Transformation monoids: closure, Green's relations and action predicates.

mod action;
mod green;
mod monoid;
mod transformation;

pub use action::{
    is_0_transitive, is_2_transitive, is_congruence, is_primitive, is_transitive, orbit, principal_congruence,
    zero_transitive_sink, CongruenceReport,
};
pub use green::{maximal_subgroup, GreenData};
pub use monoid::{size_bound, MonoidData, DEFAULT_SIZE_BOUND, SIZE_BOUND_VAR};
pub use transformation::Transformation;
