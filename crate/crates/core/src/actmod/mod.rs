//! Linear data attached to a transformation monoid action.

mod module;
mod sets;

pub use module::{
    aug_matrix, aug_module, monoid_aug_module, omega_matrix, omega_module, restricted_group, restricted_group_module,
    validate, ActionModule, Basis, PermGroup,
};
pub use sets::{gamma_graph, kernel_blocks, GammaGraph, SetSystem};
