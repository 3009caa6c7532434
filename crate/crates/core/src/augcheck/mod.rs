//! Decision procedure for simplicity of the augmentation module.

mod check;
mod report;

pub use check::{
    check_0_transitive, check_conditions, decide, group_aug_simple, oracle_simple, partial_module_simple,
    two_transitive_consequences, CheckOptions, GroupVerdict, PartialVerdict, TwoTransitiveReport,
    ORACLE_ELEMENT_LIMIT,
};
pub use report::{subspace_witness, CheckReport, Condition, Final, GroupMethod, OracleOutcome, Path, Verdict, Witness};
