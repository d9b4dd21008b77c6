//! Zero-nonzero determination with adapted families.
//!
//! Conditions are processed one polynomial at a time. Only the conditions
//! actually realized are kept, so every linear system has size at most the
//! number of points, and the queries needed are the products indexed by the
//! adapted family of the current list.

mod adapted;
mod conditions;
mod determination;
mod solve;

pub use adapted::{
    ada, adapted_family, compress, get_info, mat_of, ExponentList, InfoEntry, InfoMatrix,
    SubsetList,
};
pub use conditions::{
    compare_conditions, format_bits, format_signs, parse_condition, value_rank, ConditionList,
};
pub use determination::{used_sets, zero_nonzero_determination, ZnzOutcome, ZnzState, ZnzStep};
pub use solve::linear_solve;
