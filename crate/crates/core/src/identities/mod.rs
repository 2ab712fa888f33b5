//! Level recursions for one-row and one-column fusion, and a validator
//! that runs every cross-check for one `(n, k)`.

mod recursion;
mod report;

pub use recursion::{
    check_level_recursion, fuse_column_closed_form, fuse_row_recursion, StripKind,
};
pub use report::{
    cross_validate, cross_validate_with, CheckResult, ValidationOptions, ValidationReport,
};
