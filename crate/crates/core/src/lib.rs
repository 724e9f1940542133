//! Permutations of `{1..n}` avoiding sets of length-3 patterns, counted by
//! number of fixed points.
//!
//! The crate pairs a brute-force [`oracle`] with closed-form evaluators
//! ([`formulas`]), a generating-function expander ([`genfun`]), structural
//! constructions ([`generators`]) and symmetry classification
//! ([`equivalence`]); [`audit`] cross-checks all of them.

pub mod audit;
pub mod equivalence;
pub mod error;
pub mod formulas;
pub mod generators;
pub mod genfun;
pub mod oracle;
pub mod perm;

pub use audit::{audit_all, AuditReport};
pub use equivalence::{orbit_classes, super_wilf_classes, symmetry_classes};
pub use error::{Error, Result};
pub use formulas::{evaluate, EvalResult, FormulaId, Status};
pub use generators::Generators;
pub use oracle::{CountTable, Oracle};
pub use perm::{Pattern, PatternSet, Permutation, Symmetry};
