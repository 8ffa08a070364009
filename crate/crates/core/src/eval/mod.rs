//! The evaluation functor: ladders as exact matrices on tensor products of
//! quantum exterior powers, web relations as matrix identities, and the
//! triangularity and rank checks built on them.

pub mod basis;
mod functor;
pub mod matrix;

pub use basis::{ell, TensorBasis};
pub use functor::{eval_ladder, eval_rung, eval_stack, eval_sum, merge_matrix, split_matrix, EvalMatrix};
pub use matrix::{Fp, Scalar, SparseMatrix, PRIME};
pub mod relations;

pub use relations::{check_relation, registry, relation, sweep_relation, Relation, RelationReport};
mod checks;

pub use checks::{hom_rank, triangularity_report, HomRankReport, TriangularityReport};
