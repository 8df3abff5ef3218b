//! Exact computations with finite-dimensional Hopf algebras over cyclotomic
//! fields: Taft algebras, their duals, twisted and classical doubles, and
//! two-term dg algebras built from them.

pub mod algebra;
pub mod cyclotomic;
pub mod dg;
pub mod double;
pub mod expr;
pub mod hopf;
pub mod linalg;
pub mod module;
pub mod poly;
pub mod report;
pub mod schema;
pub mod taft_double;

pub use algebra::{AlgebraElement, AlgebraError, StructureAlgebra};
pub use cyclotomic::Cyclotomic;
pub use linalg::{Matrix, Subspace};
