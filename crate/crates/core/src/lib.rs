//! Finite Heyting algebras, intuitionistic formulas and admissible rules, and
//! decision procedures for quasivarieties generated by finite algebras.

pub mod algebra;
pub mod budget;
pub mod error;
pub mod eval;
pub mod formula;
pub mod jankov;
pub mod morphisms;
pub mod par;
pub mod quasivariety;
pub mod repro;
pub mod verdict;

pub use budget::Budgets;
pub use error::{Error, Result};
pub use verdict::Verdict;
