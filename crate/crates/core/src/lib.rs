//! Finite Boolean contact algebras, the regular open algebra of the real line
//! in exact arithmetic, and the point constructions relating them to spaces.

pub mod algebra;
pub mod cli;
pub mod contact;
pub mod error;
pub mod interval;
pub mod points;
pub mod report;
pub mod spaces;

pub use algebra::{Elem, FiniteBooleanAlgebra, Filter};
pub use contact::ContactStructure;
pub use error::{Error, Result};
pub use interval::{IntervalSet, Region};
pub use report::{AxiomReport, Status, Verdict};
