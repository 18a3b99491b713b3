//! Exact structure-constant computations for Hopf algebras graded by a finite
//! group: axiom checkers, braces, matched pairs, post-Hopf structures and
//! Rota-Baxter operators.

pub mod action;
pub mod brace;
pub mod braiding;
pub mod coalgebra;
pub mod enumerate;
pub mod error;
pub mod gallery;
pub mod graded;
pub mod group;
pub mod hopf;
pub mod linalg;
pub mod matched_pair;
pub mod post_hopf;
pub mod report;
pub mod rota_baxter;
pub mod scalar;
pub mod smash;
pub mod tensor;

pub use action::{ActionFamily, ActionSide};
pub use brace::HopfPiBrace;
pub use braiding::BraidingFamily;
pub use coalgebra::{Coalgebra, FiniteAlgebra};
pub use error::{Error, Result};
pub use graded::{GradedLinearMap, GradedSpace};
pub use group::{FiniteGroup, Grading, GroupHom};
pub use hopf::{HopfPiAlgebra, PiBialgebra};
pub use linalg::{DenseMatrix, Vector};
pub use matched_pair::MatchedPair;
pub use post_hopf::PostHopfStructure;
pub use report::CheckReport;
pub use rota_baxter::{Factorization, RotaBaxterOperator};
pub use scalar::{Field, Scalar};
pub use tensor::StructureTensor;
