//! Exact computation of generalized-derivation spaces of finite-dimensional
//! ω-Lie superalgebras over ℚ(i).
//!
//! The crate is organized bottom-up: [`scalar`] and [`linalg`] provide exact
//! arithmetic and canonical subspaces, [`superalgebra`] models the algebras,
//! [`derivations`] solves the defining linear systems, and [`theorems`],
//! [`extension`] and [`jordan`] evaluate structural statements about the
//! resulting spaces.

pub mod catalog;
pub mod derivations;
pub mod error;
pub mod extension;
pub mod jordan;
pub mod linalg;
pub mod random;
pub mod scalar;
pub mod superalgebra;
pub mod theorems;

pub use catalog::CatalogEntry;
pub use derivations::{
    compatibility_space, gder_witness, solve_space, super_commutator, GradedMap, GradedMapSpace, MapCoords, MapSpace,
    MapSpan, SolveOptions, SpaceKind,
};
pub use error::{Error, Result};
pub use extension::{BreveAlgebra, ExtensionSpaces, PhiMap};
pub use jordan::{char_poly, classify_samples, JordanStructure, Poly, Tally};
pub use linalg::{Matrix, Subspace};
pub use scalar::GaussianRational;
pub use superalgebra::{load_algebra, AlgebraBuilder, AxiomReport, GradedSubspace, OmegaSuperAlgebra, Parity};
pub use theorems::{AlgebraSpaces, StatementId, TheoremReport, Verdict};
