//! Hodge Laplacians on Chevalley–Eilenberg complexes of finite-dimensional
//! Lie algebras, enveloping-algebra normal forms, perturbed heat semigroups
//! and SL(2,ℝ) group numerics.

pub mod cli;
pub mod cochain;
pub mod error;
pub mod group_numerics;
pub mod io;
pub mod lie_core;
pub mod linalg;
pub mod report;
pub mod semigroup;
pub mod uea;

pub use error::{Error, Result};
