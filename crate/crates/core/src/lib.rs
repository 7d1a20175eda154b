//! Braided crossed modules of finite-dimensional Lie algebras over the
//! rationals.
//!
//! The crate checks crossed module and braiding axioms, builds non-abelian
//! tensor products from generators and relations, constructs universal
//! central extensions (both the tensor-square and the `N ⊗ M` variants) and
//! classifies extensions as central or compatible central. All arithmetic is
//! exact.

pub mod braid;
pub mod cli;
pub mod error;
pub mod exactla;
pub mod liealg;
pub mod natensor;
pub mod uce;
pub mod xmod;

pub use braid::{BraidedMorphism, BraidedXMod, Braiding};
pub use error::{Axiom, Category, Error, Result, Verdict, Violation};
pub use exactla::{RatMatrix, Rational, Subspace, Vector};
pub use liealg::{LieAlgebra, LieHom};
pub use natensor::TensorPresentation;
pub use xmod::{Action, CrossedModule, XModMorphism};
