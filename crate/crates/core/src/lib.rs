//! Exact computations with finite-dimensional associative algebras over ℚ.
//!
//! The crate covers three layers:
//!
//! * exact linear algebra ([`linalg`]), polynomials ([`poly`]) and complete
//!   factorization over ℚ ([`factor`]);
//! * algebras given by structure constants ([`algebra`]), their Jacobson
//!   radical and Wedderburn–Artin decomposition ([`structure`]), and lifting
//!   of idempotents and projective modules modulo nilpotent ideals
//!   ([`lifting`]);
//! * evaluators for essential-dimension bounds of moduli of projective
//!   modules and of vector bundles on curves ([`ed`]).
//!
//! [`corpus`] holds the shared test fixtures and brute-force oracles, and
//! [`cli`] the logic behind the `fdalg` binary.

pub mod algebra;
pub mod cli;
pub mod corpus;
pub mod ed;
pub mod error;
pub mod factor;
pub mod lifting;
pub mod linalg;
pub mod poly;
pub mod rat;
pub mod structure;

pub use algebra::{AlgebraElement, FDAlgebra, QuotientPresentation, Subspace};
pub use error::{Error, Result};
pub use linalg::Mat;
pub use poly::Poly;
pub use rat::Rat;
