//! Exact computation with finite-dimensional Hopf algebras and Hopf
//! superalgebras given by structure constants.
//!
//! All arithmetic happens in cyclotomic fields `Q(zeta_n)` with exact
//! rational coordinates, so every structural statement (axioms, twist
//! identities, R-matrix identities) is decided bit-exactly.
//!
//! The main layers:
//!
//! * [`scalar`] / [`linalg`] - exact scalars and dense/sparse linear algebra;
//! * [`algebra`] / [`hopf`] - associative algebras and Hopf structure;
//! * [`superalg`] - Hopf superalgebras with Koszul sign conventions and the
//!   supergroup-algebra constructors;
//! * [`triangular`] / [`twist`] - R-matrices and Drinfeld twists;
//! * [`correspondence`] - the bosonization dictionary between Hopf algebras
//!   carrying an involutive grouplike and Hopf superalgebras;
//! * [`chevalley`] - executable Chevalley-property criteria;
//! * [`catdim`] - categorical / Frobenius-Perron dimensions and the
//!   integrality decision procedure on integer polynomials;
//! * [`io`] - the canonical file format used by the CLI.

pub mod algebra;
pub mod catdim;
pub mod chevalley;
pub mod correspondence;
pub mod error;
pub mod hopf;
pub mod io;
pub mod linalg;
pub mod scalar;
pub mod superalg;
pub mod tensor;
pub mod triangular;
pub mod twist;

pub use error::ExactError;
pub use scalar::{CycScalar, Rational};
