//! Exact construction and verification of the Galilean conformal algebras,
//! their N = 2 and N = 1 super extensions, the free-field realizations on
//! the centrally extended ideals, and the triviality computation for the
//! remaining central terms. All arithmetic is rational; every check is an
//! identity, not an approximation.

pub mod algebra;
pub mod builders;
pub mod coeff;
pub mod cohomology;
pub mod element;
pub mod error;
pub mod generator;
pub mod halfint;
pub mod oscillator;
pub mod realizations;

/// The scalar field of the whole crate.
pub type Rat = num_rational::Rational64;

pub use algebra::{CentralKind, Family, Superalgebra, Violation, ViolationKind, ViolationReport};
pub use builders::{build, d_weights, r_charges, BuildSpec};
pub use cohomology::{certify_triviality, TrivialityCertificate};
pub use element::Element;
pub use error::{Error, Result};
pub use generator::{Generator, Parity};
pub use halfint::HalfInt;
pub use oscillator::{IdealAlgebra, LaurentScalar, OscExpr};
pub use realizations::{
    build_bf_hamiltonian, build_oscillator_basis, hamiltonian_residual, realize,
    verify_canonical_relations, verify_realization, OscillatorBasis, Realization,
    RealizationReport,
};
