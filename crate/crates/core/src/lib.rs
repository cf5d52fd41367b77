//! Sign-determined Reidemeister torsion of knot exteriors twisted by the
//! adjoint of an SU(2) representation.
//!
//! The pipeline runs from a group presentation ([`presentation`]) through Fox
//! calculus ([`fox`]) to the twisted cochain complex and its reference
//! cohomology generators ([`knot`]), whose torsion is evaluated by the generic
//! based-complex machinery in [`complex`]. [`checks`] holds seeded randomized
//! property suites, and [`cli`] the command-line front end.

pub mod checks;
pub mod cli;
pub mod complex;
pub mod error;
pub mod format;
pub mod fox;
pub mod knot;
pub mod laurent;
pub mod linalg;
pub mod presentation;
pub mod su2;
pub mod tolerance;

pub use error::{Error, Result};
