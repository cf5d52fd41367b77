//! Adjoint-twisted torsion of knot exteriors.
//!
//! The pipeline builds the twisted cochain complex of a presentation from
//! Fox derivatives, computes its cohomology, fixes reference generators in
//! `H¹` (normalized on the meridian) and `H²` (normalized through the
//! peripheral identity sequence), and evaluates the sign-determined torsion
//! times the sign `τ₀` of the untwisted complex. Abelian representations use
//! the cohomology basis `{i, (n_j i)_j}` instead.

mod reference;
mod reps;
mod scan;
mod torsion;
mod twisted;

pub use reference::{curve_axis, f_mu, i_star, is_mu_regular, reference_h1, reference_h2, reference_h2_with_axis, tau0};
pub use reps::{abelian_rep, theta_mu, torus_rep, torus_theta_m_closed_form, torus_torsion_closed_form};
pub use scan::{linear_grid, scan_csv, scan_torus, scan_torus_with, ScanRow, SCAN_HEADER};
pub use torsion::{
    abelian_torsion, abelian_torsion_closed_form, abelian_torsion_report, nonabelian_torsion,
    nonabelian_torsion_report, TorsionOptions, TorsionReport, ALEXANDER_ROOT_TOL,
};
pub use twisted::{evaluate_cochain, is_irreducible, is_regular, twisted_complex, CohomologySummary, TwistedComplex, CHAIN_TOL};
