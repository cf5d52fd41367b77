use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::presentation::{abelianization_exponents, torus_knot_presentation, GroupPresentation, Representation, Word};
use crate::su2::{PureQuaternion, UnitQuaternion};

/// `S_j ↦ cos(n_j θ) + sin(n_j θ) i`, with `n_j` the abelianization exponents.
pub fn abelian_rep(p: &GroupPresentation, theta: f64) -> Result<Representation> {
    if !(0.0..=PI).contains(&theta) {
        return Err(Error::InvalidParameter(format!("theta = {theta} lies outside [0, π]")));
    }
    let n = abelianization_exponents(p)?;
    let images = n
        .iter()
        .map(|&k| UnitQuaternion::exp(PureQuaternion::I.scale(k as f64 * theta)))
        .collect();
    Representation::new(p, images)
}

/// `x ↦ i`, `y ↦ cos a + sin a (cos πt i + sin πt j)` with `a = (2ℓ−1)π/q`,
/// on the presentation of [`torus_knot_presentation`].
pub fn torus_rep(q: i64, l: i64, t: f64) -> Result<Representation> {
    let p = torus_knot_presentation(q)?;
    if l < 1 || l > (q - 1) / 2 {
        return Err(Error::InvalidParameter(format!(
            "l = {l} must satisfy 1 <= l <= {}",
            (q - 1) / 2
        )));
    }
    if !(t > 0.0 && t < 1.0) {
        return Err(Error::InvalidParameter(format!("t = {t} must lie in (0, 1)")));
    }
    let a = (2 * l - 1) as f64 * PI / q as f64;
    let axis = PureQuaternion::new((PI * t).cos(), (PI * t).sin(), 0.0);
    let y = UnitQuaternion::from_axis_angle(a, axis)?;
    Representation::new(&p, vec![UnitQuaternion::I, y])
}

/// Angle `θ ∈ (0, π)` of `ρ(μ) = cos θ + sin θ P`.
pub fn theta_mu(rho: &Representation, mu: &Word) -> Result<f64> {
    rho.evaluate(mu)
        .axis_angle()
        .map(|aa| aa.theta)
        .map_err(|_| Error::CentralMeridian)
}

/// `arccos((−1)^{ℓ−1} cos((2ℓ−1)π/2q) cos(πt))`.
pub fn torus_theta_m_closed_form(q: i64, l: i64, t: f64) -> f64 {
    let sign = if (l - 1) % 2 == 0 { 1.0 } else { -1.0 };
    let a = (2 * l - 1) as f64 * PI / (2 * q) as f64;
    (sign * a.cos() * (PI * t).cos()).acos()
}

/// `−(8/q) sin²((2ℓ−1)π/q)`.
pub fn torus_torsion_closed_form(q: i64, l: i64) -> f64 {
    let a = (2 * l - 1) as f64 * PI / q as f64;
    -8.0 / q as f64 * a.sin().powi(2)
}
