use std::f64::consts::PI;

use nalgebra::DVector;
use serde::Serialize;

use crate::complex::TorsionResult;
use crate::error::{Error, Result};
use crate::fox::alexander_polynomial;
use crate::presentation::{abelianization_exponents, GroupPresentation, Representation};
use crate::tolerance::Tolerances;

use super::reference::{curve_axis, is_mu_regular, reference_h1, reference_h2_with_axis, tau0};
use super::reps::{abelian_rep, theta_mu};
use super::twisted::{is_irreducible, TwistedComplex};

/// `|Δ(e^{2iθ})|` below which an abelian representation counts as non-regular.
pub const ALEXANDER_ROOT_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, Default)]
pub struct TorsionOptions {
    pub tolerances: Tolerances,
    /// Pair `h⁽²⁾` against `−P` instead of the meridian axis `P`.
    pub flip_axis: bool,
}

/// Everything computed on the way to a torsion value.
#[derive(Debug, Clone, Serialize)]
pub struct TorsionReport {
    /// `τ₀ · Tor`.
    pub value: f64,
    pub tau0: i8,
    pub complex: TorsionResult,
    pub cohomology_dims: [usize; 3],
    pub irreducible: bool,
    pub regular: bool,
    pub mu_regular: bool,
    /// Angle of the meridian image, when it is not central.
    pub theta_m: Option<f64>,
}

/// `τ₀ · Tor(𝒳^ρ, {h⁽¹⁾(m), h⁽²⁾})` for a regular, meridian-regular `ρ`.
pub fn nonabelian_torsion(p: &GroupPresentation, rho: &Representation) -> Result<f64> {
    Ok(nonabelian_torsion_report(p, rho, &TorsionOptions::default())?.value)
}

pub fn nonabelian_torsion_report(p: &GroupPresentation, rho: &Representation, opts: &TorsionOptions) -> Result<TorsionReport> {
    let (m, _, _) = p.peripheral_system()?;
    let t = TwistedComplex::with_tolerances(p, rho, opts.tolerances)?;
    let dims = t.cohomology_dims();
    let irreducible = is_irreducible(rho);
    if !irreducible || dims != [0, 1, 1] {
        return Err(Error::NotRegular { dims, irreducible });
    }
    if !is_mu_regular(&t, m)? {
        return Err(Error::NotMuRegular);
    }
    let h1 = reference_h1(&t, m)?;
    let axis = curve_axis(&t, m)?;
    let h2 = reference_h2_with_axis(&t, if opts.flip_axis { -axis } else { axis })?;
    let complex = t.based(vec![h2], vec![h1], vec![])?.sign_determined_torsion()?;
    let tau0 = tau0(p)?;
    Ok(TorsionReport {
        value: tau0 as f64 * complex.value,
        tau0,
        complex,
        cohomology_dims: dims,
        irreducible,
        regular: true,
        mu_regular: true,
        theta_m: theta_mu(rho, m).ok(),
    })
}

/// `τ₀ · Tor(𝒳^{φ_θ}, {h⁽⁰⁾, h⁽¹⁾})` with `h⁽⁰⁾ = i` and `h⁽¹⁾ = (n_j i)_j`.
pub fn abelian_torsion(p: &GroupPresentation, theta: f64) -> Result<f64> {
    Ok(abelian_torsion_report(p, theta, Tolerances::default())?.value)
}

pub fn abelian_torsion_report(p: &GroupPresentation, theta: f64, tol: Tolerances) -> Result<TorsionReport> {
    if !(theta > 0.0 && theta < PI) {
        return Err(Error::InvalidParameter(format!("theta = {theta} must lie in (0, π)")));
    }
    let delta = alexander_polynomial(p)?;
    let modulus = delta.modulus_on_circle(2.0 * theta);
    if modulus < ALEXANDER_ROOT_TOL {
        return Err(Error::NonRegularTheta { theta, modulus });
    }
    let n = abelianization_exponents(p)?;
    let rho = abelian_rep(p, theta)?;
    let t = TwistedComplex::with_tolerances(p, &rho, tol)?;
    let dims = t.cohomology_dims();
    if dims != [1, 1, 0] {
        return Err(Error::NonRegularTheta { theta, modulus });
    }
    let h0 = DVector::from_vec(vec![1.0, 0.0, 0.0]);
    let h1 = DVector::from_iterator(3 * n.len(), n.iter().flat_map(|&k| [k as f64, 0.0, 0.0]));
    let complex = t.based(vec![], vec![h1], vec![h0])?.sign_determined_torsion()?;
    let tau0 = tau0(p)?;
    Ok(TorsionReport {
        value: tau0 as f64 * complex.value,
        tau0,
        complex,
        cohomology_dims: dims,
        irreducible: false,
        regular: false,
        mu_regular: false,
        theta_m: p.meridian().and_then(|m| theta_mu(&rho, m).ok()),
    })
}

/// `4 sin²θ / |Δ(e^{2iθ})|²`.
pub fn abelian_torsion_closed_form(p: &GroupPresentation, theta: f64) -> Result<f64> {
    let delta = alexander_polynomial(p)?;
    Ok(4.0 * theta.sin().powi(2) / delta.modulus_on_circle(2.0 * theta).powi(2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knot::reps::{torus_rep, torus_torsion_closed_form};
    use crate::presentation::{figure_eight, torus_knot_presentation, trefoil_wirtinger, unknot};

    #[test]
    fn torus_values() {
        for (q, l) in [(3, 1), (5, 1), (5, 2), (7, 2)] {
            let p = torus_knot_presentation(q).unwrap();
            for t in [0.2, 0.7] {
                let v = nonabelian_torsion(&p, &torus_rep(q, l, t).unwrap()).unwrap();
                assert!((v - torus_torsion_closed_form(q, l)).abs() < 1e-9, "{q} {l} {t}: {v}");
            }
        }
        let p = torus_knot_presentation(3).unwrap();
        assert!((nonabelian_torsion(&p, &torus_rep(3, 1, 0.4).unwrap()).unwrap() + 2.0).abs() < 1e-10);
    }

    #[test]
    fn axis_flip_negates() {
        let p = torus_knot_presentation(5).unwrap();
        let rho = torus_rep(5, 1, 0.3).unwrap();
        let a = nonabelian_torsion(&p, &rho).unwrap();
        let opts = TorsionOptions {
            flip_axis: true,
            ..Default::default()
        };
        let b = nonabelian_torsion_report(&p, &rho, &opts).unwrap().value;
        assert!((a + b).abs() < 1e-10);
    }

    #[test]
    fn abelian_values() {
        let half = PI / 2.0;
        assert!((abelian_torsion(&trefoil_wirtinger(), half).unwrap() - 4.0 / 9.0).abs() < 1e-12);
        assert!((abelian_torsion(&figure_eight(), half).unwrap() - 4.0 / 25.0).abs() < 1e-12);
        for th in [0.3, 1.1, 2.5] {
            let u = abelian_torsion(&unknot(), th).unwrap();
            assert!((u - 4.0 * th.sin().powi(2)).abs() < 1e-12);
            let a = abelian_torsion(&trefoil_wirtinger(), th).unwrap();
            let b = abelian_torsion(&torus_knot_presentation(3).unwrap(), th).unwrap();
            assert!((a - b).abs() < 1e-10 * a.abs());
        }
    }

    #[test]
    fn abelian_rejects_roots() {
        // Δ_trefoil vanishes at e^{±iπ/3}
        let err = abelian_torsion(&trefoil_wirtinger(), PI / 6.0).unwrap_err();
        assert!(matches!(err, Error::NonRegularTheta { .. }));
    }

    #[test]
    fn nonregular_inputs() {
        let p = torus_knot_presentation(3).unwrap();
        let rho = abelian_rep(&p, 0.4).unwrap();
        assert!(matches!(nonabelian_torsion(&p, &rho), Err(Error::NotRegular { .. })));
        let rho = abelian_rep(&trefoil_wirtinger(), 0.4).unwrap();
        assert!(matches!(
            nonabelian_torsion(&trefoil_wirtinger(), &rho),
            Err(Error::MissingPeripheralData)
        ));
    }
}
