use nalgebra::{DMatrix, DVector, Vector3};

use crate::complex::BasedChainComplex;
use crate::error::{Error, Result};
use crate::presentation::{abelianization_exponents, GroupPresentation, Word};
use crate::su2::PureQuaternion;

use super::twisted::{is_irreducible, TwistedComplex};

/// Axis `P` of `ρ(μ) = cos θ + sin θ P`.
pub fn curve_axis(t: &TwistedComplex, mu: &Word) -> Result<PureQuaternion> {
    t.representation()
        .evaluate(mu)
        .axis_angle()
        .map(|aa| aa.axis)
        .map_err(|_| Error::CentralMeridian)
}

/// `f_μ(v) = ⟨v(μ), P⟩` for a 1-cochain `v`.
pub fn f_mu(t: &TwistedComplex, v: &DVector<f64>, mu: &Word) -> Result<f64> {
    let axis = curve_axis(t, mu)?;
    Ok(t.evaluate_cochain(v, mu).dot(&axis.to_vector()))
}

fn require_regular(t: &TwistedComplex) -> Result<DVector<f64>> {
    let coh = t.cohomology();
    let irreducible = is_irreducible(t.representation());
    if !irreducible || coh.dims[1] != 1 {
        return Err(Error::NotRegular {
            dims: coh.dims,
            irreducible,
        });
    }
    Ok(coh.h1.column(0).into_owned())
}

/// True iff `f_μ` does not vanish on `H¹`.
pub fn is_mu_regular(t: &TwistedComplex, mu: &Word) -> Result<bool> {
    let h = require_regular(t)?;
    Ok(f_mu(t, &h, mu)?.abs() > t.tolerances().rank * h.norm())
}

/// The `H¹` generator normalized by `f_μ = 1`.
pub fn reference_h1(t: &TwistedComplex, mu: &Word) -> Result<DVector<f64>> {
    let h = require_regular(t)?;
    let f = f_mu(t, &h, mu)?;
    if f.abs() <= t.tolerances().rank * h.norm() {
        return Err(Error::NotMuRegular);
    }
    Ok(h / f)
}

/// `i*(z) = Σ_k ε_k Ad_{ρ(u_k)} z_{j_k}`, the restriction of a 2-cochain to the
/// boundary torus read off from the peripheral identity sequence.
pub fn i_star(t: &TwistedComplex, z: &DVector<f64>) -> Result<Vector3<f64>> {
    let p = t.presentation();
    let (_, _, seq) = p.peripheral_system()?;
    let rho = t.representation();
    Ok(seq.iter().fold(Vector3::zeros(), |acc, term| {
        let j = term.relator;
        let zj = Vector3::new(z[3 * j], z[3 * j + 1], z[3 * j + 2]);
        acc + rho.evaluate(&term.conjugator).adjoint_matrix() * zj * term.sign as f64
    }))
}

/// The `H²` generator normalized by `⟨i*(h), P⟩ = 1`, `P` the meridian axis.
pub fn reference_h2(t: &TwistedComplex) -> Result<DVector<f64>> {
    let p = t.presentation();
    let (m, _, _) = p.peripheral_system()?;
    let axis = curve_axis(t, m)?;
    reference_h2_with_axis(t, axis)
}

/// As [`reference_h2`], pairing against an explicit axis.
pub fn reference_h2_with_axis(t: &TwistedComplex, axis: PureQuaternion) -> Result<DVector<f64>> {
    let terms = t.presentation().peripheral_system()?.2.len().max(1);
    let coh = t.cohomology();
    let irreducible = is_irreducible(t.representation());
    if !irreducible || coh.dims[1] != 1 || coh.dims[2] != 1 {
        return Err(Error::NotRegular {
            dims: coh.dims,
            irreducible,
        });
    }
    let w = coh.h2.column(0).into_owned();
    let pairing = i_star(t, &w)?.dot(&axis.to_vector());
    // w is a unit vector and each term of i* is a rotation of one block
    if pairing.abs() <= t.tolerances().rank * terms as f64 {
        return Err(Error::DegeneratePairing);
    }
    Ok(w / pairing)
}

/// Sign of the torsion of the untwisted complex `ℝ^{r−1} ← ℝ^r ← ℝ`, with
/// `H⁰` based by the constant cochain and `H¹` by the abelianization cocycle.
pub fn tau0(p: &GroupPresentation) -> Result<i8> {
    let n = abelianization_exponents(p)?;
    let r = p.generator_count();
    let rels = p.relators();
    let d1 = DMatrix::from_fn(rels.len(), r, |i, j| rels[i].exponent_sum(j) as f64);
    let d2 = DMatrix::zeros(r, 1);
    let h1 = DMatrix::from_fn(r, 1, |j, _| n[j] as f64);
    let c = BasedChainComplex::new(
        vec![rels.len(), r, 1],
        vec![d1, d2],
        vec![DMatrix::zeros(rels.len(), 0), h1, DMatrix::from_element(1, 1, 1.0)],
    )
    .map_err(|e| Error::NotKnotLike(format!("untwisted complex: {e}")))?;
    let value = c.sign_determined_torsion()?.value;
    Ok(if value > 0.0 { 1 } else { -1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knot::{torus_rep, twisted_complex};
    use crate::presentation::{figure_eight, torus_knot_presentation, trefoil_wirtinger, unknot};

    #[test]
    fn tau0_values() {
        for q in [3, 5, 7, 9] {
            assert_eq!(tau0(&torus_knot_presentation(q).unwrap()).unwrap(), 1);
        }
        assert_eq!(tau0(&trefoil_wirtinger()).unwrap(), 1);
        assert!(matches!(tau0(&figure_eight()).unwrap(), 1 | -1));
        assert_eq!(tau0(&unknot()).unwrap(), -1);
    }

    #[test]
    fn reference_generators_are_normalized() {
        let p = torus_knot_presentation(5).unwrap();
        let rho = torus_rep(5, 2, 0.35).unwrap();
        let t = twisted_complex(&p, &rho).unwrap();
        let m = p.meridian().unwrap();
        assert!(is_mu_regular(&t, m).unwrap());
        let h1 = reference_h1(&t, m).unwrap();
        assert!((f_mu(&t, &h1, m).unwrap() - 1.0).abs() < 1e-12);
        assert!((t.d1() * &h1).norm() < 1e-12);
        let h2 = reference_h2(&t).unwrap();
        let axis = curve_axis(&t, m).unwrap();
        assert!((i_star(&t, &h2).unwrap().dot(&axis.to_vector()) - 1.0).abs() < 1e-12);
        let flipped = reference_h2_with_axis(&t, -axis).unwrap();
        assert!((flipped + h2).norm() < 1e-12);
    }

    #[test]
    fn f_mu_vanishes_on_coboundaries() {
        let p = torus_knot_presentation(3).unwrap();
        let rho = torus_rep(3, 1, 0.6).unwrap();
        let t = twisted_complex(&p, &rho).unwrap();
        let a = DVector::from_vec(vec![0.2, -1.3, 0.7]);
        let dv = t.d2() * a;
        assert!(f_mu(&t, &dv, p.meridian().unwrap()).unwrap().abs() < 1e-12);
        assert_eq!(f_mu(&t, &DVector::zeros(6), p.meridian().unwrap()).unwrap(), 0.0);
    }

    #[test]
    fn torus_h1_matches_explicit_cocycle() {
        // v(x) = k, v(y) = 0 is a cocycle for the torus relator
        let p = torus_knot_presentation(3).unwrap();
        let rho = torus_rep(3, 1, 0.45).unwrap();
        let t = twisted_complex(&p, &rho).unwrap();
        let v = DVector::from_vec(vec![0.0, 0.0, 1.0, 0.0, 0.0, 0.0]);
        assert!((t.d1() * &v).norm() < 1e-12);
        let m = p.meridian().unwrap();
        let axis = curve_axis(&t, m).unwrap();
        assert!((f_mu(&t, &v, m).unwrap() - axis.z).abs() < 1e-12);
    }

    #[test]
    fn relator_curve_is_central() {
        let p = torus_knot_presentation(3).unwrap();
        let rho = torus_rep(3, 1, 0.5).unwrap();
        let t = twisted_complex(&p, &rho).unwrap();
        assert!(matches!(is_mu_regular(&t, &p.relators()[0]), Err(Error::CentralMeridian)));
    }
}
