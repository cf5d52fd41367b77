use nalgebra::{DMatrix, DVector, Vector3};

use crate::complex::BasedChainComplex;
use crate::error::{Error, Result};
use crate::fox::{evaluate_adjoint, fox_derivative};
use crate::linalg::{largest_singular_value, quotient_basis, rank_kernel_image_scaled};
use crate::presentation::{GroupPresentation, Representation, Word};
use crate::su2::UnitQuaternion;
use crate::tolerance::Tolerances;

/// Bound on `‖d₁ d₂‖` accepted for a twisted complex.
pub const CHAIN_TOL: f64 = 1e-10;

/// The cochain complex `su(2) → su(2)^r → su(2)^{r−1}` of a presentation
/// twisted by `Ad∘ρ`, viewed as a chain complex `𝒳_i = C^{2−i}`.
///
/// Chain degree 2 is `C⁰ = su(2)`, degree 1 is `C¹ = su(2)^r` (one block per
/// generator) and degree 0 is `C² = su(2)^{r−1}` (one block per relator).
#[derive(Debug, Clone)]
pub struct TwistedComplex {
    presentation: GroupPresentation,
    representation: Representation,
    /// `𝒳_1 → 𝒳_0`, blocks `Ad∘ρ(∂R_i/∂S_j)`.
    d1: DMatrix<f64>,
    /// `𝒳_2 → 𝒳_1`, blocks `I − Ad_{ρ(S_j)}`.
    d2: DMatrix<f64>,
    tol: Tolerances,
    scale: f64,
}

/// Twisted cohomology dimensions `(b⁰, b¹, b²)` and orthonormal representatives.
#[derive(Debug, Clone)]
pub struct CohomologySummary {
    pub dims: [usize; 3],
    /// Columns in `C⁰`.
    pub h0: DMatrix<f64>,
    /// Columns in `C¹`, orthogonal to the coboundaries.
    pub h1: DMatrix<f64>,
    /// Columns in `C²`, orthogonal to the image of `d¹`.
    pub h2: DMatrix<f64>,
}

pub fn twisted_complex(p: &GroupPresentation, rho: &Representation) -> Result<TwistedComplex> {
    TwistedComplex::with_tolerances(p, rho, Tolerances::default())
}

impl TwistedComplex {
    pub fn with_tolerances(p: &GroupPresentation, rho: &Representation, tol: Tolerances) -> Result<Self> {
        let r = p.generator_count();
        if rho.generator_count() != r {
            return Err(Error::InvalidParameter(format!(
                "representation has {} images for {r} generators",
                rho.generator_count()
            )));
        }
        let images = rho.images();
        let mut d2 = DMatrix::zeros(3 * r, 3);
        for (j, q) in images.iter().enumerate() {
            let block = nalgebra::Matrix3::identity() - q.adjoint_matrix();
            d2.view_mut((3 * j, 0), (3, 3)).copy_from(&block);
        }
        let rels = p.relators();
        let mut d1 = DMatrix::zeros(3 * rels.len(), 3 * r);
        for (i, rel) in rels.iter().enumerate() {
            for j in 0..r {
                let block = evaluate_adjoint(&fox_derivative(rel, j), images);
                d1.view_mut((3 * i, 3 * j), (3, 3)).copy_from(&block);
            }
        }
        let defect = (&d1 * &d2).norm();
        if defect > CHAIN_TOL * (d1.norm() * d2.norm()).max(1.0) {
            return Err(Error::InvalidComplex(format!(
                "d1 d2 has norm {defect:.3e}; the images do not satisfy the relators"
            )));
        }
        let scale = largest_singular_value(&d1).max(largest_singular_value(&d2));
        Ok(Self {
            presentation: p.clone(),
            representation: rho.clone(),
            d1,
            d2,
            tol,
            scale,
        })
    }

    pub fn presentation(&self) -> &GroupPresentation {
        &self.presentation
    }

    pub fn representation(&self) -> &Representation {
        &self.representation
    }

    pub fn tolerances(&self) -> Tolerances {
        self.tol
    }

    /// Chain dimensions `(dim 𝒳_0, dim 𝒳_1, dim 𝒳_2) = (3(r−1), 3r, 3)`.
    pub fn dims(&self) -> [usize; 3] {
        [self.d1.nrows(), self.d1.ncols(), 3]
    }

    pub fn d1(&self) -> &DMatrix<f64> {
        &self.d1
    }

    pub fn d2(&self) -> &DMatrix<f64> {
        &self.d2
    }

    /// `‖d₁ d₂‖` (Frobenius).
    pub fn chain_defect(&self) -> f64 {
        (&self.d1 * &self.d2).norm()
    }

    fn ranks(&self) -> (usize, usize) {
        (
            rank_kernel_image_scaled(&self.d1, self.tol.rank, self.scale).rank,
            rank_kernel_image_scaled(&self.d2, self.tol.rank, self.scale).rank,
        )
    }

    pub fn cohomology(&self) -> CohomologySummary {
        let [n0, n1, n2] = self.dims();
        let k1 = rank_kernel_image_scaled(&self.d1, self.tol.rank, self.scale);
        let k2 = rank_kernel_image_scaled(&self.d2, self.tol.rank, self.scale);
        let dims = [n2 - k2.rank, n1 - k1.rank - k2.rank, n0 - k1.rank];
        CohomologySummary {
            dims,
            h0: k2.kernel,
            h1: quotient_basis(&k1.kernel, &k2.image, dims[1]),
            h2: quotient_basis(&DMatrix::identity(n0, n0), &k1.image, dims[2]),
        }
    }

    pub fn cohomology_dims(&self) -> [usize; 3] {
        let [n0, n1, n2] = self.dims();
        let (r1, r2) = self.ranks();
        [n2 - r2, n1 - r1 - r2, n0 - r1]
    }

    /// Based chain complex with the given cohomology vectors in degrees
    /// `𝒳_0 = C²`, `𝒳_1 = C¹`, `𝒳_2 = C⁰`.
    pub fn based(&self, h2: Vec<DVector<f64>>, h1: Vec<DVector<f64>>, h0: Vec<DVector<f64>>) -> Result<BasedChainComplex> {
        let [n0, n1, n2] = self.dims();
        let cols = |vs: &[DVector<f64>], n: usize| crate::linalg::columns(vs, n);
        BasedChainComplex::with_tolerances(
            vec![n0, n1, n2],
            vec![self.d1.clone(), self.d2.clone()],
            vec![cols(&h2, n0), cols(&h1, n1), cols(&h0, n2)],
            self.tol,
        )
    }

    /// Value `v(w)` of the 1-cochain `v` on a word, extended by
    /// `v(gh) = v(g) + Ad_{ρ(g)} v(h)` and `v(g⁻¹) = −Ad_{ρ(g)⁻¹} v(g)`.
    pub fn evaluate_cochain(&self, v: &DVector<f64>, w: &Word) -> Vector3<f64> {
        evaluate_cochain(v, w, self.representation.images())
    }
}

/// See [`TwistedComplex::evaluate_cochain`].
pub fn evaluate_cochain(v: &DVector<f64>, w: &Word, images: &[UnitQuaternion]) -> Vector3<f64> {
    let mut out = Vector3::zeros();
    let mut prefix = UnitQuaternion::ONE;
    for (g, s) in w.unit_steps() {
        let vg = Vector3::new(v[3 * g], v[3 * g + 1], v[3 * g + 2]);
        if s > 0 {
            out += prefix.adjoint_matrix() * vg;
            prefix = prefix * images[g];
        } else {
            prefix = prefix * images[g].inverse();
            out -= prefix.adjoint_matrix() * vg;
        }
    }
    out
}

/// False iff every pair of generator images commutes to within `ε_rep`.
pub fn is_irreducible(rho: &Representation) -> bool {
    let tol = Tolerances::default().representation;
    let im = rho.images();
    (0..im.len()).any(|a| {
        (a + 1..im.len()).any(|b| {
            let c = im[a] * im[b] * im[a].inverse() * im[b].inverse();
            c.distance_to_one() >= tol
        })
    })
}

/// Irreducible with `dim H¹ = 1`.
pub fn is_regular(t: &TwistedComplex) -> bool {
    is_irreducible(t.representation()) && t.cohomology_dims()[1] == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knot::{abelian_rep, torus_rep};
    use crate::presentation::{torus_knot_presentation, trefoil_wirtinger};

    #[test]
    fn torus_complex_shape_and_cohomology() {
        let p = torus_knot_presentation(3).unwrap();
        let rho = torus_rep(3, 1, 0.4).unwrap();
        let t = twisted_complex(&p, &rho).unwrap();
        assert_eq!(t.dims(), [3, 6, 3]);
        assert!(t.chain_defect() < 1e-12);
        assert_eq!(t.cohomology().dims, [0, 1, 1]);
        assert!(is_regular(&t));
    }

    #[test]
    fn trivial_rep_has_zero_d2() {
        let p = trefoil_wirtinger();
        let rho = Representation::new(&p, vec![UnitQuaternion::ONE; 2]).unwrap();
        let t = twisted_complex(&p, &rho).unwrap();
        assert_eq!(t.d2().norm(), 0.0);
        assert_eq!(t.cohomology_dims(), [3, 3, 0]);
        assert!(!is_regular(&t));
        assert!(!is_irreducible(&rho));
    }

    #[test]
    fn abelian_rep_cohomology() {
        let p = trefoil_wirtinger();
        let rho = abelian_rep(&p, 1.0).unwrap();
        let t = twisted_complex(&p, &rho).unwrap();
        assert_eq!(t.cohomology().dims, [1, 1, 0]);
        assert!(!is_regular(&t));
    }

    #[test]
    fn cochain_rule_on_inverse() {
        let p = torus_knot_presentation(3).unwrap();
        let rho = torus_rep(3, 1, 0.3).unwrap();
        let v = DVector::from_vec(vec![0.3, -1.0, 2.0, 0.5, 0.1, -0.7]);
        let w = Word::from_pairs(&[(0, 2), (1, -1)]);
        let ww = &w * &w.inverse();
        assert!(evaluate_cochain(&v, &ww, rho.images()).norm() < 1e-14);
        let _ = p;
    }
}
