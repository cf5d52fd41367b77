use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::su2::UnitQuaternion;
use crate::tolerance::Tolerances;

use super::{GroupPresentation, Word};

/// Generator images in SU(2), certified against the relators.
#[derive(Debug, Clone, PartialEq)]
pub struct Representation {
    images: Vec<UnitQuaternion>,
    residual: f64,
}

/// `{"images": [[w, x, y, z], ...]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
struct RepresentationJson {
    images: Vec<UnitQuaternion>,
}

impl Representation {
    /// Checks the relator residual against the default tolerance.
    pub fn new(p: &GroupPresentation, images: Vec<UnitQuaternion>) -> Result<Self> {
        Self::with_tolerance(p, images, Tolerances::default().representation)
    }

    pub fn with_tolerance(p: &GroupPresentation, images: Vec<UnitQuaternion>, tol: f64) -> Result<Self> {
        if images.len() != p.generator_count() {
            return Err(Error::InvalidParameter(format!(
                "{} generator images given for {} generators",
                images.len(),
                p.generator_count()
            )));
        }
        let residual = relator_residual(p, &images);
        if residual.is_nan() || residual > tol {
            return Err(Error::NotARepresentation {
                residual,
                tolerance: tol,
            });
        }
        Ok(Self { images, residual })
    }

    pub fn from_json(p: &GroupPresentation, text: &str) -> Result<Self> {
        let json: RepresentationJson = serde_json::from_str(text)?;
        Self::new(p, json.images)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(RepresentationJson {
            images: self.images.clone(),
        })
        .expect("quaternion arrays always serialize")
    }

    pub fn images(&self) -> &[UnitQuaternion] {
        &self.images
    }

    pub fn image(&self, generator: usize) -> UnitQuaternion {
        self.images[generator]
    }

    pub fn generator_count(&self) -> usize {
        self.images.len()
    }

    /// `max_j ‖ρ(R_j) − 1‖`.
    pub fn residual(&self) -> f64 {
        self.residual
    }

    pub fn evaluate(&self, w: &Word) -> UnitQuaternion {
        evaluate_word(w, &self.images)
    }

    /// The representation `g ↦ a ρ(g) a⁻¹`.
    pub fn conjugated(&self, a: UnitQuaternion) -> Self {
        let inv = a.inverse();
        Self {
            images: self.images.iter().map(|&q| a * q * inv).collect(),
            residual: self.residual,
        }
    }
}

/// Product of generator images along the word, left to right.
pub fn evaluate_word(w: &Word, images: &[UnitQuaternion]) -> UnitQuaternion {
    w.letters()
        .iter()
        .fold(UnitQuaternion::ONE, |acc, l| acc * images[l.generator].powi(l.exponent))
}

/// `max_j ‖ρ(R_j) − 1‖` for a candidate list of generator images.
pub fn relator_residual(p: &GroupPresentation, images: &[UnitQuaternion]) -> f64 {
    p.relators()
        .iter()
        .map(|r| evaluate_word(r, images).distance_to_one())
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::torus_knot_presentation;
    use crate::su2::PureQuaternion;

    #[test]
    fn empty_word_is_one() {
        assert_eq!(evaluate_word(&Word::identity(), &[UnitQuaternion::I]), UnitQuaternion::ONE);
        assert_eq!(evaluate_word(&Word::generator(0), &[UnitQuaternion::I]), UnitQuaternion::I);
    }

    #[test]
    fn rejects_non_representations() {
        let p = torus_knot_presentation(3).unwrap();
        let err = Representation::new(&p, vec![UnitQuaternion::I, UnitQuaternion::J]).unwrap_err();
        assert!(matches!(err, Error::NotARepresentation { .. }));
        let err = Representation::new(&p, vec![UnitQuaternion::I]).unwrap_err();
        assert!(matches!(err, Error::InvalidParameter(_)));
    }

    #[test]
    fn torus_images_satisfy_relator() {
        let p = torus_knot_presentation(3).unwrap();
        let a = std::f64::consts::PI / 3.0;
        let axis = PureQuaternion::new(0.6, 0.8, 0.0);
        let y = UnitQuaternion::from_axis_angle(a, axis).unwrap();
        let rho = Representation::new(&p, vec![UnitQuaternion::I, y]).unwrap();
        assert!(rho.residual() < 1e-12);
        let json = rho.to_json().to_string();
        let back = Representation::from_json(&p, &json).unwrap();
        assert!(back.image(1).distance(&y) < 1e-15);
    }
}
