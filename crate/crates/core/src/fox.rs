//! Free differential calculus and its two evaluations: through `Ad∘ρ` and
//! through the abelianization.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::Matrix3;

use crate::error::{Error, Result};
use crate::laurent::{laurent_determinant, LaurentPolynomial};
use crate::presentation::{abelianization_exponents, evaluate_word, GroupPresentation, Word};
use crate::su2::UnitQuaternion;

/// Element of the integral group ring `ℤ[F]` of a free group.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GroupRingElement {
    terms: BTreeMap<Word, i64>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_word(Word::identity())
    }

    pub fn from_word(w: Word) -> Self {
        let mut e = Self::zero();
        e.add_term(w, 1);
        e
    }

    pub fn add_term(&mut self, w: Word, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl Add for &GroupRingElement {
    type Output = GroupRingElement;
    fn add(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut out = self.clone();
        for (w, c) in rhs.terms() {
            out.add_term(w.clone(), c);
        }
        out
    }
}

impl Sub for &GroupRingElement {
    type Output = GroupRingElement;
    fn sub(self, rhs: &GroupRingElement) -> GroupRingElement {
        self + &(-rhs.clone())
    }
}

impl Mul for &GroupRingElement {
    type Output = GroupRingElement;
    fn mul(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut out = GroupRingElement::zero();
        for (a, ca) in self.terms() {
            for (b, cb) in rhs.terms() {
                out.add_term(a * b, ca * cb);
            }
        }
        out
    }
}

impl Neg for GroupRingElement {
    type Output = GroupRingElement;
    fn neg(self) -> GroupRingElement {
        GroupRingElement {
            terms: self.terms.into_iter().map(|(w, c)| (w, -c)).collect(),
        }
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let names: Vec<String> = Vec::new();
        for (n, (w, c)) in self.terms().enumerate() {
            let sep = match (n, c < 0) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            f.write_str(sep)?;
            if c.abs() != 1 || w.is_identity() {
                write!(f, "{}", c.abs())?;
                if !w.is_identity() {
                    f.write_str("*")?;
                }
            }
            if !w.is_identity() {
                write!(f, "{}", w.display(&names))?;
            }
        }
        Ok(())
    }
}

/// `∂w/∂g`, via `∂(uv)/∂g = ∂u/∂g + u ∂v/∂g`, `∂g/∂g = 1`, `∂g⁻¹/∂g = −g⁻¹`.
pub fn fox_derivative(w: &Word, g: usize) -> GroupRingElement {
    let mut out = GroupRingElement::zero();
    let mut prefix = Word::identity();
    for (h, s) in w.unit_steps() {
        let step = Word::power(h, s);
        if h == g {
            if s > 0 {
                out.add_term(prefix.clone(), 1);
            } else {
                out.add_term(&prefix * &step, -1);
            }
        }
        prefix = &prefix * &step;
    }
    out
}

/// `Σ c · Ad_{ρ(w)}` as a 3×3 matrix.
pub fn evaluate_adjoint(e: &GroupRingElement, images: &[UnitQuaternion]) -> Matrix3<f64> {
    e.terms().fold(Matrix3::zeros(), |acc, (w, c)| {
        acc + evaluate_word(w, images).adjoint_matrix() * c as f64
    })
}

/// `Σ c · t^{Σ n_g e_g}` under `g ↦ t^{n_g}`.
pub fn evaluate_abelian(e: &GroupRingElement, exponents: &[i64]) -> LaurentPolynomial {
    let mut out = LaurentPolynomial::zero();
    for (w, c) in e.terms() {
        let k: i64 = w
            .letters()
            .iter()
            .map(|l| exponents[l.generator] * l.exponent)
            .sum();
        out.add_term(k, c);
    }
    out
}

/// The abelianized Fox matrix `(∂R_i/∂S_j)` with entries in `ℤ[t^{±1}]`.
pub fn alexander_matrix(p: &GroupPresentation, exponents: &[i64]) -> Vec<Vec<LaurentPolynomial>> {
    p.relators()
        .iter()
        .map(|r| {
            (0..p.generator_count())
                .map(|g| evaluate_abelian(&fox_derivative(r, g), exponents))
                .collect()
        })
        .collect()
}

/// Normalized Alexander polynomial, deleting the column of the first
/// generator with nonzero abelianization exponent.
pub fn alexander_polynomial(p: &GroupPresentation) -> Result<LaurentPolynomial> {
    let n = abelianization_exponents(p)?;
    let col = n
        .iter()
        .position(|&v| v != 0)
        .ok_or_else(|| Error::NotKnotLike("trivial abelianization".into()))?;
    alexander_polynomial_deleting(p, &n, col)
}

/// Same as [`alexander_polynomial`] with an explicit column choice.
pub fn alexander_polynomial_deleting(p: &GroupPresentation, exponents: &[i64], col: usize) -> Result<LaurentPolynomial> {
    let nj = exponents[col];
    if nj == 0 {
        return Err(Error::InvalidParameter(format!(
            "generator {col} maps to 0 in H_1; its column cannot be deleted"
        )));
    }
    let minor: Vec<Vec<LaurentPolynomial>> = alexander_matrix(p, exponents)
        .into_iter()
        .map(|row| {
            row.into_iter()
                .enumerate()
                .filter(|&(j, _)| j != col)
                .map(|(_, e)| e)
                .collect()
        })
        .collect();
    let det = laurent_determinant(minor);
    // (t − 1)/(t^{n_j} − 1) up to a unit
    let cyclotomic = LaurentPolynomial::from_coefficients(&vec![1; nj.unsigned_abs() as usize]);
    let delta = det
        .div_exact(&cyclotomic)
        .ok_or_else(|| Error::NotKnotLike("Fox minor is not divisible by the expected cyclotomic factor".into()))?
        .normalized();
    if delta.at_one().abs() != 1 {
        return Err(Error::NotKnotLike(format!(
            "Alexander polynomial {delta} does not satisfy |Delta(1)| = 1"
        )));
    }
    Ok(delta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{figure_eight, torus_knot_presentation, trefoil_wirtinger, unknot};

    fn w(pairs: &[(usize, i64)]) -> Word {
        Word::from_pairs(pairs)
    }

    #[test]
    fn base_cases() {
        assert_eq!(fox_derivative(&w(&[(0, 1)]), 0), GroupRingElement::one());
        assert_eq!(fox_derivative(&w(&[(0, 1), (1, 1)]), 1), GroupRingElement::from_word(w(&[(0, 1)])));
        assert!(fox_derivative(&w(&[(1, 3)]), 0).is_zero());
        assert_eq!(fox_derivative(&w(&[(0, -1)]), 0), -GroupRingElement::from_word(w(&[(0, -1)])));
    }

    #[test]
    fn torus_relator_derivatives() {
        let r = w(&[(0, 2), (1, -3)]);
        let dx = fox_derivative(&r, 0);
        assert_eq!(dx, &GroupRingElement::one() + &GroupRingElement::from_word(w(&[(0, 1)])));
        let dy = fox_derivative(&r, 1);
        let mut expected = GroupRingElement::zero();
        for k in 1..=3 {
            expected.add_term(w(&[(0, 2), (1, -k)]), -1);
        }
        assert_eq!(dy, expected);
    }

    #[test]
    fn adjoint_evaluations() {
        let mut e = GroupRingElement::one();
        e.add_term(w(&[(0, 1)]), -1);
        assert_eq!(evaluate_adjoint(&e, &[UnitQuaternion::ONE]), Matrix3::zeros());
        assert_eq!(evaluate_adjoint(&e, &[UnitQuaternion::I]), Matrix3::from_diagonal(&[0.0, 2.0, 2.0].into()));
        let plus = &GroupRingElement::one() + &GroupRingElement::from_word(w(&[(0, 1)]));
        assert_eq!(evaluate_adjoint(&plus, &[UnitQuaternion::I]), Matrix3::from_diagonal(&[2.0, 0.0, 0.0].into()));
    }

    #[test]
    fn abelian_evaluations() {
        let mut e = GroupRingElement::one();
        e.add_term(w(&[(0, 1)]), -1);
        assert_eq!(evaluate_abelian(&e, &[1]), LaurentPolynomial::from_coefficients(&[1, -1]));
        let mut e = GroupRingElement::from_word(w(&[(0, 1)]));
        e.add_term(w(&[(0, 2)]), 1);
        assert_eq!(evaluate_abelian(&e, &[1]), LaurentPolynomial::from_coefficients(&[0, 1, 1]));
    }

    #[test]
    fn alexander_examples() {
        let tref = LaurentPolynomial::from_coefficients(&[1, -1, 1]);
        assert_eq!(alexander_polynomial(&unknot()).unwrap(), LaurentPolynomial::one());
        assert_eq!(alexander_polynomial(&trefoil_wirtinger()).unwrap(), tref);
        assert_eq!(alexander_polynomial(&torus_knot_presentation(3).unwrap()).unwrap(), tref);
        assert_eq!(
            alexander_polynomial(&figure_eight()).unwrap(),
            LaurentPolynomial::from_coefficients(&[1, -3, 1])
        );
        assert_eq!(
            alexander_polynomial(&torus_knot_presentation(5).unwrap()).unwrap(),
            LaurentPolynomial::from_coefficients(&[1, -1, 1, -1, 1])
        );
    }

    #[test]
    fn column_choice_does_not_matter() {
        let p = torus_knot_presentation(7).unwrap();
        let n = abelianization_exponents(&p).unwrap();
        let a = alexander_polynomial_deleting(&p, &n, 0).unwrap();
        let b = alexander_polynomial_deleting(&p, &n, 1).unwrap();
        assert_eq!(a, b);
    }
}
