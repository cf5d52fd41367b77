//! Built-in presentations.

use crate::error::{Error, Result};

use super::{GroupPresentation, PeripheralTerm, Word};

/// `⟨x, y | x² y^{−q}⟩` for the `(2, q)` torus knot, with full peripheral data.
///
/// The meridian is `m = x y^{(1−q)/2}`, the longitude `l = x² m^{−2q}`, and
/// `l m l⁻¹ m⁻¹ = x r x⁻¹ · m r⁻¹ m⁻¹` in the free group.
pub fn torus_knot_presentation(q: i64) -> Result<GroupPresentation> {
    if q < 3 || q % 2 == 0 {
        return Err(Error::InvalidParameter(format!(
            "torus knot parameter q must be odd and at least 3, got {q}"
        )));
    }
    let x = Word::generator(0);
    let r = Word::from_pairs(&[(0, 2), (1, -q)]);
    let m = Word::from_pairs(&[(0, 1), (1, (1 - q) / 2)]);
    let l = &Word::power(0, 2) * &m.pow(-2 * q);
    GroupPresentation::new(vec!["x".into(), "y".into()], vec![r])?
        .with_meridian(m.clone())?
        .with_longitude(l)?
        .with_peripheral_identity(vec![PeripheralTerm::new(x, 1, 0), PeripheralTerm::new(m, -1, 0)])
}

/// Wirtinger presentation `⟨a, b | a b a b⁻¹ a⁻¹ b⁻¹⟩` of the trefoil, meridian `a`.
pub fn trefoil_wirtinger() -> GroupPresentation {
    let rel = Word::from_pairs(&[(0, 1), (1, 1), (0, 1), (1, -1), (0, -1), (1, -1)]);
    GroupPresentation::new(vec!["a".into(), "b".into()], vec![rel])
        .and_then(|p| p.with_meridian(Word::generator(0)))
        .expect("static presentation")
}

/// Two-bridge presentation of the figure-eight knot on two meridians, meridian `a`.
pub fn figure_eight() -> GroupPresentation {
    let rel = Word::from_pairs(&[
        (0, 1),
        (1, 1),
        (0, -1),
        (1, -1),
        (0, 1),
        (1, -1),
        (0, -1),
        (1, 1),
        (0, 1),
        (1, -1),
    ]);
    GroupPresentation::new(vec!["a".into(), "b".into()], vec![rel])
        .and_then(|p| p.with_meridian(Word::generator(0)))
        .expect("static presentation")
}

/// `⟨x | ⟩`, the fundamental group of the solid torus.
pub fn unknot() -> GroupPresentation {
    GroupPresentation::new(vec!["x".into()], vec![])
        .and_then(|p| p.with_meridian(Word::generator(0)))
        .expect("static presentation")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_torus_words() {
        let p = torus_knot_presentation(3).unwrap();
        let names = p.generator_names();
        assert_eq!(p.relators()[0].display(names).to_string(), "x^2*y^-3");
        assert_eq!(p.meridian().unwrap().display(names).to_string(), "x*y^-1");
        let expected = &Word::power(0, 2) * &Word::from_pairs(&[(0, 1), (1, -1)]).pow(-6);
        assert_eq!(p.longitude().unwrap(), &expected);
    }

    #[test]
    fn meridian_for_q5() {
        let p = torus_knot_presentation(5).unwrap();
        assert_eq!(p.meridian().unwrap(), &Word::from_pairs(&[(0, 1), (1, -2)]));
    }

    #[test]
    fn bad_q() {
        for q in [-3, 0, 1, 2, 4, 10] {
            assert!(matches!(torus_knot_presentation(q), Err(Error::InvalidParameter(_))));
        }
    }
}
