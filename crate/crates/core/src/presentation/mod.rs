//! Finitely presented knot groups with peripheral data.
//!
//! A knot group is given by a deficiency-one presentation
//! `⟨S_1, …, S_r | R_1, …, R_{r−1}⟩`, optionally together with a meridian,
//! a longitude and a *peripheral identity sequence*: a list of triples
//! `(u_k, ε_k, j_k)` such that `Π_k u_k R_{j_k}^{ε_k} u_k⁻¹` freely reduces to
//! the boundary commutator `l m l⁻¹ m⁻¹`. The sequence is what lets the
//! pipeline restrict 2-cochains to the boundary torus.

mod abelian;
mod knots;
mod parse;
mod representation;
mod word;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use abelian::abelianization_exponents;
pub use knots::{figure_eight, torus_knot_presentation, trefoil_wirtinger, unknot};
pub use parse::{parse_presentation, parse_presentation_json, parse_word};
pub use representation::{evaluate_word, relator_residual, Representation};
pub use word::{Letter, Word, WordDisplay};

/// One factor `u R_j^{±1} u⁻¹` of a peripheral identity sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeripheralTerm {
    pub conjugator: Word,
    pub sign: i8,
    pub relator: usize,
}

impl PeripheralTerm {
    pub fn new(conjugator: Word, sign: i8, relator: usize) -> Self {
        Self {
            conjugator,
            sign,
            relator,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    generator_names: Vec<String>,
    relators: Vec<Word>,
    meridian: Option<Word>,
    longitude: Option<Word>,
    peripheral_identity: Option<Vec<PeripheralTerm>>,
}

impl GroupPresentation {
    /// Validates deficiency one and generator indices. Names are stored lowercase.
    pub fn new(generator_names: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        let names: Vec<String> = generator_names
            .into_iter()
            .map(|n| n.to_lowercase())
            .collect();
        if names.is_empty() {
            return Err(Error::InvalidParameter(
                "a presentation needs at least one generator".into(),
            ));
        }
        for (k, n) in names.iter().enumerate() {
            if names[..k].contains(n) {
                return Err(Error::InvalidParameter(format!(
                    "generator `{n}` declared twice"
                )));
            }
        }
        if relators.len() + 1 != names.len() {
            return Err(Error::DeficiencyMismatch {
                generators: names.len(),
                relators: relators.len(),
            });
        }
        let p = Self {
            generator_names: names,
            relators,
            meridian: None,
            longitude: None,
            peripheral_identity: None,
        };
        for r in &p.relators {
            p.check_word(r)?;
        }
        Ok(p)
    }

    pub fn with_meridian(mut self, m: Word) -> Result<Self> {
        self.check_word(&m)?;
        self.meridian = Some(m);
        Ok(self)
    }

    pub fn with_longitude(mut self, l: Word) -> Result<Self> {
        self.check_word(&l)?;
        self.longitude = Some(l);
        Ok(self)
    }

    pub fn with_peripheral_identity(mut self, terms: Vec<PeripheralTerm>) -> Result<Self> {
        for t in &terms {
            self.check_word(&t.conjugator)?;
            if t.sign != 1 && t.sign != -1 {
                return Err(Error::InvalidParameter(format!(
                    "peripheral sign must be ±1, got {}",
                    t.sign
                )));
            }
            if t.relator >= self.relators.len() {
                return Err(Error::InvalidParameter(format!(
                    "peripheral term refers to relator {} but there are {}",
                    t.relator,
                    self.relators.len()
                )));
            }
        }
        self.peripheral_identity = Some(terms);
        Ok(self)
    }

    fn check_word(&self, w: &Word) -> Result<()> {
        match w.max_generator() {
            Some(g) if g >= self.generator_count() => {
                Err(Error::UnknownGenerator(format!("g{g}")))
            }
            _ => Ok(()),
        }
    }

    pub fn generator_count(&self) -> usize {
        self.generator_names.len()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn meridian(&self) -> Option<&Word> {
        self.meridian.as_ref()
    }

    pub fn longitude(&self) -> Option<&Word> {
        self.longitude.as_ref()
    }

    pub fn peripheral_identity(&self) -> Option<&[PeripheralTerm]> {
        self.peripheral_identity.as_deref()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        let lower = name.to_lowercase();
        self.generator_names.iter().position(|n| *n == lower)
    }

    /// `Π_k u_k R_{j_k}^{ε_k} u_k⁻¹`, freely reduced.
    pub fn peripheral_product(&self) -> Result<Word> {
        let terms = self
            .peripheral_identity
            .as_ref()
            .ok_or(Error::MissingPeripheralData)?;
        Ok(terms.iter().fold(Word::identity(), |acc, t| {
            let r = self.relators[t.relator].pow(t.sign as i64);
            &acc * &r.conjugated_by(&t.conjugator)
        }))
    }

    /// Meridian, longitude and identity sequence, or `MissingPeripheralData`.
    pub fn peripheral_system(&self) -> Result<(&Word, &Word, &[PeripheralTerm])> {
        match (&self.meridian, &self.longitude, &self.peripheral_identity) {
            (Some(m), Some(l), Some(seq)) => Ok((m, l, seq)),
            _ => Err(Error::MissingPeripheralData),
        }
    }

    pub fn word_display<'a>(&'a self, w: &'a Word) -> WordDisplay<'a> {
        w.display(&self.generator_names)
    }

    pub fn to_json(&self) -> PresentationJson {
        let show = |w: &Word| self.word_display(w).to_string();
        PresentationJson {
            generators: self.generator_names.clone(),
            relators: self.relators.iter().map(show).collect(),
            meridian: self.meridian.as_ref().map(show),
            longitude: self.longitude.as_ref().map(show),
            peripheral: self.peripheral_identity.as_ref().map(|seq| {
                seq.iter()
                    .map(|t| PeripheralJson {
                        conjugator: show(&t.conjugator),
                        sign: t.sign as i64,
                        relator: t.relator,
                    })
                    .collect()
            }),
        }
    }
}

/// True iff the identity sequence reduces to `l m l⁻¹ m⁻¹` in the free group.
pub fn verify_peripheral_identity(p: &GroupPresentation) -> Result<bool> {
    let (m, l, _) = p.peripheral_system()?;
    Ok(p.peripheral_product()? == Word::commutator(l, m))
}

impl fmt::Display for GroupPresentation {
    /// The line-oriented text format accepted by [`parse_presentation`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "gens: {}", self.generator_names.join(", "))?;
        for r in &self.relators {
            writeln!(f, "rel: {}", self.word_display(r))?;
        }
        if let Some(m) = &self.meridian {
            writeln!(f, "meridian: {}", self.word_display(m))?;
        }
        if let Some(l) = &self.longitude {
            writeln!(f, "longitude: {}", self.word_display(l))?;
        }
        if let Some(seq) = &self.peripheral_identity {
            let items: Vec<String> = seq
                .iter()
                .map(|t| {
                    format!(
                        "{}{} @ {}",
                        if t.sign > 0 { '+' } else { '-' },
                        t.relator,
                        self.word_display(&t.conjugator)
                    )
                })
                .collect();
            writeln!(f, "peripheral: {}", items.join(" ; "))?;
        }
        Ok(())
    }
}

/// JSON mirror of [`GroupPresentation`]; words use the text syntax.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PresentationJson {
    pub generators: Vec<String>,
    #[serde(default)]
    pub relators: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meridian: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub longitude: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub peripheral: Option<Vec<PeripheralJson>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PeripheralJson {
    pub conjugator: String,
    pub sign: i64,
    pub relator: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deficiency_is_enforced() {
        let err = GroupPresentation::new(vec!["x".into(), "y".into()], vec![]).unwrap_err();
        assert!(matches!(err, Error::DeficiencyMismatch { generators: 2, relators: 0 }));
    }

    #[test]
    fn relators_must_use_known_generators() {
        let err = GroupPresentation::new(vec!["x".into()], vec![]).and_then(|p| {
            p.with_meridian(Word::generator(3))
        });
        assert!(matches!(err, Err(Error::UnknownGenerator(_))));
    }

    #[test]
    fn torus_identity_sequences_verify() {
        for q in [3, 5, 7, 9] {
            assert!(verify_peripheral_identity(&torus_knot_presentation(q).unwrap()).unwrap());
        }
    }

    #[test]
    fn tampered_sequence_fails() {
        let p = torus_knot_presentation(3).unwrap();
        let mut seq = p.peripheral_identity().unwrap().to_vec();
        seq[1].sign = 1;
        let tampered = p.clone().with_peripheral_identity(seq).unwrap();
        assert!(!verify_peripheral_identity(&tampered).unwrap());
    }

    #[test]
    fn missing_peripheral_data() {
        assert!(matches!(
            verify_peripheral_identity(&trefoil_wirtinger()),
            Err(Error::MissingPeripheralData)
        ));
    }
}
