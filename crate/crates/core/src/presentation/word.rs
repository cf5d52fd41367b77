use std::fmt;
use std::ops::Mul;

/// A generator raised to a nonzero power.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub generator: usize,
    pub exponent: i64,
}

impl Letter {
    pub fn new(generator: usize, exponent: i64) -> Self {
        Self {
            generator,
            exponent,
        }
    }
}

/// Freely reduced word in the free group on numbered generators.
///
/// Adjacent letters always carry distinct generators and no exponent is zero;
/// every constructor reduces its input.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn generator(g: usize) -> Self {
        Self::power(g, 1)
    }

    pub fn power(g: usize, exponent: i64) -> Self {
        Self::from_letters([Letter::new(g, exponent)])
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut w = Self::identity();
        for l in letters {
            w.push(l);
        }
        w
    }

    /// Convenience constructor from `(generator, exponent)` pairs.
    pub fn from_pairs(pairs: &[(usize, i64)]) -> Self {
        Self::from_letters(pairs.iter().map(|&(g, e)| Letter::new(g, e)))
    }

    fn push(&mut self, l: Letter) {
        if l.exponent == 0 {
            return;
        }
        match self.letters.last_mut() {
            Some(top) if top.generator == l.generator => {
                top.exponent += l.exponent;
                if top.exponent == 0 {
                    self.letters.pop();
                }
            }
            _ => self.letters.push(l),
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of letters counted with multiplicity.
    pub fn length(&self) -> u64 {
        self.letters.iter().map(|l| l.exponent.unsigned_abs()).sum()
    }

    pub fn inverse(&self) -> Self {
        Self {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter::new(l.generator, -l.exponent))
                .collect(),
        }
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        (0..n.unsigned_abs()).fold(Self::identity(), |acc, _| &acc * &base)
    }

    /// `u w u⁻¹`.
    pub fn conjugated_by(&self, u: &Word) -> Self {
        &(u * self) * &u.inverse()
    }

    /// `[a, b] = a b a⁻¹ b⁻¹`.
    pub fn commutator(a: &Word, b: &Word) -> Self {
        &(&(a * b) * &a.inverse()) * &b.inverse()
    }

    pub fn exponent_sum(&self, g: usize) -> i64 {
        self.letters
            .iter()
            .filter(|l| l.generator == g)
            .map(|l| l.exponent)
            .sum()
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.generator).max()
    }

    /// Letters expanded into single steps `(generator, ±1)`.
    pub fn unit_steps(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.letters.iter().flat_map(|l| {
            let s = l.exponent.signum();
            std::iter::repeat_n((l.generator, s), l.exponent.unsigned_abs() as usize)
        })
    }

    /// Renders the word with the given generator names, e.g. `x^2*y^-3`.
    pub fn display<'a>(&'a self, names: &'a [String]) -> WordDisplay<'a> {
        WordDisplay { word: self, names }
    }
}

impl Mul for &Word {
    type Output = Word;
    fn mul(self, rhs: &Word) -> Word {
        let mut w = self.clone();
        for &l in &rhs.letters {
            w.push(l);
        }
        w
    }
}

impl Mul for Word {
    type Output = Word;
    fn mul(self, rhs: Word) -> Word {
        &self * &rhs
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    names: &'a [String],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_identity() {
            return f.write_str("1");
        }
        for (k, l) in self.word.letters.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            match self.names.get(l.generator) {
                Some(name) => f.write_str(name)?,
                None => write!(f, "g{}", l.generator)?,
            }
            if l.exponent != 1 {
                write!(f, "^{}", l.exponent)?;
            }
        }
        Ok(())
    }
}
