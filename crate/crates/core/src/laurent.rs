//! Integer Laurent polynomials in one variable `t`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// `Σ c_k t^k` with finitely many nonzero integer coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    coeffs: BTreeMap<i64, i64>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    /// `c t^k`.
    pub fn monomial(c: i64, k: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(k, c);
        p
    }

    /// From coefficients of `t^0, t^1, …`.
    pub fn from_coefficients(cs: &[i64]) -> Self {
        let mut p = Self::zero();
        for (k, &c) in cs.iter().enumerate() {
            p.add_term(k as i64, c);
        }
        p
    }

    pub fn add_term(&mut self, exponent: i64, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.coeffs.entry(exponent).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&exponent);
        }
    }

    pub fn coefficient(&self, k: i64) -> i64 {
        self.coeffs.get(&k).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&k, &c)| (k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (e + k, c)).collect(),
        }
    }

    /// Value at `t = 1`.
    pub fn at_one(&self) -> i64 {
        self.coeffs.values().sum()
    }

    /// `t ↦ t⁻¹`.
    pub fn reciprocal(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (-e, c)).collect(),
        }
    }

    /// Value at `t = e^{iφ}` as `(re, im)`.
    pub fn eval_on_circle(&self, phi: f64) -> (f64, f64) {
        self.coeffs.iter().fold((0.0, 0.0), |(re, im), (&k, &c)| {
            let a = k as f64 * phi;
            (re + c as f64 * a.cos(), im + c as f64 * a.sin())
        })
    }

    /// `|p(e^{iφ})|`.
    pub fn modulus_on_circle(&self, phi: f64) -> f64 {
        let (re, im) = self.eval_on_circle(phi);
        re.hypot(im)
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self` in `ℤ[t^{±1}]`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let d_hi = d.max_exponent()?;
        let d_lo = d.min_exponent()?;
        let lead = d.coefficient(d_hi);
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(hi) = rem.max_exponent() {
            let lo = rem.min_exponent()?;
            if hi - lo < d_hi - d_lo {
                return None;
            }
            let c = rem.coefficient(hi);
            if c % lead != 0 {
                return None;
            }
            let term = Self::monomial(c / lead, hi - d_hi);
            rem = &rem - &(&term * d);
            quot = &quot + &term;
        }
        Some(quot)
    }

    /// Shifted so the lowest exponent is 0 and signed so the constant term is positive.
    pub fn normalized(&self) -> Self {
        let Some(lo) = self.min_exponent() else {
            return Self::zero();
        };
        let p = self.shift(-lo);
        if p.coefficient(0) < 0 {
            -p
        } else {
            p
        }
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (k, c) in rhs.terms() {
            out.add_term(k, c);
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (k, c) in rhs.terms() {
            out.add_term(k, -c);
        }
        out
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (a, ca) in self.terms() {
            for (b, cb) in rhs.terms() {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }
}

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        Self {
            coeffs: self.coeffs.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

impl fmt::Display for LaurentPolynomial {
    /// Ascending powers: `1 - 3t + t^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (k, c)) in self.terms().enumerate() {
            let mag = c.unsigned_abs();
            if n == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != 1 {
                        write!(f, "{mag}")?;
                    }
                    if k == 1 {
                        f.write_str("t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Fraction-free (Bareiss) determinant over `ℤ[t^{±1}]`.
///
/// The empty matrix has determinant 1. Every division is exact, so the result
/// is exact for any input.
pub fn laurent_determinant(mut m: Vec<Vec<LaurentPolynomial>>) -> LaurentPolynomial {
    let n = m.len();
    if n == 0 {
        return LaurentPolynomial::one();
    }
    // Clear negative exponents so all entries are honest polynomials; the
    // shift is undone at the end.
    let mut shift = 0;
    for row in &mut m {
        let lo = row
            .iter()
            .filter_map(LaurentPolynomial::min_exponent)
            .min()
            .unwrap_or(0);
        for e in row.iter_mut() {
            *e = e.shift(-lo);
        }
        shift += lo;
    }
    let mut negate = false;
    let mut prev = LaurentPolynomial::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    negate = !negate;
                }
                None => return LaurentPolynomial::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss quotients are exact");
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].shift(shift);
    if negate {
        -det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> LaurentPolynomial {
        LaurentPolynomial::from_coefficients(cs)
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[1, -1, 1]).to_string(), "1 - t + t^2");
        assert_eq!(p(&[1, -3, 1]).to_string(), "1 - 3t + t^2");
        assert_eq!(p(&[-2]).to_string(), "-2");
        assert_eq!(LaurentPolynomial::monomial(1, -1).to_string(), "t^-1");
        assert_eq!(LaurentPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn arithmetic() {
        let a = p(&[1, 1]);
        let b = p(&[1, -1]);
        assert_eq!(&a * &b, p(&[1, 0, -1]));
        assert!((&a - &a).is_zero());
        assert_eq!(p(&[1, 0, -1]).div_exact(&a), Some(b));
        assert_eq!(p(&[1, 0, 1]).div_exact(&a), None);
        assert_eq!(p(&[3]).div_exact(&p(&[2])), None);
    }

    #[test]
    fn normalization() {
        let q = LaurentPolynomial::monomial(-1, -2);
        let q = &(&q + &LaurentPolynomial::monomial(1, -1)) - &LaurentPolynomial::one();
        assert_eq!(q.normalized(), p(&[1, -1, 1]));
    }

    #[test]
    fn circle_evaluation() {
        let d = p(&[1, -1, 1]);
        assert!((d.modulus_on_circle(std::f64::consts::PI) - 3.0).abs() < 1e-14);
    }

    #[test]
    fn bareiss_small_cases() {
        assert_eq!(laurent_determinant(vec![]), LaurentPolynomial::one());
        let m = vec![
            vec![p(&[1, 1]), LaurentPolynomial::monomial(1, -1)],
            vec![p(&[0, 1]), p(&[2])],
        ];
        // (1 + t)·2 − t⁻¹·t = 1 + 2t
        assert_eq!(laurent_determinant(m), p(&[1, 2]));
        let swap = vec![vec![p(&[]), p(&[1])], vec![p(&[1]), p(&[])]];
        assert_eq!(laurent_determinant(swap), p(&[-1]));
    }
}
