use crate::error::{Error, Result};

use super::GroupPresentation;

/// Images `n_i` of the generators under the abelianization `G → H_1 ≅ ℤ`.
///
/// The exponent-sum matrix of the relators has to have rank `r − 1` with
/// coprime maximal minors (otherwise `H_1` is not infinite cyclic); the
/// kernel generator is read off from those minors by Cramer's rule. The sign
/// is fixed so that the meridian maps to `+1`, or, without a meridian, so that
/// the first nonzero entry is positive.
pub fn abelianization_exponents(p: &GroupPresentation) -> Result<Vec<i64>> {
    let r = p.generator_count();
    let rows: Vec<Vec<i128>> = p
        .relators()
        .iter()
        .map(|w| (0..r).map(|g| w.exponent_sum(g) as i128).collect())
        .collect();

    let minors: Vec<i128> = (0..r)
        .map(|skip| {
            let m: Vec<Vec<i128>> = rows
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != skip)
                        .map(|(_, &v)| v)
                        .collect()
                })
                .collect();
            let sign = if skip % 2 == 0 { 1 } else { -1 };
            sign * integer_determinant(m)
        })
        .collect();

    let g = minors.iter().fold(0i128, |acc, &m| gcd(acc, m));
    if g == 0 {
        return Err(Error::NotKnotLike(
            "abelianization has rank greater than one".into(),
        ));
    }
    if g != 1 {
        return Err(Error::NotKnotLike(format!(
            "abelianization has torsion of order {g}"
        )));
    }
    let mut n: Vec<i64> = minors.iter().map(|&m| m as i64).collect();

    let sign = match p.meridian() {
        Some(m) => {
            let image: i64 = (0..r).map(|g| n[g] * m.exponent_sum(g)).sum();
            if image.abs() != 1 {
                return Err(Error::NotKnotLike(format!(
                    "meridian maps to {image} in H_1, not to a generator"
                )));
            }
            image
        }
        None => n.iter().copied().find(|&v| v != 0).map_or(1, i64::signum),
    };
    for v in &mut n {
        *v *= sign;
    }
    Ok(n)
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Fraction-free (Bareiss) determinant; the empty matrix has determinant 1.
fn integer_determinant(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&i| m[i][k] != 0) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    if n == 0 {
        1
    } else {
        sign * m[n - 1][n - 1]
    }
}
