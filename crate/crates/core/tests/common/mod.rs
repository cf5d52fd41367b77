//! Oracles shared by the integration tests. Nothing here calls the library's
//! Fox calculus, polynomial or closed-form helpers.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::f64::consts::PI;

use torsionlab::presentation::{GroupPresentation, Word};

/// Integer Laurent polynomial as exponent → coefficient.
pub type Poly = BTreeMap<i64, i64>;

fn add(p: &mut Poly, k: i64, c: i64) {
    let e = p.entry(k).or_insert(0);
    *e += c;
    if *e == 0 {
        p.remove(&k);
    }
}

fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (&i, &x) in a {
        for (&j, &y) in b {
            add(&mut out, i + j, x * y);
        }
    }
    out
}

/// Exact quotient `a / (t^n − 1)`; panics on a remainder.
fn div_cyclotomic_factor(a: &Poly, n: i64) -> Poly {
    assert!(n > 0);
    let mut rem = a.clone();
    let mut q = Poly::new();
    while let Some((&top, &c)) = rem.iter().next_back() {
        let lo = *rem.keys().next().unwrap();
        assert!(top - n >= lo, "t^{n} - 1 does not divide");
        add(&mut q, top - n, c);
        add(&mut rem, top, -c);
        add(&mut rem, top - n, c);
    }
    q
}

/// Abelianized Fox derivative `∂w/∂g` with generator `j ↦ t^{n_j}`, by the
/// Leibniz rule letter by letter.
pub fn abelian_fox(w: &Word, g: usize, n: &[i64]) -> Poly {
    let mut out = Poly::new();
    let mut e = 0;
    for letter in w.letters() {
        let step = letter.exponent.signum();
        for _ in 0..letter.exponent.abs() {
            if step > 0 {
                if letter.generator == g {
                    add(&mut out, e, 1);
                }
                e += n[letter.generator];
            } else {
                e -= n[letter.generator];
                if letter.generator == g {
                    add(&mut out, e, -1);
                }
            }
        }
    }
    out
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Normalized Alexander polynomial of a one-relator two-generator
/// presentation with infinite cyclic abelianization, or of a free cyclic group.
pub fn alexander_oracle(p: &GroupPresentation) -> Poly {
    if p.relators().is_empty() {
        assert_eq!(p.generator_count(), 1);
        return Poly::from([(0, 1)]);
    }
    assert_eq!((p.generator_count(), p.relators().len()), (2, 1), "oracle covers two-generator knots");
    let r = &p.relators()[0];
    let (a, b) = (r.exponent_sum(0), r.exponent_sum(1));
    assert_eq!(gcd(a, b), 1, "abelianization must be Z");
    // Orientation: the meridian maps to +1, else the first nonzero image is positive.
    let mut n = [b, -a];
    let sign = match p.meridian() {
        Some(m) => n[0] * m.exponent_sum(0) + n[1] * m.exponent_sum(1),
        None => n.into_iter().find(|&v| v != 0).unwrap(),
    }
    .signum();
    n = n.map(|v| sign * v);
    // Delete the column of a generator with nonzero image.
    let (keep, drop) = if n[0] != 0 { (1, 0) } else { (0, 1) };
    let minor = abelian_fox(r, keep, &n);
    // minor · (t − 1) = ±t^k Δ · (t^{n_drop} − 1)
    // and t^{-m} − 1 is a unit multiple of t^m − 1.
    let scaled = mul(&minor, &Poly::from([(1, 1), (0, -1)]));
    normalize(div_cyclotomic_factor(&scaled, n[drop].abs()))
}

/// Lowest exponent 0 and positive constant term.
pub fn normalize(p: Poly) -> Poly {
    let lo = *p.keys().next().expect("nonzero polynomial");
    let sign = p[&lo].signum();
    p.into_iter().map(|(k, c)| (k - lo, sign * c)).collect()
}

/// `|Δ(e^{iφ})|`.
pub fn modulus_on_circle(p: &Poly, phi: f64) -> f64 {
    let (re, im) = p.iter().fold((0.0, 0.0), |(re, im), (&k, &c)| {
        let a = k as f64 * phi;
        (re + c as f64 * a.cos(), im + c as f64 * a.sin())
    });
    re.hypot(im)
}

/// `4 sin²θ / |Δ(e^{2iθ})|²`.
pub fn abelian_closed_form(delta: &Poly, theta: f64) -> f64 {
    4.0 * theta.sin().powi(2) / modulus_on_circle(delta, 2.0 * theta).powi(2)
}

/// `−(8/q) sin²((2ℓ−1)π/q)`.
pub fn torus_torsion(q: i64, l: i64) -> f64 {
    -(8.0 / q as f64) * (((2 * l - 1) as f64) * PI / q as f64).sin().powi(2)
}

/// Meridian angle of `ρ_{ℓ,t}` on the `(2, q)` torus knot.
pub fn torus_theta_m(q: i64, l: i64, t: f64) -> f64 {
    let sign = if (l - 1) % 2 == 0 { 1.0 } else { -1.0 };
    (sign * (((2 * l - 1) as f64) * PI / (2 * q) as f64).cos() * (PI * t).cos()).acos()
}

/// `(q, ℓ)` with `q ∈ {3, 5, 7}` and `1 ≤ ℓ ≤ (q − 1)/2`.
pub fn torus_pairs() -> Vec<(i64, i64)> {
    [3, 5, 7].into_iter().flat_map(|q| (1..=(q - 1) / 2).map(move |l| (q, l))).collect()
}

pub const T_GRID: [f64; 5] = [0.1, 0.25, 0.5, 0.75, 0.9];
