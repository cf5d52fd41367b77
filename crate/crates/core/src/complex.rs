//! Finite based real chain complexes and their Reidemeister torsion.
//!
//! A complex `C_N → … → C_1 → C_0` carries the standard basis in every
//! degree and a chosen basis of homology, given as cycle vectors. Its torsion
//! is
//!
//! ```text
//! tor = Π_i det[ b^i | h̃^i | b̃^{i−1} ]^{(−1)^{i+1}}
//! ```
//!
//! where `b^i` spans `B_i = im d_{i+1}`, `b̃^{i−1}` lifts `b^{i−1}` through
//! `d_i`, and `h̃^i` are the homology cycles. The value does not depend on the
//! choices of `b^i` and the lifts. The sign-determined torsion multiplies by
//! `(−1)^{|C|}`, `|C| = Σ α_i β_i` with `α_i = Σ_{k≤i} dim C_k` and
//! `β_i = Σ_{k≤i} dim H_k` taken mod 2.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{
    checked_determinant, hstack, largest_singular_value, least_squares, quotient_basis,
    rank_kernel_image_scaled,
};
use crate::tolerance::Tolerances;

#[derive(Debug, Clone)]
pub struct BasedChainComplex {
    dims: Vec<usize>,
    /// `boundaries[i − 1] = d_i : C_i → C_{i−1}`.
    boundaries: Vec<DMatrix<f64>>,
    /// Homology cycles of degree `i` as the columns of `homology[i]`.
    homology: Vec<DMatrix<f64>>,
    tol: Tolerances,
    scale: f64,
    ranks: Vec<usize>,
}

/// Explicit choices entering the torsion formula, degree by degree.
#[derive(Debug, Clone)]
pub struct TorsionChoices {
    /// `b^i`: a basis of `B_i` as columns.
    pub boundary_bases: Vec<DMatrix<f64>>,
    /// `b̃^i ⊂ C_{i+1}` with `d_{i+1} b̃^i = b^i` (empty in the top degree).
    pub lifts: Vec<DMatrix<f64>>,
    /// `h̃^i`: cycles representing the homology basis.
    pub homology_lifts: Vec<DMatrix<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TorsionResult {
    /// Sign-determined torsion `(−1)^{|C|} tor`.
    pub value: f64,
    /// `tor` itself.
    pub unsigned: f64,
    /// `|C|` mod 2.
    pub sign_exponent: u8,
    pub alpha: Vec<u8>,
    pub beta: Vec<u8>,
}

impl BasedChainComplex {
    pub fn new(dims: Vec<usize>, boundaries: Vec<DMatrix<f64>>, homology: Vec<DMatrix<f64>>) -> Result<Self> {
        Self::with_tolerances(dims, boundaries, homology, Tolerances::default())
    }

    /// Same as [`new`](Self::new) with homology vectors given one by one.
    pub fn from_vectors(
        dims: Vec<usize>,
        boundaries: Vec<DMatrix<f64>>,
        homology: Vec<Vec<DVector<f64>>>,
    ) -> Result<Self> {
        let mats = homology
            .iter()
            .zip(&dims)
            .map(|(vs, &n)| {
                if vs.iter().any(|v| v.len() != n) {
                    return Err(Error::InvalidBasis(format!("homology vector length differs from dim {n}")));
                }
                Ok(crate::linalg::columns(vs, n))
            })
            .collect::<Result<Vec<_>>>()?;
        if mats.len() != dims.len() {
            return Err(Error::InvalidBasis(format!(
                "{} homology degrees given for {} chain degrees",
                mats.len(),
                dims.len()
            )));
        }
        Self::new(dims, boundaries, mats)
    }

    pub fn with_tolerances(
        dims: Vec<usize>,
        boundaries: Vec<DMatrix<f64>>,
        homology: Vec<DMatrix<f64>>,
        tol: Tolerances,
    ) -> Result<Self> {
        let (scale, ranks) = Self::check_structure(&dims, &boundaries, &tol)?;
        let c = Self {
            dims,
            boundaries,
            homology,
            tol,
            scale,
            ranks,
        };
        c.check_homology()?;
        Ok(c)
    }

    /// Shapes, finiteness and `d_i d_{i+1} = 0`; returns the rank scale and the ranks of `d_i`.
    fn check_structure(dims: &[usize], boundaries: &[DMatrix<f64>], tol: &Tolerances) -> Result<(f64, Vec<usize>)> {
        if dims.is_empty() {
            return Err(Error::InvalidComplex("a complex needs at least one degree".into()));
        }
        if boundaries.len() + 1 != dims.len() {
            return Err(Error::InvalidComplex(format!(
                "{} boundary maps given for {} degrees",
                boundaries.len(),
                dims.len()
            )));
        }
        for (k, d) in boundaries.iter().enumerate() {
            let i = k + 1;
            if d.shape() != (dims[i - 1], dims[i]) {
                return Err(Error::InvalidComplex(format!(
                    "d_{i} is {}×{}, expected {}×{}",
                    d.nrows(),
                    d.ncols(),
                    dims[i - 1],
                    dims[i]
                )));
            }
            if d.iter().any(|x| !x.is_finite()) {
                return Err(Error::InvalidComplex(format!("d_{i} has non-finite entries")));
            }
        }
        for k in 0..boundaries.len().saturating_sub(1) {
            let (a, b) = (&boundaries[k], &boundaries[k + 1]);
            let bound = tol.chain * (a.norm() * b.norm()).max(1.0);
            let composite = (a * b).norm();
            if composite > bound {
                return Err(Error::InvalidComplex(format!(
                    "d_{} d_{} has norm {composite:.3e}",
                    k + 1,
                    k + 2
                )));
            }
        }
        let scale = boundaries.iter().map(largest_singular_value).fold(0.0, f64::max);
        let ranks = boundaries
            .iter()
            .map(|d| rank_kernel_image_scaled(d, tol.rank, scale).rank)
            .collect();
        Ok((scale, ranks))
    }

    fn check_homology(&self) -> Result<()> {
        if self.homology.len() != self.dims.len() {
            return Err(Error::InvalidBasis(format!(
                "{} homology degrees given for {} chain degrees",
                self.homology.len(),
                self.dims.len()
            )));
        }
        let expected = self.homology_dims();
        for (i, h) in self.homology.iter().enumerate() {
            if h.nrows() != self.dims[i] && h.ncols() > 0 {
                return Err(Error::InvalidBasis(format!(
                    "degree {i} homology vectors have length {}, expected {}",
                    h.nrows(),
                    self.dims[i]
                )));
            }
            if h.ncols() != expected[i] {
                return Err(Error::InvalidBasis(format!(
                    "degree {i} needs {} homology vectors, got {}",
                    expected[i],
                    h.ncols()
                )));
            }
            if h.ncols() == 0 {
                continue;
            }
            if h.iter().any(|x| !x.is_finite()) {
                return Err(Error::InvalidBasis(format!("degree {i} homology has non-finite entries")));
            }
            let hmax = h.column_iter().map(|c| c.norm()).fold(0.0, f64::max);
            if let Some(d) = self.boundary(i) {
                let slack = self.tol.chain * d.norm().max(1.0) * hmax;
                if (d * h).norm() > slack {
                    return Err(Error::InvalidBasis(format!("degree {i} homology vectors are not cycles")));
                }
            }
            let b = self.boundary_image(i);
            let projected = h - &b * (b.transpose() * h);
            let smin = crate::linalg::svd(&projected).singular_values.iter().copied().fold(f64::INFINITY, f64::min);
            if smin <= self.tol.rank * hmax {
                return Err(Error::InvalidBasis(format!(
                    "degree {i} homology vectors are dependent modulo boundaries"
                )));
            }
        }
        Ok(())
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn top_degree(&self) -> usize {
        self.dims.len() - 1
    }

    /// `d_i : C_i → C_{i−1}` for `1 ≤ i ≤ N`.
    pub fn boundary(&self, i: usize) -> Option<&DMatrix<f64>> {
        if i == 0 {
            None
        } else {
            self.boundaries.get(i - 1)
        }
    }

    pub fn boundaries(&self) -> &[DMatrix<f64>] {
        &self.boundaries
    }

    pub fn homology_basis(&self, i: usize) -> &DMatrix<f64> {
        &self.homology[i]
    }

    pub fn tolerances(&self) -> Tolerances {
        self.tol
    }

    /// Largest singular value over all boundary maps; rank decisions are relative to it.
    pub fn rank_scale(&self) -> f64 {
        self.scale
    }

    fn rank_of(&self, i: usize) -> usize {
        if i == 0 || i > self.boundaries.len() {
            0
        } else {
            self.ranks[i - 1]
        }
    }

    /// `dim H_i = dim C_i − rank d_i − rank d_{i+1}`.
    pub fn homology_dims(&self) -> Vec<usize> {
        (0..self.dims.len())
            .map(|i| self.dims[i] - self.rank_of(i) - self.rank_of(i + 1))
            .collect()
    }

    pub fn is_acyclic(&self) -> bool {
        self.homology_dims().iter().all(|&h| h == 0)
    }

    /// Orthonormal basis of `B_i = im d_{i+1}`.
    pub fn boundary_image(&self, i: usize) -> DMatrix<f64> {
        match self.boundary(i + 1) {
            Some(d) => rank_kernel_image_scaled(d, self.tol.rank, self.scale).image,
            None => DMatrix::zeros(self.dims[i], 0),
        }
    }

    /// Orthonormal basis of `Z_i = ker d_i`.
    pub fn cycles(&self, i: usize) -> DMatrix<f64> {
        match self.boundary(i) {
            Some(d) => rank_kernel_image_scaled(d, self.tol.rank, self.scale).kernel,
            None => DMatrix::identity(self.dims[i], self.dims[i]),
        }
    }

    /// Orthonormal cycles spanning `Z_i ∩ B_i^⊥`, one per homology dimension.
    pub fn harmonic_representatives(&self, i: usize) -> DMatrix<f64> {
        let k = self.homology_dims()[i];
        quotient_basis(&self.cycles(i), &self.boundary_image(i), k)
    }

    /// Orthonormal images and minimum-norm lifts.
    pub fn default_choices(&self) -> TorsionChoices {
        let n = self.dims.len();
        let boundary_bases: Vec<DMatrix<f64>> = (0..n).map(|i| self.boundary_image(i)).collect();
        let lifts = (0..n)
            .map(|i| match self.boundary(i + 1) {
                Some(d) => least_squares(d, &boundary_bases[i], self.tol.rank),
                None => DMatrix::zeros(0, 0),
            })
            .collect();
        TorsionChoices {
            boundary_bases,
            lifts,
            homology_lifts: self.homology.clone(),
        }
    }

    pub fn torsion(&self) -> Result<f64> {
        self.torsion_with_choices(&self.default_choices())
    }

    /// Evaluates the torsion formula with caller-supplied bases and lifts.
    pub fn torsion_with_choices(&self, ch: &TorsionChoices) -> Result<f64> {
        let n = self.dims.len();
        if ch.boundary_bases.len() != n || ch.lifts.len() != n || ch.homology_lifts.len() != n {
            return Err(Error::InvalidBasis("torsion choices must cover every degree".into()));
        }
        let mut value = 1.0;
        for i in 0..n {
            let dim = self.dims[i];
            if dim == 0 {
                continue;
            }
            let empty = DMatrix::zeros(dim, 0);
            let b = &ch.boundary_bases[i];
            let h = if ch.homology_lifts[i].ncols() == 0 { &empty } else { &ch.homology_lifts[i] };
            let lift = if i == 0 || ch.lifts[i - 1].ncols() == 0 { &empty } else { &ch.lifts[i - 1] };
            for m in [b, h, lift] {
                if m.nrows() != dim {
                    return Err(Error::InvalidBasis(format!(
                        "degree {i} choice has {} rows, expected {dim}",
                        m.nrows()
                    )));
                }
            }
            let assembled = hstack(&[b, h, lift], dim);
            let det = checked_determinant(&assembled)
                .map_err(|e| Error::DegenerateComplex(format!("degree {i}: {e}")))?;
            if i % 2 == 0 {
                value /= det;
            } else {
                value *= det;
            }
        }
        Ok(value)
    }

    pub fn sign_determined_torsion(&self) -> Result<TorsionResult> {
        let unsigned = self.torsion()?;
        Ok(self.sign_correct(unsigned))
    }

    fn sign_correct(&self, unsigned: f64) -> TorsionResult {
        let hdims: Vec<usize> = self.homology.iter().map(|h| h.ncols()).collect();
        let alpha = cumulative_parity(&self.dims);
        let beta = cumulative_parity(&hdims);
        let sign_exponent = alpha.iter().zip(&beta).map(|(a, b)| a * b).sum::<u8>() % 2;
        let value = if sign_exponent == 1 { -unsigned } else { unsigned };
        TorsionResult {
            value,
            unsigned,
            sign_exponent,
            alpha,
            beta,
        }
    }

    /// Same chain maps, new homology bases.
    pub fn change_homology_basis(&self, homology: Vec<DMatrix<f64>>) -> Result<Self> {
        let c = Self {
            homology,
            ..self.clone()
        };
        c.check_homology()?;
        Ok(c)
    }

    /// `Γ_{i+1} = C_i`: every degree moves up by one.
    pub fn left_shift(&self) -> Self {
        let mut dims = vec![0];
        dims.extend(&self.dims);
        let mut boundaries = vec![DMatrix::zeros(0, self.dims[0])];
        boundaries.extend(self.boundaries.iter().cloned());
        let mut homology = vec![DMatrix::zeros(0, 0)];
        homology.extend(self.homology.iter().cloned());
        let mut ranks = vec![0];
        ranks.extend(&self.ranks);
        Self {
            dims,
            boundaries,
            homology,
            tol: self.tol,
            scale: self.scale,
            ranks,
        }
    }

    pub fn to_json(&self) -> ComplexJson {
        let rows = |m: &DMatrix<f64>| -> Vec<Vec<f64>> {
            m.row_iter().map(|r| r.iter().copied().collect()).collect()
        };
        ComplexJson {
            dims: self.dims.clone(),
            boundaries: self.boundaries.iter().map(rows).collect(),
            homology: self
                .homology
                .iter()
                .map(|h| h.column_iter().map(|c| c.iter().copied().collect()).collect())
                .collect(),
        }
    }

    pub fn from_json(json: &ComplexJson, tol: Tolerances) -> Result<Self> {
        let n = json.dims.len();
        let mut boundaries = Vec::with_capacity(json.boundaries.len());
        for (k, rows) in json.boundaries.iter().enumerate() {
            let i = k + 1;
            let (r, c) = (
                json.dims.get(i - 1).copied().unwrap_or(0),
                json.dims.get(i).copied().unwrap_or(0),
            );
            if rows.len() != r || rows.iter().any(|row| row.len() != c) {
                return Err(Error::InvalidComplex(format!("d_{i} must be {r}×{c} (row-major)")));
            }
            boundaries.push(DMatrix::from_fn(r, c, |a, b| rows[a][b]));
        }
        let mut homology: Vec<DMatrix<f64>> = json
            .dims
            .iter()
            .map(|&d| DMatrix::zeros(d, 0))
            .collect();
        if json.homology.len() > n {
            return Err(Error::InvalidBasis(format!(
                "{} homology degrees given for {n} chain degrees",
                json.homology.len()
            )));
        }
        for (i, vs) in json.homology.iter().enumerate() {
            if vs.iter().any(|v| v.len() != json.dims[i]) {
                return Err(Error::InvalidBasis(format!("degree {i} homology vectors must have length {}", json.dims[i])));
            }
            homology[i] = DMatrix::from_fn(json.dims[i], vs.len(), |a, b| vs[b][a]);
        }
        Self::with_tolerances(json.dims.clone(), boundaries, homology, tol)
    }
}

fn cumulative_parity(v: &[usize]) -> Vec<u8> {
    v.iter()
        .scan(0usize, |acc, &d| {
            *acc += d;
            Some((*acc % 2) as u8)
        })
        .collect()
}

/// JSON form: `dims`, row-major `boundaries` (`d_1, d_2, …`) and
/// per-degree lists of homology vectors.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub dims: Vec<usize>,
    #[serde(default)]
    pub boundaries: Vec<Vec<Vec<f64>>>,
    #[serde(default)]
    pub homology: Vec<Vec<Vec<f64>>>,
}
