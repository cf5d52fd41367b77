//! Small dense linear algebra with explicit rank decisions.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

/// Relative size below which an LU determinant counts as zero.
pub const DET_TOL: f64 = 1e-12;

/// Rank together with orthonormal bases of the kernel and the image.
#[derive(Debug, Clone)]
pub struct RankDecomposition {
    pub rank: usize,
    /// `n × (n − rank)`, orthonormal columns.
    pub kernel: DMatrix<f64>,
    /// `m × rank`, orthonormal columns.
    pub image: DMatrix<f64>,
    /// Descending.
    pub singular_values: Vec<f64>,
}

/// Rank with threshold `tol · σ_max(M)`.
pub fn rank_kernel_image(m: &DMatrix<f64>, tol: f64) -> RankDecomposition {
    let smax = largest_singular_value(m);
    decompose(m, tol * smax, smax > 0.0)
}

/// Rank with threshold `tol · scale`, for rank decisions shared across a complex.
pub fn rank_kernel_image_scaled(m: &DMatrix<f64>, tol: f64, scale: f64) -> RankDecomposition {
    decompose(m, tol * scale, scale > 0.0)
}

pub fn largest_singular_value(m: &DMatrix<f64>) -> f64 {
    svd(m).singular_values.first().copied().unwrap_or(0.0)
}

/// Full singular value decomposition `M = U Σ Vᵀ` with square `U` and `V`.
#[derive(Debug, Clone)]
pub struct Svd {
    pub u: DMatrix<f64>,
    /// `min(rows, cols)` values, descending.
    pub singular_values: Vec<f64>,
    pub v: DMatrix<f64>,
}

/// SVD computed by `faer`.
///
/// nalgebra 0.35's SVD returns factors that do not reproduce some
/// rank-deficient inputs (relative error up to 1e-3 observed), so it is not
/// used for rank decisions.
pub fn svd(m: &DMatrix<f64>) -> Svd {
    let (rows, cols) = m.shape();
    if rows == 0 || cols == 0 {
        return Svd {
            u: DMatrix::identity(rows, rows),
            singular_values: Vec::new(),
            v: DMatrix::identity(cols, cols),
        };
    }
    let a = faer::Mat::<f64>::from_fn(rows, cols, |i, j| m[(i, j)]);
    let f = a.svd().expect("SVD of a finite matrix converges");
    let (u, v) = (f.U(), f.V());
    let s = f.S().column_vector();
    Svd {
        u: DMatrix::from_fn(rows, rows, |i, j| u[(i, j)]),
        singular_values: (0..rows.min(cols)).map(|k| s[k]).collect(),
        v: DMatrix::from_fn(cols, cols, |i, j| v[(i, j)]),
    }
}

fn decompose(m: &DMatrix<f64>, threshold: f64, nonzero_scale: bool) -> RankDecomposition {
    let cols = m.ncols();
    let f = svd(m);
    let rank = if nonzero_scale {
        f.singular_values.iter().filter(|&&s| s > threshold).count()
    } else {
        0
    };
    RankDecomposition {
        rank,
        kernel: f.v.columns(rank, cols - rank).into_owned(),
        image: f.u.columns(0, rank).into_owned(),
        singular_values: f.singular_values,
    }
}

/// Determinant via LU with partial pivoting; near-singular input is an error.
///
/// "Near" means `|det| < DET_TOL · Π‖column‖` (the Hadamard bound).
pub fn checked_determinant(a: &DMatrix<f64>) -> Result<f64> {
    if !a.is_square() {
        return Err(Error::DegenerateComplex(format!(
            "assembled basis is {}×{}, not square",
            a.nrows(),
            a.ncols()
        )));
    }
    if a.is_empty() {
        return Ok(1.0);
    }
    let det = a.clone().lu().determinant();
    let hadamard: f64 = a.column_iter().map(|c| c.norm()).product();
    if !det.is_finite() || det.abs() <= DET_TOL * hadamard {
        return Err(Error::DegenerateComplex(format!(
            "assembled basis is singular (det {det:.3e}, scale {hadamard:.3e})"
        )));
    }
    Ok(det)
}

/// Minimum-norm least-squares solution `X` of `A X ≈ B`.
pub fn least_squares(a: &DMatrix<f64>, b: &DMatrix<f64>, tol: f64) -> DMatrix<f64> {
    if a.ncols() == 0 || b.ncols() == 0 || a.nrows() == 0 {
        return DMatrix::zeros(a.ncols(), b.ncols());
    }
    let f = svd(a);
    let cutoff = tol * f.singular_values.first().copied().unwrap_or(0.0);
    let r = f.singular_values.iter().filter(|&&s| s > cutoff).count();
    let ut_b = f.u.columns(0, r).transpose() * b;
    let scaled = DMatrix::from_fn(r, b.ncols(), |i, j| ut_b[(i, j)] / f.singular_values[i]);
    f.v.columns(0, r) * scaled
}

/// Columns `[a | b]`.
pub fn hstack(blocks: &[&DMatrix<f64>], rows: usize) -> DMatrix<f64> {
    let cols: usize = blocks.iter().map(|b| b.ncols()).sum();
    let mut out = DMatrix::zeros(rows, cols);
    let mut c = 0;
    for b in blocks {
        assert_eq!(b.nrows(), rows, "hstack row mismatch");
        out.view_mut((0, c), (rows, b.ncols())).copy_from(*b);
        c += b.ncols();
    }
    out
}

/// Matrix whose columns are the given vectors.
pub fn columns(vs: &[DVector<f64>], rows: usize) -> DMatrix<f64> {
    let mut out = DMatrix::zeros(rows, vs.len());
    for (j, v) in vs.iter().enumerate() {
        out.set_column(j, v);
    }
    out
}

/// Orthonormal basis (`k` columns) of the part of `span(z)` orthogonal to `span(b)`,
/// `b` orthonormal. `k` is supplied by the caller's rank bookkeeping.
pub fn quotient_basis(z: &DMatrix<f64>, b: &DMatrix<f64>, k: usize) -> DMatrix<f64> {
    let n = z.nrows();
    if k == 0 || z.ncols() == 0 {
        return DMatrix::zeros(n, 0);
    }
    let projected = z - b * (b.transpose() * z);
    let image = rank_kernel_image_scaled(&projected, 0.0, 1.0).image;
    image.columns(0, k.min(image.ncols())).into_owned()
}
