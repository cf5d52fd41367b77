use std::fmt::Write;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::format::sig;
use crate::presentation::torus_knot_presentation;

use super::reps::{theta_mu, torus_rep, torus_torsion_closed_form};
use super::torsion::{nonabelian_torsion_report, TorsionOptions};

pub const SCAN_HEADER: &str = "t,theta_m,tor,dtheta_dt,tau_form,closed_form,abs_err";

/// One row of a torus-knot scan.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScanRow {
    pub t: f64,
    pub theta_m: f64,
    pub tor: f64,
    /// Central difference of `θ_m` with the scan step.
    pub dtheta_dt: f64,
    /// `tor · dθ_m/dt`.
    pub tau_form: f64,
    /// `−(8/q) sin²((2ℓ−1)π/q) · dθ_m/dt`.
    pub closed_form: f64,
    pub abs_err: f64,
}

/// Torsion along the path `t ↦ ρ_{ℓ,t}` on a grid inside `(0, 1)`.
pub fn scan_torus(q: i64, l: i64, grid: &[f64], h: f64) -> Result<Vec<ScanRow>> {
    scan_torus_with(q, l, grid, h, &TorsionOptions::default())
}

pub fn scan_torus_with(q: i64, l: i64, grid: &[f64], h: f64, opts: &TorsionOptions) -> Result<Vec<ScanRow>> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::InvalidParameter(format!("finite-difference step {h} must be positive")));
    }
    let p = torus_knot_presentation(q)?;
    let m = p.meridian().expect("torus presentations carry a meridian");
    let closed = torus_torsion_closed_form(q, l);
    grid.iter()
        .map(|&t| {
            if !(t - h > 0.0 && t + h < 1.0) {
                return Err(Error::InvalidParameter(format!(
                    "grid point {t} with step {h} leaves (0, 1)"
                )));
            }
            let rho = torus_rep(q, l, t)?;
            let theta_m = theta_mu(&rho, m)?;
            let tor = nonabelian_torsion_report(&p, &rho, opts)?.value;
            let plus = theta_mu(&torus_rep(q, l, t + h)?, m)?;
            let minus = theta_mu(&torus_rep(q, l, t - h)?, m)?;
            let dtheta_dt = (plus - minus) / (2.0 * h);
            let tau_form = tor * dtheta_dt;
            let closed_form = closed * dtheta_dt;
            Ok(ScanRow {
                t,
                theta_m,
                tor,
                dtheta_dt,
                tau_form,
                closed_form,
                abs_err: (tau_form - closed_form).abs(),
            })
        })
        .collect()
}

/// `n` evenly spaced points from `a` to `b` inclusive.
pub fn linear_grid(a: f64, b: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![a],
        _ => (0..n).map(|k| a + (b - a) * k as f64 / (n - 1) as f64).collect(),
    }
}

/// CSV with header, 12 significant digits per value.
pub fn scan_csv(rows: &[ScanRow]) -> String {
    let mut out = String::from(SCAN_HEADER);
    out.push('\n');
    for r in rows {
        let cells = [r.t, r.theta_m, r.tor, r.dtheta_dt, r.tau_form, r.closed_form, r.abs_err];
        let line: Vec<String> = cells.iter().map(|&x| sig(x, 12)).collect();
        writeln!(out, "{}", line.join(",")).expect("writing to a String");
    }
    out
}
