//! CSV scan of torsion and the meridian angle along t for one (q, l).
//!
//! `cargo run --example torus_scan -- 7 3`

use torsionlab::knot::{linear_grid, scan_csv, scan_torus};

fn main() -> torsionlab::Result<()> {
    let mut args = std::env::args().skip(1);
    let q = args.next().and_then(|s| s.parse().ok()).unwrap_or(5);
    let l = args.next().and_then(|s| s.parse().ok()).unwrap_or(1);
    let rows = scan_torus(q, l, &linear_grid(0.1, 0.9, 9), 1e-5)?;
    print!("{}", scan_csv(&rows));
    Ok(())
}
