//! Abelian torsion compared with 4 sin²θ / |Δ(e^{2iθ})|².

use std::f64::consts::PI;

use torsionlab::knot::{abelian_torsion, abelian_torsion_closed_form};
use torsionlab::presentation::{figure_eight, trefoil_wirtinger, unknot};

fn main() -> torsionlab::Result<()> {
    let knots = [("trefoil", trefoil_wirtinger()), ("figure-eight", figure_eight()), ("unknot", unknot())];
    for (name, p) in &knots {
        for theta in [0.3, PI / 2.0, 2.5] {
            let v = abelian_torsion(p, theta)?;
            let c = abelian_torsion_closed_form(p, theta)?;
            println!("{name:<13} theta {theta:.4}  torsion {v:.12}  formula {c:.12}");
        }
    }
    // e^{iπ/3} is a root of the trefoil's polynomial, so θ = π/6 is refused.
    if let Err(e) = abelian_torsion(&knots[0].1, PI / 6.0) {
        println!("trefoil at pi/6: {e}");
    }
    Ok(())
}
