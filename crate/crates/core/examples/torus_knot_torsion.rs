//! Non-abelian torsion of (2, q) torus knots against the closed form.

use torsionlab::knot::{nonabelian_torsion_report, torus_rep, torus_torsion_closed_form, TorsionOptions};
use torsionlab::presentation::torus_knot_presentation;

fn main() -> torsionlab::Result<()> {
    println!("{:>3} {:>3} {:>5} {:>16} {:>16} dims", "q", "l", "t", "torsion", "closed form");
    for q in [3, 5, 7] {
        let p = torus_knot_presentation(q)?;
        for l in 1..=(q - 1) / 2 {
            for t in [0.1, 0.5, 0.9] {
                let r = nonabelian_torsion_report(&p, &torus_rep(q, l, t)?, &TorsionOptions::default())?;
                println!(
                    "{q:>3} {l:>3} {t:>5} {:>16.12} {:>16.12} {:?}",
                    r.value,
                    torus_torsion_closed_form(q, l),
                    r.cohomology_dims
                );
            }
        }
    }
    Ok(())
}
