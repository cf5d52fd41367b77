//! Reads a presentation in the line format and prints it back as JSON.

use torsionlab::presentation::{parse_presentation, verify_peripheral_identity};

const TORUS: &str = "\
# T(2,3)
gens: x, y
rel: x^2*y^-3
meridian: x*y^-1
longitude: x^2*(x*y^-1)^-6
peripheral: +0 @ x ; -0 @ x*y^-1
";

fn main() -> torsionlab::Result<()> {
    let p = parse_presentation(TORUS)?;
    println!("{}", serde_json::to_string_pretty(&p.to_json())?);
    println!("peripheral identity holds: {}", verify_peripheral_identity(&p)?);

    // Uppercase letters denote inverses.
    let w = parse_presentation("gens: a, b\nrel: a*b*a*B*A*B\nmeridian: a")?;
    let r = &w.relators()[0];
    println!("wirtinger relator: {}", w.word_display(r));

    match parse_presentation("gens: a\nrel: a*c") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
