//! Alexander polynomials from the abelianized Fox matrix.

use torsionlab::fox::alexander_polynomial;
use torsionlab::presentation::{figure_eight, torus_knot_presentation, trefoil_wirtinger, unknot};

fn main() -> torsionlab::Result<()> {
    println!("trefoil       {}", alexander_polynomial(&trefoil_wirtinger())?);
    println!("figure-eight  {}", alexander_polynomial(&figure_eight())?);
    println!("unknot        {}", alexander_polynomial(&unknot())?);
    for q in [3, 5, 7, 9] {
        println!("T(2,{q})        {}", alexander_polynomial(&torus_knot_presentation(q)?)?);
    }
    Ok(())
}
