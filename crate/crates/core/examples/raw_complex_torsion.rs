//! Sign-determined torsion of a small based complex read from JSON.

use torsionlab::complex::{BasedChainComplex, ComplexJson};
use torsionlab::tolerance::Tolerances;

// C_1 = R^2 -> C_0 = R^2 with rank-one boundary; homology is one-dimensional
// in each degree.
const COMPLEX: &str = r#"{
  "dims": [2, 2],
  "boundaries": [[[2.0, 0.0], [0.0, 0.0]]],
  "homology": [[[0.0, 1.0]], [[0.0, 3.0]]]
}"#;

fn main() -> torsionlab::Result<()> {
    let json: ComplexJson = serde_json::from_str(COMPLEX)?;
    let c = BasedChainComplex::from_json(&json, Tolerances::default())?;
    let r = c.sign_determined_torsion()?;
    println!("homology dims {:?}", c.homology_dims());
    println!("torsion {}  unsigned {}  sign exponent {}", r.value, r.unsigned, r.sign_exponent);

    let shifted = c.left_shift();
    println!("shifted torsion {}", shifted.torsion()?);
    Ok(())
}
