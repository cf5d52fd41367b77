//! Unit quaternions as SU(2): products, axis/angle form and the adjoint action.

use std::f64::consts::PI;

use torsionlab::su2::{PureQuaternion, UnitQuaternion};

fn main() -> torsionlab::Result<()> {
    let a = UnitQuaternion::from_axis_angle(PI / 3.0, PureQuaternion::I)?;
    let b = UnitQuaternion::from_axis_angle(PI / 4.0, PureQuaternion::J)?;
    let ab = a * b;
    println!("a = {a}\nb = {b}\nab = {ab}");

    let aa = ab.axis_angle()?;
    println!("ab has angle {:.6} about {:?}", aa.theta, aa.axis);

    // Ad(a) rotates su(2) by twice the quaternion angle.
    let v = a.adjoint(PureQuaternion::J);
    println!("Ad(a) j = {v:?}");
    println!("det Ad(ab) = {:.12}", ab.adjoint_matrix().determinant());
    println!("|a^6 - 1| = {:.2e}", a.powi(6).distance_to_one());
    Ok(())
}
