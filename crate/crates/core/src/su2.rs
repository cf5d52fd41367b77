//! SU(2) as unit quaternions and su(2) as pure quaternions.
//!
//! A unit quaternion `w + x i + y j + z k` stands for an element of SU(2);
//! a pure quaternion `x i + y j + z k` for an element of the Lie algebra.
//! Coordinates on su(2) are always taken in the ordered basis `(i, j, k)`,
//! so the adjoint action `v ↦ a v a⁻¹` becomes a 3×3 rotation matrix.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::{Matrix3, Vector3};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tolerance::{EPS_CENTER, EPS_NORM};

/// Norm-one quaternion, serialized as `[w, x, y, z]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; 4]", into = "[f64; 4]")]
pub struct UnitQuaternion {
    w: f64,
    x: f64,
    y: f64,
    z: f64,
}

/// Element of su(2), serialized as `[x, y, z]`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(from = "[f64; 3]", into = "[f64; 3]")]
pub struct PureQuaternion {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// `a = cos(theta) + sin(theta) axis` with `theta ∈ (0, π)` and a unit axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisAngle {
    pub theta: f64,
    pub axis: PureQuaternion,
}

impl UnitQuaternion {
    pub const ONE: UnitQuaternion = UnitQuaternion {
        w: 1.0,
        x: 0.0,
        y: 0.0,
        z: 0.0,
    };
    pub const I: UnitQuaternion = UnitQuaternion {
        w: 0.0,
        x: 1.0,
        y: 0.0,
        z: 0.0,
    };
    pub const J: UnitQuaternion = UnitQuaternion {
        w: 0.0,
        x: 0.0,
        y: 1.0,
        z: 0.0,
    };
    pub const K: UnitQuaternion = UnitQuaternion {
        w: 0.0,
        x: 0.0,
        y: 0.0,
        z: 1.0,
    };

    /// Builds a unit quaternion, rescaling any nonzero finite input onto the sphere.
    pub fn new(w: f64, x: f64, y: f64, z: f64) -> Result<Self> {
        let n = (w * w + x * x + y * y + z * z).sqrt();
        if !n.is_finite() || n < 1e-300 {
            return Err(Error::InvalidParameter(format!(
                "quaternion [{w}, {x}, {y}, {z}] cannot be normalized"
            )));
        }
        Ok(Self {
            w: w / n,
            x: x / n,
            y: y / n,
            z: z / n,
        })
    }

    /// `cos(theta) + sin(theta) axis`; the axis is normalized first.
    pub fn from_axis_angle(theta: f64, axis: PureQuaternion) -> Result<Self> {
        let n = axis.norm();
        if n < 1e-300 {
            return Err(Error::InvalidParameter("zero rotation axis".into()));
        }
        let (s, c) = theta.sin_cos();
        Ok(Self {
            w: c,
            x: s * axis.x / n,
            y: s * axis.y / n,
            z: s * axis.z / n,
        })
    }

    /// Exponential map su(2) → SU(2).
    pub fn exp(v: PureQuaternion) -> Self {
        let n = v.norm();
        if n < 1e-300 {
            return Self::ONE;
        }
        let (s, c) = n.sin_cos();
        Self {
            w: c,
            x: s * v.x / n,
            y: s * v.y / n,
            z: s * v.z / n,
        }
    }

    pub fn w(&self) -> f64 {
        self.w
    }
    pub fn x(&self) -> f64 {
        self.x
    }
    pub fn y(&self) -> f64 {
        self.y
    }
    pub fn z(&self) -> f64 {
        self.z
    }

    pub fn components(&self) -> [f64; 4] {
        [self.w, self.x, self.y, self.z]
    }

    /// Imaginary part as an element of su(2).
    pub fn vector_part(&self) -> PureQuaternion {
        PureQuaternion::new(self.x, self.y, self.z)
    }

    pub fn conjugate(&self) -> Self {
        Self {
            w: self.w,
            x: -self.x,
            y: -self.y,
            z: -self.z,
        }
    }

    /// Same as [`conjugate`](Self::conjugate) on the unit sphere.
    pub fn inverse(&self) -> Self {
        self.conjugate()
    }

    pub fn powi(&self, n: i64) -> Self {
        let base = if n < 0 { self.inverse() } else { *self };
        (0..n.unsigned_abs()).fold(Self::ONE, |acc, _| acc * base)
    }

    /// Euclidean distance in ℝ⁴ to another quaternion.
    pub fn distance(&self, other: &Self) -> f64 {
        let d = [
            self.w - other.w,
            self.x - other.x,
            self.y - other.y,
            self.z - other.z,
        ];
        d.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    /// `‖a − 1‖`.
    pub fn distance_to_one(&self) -> f64 {
        self.distance(&Self::ONE)
    }

    /// True when `a = ±1` within `EPS_CENTER`.
    pub fn is_central(&self) -> bool {
        1.0 - self.w.abs() < EPS_CENTER
    }

    /// Unique `(theta, P)` with `a = cos(theta) + sin(theta) P`, `theta ∈ (0, π)`.
    pub fn axis_angle(&self) -> Result<AxisAngle> {
        if self.is_central() {
            return Err(Error::CentralElement);
        }
        let v = self.vector_part();
        let s = v.norm();
        let theta = s.atan2(self.w);
        Ok(AxisAngle {
            theta,
            axis: v.scale(1.0 / s),
        })
    }

    /// Matrix of `v ↦ a v a⁻¹` on su(2) in the basis `(i, j, k)`.
    pub fn adjoint_matrix(&self) -> Matrix3<f64> {
        let (w, x, y, z) = (self.w, self.x, self.y, self.z);
        Matrix3::new(
            1.0 - 2.0 * (y * y + z * z),
            2.0 * (x * y - w * z),
            2.0 * (x * z + w * y),
            2.0 * (x * y + w * z),
            1.0 - 2.0 * (x * x + z * z),
            2.0 * (y * z - w * x),
            2.0 * (x * z - w * y),
            2.0 * (y * z + w * x),
            1.0 - 2.0 * (x * x + y * y),
        )
    }

    /// `Ad_a(v) = a v a⁻¹`.
    pub fn adjoint(&self, v: PureQuaternion) -> PureQuaternion {
        PureQuaternion::from(self.adjoint_matrix() * v.to_vector())
    }

    fn norm_sq(&self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }
}

impl Mul for UnitQuaternion {
    type Output = UnitQuaternion;

    /// Hamilton product, renormalized once drift exceeds `EPS_NORM / 2`.
    fn mul(self, b: UnitQuaternion) -> UnitQuaternion {
        let a = self;
        let mut p = UnitQuaternion {
            w: a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            x: a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            y: a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            z: a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
        };
        let n2 = p.norm_sq();
        if (n2 - 1.0).abs() > EPS_NORM / 2.0 {
            let n = n2.sqrt();
            p.w /= n;
            p.x /= n;
            p.y /= n;
            p.z /= n;
        }
        p
    }
}

impl Neg for UnitQuaternion {
    type Output = UnitQuaternion;
    fn neg(self) -> UnitQuaternion {
        UnitQuaternion {
            w: -self.w,
            x: -self.x,
            y: -self.y,
            z: -self.z,
        }
    }
}

impl TryFrom<[f64; 4]> for UnitQuaternion {
    type Error = Error;
    fn try_from(c: [f64; 4]) -> Result<Self> {
        UnitQuaternion::new(c[0], c[1], c[2], c[3])
    }
}

impl From<UnitQuaternion> for [f64; 4] {
    fn from(q: UnitQuaternion) -> Self {
        q.components()
    }
}

impl fmt::Display for UnitQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + {}i + {}j + {}k",
            self.w, self.x, self.y, self.z
        )
    }
}

impl PureQuaternion {
    pub const I: PureQuaternion = PureQuaternion {
        x: 1.0,
        y: 0.0,
        z: 0.0,
    };
    pub const J: PureQuaternion = PureQuaternion {
        x: 0.0,
        y: 1.0,
        z: 0.0,
    };
    pub const K: PureQuaternion = PureQuaternion {
        x: 0.0,
        y: 0.0,
        z: 1.0,
    };

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn norm(&self) -> f64 {
        su2_inner(*self, *self).sqrt()
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(self.x * s, self.y * s, self.z * s)
    }

    pub fn to_vector(&self) -> Vector3<f64> {
        Vector3::new(self.x, self.y, self.z)
    }
}

impl From<Vector3<f64>> for PureQuaternion {
    fn from(v: Vector3<f64>) -> Self {
        Self::new(v[0], v[1], v[2])
    }
}

impl From<[f64; 3]> for PureQuaternion {
    fn from(c: [f64; 3]) -> Self {
        Self::new(c[0], c[1], c[2])
    }
}

impl From<PureQuaternion> for [f64; 3] {
    fn from(v: PureQuaternion) -> Self {
        [v.x, v.y, v.z]
    }
}

impl Add for PureQuaternion {
    type Output = PureQuaternion;
    fn add(self, o: PureQuaternion) -> PureQuaternion {
        PureQuaternion::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for PureQuaternion {
    type Output = PureQuaternion;
    fn sub(self, o: PureQuaternion) -> PureQuaternion {
        PureQuaternion::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for PureQuaternion {
    type Output = PureQuaternion;
    fn neg(self) -> PureQuaternion {
        self.scale(-1.0)
    }
}

/// The inner product `⟨u, v⟩ = −½ Tr(uv)` on su(2).
///
/// In `(i, j, k)` coordinates this is the Euclidean dot product.
pub fn su2_inner(u: PureQuaternion, v: PureQuaternion) -> f64 {
    u.x * v.x + u.y * v.y + u.z * v.z
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn close(a: UnitQuaternion, b: UnitQuaternion) -> bool {
        a.distance(&b) < 1e-12
    }

    #[test]
    fn products_of_basis_elements() {
        assert!(close(UnitQuaternion::I * UnitQuaternion::J, UnitQuaternion::K));
        assert!(close(UnitQuaternion::J * UnitQuaternion::K, UnitQuaternion::I));
        assert!(close(UnitQuaternion::I * UnitQuaternion::I, -UnitQuaternion::ONE));
        let q = UnitQuaternion::new(0.3, -0.2, 0.5, 0.7).unwrap();
        assert!(close(UnitQuaternion::ONE * q, q));
    }

    #[test]
    fn same_axis_angles_add() {
        let a = UnitQuaternion::from_axis_angle(0.3, PureQuaternion::I).unwrap();
        let b = UnitQuaternion::from_axis_angle(0.6, PureQuaternion::I).unwrap();
        assert!(close(a * a, b));
    }

    #[test]
    fn axis_angle_examples() {
        let aa = UnitQuaternion::I.axis_angle().unwrap();
        assert!((aa.theta - FRAC_PI_2).abs() < 1e-15);
        assert_eq!(aa.axis, PureQuaternion::I);

        assert!(matches!(
            UnitQuaternion::ONE.axis_angle(),
            Err(Error::CentralElement)
        ));
        assert!(matches!(
            (-UnitQuaternion::ONE).axis_angle(),
            Err(Error::CentralElement)
        ));

        let q = UnitQuaternion::new(0.3f64.cos(), 0.0, 0.3f64.sin(), 0.0).unwrap();
        let aa = q.axis_angle().unwrap();
        assert!((aa.theta - 0.3).abs() < 1e-14);
        assert!((aa.axis - PureQuaternion::J).norm() < 1e-14);
    }

    #[test]
    fn adjoint_examples() {
        assert_eq!(UnitQuaternion::ONE.adjoint_matrix(), Matrix3::identity());
        assert_eq!(
            UnitQuaternion::I.adjoint_matrix(),
            Matrix3::from_diagonal(&Vector3::new(1.0, -1.0, -1.0))
        );
    }

    #[test]
    fn adjoint_is_rotation_by_twice_the_angle() {
        let q = UnitQuaternion::from_axis_angle(0.4, PureQuaternion::K).unwrap();
        let v = q.adjoint(PureQuaternion::I);
        assert!((v.x - 0.8f64.cos()).abs() < 1e-14);
        assert!((v.y - 0.8f64.sin()).abs() < 1e-14);
    }

    #[test]
    fn inner_product_examples() {
        assert_eq!(su2_inner(PureQuaternion::I, PureQuaternion::I), 1.0);
        assert_eq!(su2_inner(PureQuaternion::I, PureQuaternion::J), 0.0);
        let u = PureQuaternion::I.scale(2.0) + PureQuaternion::J;
        assert_eq!(su2_inner(u, PureQuaternion::J), 1.0);
    }

    #[test]
    fn serde_uses_component_arrays() {
        let q = UnitQuaternion::K;
        assert_eq!(serde_json::to_string(&q).unwrap(), "[0.0,0.0,0.0,1.0]");
        let back: UnitQuaternion = serde_json::from_str("[0.0,2.0,0.0,0.0]").unwrap();
        assert!(close(back, UnitQuaternion::I));
        assert!(serde_json::from_str::<UnitQuaternion>("[0,0,0,0]").is_err());
        let v: PureQuaternion = serde_json::from_str("[1,2,3]").unwrap();
        assert_eq!(v, PureQuaternion::new(1.0, 2.0, 3.0));
    }

    #[test]
    fn long_products_stay_normalized() {
        let q = UnitQuaternion::new(0.1, 0.7, -0.3, 0.2).unwrap();
        let p = q.powi(10_000);
        let n: f64 = p.components().iter().map(|c| c * c).sum();
        assert!((n - 1.0).abs() < 1e-12);
    }

    fn unit() -> impl Strategy<Value = UnitQuaternion> {
        prop::array::uniform4(-1.0f64..1.0)
            .prop_filter("nonzero", |c| c.iter().map(|x| x * x).sum::<f64>() > 1e-3)
            .prop_map(|c| UnitQuaternion::new(c[0], c[1], c[2], c[3]).unwrap())
    }

    fn pure() -> impl Strategy<Value = PureQuaternion> {
        prop::array::uniform3(-2.0f64..2.0).prop_map(PureQuaternion::from)
    }

    proptest! {
        #[test]
        fn adjoint_is_a_homomorphism(a in unit(), b in unit()) {
            let lhs = (a * b).adjoint_matrix();
            let rhs = a.adjoint_matrix() * b.adjoint_matrix();
            prop_assert!((lhs - rhs).amax() < 1e-12);
        }

        #[test]
        fn adjoint_is_orthogonal(a in unit()) {
            let m = a.adjoint_matrix();
            prop_assert!((m * m.transpose() - Matrix3::identity()).amax() < 1e-12);
            prop_assert!((m.determinant() - 1.0).abs() < 1e-12);
        }

        #[test]
        fn adjoint_preserves_inner_product(a in unit(), u in pure(), v in pure()) {
            let lhs = su2_inner(a.adjoint(u), a.adjoint(v));
            prop_assert!((lhs - su2_inner(u, v)).abs() < 1e-12);
        }

        #[test]
        fn adjoint_factors_through_so3(a in unit()) {
            prop_assert!((a.adjoint_matrix() - (-a).adjoint_matrix()).amax() < 1e-15);
        }

        #[test]
        fn conjugate_is_inverse(a in unit()) {
            prop_assert!((a * a.conjugate()).distance_to_one() < 1e-12);
        }

        #[test]
        fn axis_angle_round_trip(theta in 1e-3f64..(PI - 1e-3), v in pure()) {
            prop_assume!(v.norm() > 1e-3);
            let q = UnitQuaternion::from_axis_angle(theta, v).unwrap();
            let aa = q.axis_angle().unwrap();
            prop_assert!((aa.theta - theta).abs() < 1e-12);
            prop_assert!((aa.axis - v.scale(1.0 / v.norm())).norm() < 1e-12);
        }
    }
}
