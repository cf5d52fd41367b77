use nalgebra::{DMatrix, Vector3};
use proptest::prelude::*;
use torsionlab::checks::{random_unit_quaternion, random_word, trial_rng};
use torsionlab::knot::{evaluate_cochain, nonabelian_torsion, torus_rep, twisted_complex};
use torsionlab::linalg::{least_squares, rank_kernel_image};
use torsionlab::presentation::{evaluate_word, figure_eight, torus_knot_presentation, Representation, Word};
use torsionlab::su2::{PureQuaternion, UnitQuaternion};

/// Gauss–Newton on `b` (with `a` fixed) for `ρ(R) = 1`, `R` the single
/// relator; steps are right-multiplications `b ← b · exp(δ)`.
fn project_to_representation(relator: &Word, a: UnitQuaternion, mut b: UnitQuaternion) -> Option<[UnitQuaternion; 2]> {
    let residual = |b: UnitQuaternion| evaluate_word(relator, &[a, b]).vector_part().to_vector();
    let h = 1e-7;
    for _ in 0..60 {
        let f = residual(b);
        if f.norm() < 1e-14 {
            break;
        }
        let mut jac = DMatrix::zeros(3, 3);
        for k in 0..3 {
            let mut e = Vector3::zeros();
            e[k] = h;
            let plus = residual(b * UnitQuaternion::exp(PureQuaternion::from(e)));
            let minus = residual(b * UnitQuaternion::exp(PureQuaternion::from(-e)));
            jac.set_column(k, &((plus - minus) / (2.0 * h)));
        }
        let rhs = DMatrix::from_column_slice(3, 1, (-f).as_slice());
        let step = least_squares(&jac, &rhs, 1e-10);
        b = b * UnitQuaternion::exp(PureQuaternion::new(step[0], step[1], step[2]));
    }
    (evaluate_word(relator, &[a, b]).distance_to_one() < 1e-11).then_some([a, b])
}

fn conjugate(images: &[UnitQuaternion], g: UnitQuaternion) -> Vec<UnitQuaternion> {
    images.iter().map(|&x| g * x * g.inverse()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn euler_characteristic_vanishes(seed in any::<u64>()) {
        let p = figure_eight();
        let mut rng = trial_rng(seed, 0);
        let (a, b) = (random_unit_quaternion(&mut rng), random_unit_quaternion(&mut rng));
        let projected = project_to_representation(&p.relators()[0], a, b);
        prop_assume!(projected.is_some());
        let rho = Representation::new(&p, projected.unwrap().to_vec()).unwrap();
        let [b0, b1, b2] = twisted_complex(&p, &rho).unwrap().cohomology_dims();
        prop_assert_eq!(b0 + b2, b1);
    }

    #[test]
    fn cochains_are_crossed_homomorphisms(seed in any::<u64>()) {
        let mut rng = trial_rng(seed, 1);
        let images: Vec<UnitQuaternion> = (0..3).map(|_| random_unit_quaternion(&mut rng)).collect();
        let v = torsionlab::checks::normal_matrix(&mut rng, 9, 1).column(0).into_owned();
        let (x, y) = (random_word(&mut rng, 3, 12), random_word(&mut rng, 3, 12));
        let lhs = evaluate_cochain(&v, &(&x * &y), &images);
        let rhs = evaluate_cochain(&v, &x, &images)
            + evaluate_word(&x, &images).adjoint_matrix() * evaluate_cochain(&v, &y, &images);
        prop_assert!((lhs - rhs).norm() < 1e-10 * (1.0 + lhs.norm()));
        let inv = evaluate_cochain(&v, &x.inverse(), &images);
        let expected = -(evaluate_word(&x, &images).inverse().adjoint_matrix() * evaluate_cochain(&v, &x, &images));
        prop_assert!((inv - expected).norm() < 1e-10 * (1.0 + inv.norm()));
    }

    #[test]
    fn cocycles_vanish_on_conjugated_relators(
        (q, l) in prop::sample::select(vec![(3i64, 1i64), (5, 1), (5, 2), (7, 3)]),
        t in 0.05f64..0.95,
        seed in any::<u64>(),
    ) {
        let p = torus_knot_presentation(q).unwrap();
        let rho = torus_rep(q, l, t).unwrap();
        let tc = twisted_complex(&p, &rho).unwrap();
        let cocycles = rank_kernel_image(tc.d1(), 1e-9).kernel;
        let mut rng = trial_rng(seed, 2);
        let u = random_word(&mut rng, 2, 10);
        let r = p.relators()[0].conjugated_by(&u);
        for k in 0..cocycles.ncols() {
            let v = cocycles.column(k).into_owned();
            prop_assert!(evaluate_cochain(&v, &r, rho.images()).norm() < 1e-9);
        }
    }

    #[test]
    fn torsion_is_conjugation_invariant(
        (q, l) in prop::sample::select(vec![(3i64, 1i64), (5, 2), (7, 1), (7, 2)]),
        t in 0.05f64..0.95,
        seed in any::<u64>(),
    ) {
        let p = torus_knot_presentation(q).unwrap();
        let rho = torus_rep(q, l, t).unwrap();
        let g = random_unit_quaternion(&mut trial_rng(seed, 3));
        let conj = Representation::new(&p, conjugate(rho.images(), g)).unwrap();
        let (a, b) = (nonabelian_torsion(&p, &rho).unwrap(), nonabelian_torsion(&p, &conj).unwrap());
        prop_assert!((a - b).abs() <= 1e-8 * a.abs(), "{} vs {}", a, b);
    }
}

#[test]
fn projection_reaches_nonabelian_points() {
    // The figure-eight has an irreducible arc; some random starts must land on it.
    let p = figure_eight();
    let hits = (0..40)
        .filter_map(|s| {
            let mut rng = trial_rng(99, s);
            let (a, b) = (random_unit_quaternion(&mut rng), random_unit_quaternion(&mut rng));
            project_to_representation(&p.relators()[0], a, b)
        })
        .filter(|[a, b]| (*a * *b * a.inverse() * b.inverse()).distance_to_one() > 1e-3)
        .count();
    assert!(hits >= 3, "{hits} irreducible points");
}
