mod common;

use common::{alexander_oracle, Poly};
use proptest::prelude::*;
use torsionlab::fox::alexander_polynomial;
use torsionlab::presentation::{figure_eight, torus_knot_presentation, trefoil_wirtinger, unknot, GroupPresentation, Word};

fn library(p: &GroupPresentation) -> Poly {
    alexander_polynomial(p).unwrap().terms().collect()
}

#[test]
fn named_knots_match_leibniz_expansion() {
    for p in [trefoil_wirtinger(), figure_eight(), unknot()] {
        assert_eq!(library(&p), alexander_oracle(&p));
    }
    assert_eq!(alexander_oracle(&trefoil_wirtinger()), Poly::from([(0, 1), (1, -1), (2, 1)]));
    assert_eq!(alexander_oracle(&figure_eight()), Poly::from([(0, 1), (1, -3), (2, 1)]));
}

#[test]
fn torus_knots_match_leibniz_expansion() {
    for q in [3, 5, 7, 9, 11] {
        let p = torus_knot_presentation(q).unwrap();
        let expected: Poly = (0..q).map(|k| (k, if k % 2 == 0 { 1 } else { -1 })).collect();
        assert_eq!(alexander_oracle(&p), expected, "q = {q}");
        assert_eq!(library(&p), expected, "q = {q}");
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

proptest! {
    #[test]
    fn one_relator_presentations_match(letters in prop::collection::vec((0usize..2, -3i64..=3), 1..10)) {
        let r = Word::from_pairs(&letters);
        prop_assume!(gcd(r.exponent_sum(0), r.exponent_sum(1)) == 1);
        let p = GroupPresentation::new(vec!["a".into(), "b".into()], vec![r]).unwrap();
        prop_assert_eq!(library(&p), alexander_oracle(&p));
    }
}
