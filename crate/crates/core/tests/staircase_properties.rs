mod common;

use common::props::{length_matches_enumeration, padding, reduction_recovers_corners, staircase};
use monocurve::colength::{reduce_and_monomialize, Staircase};
use monocurve::membership::IdealGens;
use monocurve::poly::Weights;
use monocurve::{Error, FieldSpec, Poly, Var};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn length_matches_brute_force(corners in staircase()) {
        length_matches_enumeration(corners)?;
    }

    #[test]
    fn reduction_recovers_minimal_corners(corners in staircase(), pad in padding()) {
        reduction_recovers_corners(corners, pad)?;
    }

    #[test]
    fn corners_must_be_monotone(a in 1u64..10, b in 1u64..10) {
        prop_assert!(matches!(
            Staircase::new(vec![(a, 0), (a, b), (0, b + 1)]),
            Err(Error::MalformedStaircase(_))
        ));
    }
}

#[test]
fn missing_pure_power_is_not_artinian() {
    let f = FieldSpec::Rationals;
    let ideal = IdealGens::new(
        Weights([1, 1, 1]),
        f,
        [("a".to_string(), Poly::parse(f, "y^2").unwrap()), ("b".to_string(), Poly::parse(f, "y*z").unwrap())],
    )
    .unwrap();
    assert!(matches!(reduce_and_monomialize(&ideal, Var::X), Err(Error::NotArtinian(_))));
    let bin = IdealGens::new(
        Weights([1, 1, 1]),
        f,
        [("c".to_string(), Poly::parse(f, "y^2 - z^2").unwrap())],
    )
    .unwrap();
    assert!(matches!(reduce_and_monomialize(&bin, Var::X), Err(Error::NonMonomialReduction(_))));
}
