mod common;

use std::sync::Arc;

use common::{homogeneous, nonzero_scalar, poly};
use ncsmooth::symbolic::{GeneratorSet, Homogeneity, NCPolynomial, Scalar};
use proptest::prelude::*;

fn gens() -> Arc<GeneratorSet> {
    Arc::new(GeneratorSet::new(["x", "y", "z"]).unwrap())
}

fn scales() -> impl Strategy<Value = Vec<Scalar>> {
    prop::collection::vec(nonzero_scalar(), 3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn mul_is_associative(a in poly(gens(), 2, 3), b in poly(gens(), 1, 3), c in poly(gens(), 1, 3)) {
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn mul_distributes(a in poly(gens(), 2, 3), b in poly(gens(), 2, 3), c in poly(gens(), 2, 3)) {
        let bc = b.add(&c).unwrap();
        prop_assert_eq!(a.mul(&bc).unwrap(), a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(bc.mul(&a).unwrap(), b.mul(&a).unwrap().add(&c.mul(&a).unwrap()).unwrap());
    }

    #[test]
    fn diagonal_map_is_multiplicative(p in poly(gens(), 2, 4), q in poly(gens(), 2, 4), s in scales()) {
        let lhs = p.mul(&q).unwrap().apply_diagonal_map(&s).unwrap();
        let rhs = p.apply_diagonal_map(&s).unwrap().mul(&q.apply_diagonal_map(&s).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn homogeneity_is_preserved(
        p in homogeneous(gens(), 2, 4),
        q in homogeneous(gens(), 3, 4),
        s in scales(),
    ) {
        let prod = p.mul(&q).unwrap();
        if !prod.is_zero() {
            prop_assert_eq!(prod.homogeneity(), Homogeneity::Degree(5));
        }
        let mapped = p.apply_diagonal_map(&s).unwrap();
        prop_assert_eq!(mapped.homogeneity(), p.homogeneity());
    }

    #[test]
    fn additive_inverse(p in poly(gens(), 3, 5)) {
        prop_assert!(p.add(&p.neg()).unwrap().is_zero());
        prop_assert_eq!(p.scale(&Scalar::from_int(2)), p.add(&p).unwrap());
        prop_assert_eq!(p.mul(&NCPolynomial::one(&gens())).unwrap(), p);
    }
}
