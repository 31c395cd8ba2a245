//! Strategies shared by the property suites.

#![allow(dead_code)]

use std::sync::Arc;

use ncsmooth::symbolic::{GeneratorSet, NCPolynomial, Scalar};
use proptest::prelude::*;

pub fn scalar() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| Scalar::from_frac(n, d))
}

pub fn nonzero_scalar() -> impl Strategy<Value = Scalar> {
    (1i64..=5, 1i64..=3, any::<bool>()).prop_map(|(n, d, neg)| Scalar::from_frac(if neg { -n } else { n }, d))
}

pub fn letters(n: usize, min_len: usize, max_len: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..n, min_len..=max_len)
}

/// Up to `max_terms` terms with words of length at most `max_degree`.
pub fn poly(gens: Arc<GeneratorSet>, max_degree: usize, max_terms: usize) -> impl Strategy<Value = NCPolynomial> {
    let n = gens.len();
    prop::collection::vec((letters(n, 0, max_degree), scalar()), 0..=max_terms).prop_map(move |terms| {
        NCPolynomial::from_terms(&gens, terms.into_iter().map(|(l, c)| (gens.word(&l).unwrap(), c)))
    })
}

/// Homogeneous of exactly `degree`.
pub fn homogeneous(gens: Arc<GeneratorSet>, degree: usize, max_terms: usize) -> impl Strategy<Value = NCPolynomial> {
    let n = gens.len();
    prop::collection::vec((letters(n, degree, degree), scalar()), 0..=max_terms).prop_map(move |terms| {
        NCPolynomial::from_terms(&gens, terms.into_iter().map(|(l, c)| (gens.word(&l).unwrap(), c)))
    })
}
