//! Shared fixtures for unit tests.

use crate::poly::{Exponent, HomogeneousPoly};
use crate::rat::rat;

/// Three-variable Lorentzian cubic that is not a volume polynomial;
/// monomial form `14 x1^3 + 6 x1^2 x2 + 24 x1^2 x3 + 12 x1 x2 x3
/// + 6 x1 x3^2 + 3 x2 x3^2`.
pub(crate) fn sample_cubic() -> HomogeneousPoly {
    HomogeneousPoly::from_monomials(
        3,
        3,
        [
            (Exponent(vec![3, 0, 0]), rat(14)),
            (Exponent(vec![2, 1, 0]), rat(6)),
            (Exponent(vec![2, 0, 1]), rat(24)),
            (Exponent(vec![1, 1, 1]), rat(12)),
            (Exponent(vec![1, 0, 2]), rat(6)),
            (Exponent(vec![0, 1, 2]), rat(3)),
        ],
    )
    .unwrap()
}

/// Bivariate polynomial with the given normalized coefficient sequence
/// `p_a` at exponent `(a, d - a)`.
pub(crate) fn bivariate_from_seq(seq: &[i64]) -> HomogeneousPoly {
    let d = (seq.len() - 1) as u32;
    HomogeneousPoly::from_terms(
        2,
        d,
        seq.iter()
            .enumerate()
            .map(|(a, &p)| (Exponent(vec![a as u32, d - a as u32]), rat(p))),
    )
    .unwrap()
}
