//! Exact certification and falsification of the Lorentzian property.
//!
//! The certifier follows the finite recursive description of the class:
//! degree at most one needs nonnegative coefficients, a quadratic needs a
//! Hessian with at most one positive eigenvalue, and a polynomial of higher
//! degree needs nonnegative coefficients, M-convex support, and certified
//! partial derivatives. Derivatives are visited once per multi-index, so a
//! degree-`d` run certifies one quadratic per point of the codegree-two
//! simplex instead of `n^(d-2)` recursion leaves.
//!
//! The falsifier samples the defining inequality on nonnegative rational
//! direction tuples; it can refute but never certify.

use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::{Inertia, SymMatrix};
use crate::mconvex::{ExchangeFailure, MConvexSet};
use crate::poly::{simplex, Exponent, HomogeneousPoly};
use crate::rat::rat;

/// Hessian of a quadratic in normalized coordinates: `H_ij = p_(e_i + e_j)`.
pub fn hessian(f: &HomogeneousPoly) -> Result<SymMatrix> {
    if f.degree() != 2 {
        return Err(Error::DegreeMismatch {
            expected: 2,
            got: f.degree(),
        });
    }
    let n = f.num_vars();
    let mut rows = vec![vec![BigRational::zero(); n]; n];
    for (alpha, p) in f.terms() {
        let support: Vec<usize> = (0..n).filter(|&i| alpha.get(i) > 0).collect();
        match support.as_slice() {
            [i] => rows[*i][*i] = p.clone(),
            [i, j] => {
                rows[*i][*j] = p.clone();
                rows[*j][*i] = p.clone();
            }
            _ => unreachable!("degree-two exponent"),
        }
    }
    SymMatrix::new(rows)
}

/// Why a polynomial failed certification, together with the derivative
/// path `delta` at which the failure occurred (`d^delta f` is the culprit).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FailureKind {
    /// A strictly negative normalized coefficient at `alpha`.
    NegativeCoefficient { alpha: Exponent },
    /// The support of the derivative violates basis exchange.
    SupportNotMConvex(ExchangeFailure),
    /// The quadratic derivative's Hessian has two or more positive
    /// eigenvalues.
    HessianSignature(Inertia),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LorentzianFailure {
    pub delta: Exponent,
    pub kind: FailureKind,
}

/// Certification outcome; `accepted` holds exactly when no failure is
/// recorded. The zero polynomial is accepted (it is a limit of certified
/// polynomials).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LorentzianVerdict {
    failure: Option<LorentzianFailure>,
}

impl LorentzianVerdict {
    pub fn accepted(&self) -> bool {
        self.failure.is_none()
    }

    pub fn failure(&self) -> Option<&LorentzianFailure> {
        self.failure.as_ref()
    }

    fn accept() -> Self {
        LorentzianVerdict { failure: None }
    }

    fn reject(delta: Exponent, kind: FailureKind) -> Self {
        LorentzianVerdict {
            failure: Some(LorentzianFailure { delta, kind }),
        }
    }
}

/// Decides membership in the Lorentzian class exactly.
pub fn certify(f: &HomogeneousPoly) -> LorentzianVerdict {
    let n = f.num_vars();
    let d = f.degree();
    // Nonnegativity once up front: derivatives only shift indices.
    for (alpha, p) in f.terms() {
        if p < &BigRational::zero() {
            return LorentzianVerdict::reject(
                Exponent::zeros(n),
                FailureKind::NegativeCoefficient {
                    alpha: alpha.clone(),
                },
            );
        }
    }
    if d <= 1 {
        return LorentzianVerdict::accept();
    }
    // One visit per derivative multi-index, by level.
    for k in 0..=d - 2 {
        for delta in simplex(n, k) {
            let g = f.derivative(&delta).expect("same variable count");
            if g.is_zero() {
                continue;
            }
            if d - k >= 3 {
                let support = MConvexSet::from_support(&g);
                if let Some(witness) = support.exchange_failure() {
                    return LorentzianVerdict::reject(
                        delta,
                        FailureKind::SupportNotMConvex(witness),
                    );
                }
            } else {
                let h = hessian(&g).expect("degree-two derivative");
                let inertia = h.inertia();
                if inertia.pos > 1 {
                    return LorentzianVerdict::reject(
                        delta,
                        FailureKind::HessianSignature(inertia),
                    );
                }
            }
        }
    }
    LorentzianVerdict::accept()
}

/// A direction tuple violating the defining inequality, with both sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefinitionWitness {
    pub directions: Vec<Vec<BigRational>>,
    pub lhs: BigRational,
    pub rhs: BigRational,
}

/// Evaluates the defining inequality at one tuple `(v_1, ..., v_d)`:
/// with `q = d_{v_3} ... d_{v_d} f`, the tuple is a violation when
/// `(d_{v_1} d_{v_1} q)(d_{v_2} d_{v_2} q) > (d_{v_1} d_{v_2} q)^2`.
pub fn check_definition_at(
    f: &HomogeneousPoly,
    directions: &[Vec<BigRational>],
) -> Result<Option<DefinitionWitness>> {
    let d = f.degree();
    if d < 2 {
        return Err(Error::Invalid(
            "falsification needs degree at least two".into(),
        ));
    }
    if directions.len() != d as usize {
        return Err(Error::DimensionMismatch {
            expected: d as usize,
            got: directions.len(),
        });
    }
    let mut q = f.clone();
    for v in &directions[2..] {
        q = q.directional(v)?;
    }
    let a = bilinear(&q, &directions[0], &directions[0])?;
    let b = bilinear(&q, &directions[1], &directions[1])?;
    let c = bilinear(&q, &directions[0], &directions[1])?;
    let lhs = a * b;
    let rhs = &c * &c;
    if lhs > rhs {
        Ok(Some(DefinitionWitness {
            directions: directions.to_vec(),
            lhs,
            rhs,
        }))
    } else {
        Ok(None)
    }
}

/// `d_u d_v q` for a quadratic `q`, read off the normalized coefficients.
fn bilinear(q: &HomogeneousPoly, u: &[BigRational], v: &[BigRational]) -> Result<BigRational> {
    if q.degree() != 2 {
        return Err(Error::DegreeMismatch {
            expected: 2,
            got: q.degree(),
        });
    }
    let n = q.num_vars();
    if u.len() != n || v.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: u.len().max(v.len()),
        });
    }
    let mut acc = BigRational::zero();
    for (alpha, p) in q.terms() {
        let support: Vec<usize> = (0..n).filter(|&i| alpha.get(i) > 0).collect();
        match support.as_slice() {
            [i] => acc += p * &u[*i] * &v[*i],
            [i, j] => acc += p * (&u[*i] * &v[*j] + &u[*j] * &v[*i]),
            _ => unreachable!(),
        }
    }
    Ok(acc)
}

/// Samples nonnegative integer direction tuples (entries uniform in 0..=9)
/// and returns the first tuple violating the defining inequality, or `None`
/// after `num_samples` tuples. Deterministic for a fixed seed.
pub fn falsify_definition(
    f: &HomogeneousPoly,
    num_samples: u64,
    seed: u64,
) -> Result<Option<DefinitionWitness>> {
    let d = f.degree();
    if d < 2 {
        return Err(Error::Invalid(
            "falsification needs degree at least two".into(),
        ));
    }
    let n = f.num_vars();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..num_samples {
        let dirs: Vec<Vec<BigRational>> = (0..d)
            .map(|_| (0..n).map(|_| rat(rng.gen_range(0..=9i64))).collect())
            .collect();
        if let Some(w) = check_definition_at(f, &dirs)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Two-variable membership test: the normalized coefficient sequence must
/// be nonnegative, have no internal zeros, and be log-concave.
pub fn bivariate_lorentzian(f: &HomogeneousPoly) -> Result<bool> {
    if f.num_vars() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: f.num_vars(),
        });
    }
    let d = f.degree();
    let seq: Vec<BigRational> = (0..=d)
        .map(|a| f.normalized_coeff(&Exponent(vec![a, d - a])).unwrap())
        .collect();
    if seq.iter().any(|p| p < &BigRational::zero()) {
        return Ok(false);
    }
    let nonzero: Vec<usize> = (0..seq.len()).filter(|&i| !seq[i].is_zero()).collect();
    if let (Some(&first), Some(&last)) = (nonzero.first(), nonzero.last()) {
        if (first..=last).any(|i| seq[i].is_zero()) {
            return Ok(false);
        }
    }
    for a in 1..seq.len().saturating_sub(1) {
        if &seq[a - 1] * &seq[a + 1] > &seq[a] * &seq[a] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One failed instance of the coefficient log-concavity inequality
/// `p_(a+e_i-e_j) p_(a-e_i+e_j) <= p_a^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AfViolation {
    pub alpha: Exponent,
    pub i: usize,
    pub j: usize,
    pub lhs: BigRational,
    pub rhs: BigRational,
}

/// All violations of the coefficient inequality over the degree simplex,
/// in (alpha, i, j) lexicographic order.
pub fn af_violations(f: &HomogeneousPoly) -> Vec<AfViolation> {
    let n = f.num_vars();
    let d = f.degree();
    let mut out = Vec::new();
    for alpha in simplex(n, d) {
        for i in 0..n {
            for j in i + 1..n {
                if alpha.get(i) == 0 || alpha.get(j) == 0 {
                    continue;
                }
                let up = alpha.bump(i).lower(j).unwrap();
                let down = alpha.bump(j).lower(i).unwrap();
                let lhs = f.normalized_coeff(&up).unwrap() * f.normalized_coeff(&down).unwrap();
                let pa = f.normalized_coeff(&alpha).unwrap();
                let rhs = &pa * &pa;
                if lhs > rhs {
                    out.push(AfViolation {
                        alpha: alpha.clone(),
                        i,
                        j,
                        lhs,
                        rhs,
                    });
                }
            }
        }
    }
    out
}

/// First violation of the coefficient inequality, or acceptance as `None`.
pub fn first_af_violation(f: &HomogeneousPoly) -> Option<AfViolation> {
    af_violations(f).into_iter().next()
}
