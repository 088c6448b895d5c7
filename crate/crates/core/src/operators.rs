//! Linear operators on bounded monomial spaces: symbols, matrix actions,
//! the interlacing operator, and coefficient-inequality scanners.
//!
//! An operator is a finite matrix in normalized monomial coordinates: it
//! sends `x^[alpha]` (for `alpha` inside the source box) to a combination of
//! `y^[beta]` inside the target box, with a fixed degree shift.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lorentzian::{af_violations, AfViolation};
use crate::poly::{Exponent, HomogeneousPoly};
use crate::rat::binomial;

/// Homogeneous linear operator between bounded monomial boxes, stored as a
/// sparse matrix over normalized monomials: entry `(beta, alpha)` is the
/// coefficient of `y^[beta]` in the image of `x^[alpha]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOperator {
    mu: Exponent,
    nu: Exponent,
    shift: i64,
    entries: BTreeMap<(Exponent, Exponent), BigRational>,
}

impl MonomialOperator {
    /// Validates box membership and homogeneity (`|beta| = |alpha| + shift`)
    /// of every nonzero entry.
    pub fn new<I>(mu: Exponent, nu: Exponent, shift: i64, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((Exponent, Exponent), BigRational)>,
    {
        let mut map = BTreeMap::new();
        for ((beta, alpha), v) in entries {
            if v.is_zero() {
                continue;
            }
            if !alpha.dominated_by(&mu) {
                return Err(Error::BadOperatorEntry(format!(
                    "source exponent {:?} outside the box {:?}",
                    alpha.0, mu.0
                )));
            }
            if !beta.dominated_by(&nu) {
                return Err(Error::BadOperatorEntry(format!(
                    "target exponent {:?} outside the box {:?}",
                    beta.0, nu.0
                )));
            }
            if beta.total() as i64 != alpha.total() as i64 + shift {
                return Err(Error::BadOperatorEntry(format!(
                    "degree of {:?} -> {:?} is not shifted by {shift}",
                    alpha.0, beta.0
                )));
            }
            let slot = map.entry((beta, alpha)).or_insert_with(BigRational::zero);
            *slot += v;
        }
        map.retain(|_, v: &mut BigRational| !v.is_zero());
        Ok(MonomialOperator {
            mu,
            nu,
            shift,
            entries: map,
        })
    }

    /// Identity on the box below `mu`.
    pub fn identity(mu: Exponent) -> Self {
        let entries = box_points(&mu)
            .into_iter()
            .map(|alpha| ((alpha.clone(), alpha), BigRational::from_integer(1.into())));
        MonomialOperator::new(mu.clone(), mu, 0, entries).expect("diagonal entries")
    }

    pub fn zero(mu: Exponent, nu: Exponent, shift: i64) -> Self {
        MonomialOperator {
            mu,
            nu,
            shift,
            entries: BTreeMap::new(),
        }
    }

    pub fn source_bound(&self) -> &Exponent {
        &self.mu
    }

    pub fn target_bound(&self) -> &Exponent {
        &self.nu
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(Exponent, Exponent), &BigRational)> {
        self.entries.iter()
    }

    /// The symbol `sum over alpha <= mu of T(x^[alpha]) x^[mu - alpha]`, a
    /// homogeneous polynomial in the source variables followed by the target
    /// variables.
    pub fn symbol(&self) -> HomogeneousPoly {
        let e = self.mu.len();
        let f = self.nu.len();
        let degree_i = self.mu.total() as i64 + self.shift;
        let degree = degree_i.max(0) as u32;
        let mut terms = Vec::new();
        for ((beta, alpha), v) in &self.entries {
            let head = self.mu.checked_sub(alpha).expect("alpha inside the box");
            let mut exps = head.0;
            exps.extend_from_slice(&beta.0);
            terms.push((Exponent(exps), v.clone()));
        }
        HomogeneousPoly::from_terms(e + f, degree, terms).expect("homogeneous entries")
    }

    /// Matrix-vector application in normalized monomial coordinates. The
    /// support of `f` must lie inside the source box.
    pub fn apply(&self, f: &HomogeneousPoly) -> Result<HomogeneousPoly> {
        if f.num_vars() != self.mu.len() {
            return Err(Error::DimensionMismatch {
                expected: self.mu.len(),
                got: f.num_vars(),
            });
        }
        if !f.support().iter().all(|a| a.dominated_by(&self.mu)) {
            return Err(Error::SupportExceedsBound);
        }
        let degree = (f.degree() as i64 + self.shift).max(0) as u32;
        let mut out: BTreeMap<Exponent, BigRational> = BTreeMap::new();
        for ((beta, alpha), v) in &self.entries {
            if alpha.total() != f.degree() {
                continue;
            }
            let p = f.normalized_coeff(alpha)?;
            if p.is_zero() {
                continue;
            }
            let slot = out.entry(beta.clone()).or_insert_with(BigRational::zero);
            *slot += v * p;
        }
        HomogeneousPoly::from_terms(self.nu.len(), degree, out)
    }

    /// Composition `self . inner`; the inner target box must equal the
    /// outer source box.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if inner.nu != self.mu {
            return Err(Error::BadOperatorEntry(
                "composition needs matching inner target and outer source boxes".into(),
            ));
        }
        let mut entries: BTreeMap<(Exponent, Exponent), BigRational> = BTreeMap::new();
        for ((gamma, beta), t) in &self.entries {
            for ((beta2, alpha), s) in &inner.entries {
                if beta2 != beta {
                    continue;
                }
                let slot = entries
                    .entry((gamma.clone(), alpha.clone()))
                    .or_insert_with(BigRational::zero);
                *slot += t * s;
            }
        }
        MonomialOperator::new(
            inner.mu.clone(),
            self.nu.clone(),
            inner.shift + self.shift,
            entries,
        )
    }

    /// Entry-wise sum of operators with identical boxes and shift.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.mu != other.mu || self.nu != other.nu || self.shift != other.shift {
            return Err(Error::BadOperatorEntry(
                "sum needs identical boxes and shift".into(),
            ));
        }
        let entries = self
            .entries
            .iter()
            .chain(other.entries.iter())
            .map(|(k, v)| (k.clone(), v.clone()));
        MonomialOperator::new(self.mu.clone(), self.nu.clone(), self.shift, entries)
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &BigRational) -> Self {
        let entries = self
            .entries
            .iter()
            .map(|(k, v)| (k.clone(), v * c))
            .collect();
        MonomialOperator {
            mu: self.mu.clone(),
            nu: self.nu.clone(),
            shift: self.shift,
            entries,
        }
    }
}

/// All lattice points of the box `0 <= alpha <= mu`, ascending.
pub fn box_points(mu: &Exponent) -> Vec<Exponent> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; mu.len()];
    loop {
        out.push(Exponent(cur.clone()));
        let mut pos = 0;
        loop {
            if pos == mu.len() {
                out.sort();
                return out;
            }
            if cur[pos] < mu.get(pos) {
                cur[pos] += 1;
                break;
            }
            cur[pos] = 0;
            pos += 1;
        }
    }
}

/// The interlacing operator `1 + t x_i d_j` applied to `f`.
pub fn interlacing_apply(
    f: &HomogeneousPoly,
    i: usize,
    j: usize,
    t: &BigRational,
) -> Result<HomogeneousPoly> {
    let n = f.num_vars();
    if i >= n {
        return Err(Error::IndexOutOfRange { index: i, bound: n });
    }
    if j >= n {
        return Err(Error::IndexOutOfRange { index: j, bound: n });
    }
    if f.degree() == 0 || t.is_zero() {
        return Ok(f.clone());
    }
    let shifted = HomogeneousPoly::variable(n, i)?
        .product(&f.partial(j)?)?
        .scale(t);
    f.add(&shifted)
}

/// One failed instance of the reverse coefficient inequality
/// `C(d,e) p(D2^e D1^(d-e)) p(D1^e D3^(d-e)) >= p(D1^d) p(D2^e D3^(d-e))`,
/// with the three distinct variables playing `D1, D2, D3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RktViolation {
    pub d1: usize,
    pub d2: usize,
    pub d3: usize,
    pub e: u32,
    pub lhs: BigRational,
    pub rhs: BigRational,
}

/// Scans the reverse inequality over every ordered triple of distinct
/// variables and every exponent split `1 <= e <= d-1`, reading intersection
/// numbers as normalized coefficients. Returns all violations.
///
/// A nonempty result refutes volume-polynomial membership; an empty one
/// decides nothing (the scan is a necessary condition, instantiated on
/// coordinate directions only).
pub fn rkt_scan(f: &HomogeneousPoly) -> Result<Vec<RktViolation>> {
    let n = f.num_vars();
    if n < 3 {
        return Err(Error::TooFewIndices { needed: 3, got: n });
    }
    let d = f.degree();
    let mut out = Vec::new();
    if d < 2 {
        return Ok(out);
    }
    let coeff_at = |i: usize, ei: u32, j: usize, ej: u32| -> BigRational {
        let mut v = vec![0u32; n];
        v[i] += ei;
        v[j] += ej;
        f.normalized_coeff(&Exponent(v)).unwrap()
    };
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if a == b || b == c || a == c {
                    continue;
                }
                for e in 1..d {
                    let lhs = BigRational::from_integer(binomial(d, e))
                        * coeff_at(b, e, a, d - e)
                        * coeff_at(a, e, c, d - e);
                    let rhs = coeff_at(a, d, a, 0) * coeff_at(b, e, c, d - e);
                    if lhs < rhs {
                        out.push(RktViolation {
                            d1: a,
                            d2: b,
                            d3: c,
                            e,
                            lhs,
                            rhs,
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The forward coefficient inequality scan (log-concavity across adjacent
/// exponents), reported in scanner format.
pub fn kt_scan(f: &HomogeneousPoly) -> Vec<AfViolation> {
    af_violations(f)
}
