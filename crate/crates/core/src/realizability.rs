//! Decision procedures for projection-volume realizability conditions.
//!
//! All square-root comparisons are decided exactly over the rationals by
//! case-split squaring; no radicals are ever materialized. The checkers
//! decide the stated matrix and triangle conditions only. At four indices
//! the triangle condition characterizes realizability; at five and more the
//! matrix conditions are necessary tests whose sufficiency is open.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::SymMatrix;
use crate::polytope::{ProjectionMode, RationalPolytope};

/// Nonnegative rational data indexed by unordered pairs `{i < j}` of
/// `0..n`; all `n(n-1)/2` entries are present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairVector {
    n: usize,
    values: BTreeMap<(usize, usize), BigRational>,
}

impl PairVector {
    pub fn new(n: usize, values: BTreeMap<(usize, usize), BigRational>) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewIndices { needed: 2, got: n });
        }
        for i in 0..n {
            for j in i + 1..n {
                match values.get(&(i, j)) {
                    None => {
                        return Err(Error::BadPairVector(format!("missing pair ({i},{j})")));
                    }
                    Some(v) if v.is_negative() => {
                        return Err(Error::BadPairVector(format!("negative entry at ({i},{j})")));
                    }
                    _ => {}
                }
            }
        }
        if values.len() != n * (n - 1) / 2 {
            return Err(Error::BadPairVector("extraneous pair keys".into()));
        }
        Ok(PairVector { n, values })
    }

    /// Builds from entries listed in lexicographic pair order
    /// `(0,1), (0,2), ..., (n-2,n-1)`.
    pub fn from_slice(n: usize, entries: &[BigRational]) -> Result<Self> {
        let mut values = BTreeMap::new();
        let mut it = entries.iter();
        for i in 0..n {
            for j in i + 1..n {
                let v = it
                    .next()
                    .ok_or_else(|| Error::BadPairVector("too few entries".into()))?;
                values.insert((i, j), v.clone());
            }
        }
        if it.next().is_some() {
            return Err(Error::BadPairVector("too many entries".into()));
        }
        PairVector::new(n, values)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        let key = (i.min(j), i.max(j));
        &self.values[&key]
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &BigRational)> {
        self.values.iter()
    }

    /// The symmetric matrix with zero diagonal and entry `p_ij` off it.
    pub fn pair_matrix(&self) -> SymMatrix {
        SymMatrix::from_fn(self.n, |i, j| {
            if i == j {
                BigRational::zero()
            } else {
                self.get(i, j).clone()
            }
        })
        .expect("n >= 2")
    }
}

/// Outcome of the exact triangle test on squared side lengths.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangleVerdict {
    /// All three inequalities strict (a nondegenerate triangle exists).
    Strict,
    /// All hold, at least one with equality.
    Degenerate,
    /// Some inequality fails.
    Fail,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum SqrtCmp {
    StrictlyLess,
    Equal,
    Greater,
}

/// Compares `sqrt(a)` with `sqrt(b) + sqrt(c)` exactly for nonnegative
/// rationals: with `s = a - b - c`, the inequality `sqrt(a) <= sqrt(b) +
/// sqrt(c)` reduces to `s <= 0` or `s^2 <= 4bc`.
fn cmp_sqrt(a: &BigRational, b: &BigRational, c: &BigRational) -> SqrtCmp {
    let s = a - b - c;
    if s.is_negative() {
        return SqrtCmp::StrictlyLess;
    }
    let lhs = &s * &s;
    let rhs = BigRational::from_integer(4.into()) * b * c;
    if s.is_zero() {
        // sqrt(a) = sqrt(b) + sqrt(c) iff bc = 0 here.
        return if rhs.is_zero() {
            SqrtCmp::Equal
        } else {
            SqrtCmp::StrictlyLess
        };
    }
    match lhs.cmp(&rhs) {
        std::cmp::Ordering::Less => SqrtCmp::StrictlyLess,
        std::cmp::Ordering::Equal => SqrtCmp::Equal,
        std::cmp::Ordering::Greater => SqrtCmp::Greater,
    }
}

fn triangle_on(a: &BigRational, b: &BigRational, c: &BigRational) -> TriangleVerdict {
    let mut degenerate = false;
    for (x, y, z) in [(a, b, c), (b, a, c), (c, a, b)] {
        match cmp_sqrt(x, y, z) {
            SqrtCmp::Greater => return TriangleVerdict::Fail,
            SqrtCmp::Equal => degenerate = true,
            SqrtCmp::StrictlyLess => {}
        }
    }
    if degenerate {
        TriangleVerdict::Degenerate
    } else {
        TriangleVerdict::Strict
    }
}

/// Four-index realizability test: decides whether a Euclidean triangle with
/// side lengths `sqrt(p01 p23), sqrt(p02 p13), sqrt(p03 p12)` exists, and
/// whether it is nondegenerate (the smooth-body case).
pub fn triangle_condition(p: &PairVector) -> Result<TriangleVerdict> {
    if p.n() != 4 {
        return Err(Error::TooFewIndices {
            needed: 4,
            got: p.n(),
        });
    }
    let a = p.get(0, 1) * p.get(2, 3);
    let b = p.get(0, 2) * p.get(1, 3);
    let c = p.get(0, 3) * p.get(1, 2);
    Ok(triangle_on(&a, &b, &c))
}

/// Whether the pair matrix has at most one positive eigenvalue.
pub fn one_positive_condition(p: &PairVector) -> bool {
    p.pair_matrix().inertia().pos <= 1
}

/// Whether every `4 x 4` principal submatrix of the pair matrix has at most
/// one positive eigenvalue.
pub fn principal_4x4_condition(p: &PairVector) -> Result<bool> {
    let n = p.n();
    if n < 4 {
        return Err(Error::TooFewIndices { needed: 4, got: n });
    }
    let m = p.pair_matrix();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    if m.principal_submatrix(&[a, b, c, d]).unwrap().inertia().pos > 1 {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// The square-root triangle inequalities `sqrt(q_ij q_kl) <= sqrt(q_ik q_jl)
/// + sqrt(q_il q_jk)` for every four-index subset and every pairing.
pub fn t2_plucker_condition(q: &PairVector) -> Result<bool> {
    let n = q.n();
    if n < 4 {
        return Err(Error::TooFewIndices { needed: 4, got: n });
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in k + 1..n {
                    let a = q.get(i, j) * q.get(k, l);
                    let b = q.get(i, k) * q.get(j, l);
                    let c = q.get(i, l) * q.get(j, k);
                    if triangle_on(&a, &b, &c) == TriangleVerdict::Fail {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Pairwise projection volumes of a body: entry `(i, j)` is the hull volume
/// of the projection selected by `mode` on coordinates `{i, j}`.
pub fn projection_pair_vector(body: &RationalPolytope, mode: ProjectionMode) -> Result<PairVector> {
    let n = body.dim();
    if n < 2 {
        return Err(Error::TooFewIndices { needed: 2, got: n });
    }
    let mut values = BTreeMap::new();
    for i in 0..n {
        for j in i + 1..n {
            let proj = body.project(&[i, j], mode)?;
            values.insert((i, j), proj.hull_volume()?);
        }
    }
    PairVector::new(n, values)
}
