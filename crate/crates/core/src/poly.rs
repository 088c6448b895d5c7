//! Homogeneous multivariate polynomials over exact rationals.
//!
//! A polynomial is stored through its normalized coefficients: writing
//! `f = sum p_a * x^[a]` with `x^[a] = x^a / a!`, the map holds the nonzero
//! `p_a`. In these coordinates `p_a` equals the iterated partial derivative
//! of `f` at the multi-index `a`, which makes derivatives, differential
//! operators, and coefficient inequalities pure index arithmetic.
//!
//! The zero polynomial keeps an explicit degree tag so derivative and minor
//! chains stay well-typed.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rat::factorial;

/// Exponent vector of a monomial; also used as a lattice point.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exponent(pub Vec<u32>);

impl Exponent {
    pub fn zeros(n: usize) -> Self {
        Exponent(vec![0; n])
    }

    /// The standard basis vector `e_i` of length `n`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        Exponent(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Coordinate sum.
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    /// `a!` = product of coordinate factorials.
    pub fn factorial(&self) -> BigInt {
        self.0.iter().map(|&e| factorial(e)).product()
    }

    /// Componentwise `self <= other`.
    pub fn dominated_by(&self, other: &Exponent) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &Exponent) -> Exponent {
        debug_assert_eq!(self.len(), other.len());
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise difference, `None` if any coordinate would go negative.
    pub fn checked_sub(&self, other: &Exponent) -> Option<Exponent> {
        if !other.dominated_by(self) {
            return None;
        }
        Some(Exponent(
            self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
        ))
    }

    /// `self + e_i`.
    pub fn bump(&self, i: usize) -> Exponent {
        let mut v = self.0.clone();
        v[i] += 1;
        Exponent(v)
    }

    /// `self - e_i`, `None` if coordinate `i` is zero.
    pub fn lower(&self, i: usize) -> Option<Exponent> {
        if self.0[i] == 0 {
            return None;
        }
        let mut v = self.0.clone();
        v[i] -= 1;
        Some(Exponent(v))
    }

    /// Multinomial `binom(self; alpha)` = prod self_i! / (alpha_i! (self-alpha)_i!).
    pub fn multinomial(&self, alpha: &Exponent) -> BigInt {
        debug_assert!(alpha.dominated_by(self));
        self.0
            .iter()
            .zip(&alpha.0)
            .map(|(&g, &a)| factorial(g) / (factorial(a) * factorial(g - a)))
            .product()
    }
}

/// Enumerates the discrete simplex: all exponent vectors of length `n`
/// summing to `d`, in ascending lexicographic order.
pub fn simplex(n: usize, d: u32) -> Vec<Exponent> {
    if n == 0 {
        // Only the empty exponent vector, and only at degree zero.
        return if d == 0 {
            vec![Exponent(Vec::new())]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fill_simplex(&mut cur, 0, d, &mut out);
    out
}

fn fill_simplex(cur: &mut Vec<u32>, pos: usize, rem: u32, out: &mut Vec<Exponent>) {
    if pos + 1 == cur.len() {
        cur[pos] = rem;
        out.push(Exponent(cur.clone()));
        return;
    }
    for v in 0..=rem {
        cur[pos] = v;
        fill_simplex(cur, pos + 1, rem - v, out);
    }
    cur[pos] = 0;
}

/// Homogeneous polynomial in normalized-coefficient form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousPoly {
    num_vars: usize,
    degree: u32,
    terms: BTreeMap<Exponent, BigRational>,
}

impl HomogeneousPoly {
    /// The zero polynomial with an explicit degree tag.
    pub fn zero(num_vars: usize, degree: u32) -> Self {
        HomogeneousPoly {
            num_vars,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// Builds a polynomial from normalized coefficients `p_a`. Zero
    /// coefficients are dropped; exponents must sum to `degree`.
    pub fn from_terms<I>(num_vars: usize, degree: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponent, BigRational)>,
    {
        let mut map = BTreeMap::new();
        for (alpha, p) in terms {
            if alpha.len() != num_vars {
                return Err(Error::DimensionMismatch {
                    expected: num_vars,
                    got: alpha.len(),
                });
            }
            if alpha.total() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    got: alpha.total(),
                });
            }
            if p.is_zero() {
                continue;
            }
            let entry = map.entry(alpha).or_insert_with(BigRational::zero);
            *entry += p;
        }
        map.retain(|_, p: &mut BigRational| !p.is_zero());
        Ok(HomogeneousPoly {
            num_vars,
            degree,
            terms: map,
        })
    }

    /// Builds a polynomial from ordinary monomial coefficients `c_a x^a`,
    /// converting to normalized form via `p_a = c_a * a!`.
    pub fn from_monomials<I>(num_vars: usize, degree: u32, monomials: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponent, BigRational)>,
    {
        Self::from_terms(
            num_vars,
            degree,
            monomials.into_iter().map(|(alpha, c)| {
                let f = BigRational::from_integer(alpha.factorial());
                (alpha, c * f)
            }),
        )
    }

    /// Degree-zero polynomial with value `c`.
    pub fn constant(num_vars: usize, c: BigRational) -> Self {
        HomogeneousPoly::from_terms(num_vars, 0, [(Exponent::zeros(num_vars), c)]).unwrap()
    }

    /// The variable `x_i` as a degree-one polynomial.
    pub fn variable(num_vars: usize, i: usize) -> Result<Self> {
        if i >= num_vars {
            return Err(Error::IndexOutOfRange {
                index: i,
                bound: num_vars,
            });
        }
        HomogeneousPoly::from_terms(
            num_vars,
            1,
            [(Exponent::unit(num_vars, i), BigRational::one())],
        )
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigRational)> {
        self.terms.iter()
    }

    /// Exponent vectors with nonzero coefficient, lexicographically sorted.
    pub fn support(&self) -> Vec<Exponent> {
        self.terms.keys().cloned().collect()
    }

    /// Normalized coefficient `p_a`; zero when the monomial is absent.
    pub fn normalized_coeff(&self, alpha: &Exponent) -> Result<BigRational> {
        if alpha.len() != self.num_vars {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars,
                got: alpha.len(),
            });
        }
        if alpha.total() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                got: alpha.total(),
            });
        }
        Ok(self
            .terms
            .get(alpha)
            .cloned()
            .unwrap_or_else(BigRational::zero))
    }

    /// Ordinary monomial coefficient `c_a = p_a / a!`.
    pub fn monomial_coeff(&self, alpha: &Exponent) -> Result<BigRational> {
        Ok(self.normalized_coeff(alpha)? / BigRational::from_integer(alpha.factorial()))
    }

    /// Evaluates at a rational point.
    pub fn eval(&self, point: &[BigRational]) -> Result<BigRational> {
        if point.len() != self.num_vars {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars,
                got: point.len(),
            });
        }
        let mut acc = BigRational::zero();
        for (alpha, p) in &self.terms {
            let mut term = p.clone();
            for (i, &e) in alpha.0.iter().enumerate() {
                for _ in 0..e {
                    term *= &point[i];
                }
            }
            acc += term / BigRational::from_integer(alpha.factorial());
        }
        Ok(acc)
    }

    /// Partial derivative in variable `i`: `p'_b = p_{b + e_i}`.
    pub fn partial(&self, i: usize) -> Result<Self> {
        if i >= self.num_vars {
            return Err(Error::IndexOutOfRange {
                index: i,
                bound: self.num_vars,
            });
        }
        if self.degree == 0 {
            return Err(Error::DegreeZero);
        }
        let terms = self
            .terms
            .iter()
            .filter_map(|(alpha, p)| alpha.lower(i).map(|beta| (beta, p.clone())));
        HomogeneousPoly::from_terms(self.num_vars, self.degree - 1, terms)
    }

    /// Iterated partial derivative by a multi-index: the polynomial with
    /// normalized coefficients `p'_b = p_{b + delta}`. Zero (degree tag 0)
    /// when `|delta|` exceeds the degree.
    pub fn derivative(&self, delta: &Exponent) -> Result<Self> {
        if delta.len() != self.num_vars {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars,
                got: delta.len(),
            });
        }
        let degree = self.degree.saturating_sub(delta.total());
        let terms = self
            .terms
            .iter()
            .filter_map(|(alpha, p)| alpha.checked_sub(delta).map(|beta| (beta, p.clone())));
        HomogeneousPoly::from_terms(self.num_vars, degree, terms)
    }

    /// Directional derivative `sum v_i d_i f`.
    pub fn directional(&self, v: &[BigRational]) -> Result<Self> {
        if v.len() != self.num_vars {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars,
                got: v.len(),
            });
        }
        if self.degree == 0 {
            return Err(Error::DegreeZero);
        }
        let mut out = HomogeneousPoly::zero(self.num_vars, self.degree - 1);
        for (alpha, p) in &self.terms {
            for i in 0..self.num_vars {
                if v[i].is_zero() {
                    continue;
                }
                if let Some(beta) = alpha.lower(i) {
                    let entry = out.terms.entry(beta).or_insert_with(BigRational::zero);
                    *entry += p * &v[i];
                }
            }
        }
        out.terms.retain(|_, p| !p.is_zero());
        Ok(out)
    }

    /// Sum of two polynomials of the same shape.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if other.num_vars != self.num_vars {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars,
                got: other.num_vars,
            });
        }
        if other.degree != self.degree && !self.is_zero() && !other.is_zero() {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                got: other.degree,
            });
        }
        let degree = if self.is_zero() {
            other.degree
        } else {
            self.degree
        };
        let mut terms = self.terms.clone();
        for (alpha, p) in &other.terms {
            let entry = terms.entry(alpha.clone()).or_insert_with(BigRational::zero);
            *entry += p;
        }
        terms.retain(|_, p| !p.is_zero());
        Ok(HomogeneousPoly {
            num_vars: self.num_vars,
            degree,
            terms,
        })
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return HomogeneousPoly::zero(self.num_vars, self.degree);
        }
        HomogeneousPoly {
            num_vars: self.num_vars,
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(alpha, p)| (alpha.clone(), p * c))
                .collect(),
        }
    }

    /// Polynomial product. In normalized coordinates
    /// `r_g = sum_{a+b=g} binom(g; a) p_a q_b`.
    pub fn product(&self, other: &Self) -> Result<Self> {
        if other.num_vars != self.num_vars {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars,
                got: other.num_vars,
            });
        }
        let degree = self.degree + other.degree;
        let mut out = HomogeneousPoly::zero(self.num_vars, degree);
        for (alpha, p) in &self.terms {
            for (beta, q) in &other.terms {
                let gamma = alpha.add(beta);
                let w = BigRational::from_integer(gamma.multinomial(alpha));
                let entry = out.terms.entry(gamma).or_insert_with(BigRational::zero);
                *entry += p * q * w;
            }
        }
        out.terms.retain(|_, p| !p.is_zero());
        Ok(out)
    }

    /// Range `(e_min, e_max)` of exponents of `x_j` across the support;
    /// `None` for the zero polynomial.
    pub fn layer_bounds(&self, j: usize) -> Result<Option<(u32, u32)>> {
        if j >= self.num_vars {
            return Err(Error::IndexOutOfRange {
                index: j,
                bound: self.num_vars,
            });
        }
        Ok(self
            .terms
            .keys()
            .map(|alpha| alpha.get(j))
            .fold(None, |acc, e| match acc {
                None => Some((e, e)),
                Some((lo, hi)) => Some((lo.min(e), hi.max(e))),
            }))
    }

    /// Keeps the layers with `x_j`-exponent strictly below `top`; coefficients
    /// unchanged, degree unchanged. Building block for deletion.
    pub fn keep_layers_below(&self, j: usize, top: u32) -> Result<Self> {
        if j >= self.num_vars {
            return Err(Error::IndexOutOfRange {
                index: j,
                bound: self.num_vars,
            });
        }
        let terms = self
            .terms
            .iter()
            .filter(|(alpha, _)| alpha.get(j) < top)
            .map(|(alpha, p)| (alpha.clone(), p.clone()));
        HomogeneousPoly::from_terms(self.num_vars, self.degree, terms)
    }

    /// Keeps the layers with `x_j`-exponent strictly above `bottom` and shifts
    /// the `x_j`-exponent down by one: `p'_{a - e_j} = p_a`. Degree drops by
    /// one. Building block for contraction.
    pub fn contract_layers_above(&self, j: usize, bottom: u32) -> Result<Self> {
        if j >= self.num_vars {
            return Err(Error::IndexOutOfRange {
                index: j,
                bound: self.num_vars,
            });
        }
        if self.degree == 0 {
            return Err(Error::DegreeZero);
        }
        let terms = self
            .terms
            .iter()
            .filter(|(alpha, _)| alpha.get(j) > bottom)
            .map(|(alpha, p)| (alpha.lower(j).unwrap(), p.clone()));
        HomogeneousPoly::from_terms(self.num_vars, self.degree - 1, terms)
    }

    /// Deletion by variable `j`: drops the top `x_j`-layer of the support.
    /// Yields the zero polynomial when a single layer is present, in
    /// particular whenever `f` does not involve `x_j`.
    pub fn delete(&self, j: usize) -> Result<Self> {
        let (_, e_max) = self.layer_bounds(j)?.ok_or(Error::ZeroPolynomial)?;
        self.keep_layers_below(j, e_max)
    }

    /// Contraction by variable `j`: drops the bottom `x_j`-layer and divides
    /// by one power of `x_j` in normalized coordinates. Yields the zero
    /// polynomial when a single layer is present.
    pub fn contract(&self, j: usize) -> Result<Self> {
        let (e_min, _) = self.layer_bounds(j)?.ok_or(Error::ZeroPolynomial)?;
        if self.degree == 0 {
            return Err(Error::DegreeZero);
        }
        self.contract_layers_above(j, e_min)
    }
}

/// Applies `g` as a constant-coefficient differential operator to `f`,
/// reading both in normalized coordinates: the monomial rule is
/// `d^a (x^[b]) = x^[b-a]` when `a <= b` and `0` otherwise, so
/// `r_c = sum_a (q_a / a!) p_{c+a}`.
///
/// When `deg g > deg f` the result is the zero polynomial (degree tag 0),
/// not an error.
pub fn apply_diff(g: &HomogeneousPoly, f: &HomogeneousPoly) -> Result<HomogeneousPoly> {
    if g.num_vars != f.num_vars {
        return Err(Error::DimensionMismatch {
            expected: f.num_vars,
            got: g.num_vars,
        });
    }
    let degree = f.degree.saturating_sub(g.degree);
    if g.degree > f.degree {
        return Ok(HomogeneousPoly::zero(f.num_vars, 0));
    }
    let mut out = HomogeneousPoly::zero(f.num_vars, degree);
    for (alpha, q) in &g.terms {
        let c = q / BigRational::from_integer(alpha.factorial());
        for (beta, p) in &f.terms {
            if let Some(gamma) = beta.checked_sub(alpha) {
                let entry = out.terms.entry(gamma).or_insert_with(BigRational::zero);
                *entry += &c * p;
            }
        }
    }
    out.terms.retain(|_, p| !p.is_zero());
    Ok(out)
}
