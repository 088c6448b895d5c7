//! Exact symmetric matrices and their inertia.
//!
//! Eigenvalue sign counts are computed without any floating arithmetic: the
//! characteristic polynomial is found by the Faddeev-LeVerrier recurrence
//! over the rationals, the zero eigenvalues split off as a power of the
//! variable, and the positive-root count of the remaining factor is read off
//! by Descartes' rule of signs, which is exact because symmetric matrices
//! are real-rooted.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Symmetric matrix with exact rational entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymMatrix {
    n: usize,
    entries: Vec<BigRational>, // row-major, n*n
}

/// Eigenvalue sign counts of a symmetric matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Inertia {
    pub pos: usize,
    pub zero: usize,
    pub neg: usize,
}

impl SymMatrix {
    /// Builds from full rows; the input must be exactly symmetric.
    pub fn new(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Invalid("matrix must have size >= 1".into()));
        }
        for row in &rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
        }
        for i in 0..n {
            for j in 0..i {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::Invalid(format!("matrix not symmetric at ({i},{j})")));
                }
            }
        }
        Ok(SymMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds from an entry function; symmetry is taken from `f(min,max)`.
    pub fn from_fn<F>(n: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> BigRational,
    {
        if n == 0 {
            return Err(Error::Invalid("matrix must have size >= 1".into()));
        }
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i.min(j), i.max(j)));
            }
        }
        Ok(SymMatrix { n, entries })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.n + j]
    }

    /// Principal submatrix on the given sorted index set.
    pub fn principal_submatrix(&self, idx: &[usize]) -> Result<SymMatrix> {
        for &i in idx {
            if i >= self.n {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    bound: self.n,
                });
            }
        }
        SymMatrix::from_fn(idx.len(), |a, b| self.get(idx[a], idx[b]).clone())
    }

    /// Coefficients `c_0..c_n` of `det(tI - M) = sum c_k t^k`, with `c_n = 1`.
    pub fn charpoly(&self) -> Vec<BigRational> {
        let n = self.n;
        let mut coeffs = vec![BigRational::zero(); n + 1];
        coeffs[n] = BigRational::one();
        // Faddeev-LeVerrier: M_1 = A; c_{n-k} = -tr(M_k)/k; M_{k+1} = A(M_k + c_{n-k} I).
        let mut m = self.entries.clone();
        for k in 1..=n {
            let mut tr = BigRational::zero();
            for i in 0..n {
                tr += &m[i * n + i];
            }
            let c = -tr / BigRational::from_integer(k.into());
            coeffs[n - k] = c.clone();
            if k == n {
                break;
            }
            for i in 0..n {
                m[i * n + i] += &c;
            }
            // m = A * m
            let mut next = vec![BigRational::zero(); n * n];
            for i in 0..n {
                for l in 0..n {
                    let a = &self.entries[i * n + l];
                    if a.is_zero() {
                        continue;
                    }
                    for j in 0..n {
                        let prod = a * &m[l * n + j];
                        next[i * n + j] += prod;
                    }
                }
            }
            m = next;
        }
        coeffs
    }

    /// Exact inertia `(pos, zero, neg)`.
    pub fn inertia(&self) -> Inertia {
        let coeffs = self.charpoly();
        let zero = coeffs
            .iter()
            .take_while(|c| c.is_zero())
            .count()
            .min(self.n);
        // Descartes on the nonzero factor: sign variations count the positive
        // roots with multiplicity for a real-rooted polynomial.
        let mut pos = 0usize;
        let mut last_sign = 0i8;
        for c in coeffs[zero..].iter() {
            if c.is_zero() {
                continue;
            }
            let s: i8 = if c.is_positive() { 1 } else { -1 };
            if last_sign != 0 && s != last_sign {
                pos += 1;
            }
            last_sign = s;
        }
        Inertia {
            pos,
            zero,
            neg: self.n - zero - pos,
        }
    }

    /// Evaluates `det(tI - M)` at a rational `t`.
    pub fn charpoly_at(&self, t: &BigRational) -> BigRational {
        let coeffs = self.charpoly();
        let mut acc = BigRational::zero();
        for c in coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }
}
