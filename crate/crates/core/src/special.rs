//! Distinguished polynomial families: elementary symmetric polynomials,
//! normalized Schur polynomials via Kostka numbers, the Fano basis cubic,
//! and spanning-tree polynomials.

use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::matroids::{fano_matrix, Graph};
use crate::poly::{simplex, HomogeneousPoly};

/// Partition shape: weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YoungDiagram {
    parts: Vec<u32>,
}

impl YoungDiagram {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::BadYoungDiagram);
        }
        Ok(YoungDiagram { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }
}

/// Elementary symmetric polynomial of degree `d` in `n` variables: the sum
/// of all squarefree degree-`d` monomials, normalized coefficients one.
pub fn elementary_symmetric(n: usize, d: u32) -> Result<HomogeneousPoly> {
    if d == 0 || d as usize > n {
        return Err(Error::Invalid(format!(
            "need 1 <= degree <= variables, got degree {d} in {n} variables"
        )));
    }
    let terms = simplex(n, d)
        .into_iter()
        .filter(|alpha| alpha.0.iter().all(|&e| e <= 1))
        .map(|alpha| (alpha, BigRational::one()));
    HomogeneousPoly::from_terms(n, d, terms)
}

/// Kostka number: semistandard Young tableaux of shape `lambda` and weight
/// `mu`, counted by direct backtracking (rows weakly increase, columns
/// strictly increase, entry `i` appears `mu_i` times).
pub fn kostka(lambda: &YoungDiagram, mu: &[u32]) -> Result<u64> {
    let weight: u32 = mu.iter().sum();
    if weight != lambda.size() {
        return Err(Error::SizeMismatch {
            shape: lambda.size(),
            weight,
        });
    }
    let shape = lambda.parts();
    let mut remaining: Vec<u32> = mu.to_vec();
    let mut rows: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len as usize]).collect();
    Ok(count_ssyt(shape, &mut rows, &mut remaining, 0, 0))
}

fn count_ssyt(
    shape: &[u32],
    rows: &mut Vec<Vec<usize>>,
    remaining: &mut Vec<u32>,
    r: usize,
    c: usize,
) -> u64 {
    if r == shape.len() {
        return 1;
    }
    if c == shape[r] as usize {
        return count_ssyt(shape, rows, remaining, r + 1, 0);
    }
    let lo = {
        let mut lo = 0usize;
        if c > 0 {
            lo = lo.max(rows[r][c - 1]); // weakly increasing along rows
        }
        if r > 0 {
            lo = lo.max(rows[r - 1][c] + 1); // strictly increasing down columns
        }
        lo
    };
    let mut count = 0;
    for v in lo..remaining.len() {
        if remaining[v] == 0 {
            continue;
        }
        remaining[v] -= 1;
        rows[r][c] = v;
        count += count_ssyt(shape, rows, remaining, r, c + 1);
        remaining[v] += 1;
    }
    count
}

/// Normalized Schur polynomial: normalized coefficient at weight `mu` equals
/// the Kostka number of `(lambda, mu)`, over all length-`n` compositions of
/// `|lambda|`. Requires `n` at least the number of parts.
pub fn normalized_schur(lambda: &YoungDiagram, n: usize) -> Result<HomogeneousPoly> {
    if n < lambda.rows() {
        return Err(Error::TooFewIndices {
            needed: lambda.rows(),
            got: n,
        });
    }
    let d = lambda.size();
    let mut terms = Vec::new();
    for mu in simplex(n, d) {
        let k = kostka(lambda, &mu.0)?;
        if k > 0 {
            terms.push((mu, BigRational::from_integer(k.into())));
        }
    }
    HomogeneousPoly::from_terms(n, d, terms)
}

/// Basis generating cubic of the seven-point rank-three binary matroid:
/// 28 squarefree terms, one per basis.
pub fn fano_poly() -> HomogeneousPoly {
    fano_matrix()
        .column_matroid()
        .generating_poly()
        .expect("28 bases")
}

/// Spanning-tree generating polynomial of a connected graph, one squarefree
/// monomial per spanning tree.
pub fn spanning_tree_poly(g: &Graph) -> Result<HomogeneousPoly> {
    g.spanning_trees()?.generating_poly()
}
