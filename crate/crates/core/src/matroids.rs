//! Graphic and linear matroid constructions.

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::mconvex::MConvexSet;
use crate::poly::Exponent;

/// Graph with labeled edges. Parallel edges and self-loops are allowed;
/// an edge's label is its position in the edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::Invalid("graph needs at least one vertex".into()));
        }
        for &(u, v) in &edges {
            let bad = u.max(v);
            if bad >= vertex_count {
                return Err(Error::IndexOutOfRange {
                    index: bad,
                    bound: vertex_count,
                });
            }
        }
        Ok(Graph {
            vertex_count,
            edges,
        })
    }

    /// Complete graph on `n` vertices, edges in lexicographic order.
    pub fn complete(n: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_connected(&self) -> bool {
        let mut dsu = Dsu::new(self.vertex_count);
        for &(u, v) in &self.edges {
            dsu.union(u, v);
        }
        dsu.components() == 1
    }

    /// Indicator vectors of all spanning trees, enumerated by recursive
    /// deletion/contraction over the edge list (include = contract,
    /// exclude = delete). Errors on disconnected input.
    pub fn spanning_trees(&self) -> Result<MConvexSet> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let m = self.edges.len();
        let mut out = Vec::new();
        let mut chosen = vec![0u32; m];
        let dsu = Dsu::new(self.vertex_count);
        self.enumerate_trees(0, dsu, &mut chosen, &mut out);
        MConvexSet::new(m, out)
    }

    fn enumerate_trees(
        &self,
        idx: usize,
        dsu: Dsu,
        chosen: &mut Vec<u32>,
        out: &mut Vec<Exponent>,
    ) {
        if dsu.components() == 1 {
            // Tree complete; the remaining edges are all excluded.
            out.push(Exponent(chosen.clone()));
            return;
        }
        if idx == self.edges.len() {
            return;
        }
        let (u, v) = self.edges[idx];
        // Contract: take the edge, unless it closes a cycle.
        if dsu.find(u) != dsu.find(v) {
            let mut with = dsu.clone();
            with.union(u, v);
            chosen[idx] = 1;
            self.enumerate_trees(idx + 1, with, chosen, out);
            chosen[idx] = 0;
        }
        // Delete: skip the edge.
        self.enumerate_trees(idx + 1, dsu, chosen, out);
    }

    /// Signed vertex-edge incidence matrix over the rationals. Self-loops
    /// become zero columns.
    pub fn incidence_matrix(&self) -> PrimeFieldMatrix {
        let rows = (0..self.vertex_count)
            .map(|w| {
                self.edges
                    .iter()
                    .map(|&(u, v)| {
                        if u == v {
                            0
                        } else if w == u {
                            1
                        } else if w == v {
                            -1
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect();
        PrimeFieldMatrix::new(0, rows).unwrap()
    }
}

#[derive(Debug, Clone)]
struct Dsu {
    parent: Vec<usize>,
    components: usize,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
            components: n,
        }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra] = rb;
            self.components -= 1;
        }
    }

    fn components(&self) -> usize {
        self.components
    }
}

/// Matrix over a prime field `GF(p)`, or over the rationals when `prime`
/// is zero. Entries are reduced modulo the prime on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeFieldMatrix {
    prime: u64,
    rows: Vec<Vec<i64>>,
}

impl PrimeFieldMatrix {
    pub fn new(prime: u64, mut rows: Vec<Vec<i64>>) -> Result<Self> {
        if prime != 0 && !is_prime(prime) {
            return Err(Error::NotPrime(prime));
        }
        if prime > (1 << 31) {
            return Err(Error::Invalid("modulus too large".into()));
        }
        let width = rows.first().map_or(0, |r| r.len());
        for row in &mut rows {
            if row.len() != width {
                return Err(Error::Invalid("ragged matrix rows".into()));
            }
            if prime != 0 {
                for x in row.iter_mut() {
                    *x = x.rem_euclid(prime as i64);
                }
            }
        }
        Ok(PrimeFieldMatrix { prime, rows })
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len())
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Exact rank (Gaussian elimination over the field).
    pub fn rank(&self) -> usize {
        let cols: Vec<usize> = (0..self.col_count()).collect();
        self.column_rank(&cols)
    }

    fn column_rank(&self, cols: &[usize]) -> usize {
        if self.prime != 0 {
            rank_mod_p(&self.rows, cols, self.prime)
        } else {
            rank_rational(&self.rows, cols)
        }
    }

    /// Indicator vectors of all full-rank column subsets of size
    /// `rank(self)`. A rank-zero matrix yields the single empty basis.
    pub fn column_matroid(&self) -> MConvexSet {
        let m = self.col_count();
        let r = self.rank();
        let mut out = Vec::new();
        let mut subset = Vec::with_capacity(r);
        self.enumerate_bases(0, r, &mut subset, &mut out);
        MConvexSet::new(m, out).expect("constant-weight indicator vectors")
    }

    fn enumerate_bases(
        &self,
        start: usize,
        r: usize,
        subset: &mut Vec<usize>,
        out: &mut Vec<Exponent>,
    ) {
        if subset.len() == r {
            if self.column_rank(subset) == r {
                let mut v = vec![0u32; self.col_count()];
                for &c in subset.iter() {
                    v[c] = 1;
                }
                out.push(Exponent(v));
            }
            return;
        }
        let remaining = r - subset.len();
        for c in start..=self.col_count().saturating_sub(remaining) {
            subset.push(c);
            self.enumerate_bases(c + 1, r, subset, out);
            subset.pop();
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn rank_mod_p(rows: &[Vec<i64>], cols: &[usize], p: u64) -> usize {
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|row| cols.iter().map(|&c| row[c] as u64 % p).collect())
        .collect();
    let (nr, nc) = (m.len(), cols.len());
    let mut rank = 0;
    for col in 0..nc {
        let pivot = (rank..nr).find(|&r| m[r][col] != 0);
        let Some(pr) = pivot else { continue };
        m.swap(rank, pr);
        let inv = mod_inverse(m[rank][col], p);
        for x in m[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..nr {
            if r != rank && m[r][col] != 0 {
                let factor = m[r][col];
                for c in 0..nc {
                    let sub = factor * m[rank][c] % p;
                    m[r][c] = (m[r][c] + p - sub) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p.
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn rank_rational(rows: &[Vec<i64>], cols: &[usize]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|row| {
            cols.iter()
                .map(|&c| BigRational::from_integer(row[c].into()))
                .collect()
        })
        .collect();
    let (nr, nc) = (m.len(), cols.len());
    let mut rank = 0;
    for col in 0..nc {
        let pivot = (rank..nr).find(|&r| !m[r][col].is_zero());
        let Some(pr) = pivot else { continue };
        m.swap(rank, pr);
        let inv = m[rank][col].recip();
        for x in m[rank].iter_mut() {
            *x *= &inv;
        }
        for r in 0..nr {
            if r != rank && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in 0..nc {
                    let sub = &factor * &m[rank][c];
                    m[r][c] -= sub;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// The seven nonzero vectors of `GF(2)^3` as columns, in binary counting
/// order. Their column matroid has 28 bases.
pub fn fano_matrix() -> PrimeFieldMatrix {
    let cols: Vec<[i64; 3]> = (1..8)
        .map(|k: i64| [(k >> 2) & 1, (k >> 1) & 1, k & 1])
        .collect();
    let rows = (0..3)
        .map(|r| cols.iter().map(|c| c[r]).collect())
        .collect();
    PrimeFieldMatrix::new(2, rows).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k3_has_three_trees() {
        let g = Graph::complete(3).unwrap();
        let j = g.spanning_trees().unwrap();
        assert_eq!(j.len(), 3);
        assert!(j.is_matroid());
    }

    #[test]
    fn k4_has_sixteen_trees() {
        let g = Graph::complete(4).unwrap();
        let j = g.spanning_trees().unwrap();
        assert_eq!(j.len(), 16);
        assert!(j.is_matroid());
    }

    #[test]
    fn tree_input_single_basis() {
        let g = Graph::new(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        let j = g.spanning_trees().unwrap();
        assert_eq!(j.len(), 1);
        assert!(j.contains(&Exponent(vec![1, 1, 1])));
    }

    #[test]
    fn disconnected_graph_rejected() {
        let g = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.spanning_trees(), Err(Error::Disconnected));
    }

    #[test]
    fn parallel_edges_and_loops() {
        // Two vertices joined by two parallel edges plus a self-loop.
        let g = Graph::new(2, vec![(0, 1), (0, 1), (1, 1)]).unwrap();
        let j = g.spanning_trees().unwrap();
        assert_eq!(j.len(), 2);
        assert!(j.contains(&Exponent(vec![1, 0, 0])));
        assert!(j.contains(&Exponent(vec![0, 1, 0])));
    }

    #[test]
    fn fano_has_28_bases() {
        let j = fano_matrix().column_matroid();
        assert_eq!(j.len(), 28);
        assert!(j.is_matroid());
    }

    #[test]
    fn fano_rank_function_values() {
        // In binary-counting column order, a triple is a line exactly when
        // the labels xor to zero; there are seven of them, and the rank
        // function is min(|A|, 3) except on the lines, where it drops to 2.
        let j = fano_matrix().column_matroid();
        let h = j.rank_function().unwrap();
        for i in 0..7 {
            assert_eq!(h.value_of(&[i]).unwrap(), 1);
        }
        assert_eq!(h.value_of(&[0, 1, 2, 3, 4, 5, 6]).unwrap(), 3);
        let mut lines = 0;
        for a in 0..7usize {
            for b in a + 1..7 {
                for c in b + 1..7 {
                    let rank = h.value_of(&[a, b, c]).unwrap();
                    if (a + 1) ^ (b + 1) ^ (c + 1) == 0 {
                        assert_eq!(rank, 2);
                        lines += 1;
                    } else {
                        assert_eq!(rank, 3);
                    }
                }
            }
        }
        assert_eq!(lines, 7); // 35 triples minus 28 bases
    }

    #[test]
    fn identity_gives_free_matroid() {
        let m =
            PrimeFieldMatrix::new(0, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        let j = m.column_matroid();
        assert_eq!(j.len(), 1);
        assert!(j.contains(&Exponent(vec![1, 1, 1])));
    }

    #[test]
    fn repeated_column_never_shares_a_basis() {
        let m = PrimeFieldMatrix::new(0, vec![vec![1, 1, 0], vec![0, 0, 1]]).unwrap();
        let j = m.column_matroid();
        assert_eq!(j.len(), 2);
        for b in j.points() {
            assert!(!(b.get(0) == 1 && b.get(1) == 1));
        }
    }

    #[test]
    fn zero_matrix_has_empty_basis() {
        let m = PrimeFieldMatrix::new(0, vec![vec![0, 0], vec![0, 0]]).unwrap();
        let j = m.column_matroid();
        assert_eq!(j.len(), 1);
        assert!(j.contains(&Exponent(vec![0, 0])));
    }

    #[test]
    fn incidence_matroid_matches_spanning_trees() {
        let g = Graph::complete(4).unwrap();
        assert_eq!(
            g.incidence_matrix().column_matroid(),
            g.spanning_trees().unwrap()
        );
    }

    #[test]
    fn bad_modulus_rejected() {
        assert_eq!(
            PrimeFieldMatrix::new(6, vec![vec![1]]),
            Err(Error::NotPrime(6))
        );
    }
}
