//! Exact convex-polytope engine: Minkowski sums, hull volumes, coordinate
//! projections, mixed volumes, and volume polynomials.
//!
//! Volumes are computed without floating point. Vertices are cleared to a
//! common integer grid, facets are found by exhaustive supporting-hyperplane
//! enumeration over vertex `d`-subsets (desk scale), and the hull is
//! fan-triangulated from face barycenters with exact determinant volumes.
//! A second, combinatorially different triangulation (vertex fan from the
//! lexicographic minimum in placing order) is exposed as a cross-check.
//!
//! Mixed volumes come from inclusion-exclusion over sub-multisets of the
//! argument multiset, cached by multiplicity vector.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{simplex, Exponent, HomogeneousPoly};
use crate::rat::{binomial, factorial};

/// Practical cap on the ambient dimension of exact volume computations.
pub const MAX_DIM: usize = 6;

/// Convex body given by an exact rational vertex list (not required to be
/// minimal).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPolytope {
    dim: usize,
    vertices: Vec<Vec<BigRational>>,
}

/// Which coordinates a projection keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProjectionMode {
    /// Keep exactly the listed coordinates.
    Keep,
    /// Drop the listed coordinates, keeping the complement.
    Drop,
}

impl RationalPolytope {
    pub fn new(dim: usize, vertices: Vec<Vec<BigRational>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Invalid("ambient dimension must be positive".into()));
        }
        if vertices.is_empty() {
            return Err(Error::EmptySet);
        }
        for v in &vertices {
            if v.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: v.len(),
                });
            }
        }
        Ok(RationalPolytope { dim, vertices })
    }

    /// Single point.
    pub fn point(coords: Vec<BigRational>) -> Result<Self> {
        let dim = coords.len();
        RationalPolytope::new(dim, vec![coords])
    }

    /// Unit segment from the origin to `e_axis`.
    pub fn unit_segment(dim: usize, axis: usize) -> Result<Self> {
        if axis >= dim {
            return Err(Error::IndexOutOfRange {
                index: axis,
                bound: dim,
            });
        }
        let zero = vec![BigRational::zero(); dim];
        let mut e = zero.clone();
        e[axis] = BigRational::one();
        RationalPolytope::new(dim, vec![zero, e])
    }

    /// Unit cube `[0,1]^dim`.
    pub fn unit_cube(dim: usize) -> Result<Self> {
        if dim == 0 || dim > 16 {
            return Err(Error::Invalid("bad cube dimension".into()));
        }
        let verts = (0..1usize << dim)
            .map(|mask| {
                (0..dim)
                    .map(|i| {
                        if mask >> i & 1 == 1 {
                            BigRational::one()
                        } else {
                            BigRational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        RationalPolytope::new(dim, verts)
    }

    /// Standard simplex `conv(0, e_1, ..., e_dim)`.
    pub fn standard_simplex(dim: usize) -> Result<Self> {
        let mut verts = vec![vec![BigRational::zero(); dim]];
        for i in 0..dim {
            let mut e = vec![BigRational::zero(); dim];
            e[i] = BigRational::one();
            verts.push(e);
        }
        RationalPolytope::new(dim, verts)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vec<BigRational>] {
        &self.vertices
    }

    /// Sorted vertex list with duplicates removed.
    pub fn dedup(&self) -> Self {
        let mut v = self.vertices.clone();
        v.sort();
        v.dedup();
        RationalPolytope {
            dim: self.dim,
            vertices: v,
        }
    }

    /// Minkowski sum: all pairwise vertex sums, deduplicated (hull reduction
    /// is left to the volume routines).
    pub fn minkowski_sum(&self, other: &Self) -> Result<Self> {
        if other.dim != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        let mut verts = Vec::with_capacity(self.vertices.len() * other.vertices.len());
        for a in &self.vertices {
            for b in &other.vertices {
                verts.push(a.iter().zip(b).map(|(x, y)| x + y).collect());
            }
        }
        Ok(RationalPolytope {
            dim: self.dim,
            vertices: verts,
        }
        .dedup())
    }

    /// Scales every vertex by a nonnegative rational; zero collapses to the
    /// origin point.
    pub fn scale(&self, lambda: &BigRational) -> Result<Self> {
        if lambda.is_negative() {
            return Err(Error::NegativeScale);
        }
        if lambda.is_zero() {
            return RationalPolytope::new(self.dim, vec![vec![BigRational::zero(); self.dim]]);
        }
        Ok(RationalPolytope {
            dim: self.dim,
            vertices: self
                .vertices
                .iter()
                .map(|v| v.iter().map(|x| x * lambda).collect())
                .collect(),
        })
    }

    /// Coordinate projection of the vertex list. Indices are 0-based,
    /// distinct, and in range; `Drop` keeps the complement in order.
    pub fn project(&self, coords: &[usize], mode: ProjectionMode) -> Result<Self> {
        let mut seen = vec![false; self.dim];
        for &c in coords {
            if c >= self.dim || seen[c] {
                return Err(Error::BadProjection);
            }
            seen[c] = true;
        }
        let kept: Vec<usize> = match mode {
            ProjectionMode::Keep => coords.to_vec(),
            ProjectionMode::Drop => (0..self.dim).filter(|i| !seen[*i]).collect(),
        };
        if kept.is_empty() {
            return Err(Error::BadProjection);
        }
        let verts = self
            .vertices
            .iter()
            .map(|v| kept.iter().map(|&i| v[i].clone()).collect())
            .collect();
        RationalPolytope::new(kept.len(), verts).map(|p| p.dedup())
    }

    /// Exact volume of the convex hull; zero when the hull is
    /// lower-dimensional. Primary route: barycenter fan over the facet
    /// complex.
    pub fn hull_volume(&self) -> Result<BigRational> {
        self.volume_with(FanRule::Barycenter)
    }

    /// The same volume through the second triangulation (vertex fan from
    /// the lexicographically first vertex). Cross-check route.
    pub fn hull_volume_alt(&self) -> Result<BigRational> {
        self.volume_with(FanRule::LexMin)
    }

    fn volume_with(&self, rule: FanRule) -> Result<BigRational> {
        if self.dim > MAX_DIM {
            return Err(Error::DimensionCap {
                dim: self.dim,
                cap: MAX_DIM,
            });
        }
        let d = self.dim;
        let deduped = self.dedup();
        let verts = &deduped.vertices;
        if verts.len() <= d {
            return Ok(BigRational::zero());
        }
        // Clear denominators onto a common integer grid.
        let mut lcm = BigInt::one();
        for v in verts {
            for x in v {
                lcm = lcm.lcm(x.denom());
            }
        }
        let mut grid: Vec<Vec<BigInt>> = verts
            .iter()
            .map(|v| v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect())
            .collect();
        drop_midpoints(&mut grid);
        if grid.len() <= d {
            return Ok(BigRational::zero());
        }
        if affine_rank(&grid) < d {
            return Ok(BigRational::zero());
        }
        let top = Cell {
            global: (0..grid.len()).collect(),
            local: grid.clone(),
        };
        let mut cells: Vec<Vec<QPoint>> = Vec::new();
        collect_fan(&top, d, rule, &grid, &mut cells);
        let mut total = BigRational::zero();
        for s in &cells {
            total += simplex_volume_det(s, d);
        }
        let mut scale = BigRational::from_integer(factorial(d as u32));
        for _ in 0..d {
            scale *= BigRational::from_integer(lcm.clone());
        }
        Ok(total / scale)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum FanRule {
    Barycenter,
    LexMin,
}

/// Workspace for one face of the recursion: the indices of its points in
/// the deduplicated vertex list, plus integer coordinates of those points
/// in an affine frame of the face's span.
struct Cell {
    global: Vec<usize>,
    local: Vec<Vec<BigInt>>,
}

/// Ambient rational point stored as integer numerators over one denominator.
#[derive(Debug, Clone)]
struct QPoint {
    num: Vec<BigInt>,
    den: BigInt,
}

impl QPoint {
    fn vertex(coords: &[BigInt]) -> Self {
        QPoint {
            num: coords.to_vec(),
            den: BigInt::one(),
        }
    }

    fn barycenter(grid: &[Vec<BigInt>], idx: &[usize]) -> Self {
        let d = grid[0].len();
        let mut num = vec![BigInt::zero(); d];
        for &i in idx {
            for (a, b) in num.iter_mut().zip(&grid[i]) {
                *a += b;
            }
        }
        QPoint {
            num,
            den: BigInt::from(idx.len()),
        }
    }
}

/// Recursively triangulates a `k`-face into `k`-simplices of ambient points,
/// coning each facet's triangulation from the face apex chosen by `rule`.
fn collect_fan(
    cell: &Cell,
    k: usize,
    rule: FanRule,
    grid: &[Vec<BigInt>],
    out: &mut Vec<Vec<QPoint>>,
) {
    if k == 1 {
        // The face is a segment in local coordinates: take its two ends.
        let mut lo = 0usize;
        let mut hi = 0usize;
        for (i, p) in cell.local.iter().enumerate() {
            if p[0] < cell.local[lo][0] {
                lo = i;
            }
            if p[0] > cell.local[hi][0] {
                hi = i;
            }
        }
        out.push(vec![
            QPoint::vertex(&grid[cell.global[lo]]),
            QPoint::vertex(&grid[cell.global[hi]]),
        ]);
        return;
    }
    let facets = facet_sets(&cell.local, k);
    let (apex, apex_pos) = match rule {
        FanRule::Barycenter => (QPoint::barycenter(grid, &cell.global), None),
        FanRule::LexMin => {
            // Positions map to ascending global indices and the vertex list
            // is lexicographically sorted, so position 0 is the lex minimum.
            (QPoint::vertex(&grid[cell.global[0]]), Some(0usize))
        }
    };
    for facet in &facets {
        if let Some(pos) = apex_pos {
            if facet.contains(&pos) {
                continue; // zero-height cone
            }
        }
        let sub = Cell {
            global: facet.iter().map(|&p| cell.global[p]).collect(),
            local: local_affine_coords(&facet.iter().map(|&p| cell.local[p].clone()).collect_vec()),
        };
        let mut sub_simplices = Vec::new();
        collect_fan(&sub, k - 1, rule, grid, &mut sub_simplices);
        for mut s in sub_simplices {
            s.push(apex.clone());
            out.push(s);
        }
    }
}

/// `|det(v_1 - v_0, ..., v_d - v_0)|` for a simplex of rational points,
/// as an exact rational.
fn simplex_volume_det(s: &[QPoint], d: usize) -> BigRational {
    debug_assert_eq!(s.len(), d + 1);
    let v0 = &s[0];
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(d);
    let mut den = BigRational::one();
    for v in &s[1..] {
        // v - v0 = (v.num * v0.den - v0.num * v.den) / (v.den * v0.den)
        let row = v
            .num
            .iter()
            .zip(&v0.num)
            .map(|(a, b)| a * &v0.den - b * &v.den)
            .collect();
        rows.push(row);
        den *= BigRational::from_integer(&v.den * &v0.den);
    }
    let det = det_bareiss(rows);
    BigRational::from_integer(det.abs()) / den
}

/// Supporting-hyperplane facet enumeration over point `k`-subsets. Returns
/// the facets' point-position sets (ascending), deterministically ordered.
fn facet_sets(pts: &[Vec<BigInt>], k: usize) -> Vec<Vec<usize>> {
    if let Some(small) = try_i128(pts, k) {
        facet_sets_generic::<i128>(&small, k)
    } else {
        facet_sets_generic::<BigInt>(pts, k)
    }
}

/// i128 fast path is safe when a Hadamard-style bound on every minor and
/// dot product stays far below `i128::MAX`.
fn try_i128(pts: &[Vec<BigInt>], k: usize) -> Option<Vec<Vec<i128>>> {
    let mut max = BigInt::one();
    for p in pts {
        for x in p {
            let a = x.abs();
            if a > max {
                max = a;
            }
        }
    }
    let mut bound = factorial(k as u32 + 1) * BigInt::from(16 * (k + 2));
    for _ in 0..k {
        bound *= &max;
    }
    if bound < BigInt::from(i128::MAX / 4) {
        Some(
            pts.iter()
                .map(|p| p.iter().map(|x| i128::try_from(x).unwrap()).collect())
                .collect(),
        )
    } else {
        None
    }
}

fn facet_sets_generic<T>(pts: &[Vec<T>], k: usize) -> Vec<Vec<usize>>
where
    T: Integer + Signed + Clone + std::fmt::Debug,
{
    let m = pts.len();
    let mut facets: BTreeMap<(Vec<T>, T), Vec<usize>> = BTreeMap::new();
    for subset in (0..m).combinations(k) {
        let base = &pts[subset[0]];
        let rows: Vec<Vec<T>> = subset[1..]
            .iter()
            .map(|&i| {
                pts[i]
                    .iter()
                    .zip(base)
                    .map(|(a, b)| a.clone() - b.clone())
                    .collect()
            })
            .collect();
        let Some(mut normal) = cross_product(&rows, k) else {
            continue; // affinely dependent subset
        };
        let mut offset = dot(&normal, base);
        // Supporting test with early exit on mixed signs.
        let mut saw_pos = false;
        let mut saw_neg = false;
        for p in pts {
            let side = dot(&normal, p) - offset.clone();
            if side.is_positive() {
                saw_pos = true;
            } else if side.is_negative() {
                saw_neg = true;
            }
            if saw_pos && saw_neg {
                break;
            }
        }
        if saw_pos && saw_neg {
            continue;
        }
        if saw_pos {
            // Flip to the outward form: all points satisfy n.p <= b.
            for x in normal.iter_mut() {
                *x = -x.clone();
            }
            offset = -offset;
        }
        // Primitive canonical key.
        let mut g = offset.abs();
        for x in &normal {
            g = g.gcd(x);
        }
        if !g.is_zero() && !g.is_one() {
            for x in normal.iter_mut() {
                *x = x.clone() / g.clone();
            }
            offset = offset / g.clone();
        }
        facets
            .entry((normal.clone(), offset.clone()))
            .or_insert_with(|| {
                (0..m)
                    .filter(|&i| dot(&normal, &pts[i]) == offset)
                    .collect()
            });
    }
    facets.into_values().collect()
}

fn dot<T>(a: &[T], b: &[T]) -> T
where
    T: Integer + Clone,
{
    let mut acc = T::zero();
    for (x, y) in a.iter().zip(b) {
        acc = acc + x.clone() * y.clone();
    }
    acc
}

/// Generalized cross product: the normal of the hyperplane spanned by
/// `k - 1` row vectors in `k` coordinates, via signed maximal minors.
/// `None` when the rows are linearly dependent (zero normal).
fn cross_product<T>(rows: &[Vec<T>], k: usize) -> Option<Vec<T>>
where
    T: Integer + Signed + Clone,
{
    debug_assert_eq!(rows.len(), k - 1);
    let mut normal = Vec::with_capacity(k);
    let mut nonzero = false;
    for c in 0..k {
        let minor: Vec<Vec<T>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != c)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let mut v = det_bareiss(minor);
        if c % 2 == 1 {
            v = -v;
        }
        nonzero |= !v.is_zero();
        normal.push(v);
    }
    nonzero.then_some(normal)
}

/// Fraction-free determinant (Bareiss) with row pivoting.
fn det_bareiss<T>(mut m: Vec<Vec<T>>) -> T
where
    T: Integer + Signed + Clone,
{
    let n = m.len();
    if n == 0 {
        return T::one();
    }
    let mut sign = false;
    let mut prev = T::one();
    for c in 0..n {
        let Some(pivot) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return T::zero();
        };
        if pivot != c {
            m.swap(pivot, c);
            sign = !sign;
        }
        for r in c + 1..n {
            for j in c + 1..n {
                let t = m[c][c].clone() * m[r][j].clone() - m[r][c].clone() * m[c][j].clone();
                m[r][j] = t / prev.clone();
            }
            m[r][c] = T::zero();
        }
        prev = m[c][c].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign {
        -det
    } else {
        det
    }
}

/// Rational row-echelon workspace used for rank and affine coordinates.
struct Rref {
    // (pivot column, normalized row)
    rows: Vec<(usize, Vec<BigRational>)>,
}

impl Rref {
    fn new() -> Self {
        Rref { rows: Vec::new() }
    }

    fn reduce(&self, v: &[BigRational]) -> Vec<BigRational> {
        let mut w = v.to_vec();
        for (piv, row) in &self.rows {
            let c = w[*piv].clone();
            if c.is_zero() {
                continue;
            }
            for (x, y) in w.iter_mut().zip(row) {
                *x -= &c * y;
            }
        }
        w
    }

    /// Adds the vector to the span; returns true when it was independent.
    fn try_add(&mut self, v: &[BigRational]) -> bool {
        let w = self.reduce(v);
        let Some(piv) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[piv].recip();
        let row: Vec<BigRational> = w.iter().map(|x| x * &inv).collect();
        self.rows.push((piv, row));
        true
    }

    /// Coordinates of `v` with respect to the echelon rows; `None` when `v`
    /// is outside their span.
    fn coords(&self, v: &[BigRational]) -> Option<Vec<BigRational>> {
        let mut w = v.to_vec();
        let mut coords = Vec::with_capacity(self.rows.len());
        for (piv, row) in &self.rows {
            let c = w[*piv].clone();
            if !c.is_zero() {
                for (x, y) in w.iter_mut().zip(row) {
                    *x -= &c * y;
                }
            }
            coords.push(c);
        }
        w.iter().all(|x| x.is_zero()).then_some(coords)
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// Removes points that are the midpoint of two other listed points, to a
/// fixpoint. Such points are never extreme, so the hull and its volume are
/// unchanged; Minkowski sums of lattice bodies shed many points this way
/// before the subset enumeration.
fn drop_midpoints(pts: &mut Vec<Vec<BigInt>>) {
    loop {
        let set: std::collections::BTreeSet<Vec<BigInt>> = pts.iter().cloned().collect();
        let doubled: Vec<Vec<BigInt>> = pts
            .iter()
            .map(|p| p.iter().map(|x| x * 2).collect())
            .collect();
        let mut removed = false;
        let mut keep = Vec::with_capacity(pts.len());
        for (i, p) in pts.iter().enumerate() {
            let mid = set.iter().any(|q| {
                if q == p {
                    return false;
                }
                let other: Vec<BigInt> = doubled[i].iter().zip(q).map(|(d, x)| d - x).collect();
                other != *p && other != *q && set.contains(&other)
            });
            if mid {
                removed = true;
            } else {
                keep.push(p.clone());
            }
        }
        *pts = keep;
        if !removed {
            return;
        }
    }
}

fn to_rat(v: &[BigInt]) -> Vec<BigRational> {
    v.iter()
        .map(|x| BigRational::from_integer(x.clone()))
        .collect()
}

/// Rank of the affine span of integer points.
fn affine_rank(pts: &[Vec<BigInt>]) -> usize {
    let mut rref = Rref::new();
    let base = to_rat(&pts[0]);
    for p in &pts[1..] {
        let diff: Vec<BigRational> = to_rat(p).iter().zip(&base).map(|(a, b)| a - b).collect();
        rref.try_add(&diff);
    }
    rref.rank()
}

/// Integer coordinates of points (spanning an affine hyperplane of their
/// `k`-dimensional frame) in a `(k-1)`-dimensional affine frame.
fn local_affine_coords(pts: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let base = to_rat(&pts[0]);
    let diffs: Vec<Vec<BigRational>> = pts
        .iter()
        .map(|p| to_rat(p).iter().zip(&base).map(|(a, b)| a - b).collect())
        .collect();
    let mut rref = Rref::new();
    for d in &diffs {
        rref.try_add(d);
    }
    let coords: Vec<Vec<BigRational>> = diffs
        .iter()
        .map(|d| rref.coords(d).expect("point in its own affine span"))
        .collect();
    // Re-integerize for the next enumeration level.
    let mut lcm = BigInt::one();
    for c in &coords {
        for x in c {
            lcm = lcm.lcm(x.denom());
        }
    }
    coords
        .iter()
        .map(|c| c.iter().map(|x| x.numer() * (&lcm / x.denom())).collect())
        .collect()
}

/// Ordered collection of convex bodies sharing one ambient space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BodyCollection {
    dim: usize,
    bodies: Vec<RationalPolytope>,
}

impl BodyCollection {
    pub fn new(dim: usize, bodies: Vec<RationalPolytope>) -> Result<Self> {
        if bodies.is_empty() {
            return Err(Error::EmptySet);
        }
        for b in &bodies {
            if b.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: b.dim(),
                });
            }
        }
        Ok(BodyCollection { dim, bodies })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bodies(&self) -> &[RationalPolytope] {
        &self.bodies
    }

    /// Mixed volume of the multiset selecting body `i` with multiplicity
    /// `alpha_i`; the multiplicities must sum to the ambient dimension.
    pub fn mixed_volume(&self, alpha: &Exponent) -> Result<BigRational> {
        let mut cache = BTreeMap::new();
        self.mixed_volume_cached(alpha, &mut cache)
    }

    fn mixed_volume_cached(
        &self,
        alpha: &Exponent,
        cache: &mut BTreeMap<Vec<u32>, BigRational>,
    ) -> Result<BigRational> {
        if alpha.len() != self.bodies.len() {
            return Err(Error::DimensionMismatch {
                expected: self.bodies.len(),
                got: alpha.len(),
            });
        }
        if alpha.total() as usize != self.dim {
            return Err(Error::BadMultiplicity {
                sum: alpha.total(),
                dim: self.dim,
            });
        }
        let d = self.dim;
        let n = self.bodies.len();
        // Inclusion-exclusion over sub-multisets, grouped by multiplicity
        // vector m <= alpha:
        //   d! MV(alpha) = sum_m (-1)^(d-|m|) prod_i C(alpha_i, m_i) vol(sum_i m_i K_i)
        let mut acc = BigRational::zero();
        let mut m = vec![0u32; n];
        loop {
            // advance odometer
            let mut pos = 0;
            loop {
                if pos == n {
                    // done: return accumulated sum
                    return Ok(acc / BigRational::from_integer(factorial(d as u32)));
                }
                if m[pos] < alpha.get(pos) {
                    m[pos] += 1;
                    break;
                }
                m[pos] = 0;
                pos += 1;
            }
            let weight: BigInt = m
                .iter()
                .zip(&alpha.0)
                .map(|(&mi, &ai)| binomial(ai, mi))
                .product();
            let vol = match cache.get(&m) {
                Some(v) => v.clone(),
                None => {
                    let v = self.summed_volume(&m)?;
                    cache.insert(m.clone(), v.clone());
                    v
                }
            };
            let total: u32 = m.iter().sum();
            let signed = if (d as u32 - total) % 2 == 1 {
                -BigRational::from_integer(weight)
            } else {
                BigRational::from_integer(weight)
            };
            acc += signed * vol;
        }
    }

    /// `vol(m_1 K_1 + ... + m_n K_n)` for a nonzero multiplicity vector.
    fn summed_volume(&self, m: &[u32]) -> Result<BigRational> {
        let mut sum: Option<RationalPolytope> = None;
        for (body, &mult) in self.bodies.iter().zip(m) {
            if mult == 0 {
                continue;
            }
            let scaled = body.scale(&BigRational::from_integer(BigInt::from(mult)))?;
            sum = Some(match sum {
                None => scaled,
                Some(acc) => acc.minkowski_sum(&scaled)?,
            });
        }
        sum.expect("nonzero multiplicity vector").hull_volume()
    }

    /// The volume polynomial: degree-`dim` polynomial in one variable per
    /// body whose normalized coefficients are the mixed volumes.
    pub fn volume_polynomial(&self) -> Result<HomogeneousPoly> {
        let n = self.bodies.len();
        let d = self.dim as u32;
        let mut cache = BTreeMap::new();
        let mut terms = Vec::new();
        for alpha in simplex(n, d) {
            let mv = self.mixed_volume_cached(&alpha, &mut cache)?;
            terms.push((alpha, mv));
        }
        HomogeneousPoly::from_terms(n, d, terms)
    }
}
