//! M-convex sets, polymatroid rank functions, and the cryptomorphism
//! between them.
//!
//! An M-convex set is a finite set of nonnegative integer vectors of equal
//! coordinate sum satisfying the symmetric basis exchange property. Rank
//! tables are stored in full (one entry per subset of the ground set), so
//! ground sets are capped at [`MAX_GROUND`] elements and every axiom check
//! is an exhaustive enumeration.

use std::collections::BTreeSet;

use num_rational::BigRational;

use crate::error::{AxiomViolation, Error, Result};
use crate::poly::{Exponent, HomogeneousPoly};

/// Hard cap on ground-set size for exhaustive rank tables.
pub const MAX_GROUND: usize = 20;

/// Finite set of lattice points of equal coordinate sum (candidate
/// polymatroid bases).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MConvexSet {
    ground_size: usize,
    points: BTreeSet<Exponent>,
}

/// Violation of the symmetric basis exchange property: for this `(alpha,
/// beta, i)` with `alpha_i > beta_i`, no index `j` works.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeFailure {
    pub alpha: Exponent,
    pub beta: Exponent,
    pub i: usize,
}

impl MConvexSet {
    /// Builds a candidate set, rejecting mixed coordinate sums.
    pub fn new<I>(ground_size: usize, points: I) -> Result<Self>
    where
        I: IntoIterator<Item = Exponent>,
    {
        let mut set = BTreeSet::new();
        let mut sum: Option<u32> = None;
        for p in points {
            if p.len() != ground_size {
                return Err(Error::DimensionMismatch {
                    expected: ground_size,
                    got: p.len(),
                });
            }
            match sum {
                None => sum = Some(p.total()),
                Some(s) if s != p.total() => return Err(Error::MixedCoordinateSums),
                _ => {}
            }
            set.insert(p);
        }
        Ok(MConvexSet {
            ground_size,
            points: set,
        })
    }

    pub fn empty(ground_size: usize) -> Self {
        MConvexSet {
            ground_size,
            points: BTreeSet::new(),
        }
    }

    /// The support of a homogeneous polynomial as a candidate set.
    pub fn from_support(f: &HomogeneousPoly) -> Self {
        MConvexSet {
            ground_size: f.num_vars(),
            points: f.support().into_iter().collect(),
        }
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Common coordinate sum of the points; `None` when empty.
    pub fn rank(&self) -> Option<u32> {
        self.points.iter().next().map(|p| p.total())
    }

    pub fn contains(&self, p: &Exponent) -> bool {
        self.points.contains(p)
    }

    pub fn points(&self) -> impl Iterator<Item = &Exponent> {
        self.points.iter()
    }

    /// First violation of the symmetric basis exchange property, scanning
    /// pairs in lexicographic order; `None` means the set is M-convex.
    /// The empty set is M-convex by convention (vacuous exchange).
    pub fn exchange_failure(&self) -> Option<ExchangeFailure> {
        for alpha in &self.points {
            for beta in &self.points {
                for i in 0..self.ground_size {
                    if alpha.get(i) <= beta.get(i) {
                        continue;
                    }
                    let ok = (0..self.ground_size).any(|j| {
                        alpha.get(j) < beta.get(j)
                            && self.points.contains(&exchange(alpha, i, j))
                            && self.points.contains(&exchange(beta, j, i))
                    });
                    if !ok {
                        return Some(ExchangeFailure {
                            alpha: alpha.clone(),
                            beta: beta.clone(),
                            i,
                        });
                    }
                }
            }
        }
        None
    }

    pub fn is_mconvex(&self) -> bool {
        self.exchange_failure().is_none()
    }

    /// True iff the set is a matroid basis set: nonempty, M-convex, and all
    /// zero-one vectors. The empty set is not a matroid, matching the
    /// convention that a matroid has at least one basis.
    pub fn is_matroid(&self) -> bool {
        !self.is_empty()
            && self.points.iter().all(|p| p.0.iter().all(|&e| e <= 1))
            && self.is_mconvex()
    }

    /// The rank function `h(A) = max over points of the A-coordinate sum`.
    /// Requires a nonempty M-convex input.
    pub fn rank_function(&self) -> Result<PolymatroidRank> {
        if self.is_empty() {
            return Err(Error::EmptySet);
        }
        if !self.is_mconvex() {
            return Err(Error::NotMConvex);
        }
        let n = self.ground_size;
        if n > MAX_GROUND {
            return Err(Error::GroundSetTooLarge {
                size: n,
                cap: MAX_GROUND,
            });
        }
        let mut values = vec![0u32; 1 << n];
        for (mask, slot) in values.iter_mut().enumerate() {
            let mut best = 0u32;
            for p in &self.points {
                let s: u32 = (0..n)
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| p.get(i))
                    .sum();
                best = best.max(s);
            }
            *slot = best;
        }
        Ok(PolymatroidRank {
            ground_size: n,
            values,
        })
    }

    /// The reflected set `mu - J`. Every point must be dominated by `mu`.
    pub fn dual(&self, mu: &Exponent) -> Result<MConvexSet> {
        if mu.len() != self.ground_size {
            return Err(Error::DimensionMismatch {
                expected: self.ground_size,
                got: mu.len(),
            });
        }
        let mut points = BTreeSet::new();
        for p in &self.points {
            let q = mu.checked_sub(p).ok_or(Error::NotDominating)?;
            points.insert(q);
        }
        Ok(MConvexSet {
            ground_size: self.ground_size,
            points,
        })
    }

    /// The generating polynomial `sum over points of x^alpha`, i.e. with
    /// normalized coefficients `p_alpha = alpha!` (all ones for matroids).
    pub fn generating_poly(&self) -> Result<HomogeneousPoly> {
        let rank = self.rank().ok_or(Error::EmptySet)?;
        HomogeneousPoly::from_terms(
            self.ground_size,
            rank,
            self.points
                .iter()
                .map(|p| (p.clone(), BigRational::from_integer(p.factorial()))),
        )
    }
}

fn exchange(p: &Exponent, from: usize, to: usize) -> Exponent {
    let mut v = p.0.clone();
    v[from] -= 1;
    v[to] += 1;
    Exponent(v)
}

/// Integer rank table on all subsets of a ground set, indexed by bitmask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolymatroidRank {
    ground_size: usize,
    values: Vec<u32>,
}

/// Outcome of the axiom check on a rank table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RankVerdict {
    /// All three axioms hold; `matroid` records whether `h(A) <= |A|`.
    Valid {
        matroid: bool,
    },
    Invalid(AxiomViolation),
}

impl PolymatroidRank {
    /// Builds from a full table of `2^ground_size` values (bitmask order).
    /// No axioms are checked here; use [`PolymatroidRank::verify`].
    pub fn new(ground_size: usize, values: Vec<u32>) -> Result<Self> {
        if ground_size > MAX_GROUND {
            return Err(Error::GroundSetTooLarge {
                size: ground_size,
                cap: MAX_GROUND,
            });
        }
        if values.len() != 1 << ground_size {
            return Err(Error::Invalid(format!(
                "rank table needs {} entries, got {}",
                1usize << ground_size,
                values.len()
            )));
        }
        Ok(PolymatroidRank {
            ground_size,
            values,
        })
    }

    /// Builds from a set function given on bitmasks.
    pub fn from_fn<F>(ground_size: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(u32) -> u32,
    {
        if ground_size > MAX_GROUND {
            return Err(Error::GroundSetTooLarge {
                size: ground_size,
                cap: MAX_GROUND,
            });
        }
        let values = (0..1u32 << ground_size).map(&mut f).collect();
        Ok(PolymatroidRank {
            ground_size,
            values,
        })
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    /// Value on a subset given as a bitmask.
    pub fn value(&self, mask: u32) -> u32 {
        self.values[mask as usize]
    }

    /// Value on a subset given as indices.
    pub fn value_of(&self, subset: &[usize]) -> Result<u32> {
        let mut mask = 0u32;
        for &i in subset {
            if i >= self.ground_size {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    bound: self.ground_size,
                });
            }
            mask |= 1 << i;
        }
        Ok(self.value(mask))
    }

    /// Checks normalization, monotonicity, and submodularity by exhaustive
    /// enumeration over subset pairs.
    pub fn verify(&self) -> RankVerdict {
        let n = self.ground_size;
        let full = 1usize << n;
        if self.values[0] != 0 {
            return RankVerdict::Invalid(AxiomViolation::Normalization);
        }
        for b in 0..full {
            let mut a = b;
            loop {
                if self.values[a] > self.values[b] {
                    return RankVerdict::Invalid(AxiomViolation::Monotonicity {
                        a: mask_to_indices(a, n),
                        b: mask_to_indices(b, n),
                    });
                }
                if a == 0 {
                    break;
                }
                a = (a - 1) & b;
            }
        }
        for a in 0..full {
            for b in 0..full {
                let lhs = self.values[a | b] as u64 + self.values[a & b] as u64;
                let rhs = self.values[a] as u64 + self.values[b] as u64;
                if lhs > rhs {
                    return RankVerdict::Invalid(AxiomViolation::Submodularity {
                        a: mask_to_indices(a, n),
                        b: mask_to_indices(b, n),
                    });
                }
            }
        }
        let matroid = (0..full).all(|a| self.values[a] <= a.count_ones());
        RankVerdict::Valid { matroid }
    }

    /// The base polytope lattice points
    /// `J_h = { a >= 0 : a_E = h(E), a_A <= h(A) for all A }`.
    /// Errors with the violated axiom if the table is not a polymatroid rank
    /// function.
    pub fn bases(&self) -> Result<MConvexSet> {
        if let RankVerdict::Invalid(v) = self.verify() {
            return Err(Error::RankAxiom(v));
        }
        let n = self.ground_size;
        let total = self.values[(1usize << n) - 1];
        let caps: Vec<u32> = (0..n).map(|i| self.value(1 << i)).collect();
        let mut out = Vec::new();
        let mut cur = vec![0u32; n];
        enumerate_bases(&mut cur, 0, total, &caps, self, &mut out);
        MConvexSet::new(n, out)
    }
}

fn enumerate_bases(
    cur: &mut Vec<u32>,
    pos: usize,
    rem: u32,
    caps: &[u32],
    h: &PolymatroidRank,
    out: &mut Vec<Exponent>,
) {
    let n = cur.len();
    if pos == n {
        if rem == 0 {
            let alpha = Exponent(cur.clone());
            let ok = (0..1usize << n).all(|mask| {
                let s: u32 = (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| cur[i]).sum();
                s <= h.values[mask]
            });
            if ok {
                out.push(alpha);
            }
        }
        return;
    }
    let hi = caps[pos].min(rem);
    for v in 0..=hi {
        cur[pos] = v;
        enumerate_bases(cur, pos + 1, rem - v, caps, h, out);
    }
    cur[pos] = 0;
}

fn mask_to_indices(mask: usize, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| mask >> i & 1 == 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn e(v: &[u32]) -> Exponent {
        Exponent(v.to_vec())
    }

    fn set(ground: usize, pts: &[&[u32]]) -> MConvexSet {
        MConvexSet::new(ground, pts.iter().map(|p| e(p))).unwrap()
    }

    #[test]
    fn exchange_property_basics() {
        assert!(set(2, &[&[1, 0], &[0, 1]]).is_mconvex());
        let bad = set(2, &[&[3, 0], &[0, 3]]);
        let fail = bad.exchange_failure().unwrap();
        // Pairs are scanned lexicographically, so the witness is the
        // reflected triple.
        assert_eq!(fail.alpha, e(&[0, 3]));
        assert_eq!(fail.beta, e(&[3, 0]));
        assert_eq!(fail.i, 1);
        assert!(MConvexSet::empty(3).is_mconvex());
        assert!(MConvexSet::new(2, [e(&[1, 0]), e(&[2, 0])]).is_err());
    }

    #[test]
    fn matroid_detection() {
        let u23 = set(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        assert!(u23.is_matroid());
        let poly = set(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        assert!(poly.is_mconvex());
        assert!(!poly.is_matroid());
        assert!(!MConvexSet::empty(2).is_matroid());
    }

    #[test]
    fn rank_function_of_u23() {
        let u23 = set(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        let h = u23.rank_function().unwrap();
        for mask in 0u32..8 {
            assert_eq!(h.value(mask), mask.count_ones().min(2));
        }
        assert!(matches!(h.verify(), RankVerdict::Valid { matroid: true }));
    }

    #[test]
    fn rank_function_of_single_point() {
        let j = set(3, &[&[4, 0, 0]]);
        let h = j.rank_function().unwrap();
        for mask in 0u32..8 {
            assert_eq!(h.value(mask), if mask & 1 == 1 { 4 } else { 0 });
        }
        assert!(matches!(h.verify(), RankVerdict::Valid { matroid: false }));
    }

    #[test]
    fn rank_function_rejects_bad_inputs() {
        assert_eq!(MConvexSet::empty(2).rank_function(), Err(Error::EmptySet));
        let bad = set(2, &[&[3, 0], &[0, 3]]);
        assert_eq!(bad.rank_function(), Err(Error::NotMConvex));
    }

    #[test]
    fn bases_from_rank_examples() {
        // h(A) = min(|A|, 2) on three elements gives the six.. three pairs.
        let h = PolymatroidRank::from_fn(3, |m| m.count_ones().min(2)).unwrap();
        let j = h.bases().unwrap();
        assert_eq!(j, set(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]));

        let zero = PolymatroidRank::from_fn(3, |_| 0).unwrap();
        assert_eq!(zero.bases().unwrap(), set(3, &[&[0, 0, 0]]));

        let free = PolymatroidRank::from_fn(3, |m| m.count_ones()).unwrap();
        assert_eq!(free.bases().unwrap(), set(3, &[&[1, 1, 1]]));
    }

    #[test]
    fn axiom_violations_detected() {
        // h(A) = |A|^2 fails submodularity.
        let sq = PolymatroidRank::from_fn(2, |m| m.count_ones() * m.count_ones()).unwrap();
        match sq.verify() {
            RankVerdict::Invalid(AxiomViolation::Submodularity { a, b }) => {
                assert_eq!(a, vec![0]);
                assert_eq!(b, vec![1]);
            }
            other => panic!("expected submodularity failure, got {other:?}"),
        }
        assert!(matches!(sq.bases(), Err(Error::RankAxiom(_))));

        let off = PolymatroidRank::new(1, vec![1, 1]).unwrap();
        assert_eq!(
            off.verify(),
            RankVerdict::Invalid(AxiomViolation::Normalization)
        );

        let drop = PolymatroidRank::new(1, vec![0, 0]).unwrap();
        assert!(matches!(drop.verify(), RankVerdict::Valid { .. }));
        let non_monotone = PolymatroidRank::new(2, vec![0, 2, 1, 1]).unwrap();
        assert!(matches!(
            non_monotone.verify(),
            RankVerdict::Invalid(AxiomViolation::Monotonicity { .. })
        ));
    }

    #[test]
    fn cryptomorphism_round_trip_small() {
        let u23 = set(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(u23.rank_function().unwrap().bases().unwrap(), u23);

        let h = PolymatroidRank::from_fn(3, |m| m.count_ones().min(2)).unwrap();
        assert_eq!(h.bases().unwrap().rank_function().unwrap(), h);
    }

    #[test]
    fn dual_examples() {
        let u23 = set(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        let mu = e(&[1, 1, 1]);
        let dual = u23.dual(&mu).unwrap();
        assert_eq!(dual, set(3, &[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]));
        assert_eq!(dual.dual(&mu).unwrap(), u23);

        let single = set(2, &[&[3, 0]]);
        assert_eq!(single.dual(&e(&[3, 3])).unwrap(), set(2, &[&[0, 3]]));
        assert_eq!(single.dual(&e(&[2, 2])), Err(Error::NotDominating));
    }

    #[test]
    fn generating_poly_normalization() {
        let j = set(2, &[&[2, 1]]);
        let f = j.generating_poly().unwrap();
        assert_eq!(f.normalized_coeff(&e(&[2, 1])).unwrap(), rat(2));

        let u23 = set(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        let g = u23.generating_poly().unwrap();
        assert_eq!(g.num_terms(), 3);
        assert!(g.terms().all(|(_, p)| *p == rat(1)));
        assert_eq!(MConvexSet::from_support(&g), u23);

        assert!(MConvexSet::empty(2).generating_poly().is_err());
    }
}
