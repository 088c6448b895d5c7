//! Acceptance suite: one test per release criterion, each printing a
//! PASS line and enforcing its stated runtime budget. Expected values that
//! are not forced by construction were computed with independent oracles
//! (hand expansion, brute-force enumeration, or a separate hull code) and
//! are frozen here.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use volpoly::lorentzian::FailureKind;
use volpoly::poly::{simplex, Exponent, HomogeneousPoly};
use volpoly::rat::{factorial, rat, ratio};
use volpoly::{
    bivariate_lorentzian, certify, elementary_symmetric, fano_matrix, hessian, kostka, kt_scan,
    normalized_schur, one_positive_condition, principal_4x4_condition, rkt_scan,
    t2_plucker_condition, triangle_condition, BodyCollection, Graph, Inertia, MConvexSet,
    PairVector, PolymatroidRank, ProjectionMode, RationalPolytope, SymMatrix, TriangleVerdict,
    YoungDiagram,
};

fn e(v: &[u32]) -> Exponent {
    Exponent(v.to_vec())
}

fn pass(n: u32, name: &str, started: Instant, budget: Option<Duration>) {
    let elapsed = started.elapsed();
    if let Some(cap) = budget {
        assert!(
            elapsed < cap,
            "criterion {n} exceeded its runtime budget: {elapsed:?} >= {cap:?}"
        );
    }
    println!("criterion {n} ({name}): PASS [{elapsed:?}]");
}

/// The three-variable Lorentzian cubic fixture in monomial form
/// `14 x1^3 + 6 x1^2 x2 + 24 x1^2 x3 + 12 x1 x2 x3 + 6 x1 x3^2 + 3 x2 x3^2`.
fn cubic_fixture() -> HomogeneousPoly {
    HomogeneousPoly::from_monomials(
        3,
        3,
        [
            (e(&[3, 0, 0]), rat(14)),
            (e(&[2, 1, 0]), rat(6)),
            (e(&[2, 0, 1]), rat(24)),
            (e(&[1, 1, 1]), rat(12)),
            (e(&[1, 0, 2]), rat(6)),
            (e(&[0, 1, 2]), rat(3)),
        ],
    )
    .unwrap()
}

#[test]
fn criterion_01_inertia_fixture() {
    let started = Instant::now();
    // Pair matrix with one heavy entry; eigenvalues 3 +- sqrt(7), -1, -1, -4.
    let m = SymMatrix::from_fn(5, |i, j| {
        if i == j {
            rat(0)
        } else if (i, j) == (0, 1) {
            rat(4)
        } else {
            rat(1)
        }
    })
    .unwrap();
    assert_eq!(
        m.inertia(),
        Inertia {
            pos: 2,
            zero: 0,
            neg: 3
        }
    );
    pass(1, "inertia fixture", started, Some(Duration::from_secs(1)));
}

#[test]
fn criterion_02_lorentzian_fixtures() {
    let started = Instant::now();

    // The cubic fixture is accepted and its three partial-derivative
    // Hessians are reproduced entry for entry.
    let f = cubic_fixture();
    assert!(certify(&f).accepted());
    let expect: [[[i64; 3]; 3]; 3] = [
        [[84, 12, 48], [12, 0, 12], [48, 12, 12]],
        [[12, 0, 12], [0, 0, 0], [12, 0, 6]],
        [[48, 12, 12], [12, 0, 6], [12, 6, 0]],
    ];
    for i in 0..3 {
        let h = hessian(&f.partial(i).unwrap()).unwrap();
        for r in 0..3 {
            for c in 0..3 {
                assert_eq!(*h.get(r, c), rat(expect[i][r][c]));
            }
        }
    }

    // Both cubic-power fixtures are rejected with support witnesses.
    let cube_sum =
        HomogeneousPoly::from_monomials(2, 3, [(e(&[3, 0]), rat(1)), (e(&[0, 3]), rat(1))])
            .unwrap();
    let mixed =
        HomogeneousPoly::from_monomials(3, 3, [(e(&[2, 0, 1]), rat(1)), (e(&[0, 3, 0]), rat(1))])
            .unwrap();
    for g in [&cube_sum, &mixed] {
        let verdict = certify(g);
        assert!(matches!(
            verdict.failure().unwrap().kind,
            FailureKind::SupportNotMConvex(_)
        ));
    }

    // Elementary symmetric polynomials: accepted for every d <= n <= 6, and
    // each nonzero quadratic derivative has Hessian inertia (1, d-2, n-d+1)
    // with the positive eigenvalue exactly n-d+1 (exact factor check).
    for n in 1..=6usize {
        for d in 1..=n as u32 {
            let f = elementary_symmetric(n, d).unwrap();
            assert!(certify(&f).accepted(), "e_{d} in {n} vars rejected");
            if d < 2 {
                continue;
            }
            let lambda = rat((n as i64) - (d as i64) + 1);
            let mut seen = 0;
            for delta in simplex(n, d - 2) {
                let q = f.derivative(&delta).unwrap();
                if q.is_zero() {
                    continue;
                }
                seen += 1;
                let h = hessian(&q).unwrap();
                assert_eq!(
                    h.inertia(),
                    Inertia {
                        pos: 1,
                        zero: d as usize - 2,
                        neg: n - d as usize + 1
                    }
                );
                assert_eq!(h.charpoly_at(&lambda), rat(0));
            }
            assert!(seen > 0);
        }
    }

    pass(
        2,
        "certification fixtures",
        started,
        Some(Duration::from_secs(5)),
    );
}

#[test]
fn criterion_03_bivariate_equivalence() {
    let started = Instant::now();
    let mut rng = StdRng::seed_from_u64(303);
    for trial in 0..10_000 {
        let d = rng.gen_range(0..=8u32);
        let f = HomogeneousPoly::from_terms(
            2,
            d,
            (0..=d).map(|a| (e(&[a, d - a]), rat(rng.gen_range(0..=9)))),
        )
        .unwrap();
        let recursive = certify(&f).accepted();
        let direct = bivariate_lorentzian(&f).unwrap();
        assert_eq!(recursive, direct, "discrepancy at trial {trial}: {f:?}");
    }
    pass(3, "bivariate equivalence", started, None);
}

/// The shared random corpus for the volume-engine criteria: collections of
/// up to three bodies in dimension up to four, vertex coordinates 0..=3.
fn volume_corpus(seed: u64) -> Vec<BodyCollection> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..100)
        .map(|_| {
            let dim = rng.gen_range(2..=4usize);
            let n = rng.gen_range(1..=3usize);
            let bodies: Vec<RationalPolytope> = (0..n)
                .map(|_| {
                    let nv = rng.gen_range(2..=4);
                    let verts = (0..nv)
                        .map(|_| (0..dim).map(|_| rat(rng.gen_range(0..=3))).collect())
                        .collect();
                    RationalPolytope::new(dim, verts).unwrap()
                })
                .collect();
            BodyCollection::new(dim, bodies).unwrap()
        })
        .collect()
}

#[test]
fn criterion_04_volume_engine() {
    let started = Instant::now();
    let mut rng = StdRng::seed_from_u64(404);
    for coll in volume_corpus(4040) {
        let d = coll.dim();
        let n = coll.bodies().len();
        let f = coll.volume_polynomial().unwrap();

        // Exact polynomiality: eval(f, x) * d! equals the direct volume.
        let x: Vec<BigRational> = (0..n)
            .map(|_| ratio(rng.gen_range(0..=6), rng.gen_range(1..=3)))
            .collect();
        let mut sum: Option<RationalPolytope> = None;
        for (b, xi) in coll.bodies().iter().zip(&x) {
            let s = b.scale(xi).unwrap();
            sum = Some(match sum {
                None => s,
                Some(acc) => acc.minkowski_sum(&s).unwrap(),
            });
        }
        let direct = sum.unwrap().hull_volume().unwrap();
        assert_eq!(
            f.eval(&x).unwrap() * BigRational::from_integer(factorial(d as u32)),
            direct
        );

        // Mixed-volume symmetry under reordering the bodies.
        if n >= 2 && d <= 3 {
            let alpha = simplex(n, d as u32)
                .into_iter()
                .find(|a| (0..n).all(|i| a.get(i) > 0) || n > d)
                .unwrap_or_else(|| e(&[d as u32]));
            let mv = coll.mixed_volume(&alpha).unwrap();
            let mut rev_bodies = coll.bodies().to_vec();
            rev_bodies.reverse();
            let mut rev_alpha = alpha.0.clone();
            rev_alpha.reverse();
            let mv_rev = BodyCollection::new(d, rev_bodies)
                .unwrap()
                .mixed_volume(&Exponent(rev_alpha))
                .unwrap();
            assert_eq!(mv, mv_rev);
        }

        // Membership and both coefficient scans.
        assert!(certify(&f).accepted());
        assert!(kt_scan(&f).is_empty());
        if n >= 3 {
            assert!(rkt_scan(&f).unwrap().is_empty());
        }
    }

    // Multilinearity in the first argument, exact.
    for _ in 0..10 {
        let dim = rng.gen_range(2..=3usize);
        let mk = |rng: &mut StdRng| {
            let nv = rng.gen_range(2..=4);
            let verts = (0..nv)
                .map(|_| (0..dim).map(|_| rat(rng.gen_range(0..=3))).collect())
                .collect();
            RationalPolytope::new(dim, verts).unwrap()
        };
        let b1 = mk(&mut rng);
        let b2 = mk(&mut rng);
        let rest: Vec<RationalPolytope> = (1..dim).map(|_| mk(&mut rng)).collect();
        let l1 = ratio(rng.gen_range(0..=3), 1);
        let l2 = ratio(rng.gen_range(1..=4), 2);
        let combined = b1
            .scale(&l1)
            .unwrap()
            .minkowski_sum(&b2.scale(&l2).unwrap())
            .unwrap();
        let alpha = Exponent(vec![1; dim]);
        let mv_of = |first: RationalPolytope| {
            let mut bodies = vec![first];
            bodies.extend(rest.iter().cloned());
            BodyCollection::new(dim, bodies)
                .unwrap()
                .mixed_volume(&alpha)
                .unwrap()
        };
        assert_eq!(mv_of(combined), &l1 * mv_of(b1) + &l2 * mv_of(b2));
    }

    pass(4, "volume engine", started, Some(Duration::from_secs(300)));
}

#[test]
fn criterion_05_projection_fixtures() {
    let started = Instant::now();

    // Prism fixture in dimension four: unscaled drop-projection areas are
    // (1, 1/2, 1/2, 1/2, 1/2, 1); the sqrt(2)-dilated body doubles them to
    // (2, 1, 1, 1, 1, 2).
    let a = RationalPolytope::new(
        4,
        [
            [1, 0, 0, 0],
            [0, 1, 0, 0],
            [0, 0, 1, 0],
            [0, 0, 0, 1],
            [1, 1, 0, 0],
            [0, 0, 1, 1],
        ]
        .iter()
        .map(|v| v.iter().map(|&c| rat(c)).collect())
        .collect(),
    )
    .unwrap();
    let expected = [
        ((0, 1), ratio(1, 1)),
        ((0, 2), ratio(1, 2)),
        ((0, 3), ratio(1, 2)),
        ((1, 2), ratio(1, 2)),
        ((1, 3), ratio(1, 2)),
        ((2, 3), ratio(1, 1)),
    ];
    let scaled_expect = [2i64, 1, 1, 1, 1, 2];
    for (k, ((i, j), area)) in expected.iter().enumerate() {
        let proj = a.project(&[*i, *j], ProjectionMode::Drop).unwrap();
        let vol = proj.hull_volume().unwrap();
        assert_eq!(&vol, area, "drop ({i},{j})");
        assert_eq!(vol * rat(2), rat(scaled_expect[k]));
    }

    // Square-times-triple-sum body in dimension five: keep-projection areas
    // (4, 1, 1, 1, 1, 1, 1, 1, 1, 1).
    let b = RationalPolytope::new(
        5,
        [
            [2, 0, 0, 0, 0],
            [0, 2, 0, 0, 0],
            [2, 2, 0, 0, 0],
            [0, 0, 1, 0, 0],
            [0, 0, 0, 1, 0],
            [0, 0, 0, 0, 1],
            [0, 0, 1, 1, 0],
            [0, 0, 1, 0, 1],
            [0, 0, 0, 1, 1],
        ]
        .iter()
        .map(|v| v.iter().map(|&c| rat(c)).collect())
        .collect(),
    )
    .unwrap();
    for i in 0..5 {
        for j in i + 1..5 {
            let area = b
                .project(&[i, j], ProjectionMode::Keep)
                .unwrap()
                .hull_volume()
                .unwrap();
            let expect = if (i, j) == (0, 1) { rat(4) } else { rat(1) };
            assert_eq!(area, expect, "keep ({i},{j})");
        }
    }

    pass(5, "projection fixtures", started, None);
}

#[test]
fn criterion_06_realizability_checkers() {
    let started = Instant::now();

    let pv = |entries: &[i64]| {
        let v: Vec<BigRational> = entries.iter().map(|&x| rat(x)).collect();
        PairVector::from_slice(4, &v).unwrap()
    };
    assert_eq!(
        triangle_condition(&pv(&[2, 1, 1, 1, 1, 2])).unwrap(),
        TriangleVerdict::Degenerate
    );
    assert_eq!(
        triangle_condition(&pv(&[3, 2, 1, 1, 2, 3])).unwrap(),
        TriangleVerdict::Degenerate
    );
    assert_eq!(
        triangle_condition(&pv(&[1, 1, 1, 1, 1, 1])).unwrap(),
        TriangleVerdict::Strict
    );

    // Four indices: triangle feasibility is equivalent to the one-positive-
    // eigenvalue condition, exhaustively over the 5^6 grid.
    let mut grid = [0i64; 6];
    loop {
        let p = pv(&grid);
        let triangle_ok = triangle_condition(&p).unwrap() != TriangleVerdict::Fail;
        assert_eq!(
            triangle_ok,
            one_positive_condition(&p),
            "grid point {grid:?}"
        );
        let mut pos = 0;
        loop {
            if pos == 6 {
                break;
            }
            if grid[pos] < 4 {
                grid[pos] += 1;
                break;
            }
            grid[pos] = 0;
            pos += 1;
        }
        if pos == 6 {
            break;
        }
    }

    // Five indices: the pairing inequalities match the principal-submatrix
    // condition on ten thousand random grid points.
    let mut rng = StdRng::seed_from_u64(606);
    for _ in 0..10_000 {
        let entries: Vec<BigRational> = (0..10).map(|_| rat(rng.gen_range(0..=4))).collect();
        let q = PairVector::from_slice(5, &entries).unwrap();
        assert_eq!(
            t2_plucker_condition(&q).unwrap(),
            principal_4x4_condition(&q).unwrap(),
            "entries {entries:?}"
        );
    }

    pass(6, "realizability checkers", started, None);
}

#[test]
fn criterion_07_reverse_inequality_separation() {
    let started = Instant::now();

    // Independent oracle: intersection numbers via iterated partial
    // derivatives (not coefficient lookup), brute force over all splits
    // and ordered triples.
    let f = cubic_fixture();
    let inter = |vars: &[usize]| -> BigRational {
        let mut g = f.clone();
        for &v in vars {
            g = g.partial(v).unwrap();
        }
        g.eval(&[rat(0), rat(0), rat(0)]).unwrap()
    };
    let d = 3u32;
    let mut oracle = Vec::new();
    for a in 0..3usize {
        for b in 0..3usize {
            for c in 0..3usize {
                if a == b || b == c || a == c {
                    continue;
                }
                for split in 1..d {
                    let mut lhs_l = vec![b; split as usize];
                    lhs_l.extend(vec![a; (d - split) as usize]);
                    let mut lhs_r = vec![a; split as usize];
                    lhs_r.extend(vec![c; (d - split) as usize]);
                    let lhs = BigRational::from_integer(
                        factorial(d) / (factorial(split) * factorial(d - split)),
                    ) * inter(&lhs_l)
                        * inter(&lhs_r);
                    let mut rhs_r = vec![b; split as usize];
                    rhs_r.extend(vec![c; (d - split) as usize]);
                    let rhs = inter(&vec![a; d as usize]) * inter(&rhs_r);
                    if lhs < rhs {
                        oracle.push((a, b, c, split, lhs, rhs));
                    }
                }
            }
        }
    }

    let scanned = rkt_scan(&f).unwrap();
    assert_eq!(scanned.len(), oracle.len());
    for (s, o) in scanned.iter().zip(&oracle) {
        assert_eq!((s.d1, s.d2, s.d3, s.e), (o.0, o.1, o.2, o.3));
        assert_eq!(s.lhs, o.4);
        assert_eq!(s.rhs, o.5);
    }
    // The first violation is the split e = 1 on the ordered triple
    // (x1, x2, x3), with sides 432 < 504.
    assert_eq!(
        (scanned[0].d1, scanned[0].d2, scanned[0].d3, scanned[0].e),
        (0, 1, 2, 1)
    );
    assert_eq!(scanned[0].lhs, rat(432));
    assert_eq!(scanned[0].rhs, rat(504));

    // And the scan stays empty on the whole volume-polynomial corpus.
    for coll in volume_corpus(4040) {
        if coll.bodies().len() < 3 {
            continue;
        }
        let g = coll.volume_polynomial().unwrap();
        assert!(rkt_scan(&g).unwrap().is_empty());
    }

    pass(
        7,
        "reverse-inequality separation",
        started,
        Some(Duration::from_secs(300)),
    );
}

/// Random polymatroid rank function on `n` elements with total rank <= 4:
/// a sum of truncated modular functions (a generalized-permutohedron rank).
fn random_rank(rng: &mut StdRng, n: usize) -> PolymatroidRank {
    loop {
        let pieces = rng.gen_range(1..=2);
        let parts: Vec<(Vec<u32>, u32)> = (0..pieces)
            .map(|_| {
                let w: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=2)).collect();
                let total: u32 = w.iter().sum();
                let cap = rng.gen_range(0..=total.min(3));
                (w, cap)
            })
            .collect();
        let h = PolymatroidRank::from_fn(n, |mask| {
            parts
                .iter()
                .map(|(w, cap)| {
                    let s: u32 = (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| w[i]).sum();
                    s.min(*cap)
                })
                .sum()
        })
        .unwrap();
        if h.value((1u32 << n) - 1) <= 4 {
            return h;
        }
    }
}

#[test]
fn criterion_08_cryptomorphism() {
    let started = Instant::now();

    let mut rng = StdRng::seed_from_u64(808);
    for trial in 0..1000 {
        let n = rng.gen_range(2..=5);
        let h = random_rank(&mut rng, n);
        let j = h.bases().unwrap();
        assert!(j.is_mconvex(), "trial {trial}");
        assert_eq!(j.rank_function().unwrap(), h, "trial {trial}");
        assert_eq!(j.rank_function().unwrap().bases().unwrap(), j);

        // Dual involution with a dominating vector.
        if !j.is_empty() {
            let mut mu = vec![0u32; n];
            for p in j.points() {
                for i in 0..n {
                    mu[i] = mu[i].max(p.get(i));
                }
            }
            let mu = Exponent(mu);
            let dual = j.dual(&mu).unwrap();
            assert!(dual.is_mconvex());
            assert_eq!(dual.dual(&mu).unwrap(), j);
        }
    }

    // Named fixtures: the seven-point plane, the two-of-three uniform
    // matroid, and the complete-graph matroid on four vertices.
    let fano = fano_matrix().column_matroid();
    assert_eq!(fano.len(), 28);
    let u23 = MConvexSet::new(3, [e(&[1, 1, 0]), e(&[1, 0, 1]), e(&[0, 1, 1])]).unwrap();
    let k4 = Graph::complete(4).unwrap().spanning_trees().unwrap();
    for j in [fano, u23, k4] {
        let h = j.rank_function().unwrap();
        assert_eq!(h.bases().unwrap(), j);
        let mu = Exponent(vec![1; j.ground_size()]);
        assert_eq!(j.dual(&mu).unwrap().dual(&mu).unwrap(), j);
    }

    pass(8, "cryptomorphism round trips", started, None);
}

/// Product dimension formula for the irreducible weight-`lambda`
/// representation in `n` letters: prod over cells of
/// `(n + j - i) / hook(i, j)`. Independent oracle for the weight-sum test.
fn hook_content_dimension(lambda: &YoungDiagram, n: usize) -> BigInt {
    let parts = lambda.parts();
    let conjugate = |j: usize| parts.iter().filter(|&&p| p as usize > j).count();
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for (i, &len) in parts.iter().enumerate() {
        for j in 0..len as usize {
            let content = n as i64 + j as i64 - i as i64;
            let hook = (len as usize - j) + (conjugate(j) - i) - 1;
            num *= BigInt::from(content);
            den *= BigInt::from(hook as i64);
        }
    }
    let q = BigRational::new(num, den);
    assert!(q.is_integer());
    q.to_integer()
}

fn partitions_of(n: u32) -> Vec<Vec<u32>> {
    fn rec(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        let mut k = max.min(rest);
        while k >= 1 {
            prefix.push(k);
            rec(rest - k, k, prefix, out);
            prefix.pop();
            k -= 1;
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

#[test]
fn criterion_09_schur_and_kostka() {
    let started = Instant::now();

    // The displayed shape-(2,1) cubic in three variables, coefficient for
    // coefficient: six singles and a double at the balanced weight.
    let lambda21 = YoungDiagram::new(vec![2, 1]).unwrap();
    let f = normalized_schur(&lambda21, 3).unwrap();
    assert_eq!(f.num_terms(), 7);
    assert_eq!(f.normalized_coeff(&e(&[1, 1, 1])).unwrap(), rat(2));
    for mu in [
        [2, 1, 0],
        [2, 0, 1],
        [1, 2, 0],
        [0, 2, 1],
        [1, 0, 2],
        [0, 1, 2],
    ] {
        assert_eq!(f.normalized_coeff(&e(&mu)).unwrap(), rat(1));
    }

    // Weight sums match the hook-content dimension for every shape of size
    // at most five and every variable count up to four; each defined
    // normalized polynomial is certified.
    for size in 1..=5u32 {
        for parts in partitions_of(size) {
            let lambda = YoungDiagram::new(parts.clone()).unwrap();
            for n in 1..=4usize {
                let total: u64 = simplex(n, size)
                    .into_iter()
                    .map(|mu| kostka(&lambda, &mu.0).unwrap())
                    .sum();
                assert_eq!(
                    BigInt::from(total),
                    hook_content_dimension(&lambda, n),
                    "shape {parts:?}, {n} letters"
                );
                if lambda.rows() <= n {
                    let g = normalized_schur(&lambda, n).unwrap();
                    assert!(certify(&g).accepted(), "shape {parts:?} in {n} letters");
                }
            }
        }
    }

    pass(9, "weight generating polynomials", started, None);
}

/// Polynomial with coefficients in the span of 1, pi, sqrt2, sqrt3 over the
/// rationals: one rational polynomial per symbolic unit. Deletion and
/// contraction slice layers of the combined support, so the minor chain of
/// the full polynomial acts on all components with shared layer bounds.
struct SymbolicPoly {
    // units: [rational, pi, sqrt2, sqrt3]
    parts: [HomogeneousPoly; 4],
}

impl SymbolicPoly {
    fn layer_bounds(&self, j: usize) -> (u32, u32) {
        let mut bounds: Option<(u32, u32)> = None;
        for p in &self.parts {
            if let Some((lo, hi)) = p.layer_bounds(j).unwrap() {
                bounds = Some(match bounds {
                    None => (lo, hi),
                    Some((a, b)) => (a.min(lo), b.max(hi)),
                });
            }
        }
        bounds.expect("nonzero symbolic polynomial")
    }

    fn delete(&self, j: usize) -> SymbolicPoly {
        let (_, e_max) = self.layer_bounds(j);
        SymbolicPoly {
            parts: std::array::from_fn(|k| self.parts[k].keep_layers_below(j, e_max).unwrap()),
        }
    }

    fn contract(&self, j: usize) -> SymbolicPoly {
        let (e_min, _) = self.layer_bounds(j);
        SymbolicPoly {
            parts: std::array::from_fn(|k| self.parts[k].contract_layers_above(j, e_min).unwrap()),
        }
    }
}

#[test]
fn criterion_10_minor_chain_of_ball_and_segments() {
    let started = Instant::now();

    // Volume polynomial of four equiangular unit segments and a unit ball in
    // three-dimensional space, split over the units [1, pi, sqrt2, sqrt3]:
    //   pi   : (4/3) x5^3 + (x1 + x2 + x3 + x4) x5^2
    //   sqrt2: (4/3) sum_{i<j<=4} x_i x_j x5
    //   sqrt3: (4/9) sum_{i<j<k<=4} x_i x_j x_k
    let mut pi_terms = vec![(e(&[0, 0, 0, 0, 3]), ratio(4, 3))];
    for i in 0..4 {
        let mut v = [0u32; 5];
        v[i] = 1;
        v[4] = 2;
        pi_terms.push((e(&v), rat(1)));
    }
    let mut sqrt2_terms = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            let mut v = [0u32; 5];
            v[i] = 1;
            v[j] = 1;
            v[4] = 1;
            sqrt2_terms.push((e(&v), ratio(4, 3)));
        }
    }
    let mut sqrt3_terms = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            for k in j + 1..4 {
                let mut v = [0u32; 5];
                v[i] = 1;
                v[j] = 1;
                v[k] = 1;
                sqrt3_terms.push((e(&v), ratio(4, 9)));
            }
        }
    }
    let f = SymbolicPoly {
        parts: [
            HomogeneousPoly::zero(5, 3),
            HomogeneousPoly::from_monomials(5, 3, pi_terms).unwrap(),
            HomogeneousPoly::from_monomials(5, 3, sqrt2_terms).unwrap(),
            HomogeneousPoly::from_monomials(5, 3, sqrt3_terms).unwrap(),
        ],
    };

    // Contract by the ball variable, then delete it twice.
    let result = f.contract(4).delete(4).delete(4);

    // Only the sqrt2 component survives: (4/3) times the quadratic
    // elementary symmetric polynomial in the four segment variables.
    assert!(result.parts[0].is_zero());
    assert!(result.parts[1].is_zero());
    assert!(result.parts[3].is_zero());
    let mut expect_terms = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            let mut v = [0u32; 5];
            v[i] = 1;
            v[j] = 1;
            expect_terms.push((e(&v), ratio(4, 3)));
        }
    }
    let expect = HomogeneousPoly::from_monomials(5, 2, expect_terms).unwrap();
    assert_eq!(result.parts[2], expect);

    // It is a positive rational multiple of the elementary symmetric
    // quadratic (embedded in the five-variable ring).
    let e2 = expect.scale(&ratio(3, 4));
    assert!(e2.terms().all(|(_, p)| *p == rat(1)));
    assert_eq!(e2.num_terms(), 6);

    pass(10, "symbolic minor chain", started, None);
}
