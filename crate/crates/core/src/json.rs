//! Wire formats: serde bridges for every public input and output type.
//!
//! Rationals travel as canonical `"num/den"` strings (bare integers are
//! accepted on input). Variable, vertex, and witness indices are 1-based on
//! the wire and 0-based in the API. Pair-indexed data uses two-digit keys
//! like `"12"`, which caps those index sets at nine elements on the wire.

use std::collections::BTreeMap;

use num_rational::BigRational;
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::AxiomViolation;
use crate::lorentzian::{AfViolation, DefinitionWitness, FailureKind, LorentzianVerdict};
use crate::matrix::Inertia;
use crate::matroids::{Graph, PrimeFieldMatrix};
use crate::mconvex::{ExchangeFailure, MConvexSet, PolymatroidRank, RankVerdict};
use crate::operators::{MonomialOperator, RktViolation};
use crate::poly::{Exponent, HomogeneousPoly};
use crate::polytope::{BodyCollection, RationalPolytope};
use crate::rat::{format_rational, parse_rational};
use crate::realizability::{PairVector, TriangleVerdict};
use crate::special::YoungDiagram;

fn de_rational<'de, D: Deserializer<'de>>(s: &str) -> Result<BigRational, D::Error> {
    parse_rational(s).map_err(D::Error::custom)
}

// ---------------------------------------------------------------------------
// HomogeneousPoly <-> {"num_vars", "degree", "terms": [{"alpha", "p"}]}

#[derive(Serialize, Deserialize)]
struct PolyDto {
    num_vars: usize,
    degree: u32,
    terms: Vec<TermDto>,
}

#[derive(Serialize, Deserialize)]
struct TermDto {
    alpha: Vec<u32>,
    p: String,
}

impl Serialize for HomogeneousPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PolyDto {
            num_vars: self.num_vars(),
            degree: self.degree(),
            terms: self
                .terms()
                .map(|(alpha, p)| TermDto {
                    alpha: alpha.0.clone(),
                    p: format_rational(p),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for HomogeneousPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let dto = PolyDto::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(dto.terms.len());
        for t in dto.terms {
            terms.push((Exponent(t.alpha), de_rational::<D>(&t.p)?));
        }
        HomogeneousPoly::from_terms(dto.num_vars, dto.degree, terms).map_err(D::Error::custom)
    }
}

// ---------------------------------------------------------------------------
// MConvexSet <-> {"ground_size", "points"}

#[derive(Serialize, Deserialize)]
struct MConvexDto {
    ground_size: usize,
    points: Vec<Vec<u32>>,
}

impl Serialize for MConvexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        MConvexDto {
            ground_size: self.ground_size(),
            points: self.points().map(|p| p.0.clone()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MConvexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let dto = MConvexDto::deserialize(deserializer)?;
        MConvexSet::new(dto.ground_size, dto.points.into_iter().map(Exponent))
            .map_err(D::Error::custom)
    }
}

// ---------------------------------------------------------------------------
// Graph <-> {"vertices", "edges": [[a, b], ...]} with 1-based vertex ids

#[derive(Serialize, Deserialize)]
struct GraphDto {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        GraphDto {
            vertices: self.vertex_count(),
            edges: self.edges().iter().map(|&(u, v)| (u + 1, v + 1)).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let dto = GraphDto::deserialize(deserializer)?;
        let mut edges = Vec::with_capacity(dto.edges.len());
        for (u, v) in dto.edges {
            if u == 0 || v == 0 {
                return Err(D::Error::custom("vertex ids are 1-based"));
            }
            edges.push((u - 1, v - 1));
        }
        Graph::new(dto.vertices, edges).map_err(D::Error::custom)
    }
}

// ---------------------------------------------------------------------------
// PrimeFieldMatrix <-> {"prime", "rows"}

#[derive(Serialize, Deserialize)]
struct MatrixDto {
    prime: u64,
    rows: Vec<Vec<i64>>,
}

impl Serialize for PrimeFieldMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        MatrixDto {
            prime: self.prime(),
            rows: self.rows().to_vec(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PrimeFieldMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let dto = MatrixDto::deserialize(deserializer)?;
        PrimeFieldMatrix::new(dto.prime, dto.rows).map_err(D::Error::custom)
    }
}

// ---------------------------------------------------------------------------
// RationalPolytope <-> {"dim", "vertices": [["0", "1/2", ...], ...]}

#[derive(Serialize, Deserialize)]
struct PolytopeDto {
    dim: usize,
    vertices: Vec<Vec<String>>,
}

impl Serialize for RationalPolytope {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PolytopeDto {
            dim: self.dim(),
            vertices: self
                .vertices()
                .iter()
                .map(|v| v.iter().map(format_rational).collect())
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RationalPolytope {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let dto = PolytopeDto::deserialize(deserializer)?;
        let mut verts = Vec::with_capacity(dto.vertices.len());
        for v in dto.vertices {
            let mut coords = Vec::with_capacity(v.len());
            for c in v {
                coords.push(de_rational::<D>(&c)?);
            }
            verts.push(coords);
        }
        RationalPolytope::new(dto.dim, verts).map_err(D::Error::custom)
    }
}

// ---------------------------------------------------------------------------
// BodyCollection <-> {"dim", "bodies": [{"vertices": ...}, ...]}

#[derive(Serialize, Deserialize)]
struct CollectionDto {
    dim: usize,
    bodies: Vec<BodyDto>,
}

#[derive(Serialize, Deserialize)]
struct BodyDto {
    vertices: Vec<Vec<String>>,
}

impl Serialize for BodyCollection {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        CollectionDto {
            dim: self.dim(),
            bodies: self
                .bodies()
                .iter()
                .map(|b| BodyDto {
                    vertices: b
                        .vertices()
                        .iter()
                        .map(|v| v.iter().map(format_rational).collect())
                        .collect(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BodyCollection {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let dto = CollectionDto::deserialize(deserializer)?;
        let mut bodies = Vec::with_capacity(dto.bodies.len());
        for b in dto.bodies {
            let mut verts = Vec::with_capacity(b.vertices.len());
            for v in b.vertices {
                let mut coords = Vec::with_capacity(v.len());
                for c in v {
                    coords.push(de_rational::<D>(&c)?);
                }
                verts.push(coords);
            }
            bodies.push(RationalPolytope::new(dto.dim, verts).map_err(D::Error::custom)?);
        }
        BodyCollection::new(dto.dim, bodies).map_err(D::Error::custom)
    }
}

// ---------------------------------------------------------------------------
// PairVector <-> {"n", "pairs": {"12": "num/den", ...}} (1-based digits)

#[derive(Serialize, Deserialize)]
struct PairDto {
    n: usize,
    pairs: BTreeMap<String, String>,
}

impl Serialize for PairVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        if self.n() > 9 {
            return Err(serde::ser::Error::custom(
                "pair keys are two digits; at most nine indices on the wire",
            ));
        }
        PairDto {
            n: self.n(),
            pairs: self
                .entries()
                .map(|(&(i, j), v)| (format!("{}{}", i + 1, j + 1), format_rational(v)))
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PairVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let dto = PairDto::deserialize(deserializer)?;
        if dto.n > 9 {
            return Err(D::Error::custom(
                "pair keys are two digits; at most nine indices on the wire",
            ));
        }
        let mut values = BTreeMap::new();
        for (key, v) in &dto.pairs {
            let digits: Vec<u32> = key.chars().filter_map(|c| c.to_digit(10)).collect();
            if digits.len() != 2 || key.len() != 2 || digits[0] == 0 || digits[1] == 0 {
                return Err(D::Error::custom(format!("bad pair key {key:?}")));
            }
            let (i, j) = (digits[0] as usize - 1, digits[1] as usize - 1);
            if i >= j {
                return Err(D::Error::custom(format!("pair key {key:?} needs i < j")));
            }
            values.insert((i, j), de_rational::<D>(v)?);
        }
        PairVector::new(dto.n, values).map_err(D::Error::custom)
    }
}

// ---------------------------------------------------------------------------
// PolymatroidRank <-> {"ground_size", "values": {"1,3": v, ...}} (1-based)

#[derive(Serialize, Deserialize)]
struct RankDto {
    ground_size: usize,
    values: BTreeMap<String, u32>,
}

fn mask_key(mask: u32, n: usize) -> String {
    let parts: Vec<String> = (0..n)
        .filter(|&i| mask >> i & 1 == 1)
        .map(|i| (i + 1).to_string())
        .collect();
    parts.join(",")
}

impl Serialize for PolymatroidRank {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let n = self.ground_size();
        RankDto {
            ground_size: n,
            values: (0..1u32 << n)
                .map(|mask| (mask_key(mask, n), self.value(mask)))
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PolymatroidRank {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let dto = RankDto::deserialize(deserializer)?;
        let n = dto.ground_size;
        if n > crate::mconvex::MAX_GROUND {
            return Err(D::Error::custom("ground set too large"));
        }
        let mut table = vec![None; 1 << n];
        for (key, v) in &dto.values {
            let mut mask = 0u32;
            if !key.is_empty() {
                for part in key.split(',') {
                    let i: usize = part
                        .trim()
                        .parse()
                        .map_err(|_| D::Error::custom(format!("bad subset key {key:?}")))?;
                    if i == 0 || i > n {
                        return Err(D::Error::custom(format!("index {i} out of range")));
                    }
                    mask |= 1 << (i - 1);
                }
            }
            table[mask as usize] = Some(*v);
        }
        let values = table
            .into_iter()
            .enumerate()
            .map(|(mask, v)| {
                v.ok_or_else(|| {
                    D::Error::custom(format!("missing subset {:?}", mask_key(mask as u32, n)))
                })
            })
            .collect::<Result<Vec<u32>, D::Error>>()?;
        PolymatroidRank::new(n, values).map_err(D::Error::custom)
    }
}

// ---------------------------------------------------------------------------
// YoungDiagram <-> {"parts": [...]}

#[derive(Serialize, Deserialize)]
struct YoungDto {
    parts: Vec<u32>,
}

impl Serialize for YoungDiagram {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        YoungDto {
            parts: self.parts().to_vec(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for YoungDiagram {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let dto = YoungDto::deserialize(deserializer)?;
        YoungDiagram::new(dto.parts).map_err(D::Error::custom)
    }
}

// ---------------------------------------------------------------------------
// MonomialOperator <-> {"mu", "nu", "shift", "entries": [{"beta","alpha","v"}]}

#[derive(Serialize, Deserialize)]
struct OperatorDto {
    mu: Vec<u32>,
    nu: Vec<u32>,
    shift: i64,
    entries: Vec<OperatorEntryDto>,
}

#[derive(Serialize, Deserialize)]
struct OperatorEntryDto {
    beta: Vec<u32>,
    alpha: Vec<u32>,
    v: String,
}

impl Serialize for MonomialOperator {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        OperatorDto {
            mu: self.source_bound().0.clone(),
            nu: self.target_bound().0.clone(),
            shift: self.shift(),
            entries: self
                .entries()
                .map(|((beta, alpha), v)| OperatorEntryDto {
                    beta: beta.0.clone(),
                    alpha: alpha.0.clone(),
                    v: format_rational(v),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MonomialOperator {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let dto = OperatorDto::deserialize(deserializer)?;
        let mut entries = Vec::with_capacity(dto.entries.len());
        for e in dto.entries {
            entries.push((
                (Exponent(e.beta), Exponent(e.alpha)),
                de_rational::<D>(&e.v)?,
            ));
        }
        MonomialOperator::new(Exponent(dto.mu), Exponent(dto.nu), dto.shift, entries)
            .map_err(D::Error::custom)
    }
}

// ---------------------------------------------------------------------------
// Output-only report types

impl Serialize for Inertia {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Dto {
            positive: usize,
            zero: usize,
            negative: usize,
        }
        Dto {
            positive: self.pos,
            zero: self.zero,
            negative: self.neg,
        }
        .serialize(serializer)
    }
}

impl Serialize for ExchangeFailure {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Dto<'a> {
            alpha: &'a [u32],
            beta: &'a [u32],
            i: usize,
        }
        Dto {
            alpha: &self.alpha.0,
            beta: &self.beta.0,
            i: self.i + 1,
        }
        .serialize(serializer)
    }
}

impl Serialize for LorentzianVerdict {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        #[serde(untagged)]
        enum WitnessDto<'a> {
            Alpha { alpha: &'a [u32] },
            Exchange(&'a ExchangeFailure),
            Inertia { inertia: Inertia },
        }

        #[derive(Serialize)]
        struct FailureDto<'a> {
            kind: &'static str,
            delta: &'a [u32],
            witness: WitnessDto<'a>,
        }

        #[derive(Serialize)]
        struct VerdictDto<'a> {
            accepted: bool,
            #[serde(skip_serializing_if = "Option::is_none")]
            failure: Option<FailureDto<'a>>,
        }

        let failure = self.failure().map(|f| {
            let (kind, witness) = match &f.kind {
                FailureKind::NegativeCoefficient { alpha } => (
                    "negative-coefficient",
                    WitnessDto::Alpha { alpha: &alpha.0 },
                ),
                FailureKind::SupportNotMConvex(w) => {
                    ("support-not-mconvex", WitnessDto::Exchange(w))
                }
                FailureKind::HessianSignature(i) => {
                    ("hessian-signature", WitnessDto::Inertia { inertia: *i })
                }
            };
            FailureDto {
                kind,
                delta: &f.delta.0,
                witness,
            }
        });
        VerdictDto {
            accepted: self.accepted(),
            failure,
        }
        .serialize(serializer)
    }
}

impl Serialize for AfViolation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Dto<'a> {
            alpha: &'a [u32],
            i: usize,
            j: usize,
            lhs: String,
            rhs: String,
        }
        Dto {
            alpha: &self.alpha.0,
            i: self.i + 1,
            j: self.j + 1,
            lhs: format_rational(&self.lhs),
            rhs: format_rational(&self.rhs),
        }
        .serialize(serializer)
    }
}

impl Serialize for RktViolation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Dto {
            d1: usize,
            d2: usize,
            d3: usize,
            e: u32,
            lhs: String,
            rhs: String,
        }
        Dto {
            d1: self.d1 + 1,
            d2: self.d2 + 1,
            d3: self.d3 + 1,
            e: self.e,
            lhs: format_rational(&self.lhs),
            rhs: format_rational(&self.rhs),
        }
        .serialize(serializer)
    }
}

impl Serialize for DefinitionWitness {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Dto {
            directions: Vec<Vec<String>>,
            lhs: String,
            rhs: String,
        }
        Dto {
            directions: self
                .directions
                .iter()
                .map(|v| v.iter().map(format_rational).collect())
                .collect(),
            lhs: format_rational(&self.lhs),
            rhs: format_rational(&self.rhs),
        }
        .serialize(serializer)
    }
}

impl Serialize for TriangleVerdict {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let s = match self {
            TriangleVerdict::Strict => "strict",
            TriangleVerdict::Degenerate => "degenerate",
            TriangleVerdict::Fail => "fail",
        };
        serializer.serialize_str(s)
    }
}

impl Serialize for AxiomViolation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Dto {
            axiom: &'static str,
            #[serde(skip_serializing_if = "Option::is_none")]
            a: Option<Vec<usize>>,
            #[serde(skip_serializing_if = "Option::is_none")]
            b: Option<Vec<usize>>,
        }
        let one_based = |v: &[usize]| v.iter().map(|&i| i + 1).collect::<Vec<_>>();
        let dto = match self {
            AxiomViolation::Normalization => Dto {
                axiom: "normalization",
                a: None,
                b: None,
            },
            AxiomViolation::Monotonicity { a, b } => Dto {
                axiom: "monotonicity",
                a: Some(one_based(a)),
                b: Some(one_based(b)),
            },
            AxiomViolation::Submodularity { a, b } => Dto {
                axiom: "submodularity",
                a: Some(one_based(a)),
                b: Some(one_based(b)),
            },
        };
        dto.serialize(serializer)
    }
}

impl Serialize for RankVerdict {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Dto<'a> {
            valid: bool,
            #[serde(skip_serializing_if = "Option::is_none")]
            matroid: Option<bool>,
            #[serde(skip_serializing_if = "Option::is_none")]
            violation: Option<&'a AxiomViolation>,
        }
        let dto = match self {
            RankVerdict::Valid { matroid } => Dto {
                valid: true,
                matroid: Some(*matroid),
                violation: None,
            },
            RankVerdict::Invalid(v) => Dto {
                valid: false,
                matroid: None,
                violation: Some(v),
            },
        };
        dto.serialize(serializer)
    }
}
