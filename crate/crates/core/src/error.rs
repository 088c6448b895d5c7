//! Crate-wide error type.

use std::fmt;

/// Errors reported by the exact-arithmetic kernels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A vector or polynomial has the wrong number of coordinates.
    DimensionMismatch { expected: usize, got: usize },
    /// An exponent vector does not sum to the polynomial degree.
    DegreeMismatch { expected: u32, got: u32 },
    /// Derivative or minor requested on a polynomial of degree zero.
    DegreeZero,
    /// Deletion or contraction of the zero polynomial.
    ZeroPolynomial,
    /// Variable or coordinate index out of range.
    IndexOutOfRange { index: usize, bound: usize },
    /// Lattice points with different coordinate sums in one candidate set.
    MixedCoordinateSums,
    /// Operation requires a nonempty set of basis points.
    EmptySet,
    /// Operation requires an M-convex input.
    NotMConvex,
    /// A rank table violates one of the polymatroid axioms.
    RankAxiom(AxiomViolation),
    /// Reflection vector does not dominate every point of the set.
    NotDominating,
    /// Ground set too large for an exhaustive rank table.
    GroundSetTooLarge { size: usize, cap: usize },
    /// Graph operation on a disconnected graph.
    Disconnected,
    /// Modulus is neither zero nor a prime.
    NotPrime(u64),
    /// Ambient dimension above the supported cap.
    DimensionCap { dim: usize, cap: usize },
    /// Negative scale factor.
    NegativeScale,
    /// Projection indices are repeated or out of range.
    BadProjection,
    /// Multiplicity vector does not sum to the ambient dimension.
    BadMultiplicity { sum: u32, dim: usize },
    /// Pair-indexed data requires at least this many indices.
    TooFewIndices { needed: usize, got: usize },
    /// Pair vector entry missing or negative.
    BadPairVector(String),
    /// Young diagram parts must be positive and weakly decreasing.
    BadYoungDiagram,
    /// Shape and weight have different sizes.
    SizeMismatch { shape: u32, weight: u32 },
    /// Operator entry outside the declared monomial box or degree shift.
    BadOperatorEntry(String),
    /// Polynomial support exceeds the operator's source bound.
    SupportExceedsBound,
    /// Invalid construction of a domain value.
    Invalid(String),
}

/// Witness for a failed polymatroid rank axiom. Subsets are sorted index lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    Normalization,
    Monotonicity { a: Vec<usize>, b: Vec<usize> },
    Submodularity { a: Vec<usize>, b: Vec<usize> },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::Normalization => write!(f, "normalization: h(empty) != 0"),
            AxiomViolation::Monotonicity { a, b } => {
                write!(f, "monotonicity fails for {:?} inside {:?}", a, b)
            }
            AxiomViolation::Submodularity { a, b } => {
                write!(f, "submodularity fails for {:?} and {:?}", a, b)
            }
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::DegreeMismatch { expected, got } => {
                write!(f, "degree mismatch: expected {expected}, got {got}")
            }
            Error::DegreeZero => write!(f, "operation undefined on degree-zero polynomials"),
            Error::ZeroPolynomial => write!(f, "operation undefined on the zero polynomial"),
            Error::IndexOutOfRange { index, bound } => {
                write!(f, "index {index} out of range (bound {bound})")
            }
            Error::MixedCoordinateSums => write!(f, "points have mixed coordinate sums"),
            Error::EmptySet => write!(f, "operation requires a nonempty set"),
            Error::NotMConvex => write!(f, "input set is not M-convex"),
            Error::RankAxiom(v) => write!(f, "rank axiom violated: {v}"),
            Error::NotDominating => write!(f, "reflection vector does not dominate the set"),
            Error::GroundSetTooLarge { size, cap } => {
                write!(f, "ground set of size {size} exceeds cap {cap}")
            }
            Error::Disconnected => write!(f, "graph is not connected"),
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::DimensionCap { dim, cap } => {
                write!(f, "dimension {dim} exceeds cap {cap}")
            }
            Error::NegativeScale => write!(f, "scale factor must be nonnegative"),
            Error::BadProjection => write!(f, "projection indices must be distinct and in range"),
            Error::BadMultiplicity { sum, dim } => {
                write!(
                    f,
                    "multiplicities sum to {sum}, expected ambient dimension {dim}"
                )
            }
            Error::TooFewIndices { needed, got } => {
                write!(f, "needs at least {needed} indices, got {got}")
            }
            Error::BadPairVector(msg) => write!(f, "bad pair vector: {msg}"),
            Error::BadYoungDiagram => {
                write!(f, "parts must be positive and weakly decreasing")
            }
            Error::SizeMismatch { shape, weight } => {
                write!(f, "shape size {shape} does not match weight size {weight}")
            }
            Error::BadOperatorEntry(msg) => write!(f, "bad operator entry: {msg}"),
            Error::SupportExceedsBound => {
                write!(f, "polynomial support exceeds the operator source bound")
            }
            Error::Invalid(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
