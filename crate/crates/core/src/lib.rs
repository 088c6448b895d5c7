//! Exact computational kernel for log-concave polynomial classes: Lorentzian
//! certification, mixed volumes of rational polytopes, M-convex sets and
//! polymatroids, minor and differential-operator calculus, and the
//! projection-volume realizability conditions.
//!
//! Everything is exact rational arithmetic; no floating point enters any
//! decision procedure. All values are immutable after construction and every
//! operation is a pure function, so the whole API is safe to share across
//! threads.

pub mod error;
pub mod json;
pub mod lorentzian;
pub mod matrix;
pub mod matroids;
pub mod mconvex;
pub mod operators;
pub mod poly;
pub mod polytope;
pub mod rat;
pub mod realizability;
pub mod special;

#[cfg(test)]
pub(crate) mod testutil;

pub use error::{Error, Result};
pub use lorentzian::{
    af_violations, bivariate_lorentzian, certify, falsify_definition, first_af_violation, hessian,
    LorentzianVerdict,
};
pub use matrix::{Inertia, SymMatrix};
pub use matroids::{fano_matrix, Graph, PrimeFieldMatrix};
pub use mconvex::{MConvexSet, PolymatroidRank, RankVerdict};
pub use operators::{interlacing_apply, kt_scan, rkt_scan, MonomialOperator};
pub use poly::{apply_diff, Exponent, HomogeneousPoly};
pub use polytope::{BodyCollection, ProjectionMode, RationalPolytope};
pub use realizability::{
    one_positive_condition, principal_4x4_condition, projection_pair_vector, t2_plucker_condition,
    triangle_condition, PairVector, TriangleVerdict,
};
pub use special::{
    elementary_symmetric, fano_poly, kostka, normalized_schur, spanning_tree_poly, YoungDiagram,
};
