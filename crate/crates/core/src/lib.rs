//! Exact combinatorics of `A_n` Weyl-orbit polytopes and their toric
//! varieties.
//!
//! For a subset `J` of the simple reflections of `A_n` (the stabilizer of a
//! weight), this crate computes, over exact unbounded integers, the
//! f-vector and h-polynomial of the orbit polytope `P_λ`, the Poincaré
//! polynomial and Betti numbers of the projective toric variety `X(J)`,
//! Eulerian closed forms and recurrences for the tail-interval family
//! `J(k,n)`, and the classification of the stabilizers with simple orbit
//! polytopes. An independent geometric oracle ([`oracle`]) rebuilds the
//! same f-vectors by brute-force face-lattice enumeration, so every
//! counting formula can be checked against the actual polytope.
//!
//! Core arithmetic is generic over an integer-like [`scalar::Scalar`]; the
//! `Int*` aliases below fix the canonical big-integer instantiation.

pub mod coxeter;
pub mod error;
pub mod eulerian;
pub mod hvector;
pub mod oracle;
pub mod perm;
pub mod poly;
pub mod report;
pub mod scalar;

pub use coxeter::{
    admissible_subsets, classify_combinatorially_smooth, connected_components, i_star,
    parabolic_order, ComponentDecomposition, Form, SimpleSubset,
};
pub use error::{Error, Result};
pub use eulerian::{binomial, eulerian_number, eulerian_polynomial, factorial};
pub use hvector::{
    binomial_geometric_identity, eulerian_polynomial_subset_form, f_to_h, f_vector_lattice,
    h_polynomial_lattice, h_recurrence, h_single_reflection_closed_form, h_to_f, poincare,
    poincare_difference, FVector, HVector, IdentityCheck, Poincare,
};
pub use oracle::{
    canonical_weight, enumerate_face_lattice, f_vector_geometric, face_of_partition, is_simple,
    orbit_points, ordered_set_partitions, FaceLattice, Guard, OrbitPointSet, OrderedSetPartition,
    Weight,
};
pub use perm::Permutation;
pub use poly::Polynomial;
pub use report::Report;
pub use scalar::Scalar;

/// Canonical exact integer: arbitrary precision, used by the CLI and tests.
pub type Int = num_bigint::BigInt;

/// [`Polynomial`] over the canonical integer.
pub type IntPolynomial = Polynomial<Int>;

/// [`FVector`] over the canonical integer.
pub type IntFVector = FVector<Int>;

/// [`HVector`] over the canonical integer.
pub type IntHVector = HVector<Int>;

/// [`Report`] over the canonical integer.
pub type IntReport = Report<Int>;
