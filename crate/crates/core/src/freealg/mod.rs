//! The free binary-ternary algebra modulo anticommutativity of the bracket
//! and antisymmetry of the triple product in its first two arguments.
//!
//! Association types are enumerated per degree in deglex order (ternary
//! types, then mixed, then binary). Multilinear monomials are stored as a
//! type index plus the labeling that is lexicographically least within the
//! orbit of the type's skew-symmetry group.

mod catalog;
mod monomial;
mod tree;

pub use catalog::{
    count_types, enumerate_types, monomial_count, skew_generators, types_of_degree, AssocType,
    DegreeTypes, SkewSymmetry, MAX_DEGREE,
};
pub use monomial::{
    canonical_labels, canonicalize, canonicalize_general, expand, var_name, Monomial, Polynomial,
    Straightened, Term,
};
pub use tree::{ordered_pair, Node, OpClass, Tree};
