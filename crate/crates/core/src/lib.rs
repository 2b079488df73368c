//! Exact computation of the cohomology of moment-angle complexes.
//!
//! The additive structure comes from summing the reduced cohomology of every
//! full subcomplex of `K`; the multiplicative structure is evaluated at
//! cochain level on unions of disjoint supports. Around that core the crate
//! provides the simplicial constructions the verification suite needs:
//! iterated stackings of a simplex, vertex deletion, joins, boundary
//! complexes, and the closed-form Betti vectors they are compared against.
//!
//! All arithmetic is exact: integer matrices with arbitrary-precision
//! entries, Smith normal form for torsion, and rank computations over the
//! rationals or prime fields.

pub mod complex;
pub mod error;
pub mod hochster;
pub mod homology;
pub mod json;
pub mod linalg;
pub mod polytope;

pub use complex::{Face, SimplicialComplex};
pub use error::{Error, Result};
pub use hochster::{
    cup_cochain, cup_product, golod_check, hochster_basis, poincare_pairing,
    restriction_split, zk_cohomology, HochsterClass, ZkCohomology, DEFAULT_VERTEX_LIMIT,
};
pub use homology::{
    chain_complex, cocycle_basis, reduced_cohomology, Coeffs, GradedModule, HomologyCache,
};
pub use linalg::{
    rank_mod_p, smith_normal_form, FieldOps, IntegerMatrix, PrimeField, Rationals, SnfResult,
};
pub use polytope::{
    build_lhat, build_stacked, connected_sum_betti, disjoint_points, htype_family,
    random_history, validate_stacked_facets, wedge_betti, HtypeMode, StackHistory,
};
