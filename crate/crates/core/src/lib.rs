//! Local cohomology of monomial ideals through degree complexes.
//!
//! For a monomial ideal `I ⊂ S = K[x_1, …, x_n]` the graded piece
//! `H^i_m(S/I)_a` is the reduced cohomology of a simplicial complex `Δ_a`
//! shifted by `|G_a| + 1`, where `G_a` is the negative support of `a`. Only
//! finitely many classes of degrees ([`DegreePattern`]) carry cohomology, so
//! the full multigraded Hilbert series of every `H^i_m(S/I)` is a finite
//! [`CohomologyTable`].
//!
//! The crate is `no_std` and needs only `alloc`. File formats, parallel
//! evaluation and the command line live in the `hochster` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod cech;
pub mod degree_complex;
mod error;
pub mod face;
pub mod fixtures;
pub mod hochster;
pub mod invariants;
pub mod linalg;
pub mod monomial;
pub mod simplicial;
pub mod substitution;

pub use cech::{
    cech_basis, cech_cohomology_dims, verify_degree_complex, DegreeComplexReport, GradedCechPiece,
};
pub use degree_complex::{
    delta_a, enumerate_patterns, radical_complex, DegreePattern, DEFAULT_PATTERN_CAP,
};
pub use error::{Error, Result};
pub use face::Face;
pub use hochster::{
    classical_hochster, cohomology_table, evaluate_pattern, hilbert_series, CohomologyTable,
    SeriesExpr, SeriesTerm, TableEntry,
};
pub use invariants::{InitialDegree, InvariantReport};
pub use linalg::{FieldSpec, IntMatrix};
pub use monomial::{Monomial, MonomialIdeal, MultiDegree, MAX_VARIABLES};
pub use simplicial::{ReducedHomology, SimplicialComplex};
pub use substitution::{phi_ideal, SubstitutionMap};
