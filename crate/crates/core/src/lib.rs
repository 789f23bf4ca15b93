//! Rational Betti numbers of compact symmetric spaces, Betti-level
//! 4-periodicity obstructions, and the GF(2) code bounds behind torus
//! symmetry-rank arguments.

pub mod betti;
pub mod catalog;
pub mod codes;
pub mod periodicity;
pub mod series;
pub mod symrank;

pub use betti::{
    betti_vector, connected_sum_betti, euler_characteristic_check, poincare_equal_rank,
    product_betti, BettiError, BettiRange, BettiVector,
};
pub use catalog::{
    enumerate_spaces, group_spheres, space_dimension, CatalogError, GroupDescriptor, GroupFamily,
    IrreducibleSpace, ProductSpace, SpaceKind, SphereList,
};
pub use codes::{
    find_sigma, find_tau, griesmer_min_length, min_weight, subgroup_codim,
    verify_griesmer_exhaustive, BitRow, CodesError, InvolutionCertificate, LinearEmbedding,
};
pub use periodicity::{
    check_4periodic, classify_irreducibles, obstruction_string, pattern_classify, shape_verdict,
    PeriodicityError, PeriodicityReport, ShapeVerdict, Verdict,
};
pub use series::{poly_div_exact, poly_mul, PoincarePolynomial, SeriesError};
