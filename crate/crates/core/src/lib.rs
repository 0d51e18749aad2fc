//! Exact cohomology of homogeneous vector bundles on Grassmannians.
//!
//! The crate computes Borel–Bott–Weil cohomology of `Σ^λ Q ⊗ Σ^μ S` on
//! `Gr(k, n)`, multiplies and dualizes formal sums of such bundles, builds the
//! `E_1` pages of Koszul hypercohomology spectral sequences for the zero locus
//! of a section of `S^3 S^∨` (lines on a cubic) or `O(3)` (the cubic itself),
//! and assembles first-order deformation counts from them.
//!
//! All arithmetic is exact.

pub mod bbw;
pub mod deformation;
pub mod dimension;
pub mod error;
pub mod gl2;
pub mod koszul;
pub mod lr;
pub mod sheaf;
pub mod weight;

pub use bbw::{
    bbw_cohomology, canonical_bundle, dual_bundle, rho, serre_check, CohomologyProfile, GrassmannianContext,
    IrreducibleHomogeneousBundle, Isotypic,
};
pub use deformation::{deformation_numbers, Axiom, AxiomRegistry, DeformationNumbers, NormalSequence, Side};
pub use dimension::{binomial, count_ssyt, weyl_dimension};
pub use error::{Error, Result};
pub use gl2::{
    decompose_gl2_character, gl2_character, gl2_tensor, sym_power_gl2, wedge_power_gl2, LaurentCharacter,
    WeightMultiset,
};
pub use koszul::{
    analyze, build_page, euler_consistency, koszul_terms, restricted_cohomology, ConvergenceVerdict, DegreeVerdict,
    KoszulPage, KoszulTerm, PageVariant, RestrictedCohomology, RestrictedValue,
};
pub use lr::{littlewood_richardson, littlewood_richardson_bounded, PartitionMultiset};
pub use sheaf::{equal_mod_det, named_class, verify_decompositions, DecompositionCheck, EquivariantClass, NamedSheaf};
pub use weight::{dominant_sort, DominantWeight, IntegerWeight, Partition, SortOutcome};
