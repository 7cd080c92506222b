//! Deformation complexes, the cochain maps between them, and their cohomology.

pub mod ce;
pub mod complex;
pub mod homology;
pub mod les;
pub mod maps;

pub use ce::{ce_differential, ce_differential_brute, ce_matrix, delta_hom_ideal};
pub use complex::{cohomology, differential, ComplexId, ComplexTag, CohomologyReport, DegreeRow, Realized};
pub use homology::{induced_map, is_chain_map, CochainComplex, Connecting, DegreeCohomology, LongExact, Ses};
pub use les::{diagram, diagram_check, les_exactness_check, res_h0_report, Diagram, Row};
pub use maps::{
    map_pi, map_pi_star, map_pibar, map_pibar_star, map_res_wedge, nr_basis, nr_constraints, nr_membership,
    wedge_subspace,
};
