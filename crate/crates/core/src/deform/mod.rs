//! Deformations of ideals: graph charts, jets, the Kuranishi map, the section `σ` and certificates.

pub mod certify;
pub mod chart;
pub mod fiber;
pub mod jet;

pub use certify::{certify_rigidity, certify_stability, tangent_dimension, RigidityMethod, StabilityMethod};
pub use chart::{chart_inverse, chart_transition, graph_of, graph_subspace, hom_cochain, hom_matrix};
pub use fiber::{sigma_fiber, sigma_fiber_ideal, tau_identity_check, vertical_tangent_check, SigmaFiber};
pub use jet::{extend_to_second_order, jet_cocycle, kuranishi, Jet, Jet2Deformation, KuranishiReport};
