//! Graded Lie brackets, higher derived brackets and Maurer–Cartan residuals.

pub mod closed;
pub mod cone;
pub mod graded;
pub mod mc;
pub mod voronov;

pub use closed::{ideal_m2, subalg_m123};
pub use cone::{mapping_cone_brackets, ConeElement};
pub use graded::{bracket, compose_ee, compose_ev, compose_vv, extended_bracket, gerstenhaber_bracket, jacobiator_cochain};
pub use mc::{
    ad_from_mu, as_complement_valued, as_quotient_valued, linfty_relation_residual, mc_residual_ideal,
    mc_residual_simultaneous, mc_residual_subalgebra, MCResidual, Residual, Structure,
};
pub use voronov::{Dataset, VoronovData};

/// `m_k(a₁,…,a_k)` of a Voronov dataset.
pub fn voronov_higher_bracket(v: &VoronovData, args: &[crate::multilin::Cochain]) -> crate::Result<crate::multilin::Cochain> {
    v.higher_bracket(args)
}
