//! Lie algebras by structure constants, ideals, quotients and representations.

mod algebra;
mod crossed;
mod ideal;
mod repr;

pub use algebra::{subspace_from_json, subspace_to_json, LieAlgebra};
pub use crossed::{crossed_module_from_ideal, CrossedModule};
pub use ideal::{
    make_ideal_data, make_subalgebra_data, restricted_algebra, ComplementRule, IdealData, Splitting,
    SubalgebraData,
};
pub use repr::{
    ad_i, ad_quot, gl_representation, hom_action, morphism_representation, quotient_adjoint,
    standard_representations, Representation, StandardReps,
};

use crate::cert::Certificate;
use crate::exactlin::Subspace;

pub fn validate_lie_algebra(g: &LieAlgebra) -> Certificate {
    g.validate()
}

pub fn is_subalgebra(g: &LieAlgebra, w: &Subspace) -> Certificate {
    g.is_subalgebra(w)
}

pub fn is_ideal(g: &LieAlgebra, w: &Subspace) -> Certificate {
    g.is_ideal(w)
}
