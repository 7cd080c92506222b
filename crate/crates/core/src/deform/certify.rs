//! Sufficient conditions for rigidity and stability of an ideal.

use crate::cert::Certificate;
use crate::complexes::maps::pi_matrix;
use crate::complexes::{ComplexId, ComplexTag, DegreeCohomology};
use crate::error::{check_cap, Result, MAX_DIM};
use crate::liealg::IdealData;
use serde_json::json;

const SUFFICIENT_ONLY: &str = "a true verdict establishes the sufficient condition; a false verdict only means the condition fails and is not a disproof";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RigidityMethod {
    /// `H⁰(Π): H¹_π(g;g/i) → H⁰(i◁g)` is onto.
    H0Pi,
    /// `H²(g/i;g/i) = 0`.
    Whitehead,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StabilityMethod {
    /// `H¹(i◁g) = 0`.
    H1,
    /// `H¹_∧ = 0` for the wedge subcomplex.
    H1Wedge,
}

impl RigidityMethod {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "h0pi" => Some(Self::H0Pi),
            "whitehead" => Some(Self::Whitehead),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::H0Pi => "h0pi",
            Self::Whitehead => "whitehead",
        }
    }
}

impl StabilityMethod {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "h1" => Some(Self::H1),
            "h1-wedge" | "h1_wedge" => Some(Self::H1Wedge),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::H1 => "h1",
            Self::H1Wedge => "h1_wedge",
        }
    }
}

fn degree(d: &IdealData, tag: ComplexTag, k: usize) -> DegreeCohomology {
    ComplexId::new(tag, d.clone()).realize(k + 1).complex.cohomology_at(k)
}

/// Dimension of `Z⁰(i◁g)`, the tangent space to the space of ideals at `i`.
pub fn tangent_dimension(d: &IdealData) -> usize {
    degree(d, ComplexTag::HomIdeal, 0).dim_z()
}

pub fn certify_rigidity(d: &IdealData, method: RigidityMethod) -> Result<Certificate> {
    check_cap("dimension", d.n(), MAX_DIM)?;
    let cert = match method {
        RigidityMethod::H0Pi => {
            let z1 = degree(d, ComplexTag::Morphism, 1);
            let z0 = degree(d, ComplexTag::HomIdeal, 0);
            let image = pi_matrix(d, 0).mul(&z1.z);
            let rank = image.rank();
            let onto = rank == z0.dim_z() && z0.z.hstack(&image).rank() == z0.dim_z();
            let dims = json!({"dim_H1_pi": z1.dim_h(), "dim_H0_hom": z0.dim_h(), "rank_H0_Pi": rank});
            Certificate::new(
                onto,
                "rigidity-h0pi",
                json!({"cokernel_dim": z0.dim_z() - rank.min(z0.dim_z()), "note": SUFFICIENT_ONLY}),
                dims,
            )
        }
        RigidityMethod::Whitehead => {
            let h2 = degree(d, ComplexTag::Quotient, 2);
            let dims = json!({"dim_H2_quotient": h2.dim_h(), "dim_quotient": d.qd()});
            Certificate::new(h2.dim_h() == 0, "rigidity-whitehead", json!({"note": SUFFICIENT_ONLY}), dims)
        }
    };
    Ok(cert)
}

pub fn certify_stability(d: &IdealData, method: StabilityMethod) -> Result<Certificate> {
    check_cap("dimension", d.n(), MAX_DIM)?;
    let tag = match method {
        StabilityMethod::H1 => ComplexTag::HomIdeal,
        StabilityMethod::H1Wedge => ComplexTag::WedgeIdeal,
    };
    let h1 = degree(d, tag, 1);
    let z0 = tangent_dimension(d);
    let dims = json!({"dim_H1": h1.dim_h(), "dim_Z0": z0, "tangent_dim": z0, "complex": tag.name()});
    Ok(Certificate::new(
        h1.dim_h() == 0,
        &format!("stability-{}", method.name()),
        json!({"note": SUFFICIENT_ONLY}),
        dims,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::load;
    use crate::liealg::ComplementRule;

    fn pair(a: &str, i: &str) -> IdealData {
        load(a).unwrap().ideal_data(i, &ComplementRule::Pivot).unwrap()
    }

    #[test]
    fn corpus_certificates() {
        assert!(certify_stability(&pair("sl2xsl2", "factor1"), StabilityMethod::H1).unwrap().verdict);
        assert!(certify_rigidity(&pair("sl2_plus_center", "center"), RigidityMethod::Whitehead).unwrap().verdict);
        let h = certify_rigidity(&pair("heisenberg3", "center"), RigidityMethod::Whitehead).unwrap();
        assert!(!h.verdict);
        assert_eq!(h.dims["dim_H2_quotient"], 2);
        assert_eq!(tangent_dimension(&pair("heisenberg3", "center")), 2);
    }
}
