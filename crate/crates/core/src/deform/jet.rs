//! First- and second-order deformation data: cocycles, the Kuranishi map and extension.

use crate::brackets::{as_complement_valued, as_quotient_valued, ideal_m2, subalg_m123};
use crate::cert::Certificate;
use crate::complexes::{ce_differential, delta_hom_ideal, ComplexId, ComplexTag};
use crate::error::{Error, Result};
use crate::exactlin::{q, Matrix};
use crate::liealg::{IdealData, LieAlgebra, Representation, SubalgebraData};
use crate::multilin::{unit, Cochain};
use serde_json::{json, Value};

/// `φ_t ≈ tη + t²ω`.
#[derive(Clone, Debug)]
pub struct Jet2Deformation {
    pub base: IdealData,
    pub eta: Cochain,
    pub omega: Option<Cochain>,
}

impl Jet2Deformation {
    pub fn new(base: IdealData, eta: Cochain, omega: Option<Cochain>) -> Result<Self> {
        let eta = as_complement_valued(&base, &eta)?;
        let omega = omega.map(|w| as_complement_valued(&base, &w)).transpose()?;
        Ok(Jet2Deformation { base, eta, omega })
    }

    /// `tη + t²ω` at a rational `t`.
    pub fn at(&self, t: &crate::exactlin::Rational) -> Cochain {
        let mut c = self.eta.scale(t);
        if let Some(w) = &self.omega {
            c = c.add(&w.scale(&(t * t)));
        }
        c
    }

    /// Coefficients of `t` and `t²` in the Maurer–Cartan residual of `φ_t`.
    pub fn low_order_residual(&self) -> Result<(Cochain, Cochain)> {
        let d = &self.base;
        let first = delta_hom_ideal(d, &as_quotient_valued(d, &self.eta)?)?;
        let mut second = ideal_m2(d, &self.eta, &self.eta)?.scale(&q(1, 2));
        if let Some(w) = &self.omega {
            second = second.add(&delta_hom_ideal(d, &as_quotient_valued(d, w)?)?);
        }
        Ok((first, second))
    }
}

/// First-order data whose cocycle condition is checked.
#[derive(Clone, Copy, Debug)]
pub enum Jet<'a> {
    /// `η ∈ C⁰(g;i*⊗g/i)`; condition `δ^Hom η = 0`.
    Ideal { d: &'a IdealData, eta: &'a Cochain },
    /// `η ∈ C(h;h^c)[1]` of degree 0; condition `δ_Bott η = 0`.
    Subalgebra { s: &'a SubalgebraData, eta: &'a Cochain },
    /// `φ̇ ∈ C¹(g;h)` at a morphism `φ₀: g → h`; condition `δ_{φ₀} φ̇ = 0`.
    Morphism { source: &'a LieAlgebra, target: &'a LieAlgebra, phi0: &'a Matrix, dot: &'a Cochain },
}

fn cocycle_cert(mode: &str, image: Cochain) -> Certificate {
    let dims = json!({"mode": mode, "degree": image.space.p - 1});
    match image.data.iter().position(|x| !num_traits::Zero::is_zero(x)) {
        None => Certificate::new(true, "jet-cocycle", Value::Null, dims),
        Some(i) => Certificate::new(
            false,
            "jet-cocycle",
            json!({"differential": image.to_json(), "first_nonzero_coefficient": i}),
            dims,
        ),
    }
}

pub fn jet_cocycle(jet: Jet<'_>) -> Result<Certificate> {
    match jet {
        Jet::Ideal { d, eta } => Ok(cocycle_cert("ideal", delta_hom_ideal(d, &as_quotient_valued(d, eta)?)?)),
        Jet::Subalgebra { s, eta } => Ok(cocycle_cert("subalgebra", subalg_m123(s, std::slice::from_ref(eta))?)),
        Jet::Morphism { source, target, phi0, dot } => {
            if (phi0.rows(), phi0.cols()) != (target.dim(), source.dim()) {
                return Err(Error::Input("φ₀ has the wrong shape".into()));
            }
            for i in 0..source.dim() {
                for j in i + 1..source.dim() {
                    let lhs = phi0.mul_vec(source.bracket_basis(i, j));
                    let rhs = target.bracket(&phi0.col(i), &phi0.col(j));
                    if lhs != rhs {
                        return Err(Error::Contract(format!("φ₀ is not a morphism on (e{}, e{})", i + 1, j + 1)));
                    }
                }
            }
            let action = (0..source.dim()).map(|i| target.ad(&phi0.mul_vec(&unit(source.dim(), i)))).collect();
            let rep = Representation::new(source.clone(), target.dim(), action);
            Ok(cocycle_cert("morphism", ce_differential(&rep, dot)?))
        }
    }
}

/// `½m₂(η,η)` with the verdict on its class in `H¹(i◁g)`.
#[derive(Clone, Debug)]
pub struct KuranishiReport {
    pub cocycle: Cochain,
    pub class_is_zero: bool,
}

impl KuranishiReport {
    pub fn to_json(&self) -> Value {
        json!({"cocycle": self.cocycle.to_json(), "class_is_zero": self.class_is_zero})
    }
}

fn delta0(d: &IdealData) -> Matrix {
    ComplexId::new(ComplexTag::HomIdeal, d.clone()).ambient_matrix(0)
}

fn require_closed(d: &IdealData, eta: &Cochain) -> Result<Cochain> {
    let eta = as_quotient_valued(d, eta)?;
    if eta.space.p != 0 {
        return Err(Error::Contract("η must be a 0-cochain".into()));
    }
    if !delta_hom_ideal(d, &eta)?.is_zero() {
        return Err(Error::Contract("η is not δ^Hom-closed".into()));
    }
    Ok(eta)
}

/// `[η] ↦ ½[m₂(η,η)]`.
pub fn kuranishi(d: &IdealData, eta: &Cochain) -> Result<KuranishiReport> {
    let eta = require_closed(d, eta)?;
    let c = ideal_m2(d, &eta, &eta)?.scale(&q(1, 2));
    if !delta_hom_ideal(d, &c)?.is_zero() {
        return Err(Error::Contract("½m₂(η,η) is not closed".into()));
    }
    let class_is_zero = delta0(d).solve(&c.data).is_some();
    Ok(KuranishiReport { cocycle: c, class_is_zero })
}

/// The free-variables-zero `ω` with `δ^Hom ω = −½m₂(η,η)`, or `None` when obstructed.
pub fn extend_to_second_order(d: &IdealData, eta: &Cochain) -> Result<Option<Cochain>> {
    let eta = require_closed(d, eta)?;
    let rhs = ideal_m2(d, &eta, &eta)?.scale(&q(-1, 2));
    Ok(delta0(d)
        .solve(&rhs.data)
        .map(|w| Cochain::from_data(crate::complexes::maps::space_hom_complement(d, 0), w)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::load;
    use crate::deform::chart::hom_cochain;
    use crate::liealg::ComplementRule;

    #[test]
    fn heisenberg_is_obstructed() {
        let d = load("heisenberg3").unwrap().ideal_data("center", &ComplementRule::Pivot).unwrap();
        let eta = hom_cochain(&d, &Matrix::from_i64(&[&[1], &[0]]));
        assert!(jet_cocycle(Jet::Ideal { d: &d, eta: &eta }).unwrap().verdict);
        let k = kuranishi(&d, &eta).unwrap();
        assert!(!k.class_is_zero);
        assert_eq!(extend_to_second_order(&d, &eta).unwrap(), None);
        let zero = hom_cochain(&d, &Matrix::zeros(2, 1));
        assert!(kuranishi(&d, &zero).unwrap().class_is_zero);
        assert!(extend_to_second_order(&d, &zero).unwrap().unwrap().is_zero());
    }
}
