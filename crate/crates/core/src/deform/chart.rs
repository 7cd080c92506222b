//! Graph charts on the Grassmannian.

use crate::complexes::maps::space_hom_complement;
use crate::error::{Error, Result};
use crate::exactlin::{fmt_rational, Matrix, Rational, Subspace};
use crate::liealg::{IdealData, Splitting};
use crate::multilin::Cochain;

fn fmt_vec(v: &[Rational]) -> String {
    format!("({})", v.iter().map(fmt_rational).collect::<Vec<_>>().join(", "))
}

/// `Φ` with `Φ[b][a]` the `b`-th complement coordinate of `φ(u_a)`.
pub fn hom_matrix(d: &IdealData, phi: &Cochain) -> Result<Matrix> {
    if phi.space.p != 0 || phi.space.m != d.qd() * d.k() || phi.space.n != d.n() {
        return Err(Error::Contract("expected a 0-cochain with values in i*⊗i^c".into()));
    }
    Ok(Matrix::from_vec(d.qd(), d.k(), phi.data.clone()))
}

pub fn hom_cochain(d: &IdealData, m: &Matrix) -> Cochain {
    Cochain::from_data(space_hom_complement(d, 0), m.data().to_vec())
}

/// `{u + φ(u) | u ∈ W}` for `φ: W → C` given in the bases of `W` and `C`.
pub fn graph_of(w: &Subspace, c: &Subspace, phi: &Matrix) -> Subspace {
    Subspace::span(&w.basis().add(&c.basis().mul(phi)))
}

/// `graph(φ) = {u + φ(u) | u ∈ i}`.
pub fn graph_subspace(d: &IdealData, phi: &Cochain) -> Result<Subspace> {
    Ok(graph_of(d.ideal(), d.complement(), &hom_matrix(d, phi)?))
}

/// The `φ` with `graph(φ) = W`, i.e. `φ = pr_{i^c} ∘ (pr_i|_W)⁻¹`.
pub fn chart_inverse(d: &IdealData, w: &Subspace) -> Result<Cochain> {
    if w.ambient() != d.n() {
        return Err(Error::Input(format!("subspace of Q^{} in an algebra of dimension {}", w.ambient(), d.n())));
    }
    let a = d.pr_i().mul(w.basis());
    if w.dim() != d.k() || a.rank() < a.cols() || a.rows() != a.cols() {
        let common = w.intersection(d.complement());
        let v = if common.dim() > 0 { fmt_vec(&common.vector(0)) } else { "none".into() };
        return Err(Error::Transversality(format!(
            "{v} (dim W = {}, dim i = {})",
            w.dim(),
            d.k()
        )));
    }
    let inv = a.inverse().expect("checked rank");
    let phi = d.pr_ic().mul(w.basis()).mul(&inv);
    Ok(hom_cochain(d, &phi))
}

/// Re-expresses `φ₁: W → c₁` as `φ₂ = Bφ₁(id + Aφ₁)⁻¹: W → c₂`, where `v = Av + Bv` splits
/// `v ∈ c₁` along `W ⊕ c₂`. The two graphs are checked to coincide.
pub fn chart_transition(w: &Subspace, c1: &Subspace, c2: &Subspace, phi1: &Matrix) -> Result<Matrix> {
    if (phi1.rows(), phi1.cols()) != (c1.dim(), w.dim()) {
        return Err(Error::Input(format!(
            "map of shape {}×{} for W of dimension {} and c1 of dimension {}",
            phi1.rows(),
            phi1.cols(),
            w.dim(),
            c1.dim()
        )));
    }
    Splitting::new(w.clone(), c1.clone())?;
    let s2 = Splitting::new(w.clone(), c2.clone())?;
    let a = s2.pr_sub().mul(c1.basis());
    let b = s2.pr_comp().mul(c1.basis());
    let m = Matrix::identity(w.dim()).add(&a.mul(phi1));
    let inv = m
        .inverse()
        .ok_or_else(|| Error::Contract("chart overlap violated: id + Aφ is not invertible".into()))?;
    let phi2 = b.mul(phi1).mul(&inv);
    if !graph_of(w, c1, phi1).same_as(&graph_of(w, c2, &phi2)) {
        return Err(Error::Contract("chart transition changed the graph".into()));
    }
    Ok(phi2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::load;
    use crate::exactlin::qi;
    use crate::liealg::ComplementRule;

    #[test]
    fn heisenberg_graph_round_trip() {
        let d = load("heisenberg3").unwrap().ideal_data("center", &ComplementRule::Pivot).unwrap();
        let phi = hom_cochain(&d, &Matrix::from_i64(&[&[1], &[0]]));
        let g = graph_subspace(&d, &phi).unwrap();
        assert!(g.same_as(&Subspace::span_vectors(3, &[vec![qi(1), qi(0), qi(1)]])));
        assert_eq!(chart_inverse(&d, &g).unwrap(), phi);
        let bad = Subspace::coordinate(3, &[0]);
        assert!(matches!(chart_inverse(&d, &bad), Err(Error::Transversality(_))));
    }
}
