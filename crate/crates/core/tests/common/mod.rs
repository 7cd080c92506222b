#![allow(dead_code)]

use ideform::exactlin::{q, Matrix, Rational, Subspace};
use ideform::liealg::{IdealData, LieAlgebra};
use ideform::multilin::{unit, vec_space, Cochain};
use proptest::prelude::*;

pub fn rational() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| q(n, d))
}

pub fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Matrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        proptest::collection::vec(rational(), r * c).prop_map(move |v| Matrix::from_vec(r, c, v))
    })
}

/// `P μ(P⁻¹·, P⁻¹·)`, a bracket isomorphic to `g`.
pub fn transport(g: &LieAlgebra, p: &Matrix) -> Cochain {
    let inv = p.inverse().expect("invertible");
    let n = g.dim();
    Cochain::from_fn(vec_space(n, 2), |s| {
        p.mul_vec(&g.bracket(&inv.mul_vec(&unit(n, s[0])), &inv.mul_vec(&unit(n, s[1]))))
    })
}

/// `graph(Ξ) = {u + CΞu}` for a map `W → C` given in the bases.
pub fn graph(sub: &Subspace, comp: &Subspace, m: &Matrix) -> Subspace {
    Subspace::span(&sub.basis().add(&comp.basis().mul(m)))
}

pub fn short_pairs() -> Vec<(String, String, IdealData)> {
    ideform::corpus::all_pairs().into_iter().filter(|(_, _, d)| d.n() <= 4).collect()
}
