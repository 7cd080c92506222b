//! The section `σ` of the Grassmannian bundle, its vertical linearization and the `τ` identity.

use crate::cert::Certificate;
use crate::complexes::{ComplexId, ComplexTag};
use crate::error::Result;
use crate::exactlin::{fmt_rational, q, Matrix, Rational, Subspace};
use crate::liealg::{IdealData, LieAlgebra, Splitting};
use crate::multilin::{unit, Cochain, CochainSpace, Domain, Module};
use num_traits::Zero;
use serde_json::{json, Value};

/// `W` with the orthogonal splitting `g = W ⊕ W^⊥`, so that `g/W ≅ W^⊥`.
struct Fiber<'a> {
    g: &'a LieAlgebra,
    split: Splitting,
}

impl<'a> Fiber<'a> {
    fn new(g: &'a LieAlgebra, w: &Subspace) -> Result<Self> {
        Ok(Fiber { g, split: Splitting::new(w.clone(), w.orth_complement())? })
    }

    fn kw(&self) -> usize {
        self.split.sub.dim()
    }

    fn c(&self) -> usize {
        self.g.dim() - self.kw()
    }

    fn space(&self, p: usize) -> CochainSpace {
        CochainSpace::new(p, self.g.dim(), Domain::G, Module::Custom("W*⊗g/W".into()), self.c() * self.kw())
    }

    /// `η(x, ·)` as a `c × kw` matrix.
    fn slot(&self, eta: &Cochain, x: &[Rational]) -> Matrix {
        Matrix::from_vec(self.c(), self.kw(), eta.eval_refs(&[x]))
    }

    fn sigma(&self) -> Cochain {
        let ws = self.split.sub.vectors();
        Cochain::from_fn(self.space(1), |s| {
            let x = unit(self.g.dim(), s[0]);
            let mut out = vec![Rational::zero(); self.c() * self.kw()];
            for (a, w) in ws.iter().enumerate() {
                for (b, v) in self.split.comp_coords(&self.g.bracket(&x, w)).into_iter().enumerate() {
                    out[b * self.kw() + a] = v;
                }
            }
            out
        })
    }

    /// `τ_W(η)(x, y, w_a)` as a vector in `g/W`.
    fn tau_at(&self, eta: &Cochain, x: &[Rational], y: &[Rational], a: usize) -> Vec<Rational> {
        let g = self.g;
        let w = self.split.sub.vector(a);
        let s = self.split.comp.basis();
        let ex = self.slot(eta, x);
        let ey = self.slot(eta, y);
        let exy = self.slot(eta, &g.bracket(x, y));
        let ea = unit(self.kw(), a);
        let term1 = self.split.comp_coords(&g.bracket(x, &s.mul_vec(&ey.mul_vec(&ea))));
        let term2 = ey.mul_vec(&self.split.sub_coords(&g.bracket(x, &w)));
        let term3 = self.split.comp_coords(&g.bracket(y, &s.mul_vec(&ex.mul_vec(&ea))));
        let term4 = ex.mul_vec(&self.split.sub_coords(&g.bracket(y, &w)));
        let term5 = exy.mul_vec(&ea);
        (0..self.c())
            .map(|i| &term1[i] - &term2[i] - &term3[i] + &term4[i] - &term5[i])
            .collect()
    }
}

/// `σ_W = π_{g/W} ∘ μ_g|_{g⊗W}`, stored with coefficient index `b·dim W + a`, together with the
/// first pair `(e_i, w_a)` on which it does not vanish.
#[derive(Clone, Debug)]
pub struct SigmaFiber {
    pub value: Cochain,
    pub witness: Option<(usize, usize)>,
}

impl SigmaFiber {
    pub fn is_zero(&self) -> bool {
        self.witness.is_none()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "value": self.value.to_json(),
            "zero": self.is_zero(),
            "witness": self.witness.map(|(i, a)| json!({"x": format!("e{}", i + 1), "w": a})),
        })
    }
}

pub fn sigma_fiber(g: &LieAlgebra, w: &Subspace) -> Result<SigmaFiber> {
    let f = Fiber::new(g, w)?;
    let value = f.sigma();
    let kw = f.kw();
    let witness = (0..g.dim())
        .flat_map(|i| (0..kw).map(move |a| (i, a)))
        .find(|&(i, a)| (0..f.c()).any(|b| !value.block(i)[b * kw + a].is_zero()));
    Ok(SigmaFiber { value, witness })
}

pub fn sigma_fiber_ideal(d: &IdealData) -> Result<SigmaFiber> {
    sigma_fiber(&d.algebra, d.ideal())
}

/// `f(φ)(x, u_a) = pr_{i^c}[x, u_a + φu_a] − Φ·pr_i[x, u_a + φu_a]` in `C¹(g; i*⊗g/i)` coordinates.
fn mu_phi(d: &IdealData, phi: &Matrix) -> Vec<Rational> {
    let (n, k, qd) = (d.n(), d.k(), d.qd());
    let graph = d.ideal().basis().add(&d.section().mul(phi));
    let (pi, pic) = (d.pr_i(), d.pr_ic());
    let mut out = vec![Rational::zero(); n * qd * k];
    for x in 0..n {
        for a in 0..k {
            let z = d.bracket(&unit(n, x), &graph.col(a));
            let v = pic.mul_vec(&z);
            let corr = phi.mul_vec(&pi.mul_vec(&z));
            for b in 0..qd {
                out[x * qd * k + b * k + a] = &v[b] - &corr[b];
            }
        }
    }
    out
}

/// Linearization of the section at `i` in the graph chart agrees with `δ^Hom` on `C⁰`.
pub fn vertical_tangent_check(d: &IdealData) -> Certificate {
    let (k, qd) = (d.k(), d.qd());
    let delta = ComplexId::new(ComplexTag::HomIdeal, d.clone()).ambient_matrix(0);
    let dim0 = k * qd;
    let mut cols = Vec::with_capacity(dim0);
    for j in 0..dim0 {
        let e = Matrix::from_vec(qd, k, unit(dim0, j));
        let plus = mu_phi(d, &e);
        let minus = mu_phi(d, &e.neg());
        cols.push(plus.iter().zip(&minus).map(|(p, m)| (p - m) * q(1, 2)).collect::<Vec<_>>());
    }
    let linear = Matrix::from_cols(d.n() * dim0, &cols);
    let dims = json!({"dim_C0": dim0, "dim_C1": d.n() * dim0});
    let at_zero = mu_phi(d, &Matrix::zeros(qd, k));
    if !at_zero.iter().all(Zero::is_zero) {
        return Certificate::new(false, "vertical-tangent", json!({"reason": "section does not vanish at i"}), dims);
    }
    if linear == delta {
        return Certificate::new(true, "vertical-tangent", json!({"rank": delta.rank()}), dims);
    }
    let (r, c) = (0..linear.rows())
        .flat_map(|r| (0..linear.cols()).map(move |c| (r, c)))
        .find(|&(r, c)| linear.get(r, c) != delta.get(r, c))
        .expect("matrices differ");
    Certificate::new(
        false,
        "vertical-tangent",
        json!({
            "row": r, "col": c,
            "linearization": fmt_rational(linear.get(r, c)),
            "delta_hom": fmt_rational(delta.get(r, c)),
        }),
        dims,
    )
}

/// `τ_W(σ_W) = 0` on every basis triple, using the orthogonal splitting.
pub fn tau_identity_check(g: &LieAlgebra, w: &Subspace) -> Result<Certificate> {
    let f = Fiber::new(g, w)?;
    let sigma = f.sigma();
    let n = g.dim();
    let dims = json!({"n": n, "dim_W": f.kw()});
    for x in 0..n {
        for y in x + 1..n {
            for a in 0..f.kw() {
                let v = f.tau_at(&sigma, &unit(n, x), &unit(n, y), a);
                if !v.iter().all(Zero::is_zero) {
                    return Ok(Certificate::new(
                        false,
                        "tau-identity",
                        json!({
                            "x": format!("e{}", x + 1),
                            "y": format!("e{}", y + 1),
                            "w": a,
                            "value": v.iter().map(fmt_rational).collect::<Vec<_>>(),
                        }),
                        dims,
                    ));
                }
            }
        }
    }
    Ok(Certificate::new(true, "tau-identity", Value::Null, dims))
}
