use super::algebra::LieAlgebra;
use super::ideal::IdealData;
use super::repr::{ad_i, Representation};
use crate::cert::Certificate;
use crate::exactlin::Matrix;
use crate::multilin::unit;
use serde_json::{json, Value};

/// Crossed module `φ: g₋₁ → g₀` with an action `ψ` of `g₀` on `g₋₁` by derivations.
#[derive(Clone, Debug)]
pub struct CrossedModule {
    pub g0: LieAlgebra,
    pub g_minus1: LieAlgebra,
    pub phi: Matrix,
    pub psi: Representation,
}

impl CrossedModule {
    pub fn verify(&self) -> Certificate {
        let n0 = self.g0.dim();
        let n1 = self.g_minus1.dim();
        let rep = self.psi.verify();
        if !rep.verdict {
            return Certificate::fail("crossed-module", json!({"clause": "psi is a representation", "detail": rep.witness}));
        }
        for x in 0..n0 {
            let psi_x = &self.psi.action[x];
            for y in 0..n1 {
                let lhs = self.phi.mul_vec(&psi_x.mul_vec(&unit(n1, y)));
                let rhs = self.g0.bracket(&unit(n0, x), &self.phi.col(y));
                if lhs != rhs {
                    return Certificate::fail("crossed-module", json!({"clause": "equivariance", "pair": [x, y]}));
                }
            }
            for y1 in 0..n1 {
                for y2 in 0..n1 {
                    let (a, b) = (unit(n1, y1), unit(n1, y2));
                    let lhs = psi_x.mul_vec(self.g_minus1.bracket_basis(y1, y2));
                    let r1 = self.g_minus1.bracket(&psi_x.mul_vec(&a), &b);
                    let r2 = self.g_minus1.bracket(&a, &psi_x.mul_vec(&b));
                    let rhs: Vec<_> = r1.iter().zip(&r2).map(|(p, q)| p + q).collect();
                    if lhs != rhs {
                        return Certificate::fail("crossed-module", json!({"clause": "derivation", "triple": [x, y1, y2]}));
                    }
                }
            }
        }
        for y1 in 0..n1 {
            let act = self.psi.act(&self.phi.col(y1));
            for y2 in 0..n1 {
                if act.mul_vec(&unit(n1, y2)) != self.g_minus1.bracket_basis(y1, y2) {
                    return Certificate::fail("crossed-module", json!({"clause": "Peiffer", "pair": [y1, y2]}));
                }
            }
        }
        Certificate::new(true, "crossed-module", Value::Null, json!({"g0": n0, "g_minus1": n1}))
    }
}

/// Inclusion `i ↪ g` with `g` acting on `i` by the adjoint action.
pub fn crossed_module_from_ideal(d: &IdealData) -> (CrossedModule, Certificate) {
    let n = d.n();
    let action = (0..n).map(|x| ad_i(d, &unit(n, x))).collect();
    let cm = CrossedModule {
        g0: d.algebra.clone(),
        g_minus1: d.ideal_algebra.clone(),
        phi: d.ideal().basis().clone(),
        psi: Representation::new(d.algebra.clone(), d.k(), action),
    };
    let cert = cm.verify();
    (cm, cert)
}
