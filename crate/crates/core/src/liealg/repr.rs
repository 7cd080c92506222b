use super::algebra::LieAlgebra;
use super::ideal::IdealData;
use crate::cert::Certificate;
use crate::exactlin::{Matrix, Rational};
use crate::multilin::unit;
use serde_json::{json, Value};

/// A representation given by the matrices `ρ(e_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub algebra: LieAlgebra,
    pub module_dim: usize,
    pub action: Vec<Matrix>,
}

impl Representation {
    pub fn new(algebra: LieAlgebra, module_dim: usize, action: Vec<Matrix>) -> Self {
        assert_eq!(action.len(), algebra.dim(), "one matrix per basis element");
        for a in &action {
            assert_eq!((a.rows(), a.cols()), (module_dim, module_dim), "action matrix size");
        }
        Representation { algebra, module_dim, action }
    }

    pub fn trivial(algebra: LieAlgebra, module_dim: usize) -> Self {
        let n = algebra.dim();
        Self::new(algebra, module_dim, vec![Matrix::zeros(module_dim, module_dim); n])
    }

    pub fn adjoint(g: &LieAlgebra) -> Self {
        let action = (0..g.dim()).map(|i| g.ad_basis(i)).collect();
        Self::new(g.clone(), g.dim(), action)
    }

    /// `ρ(x)` for a general vector `x`.
    pub fn act(&self, x: &[Rational]) -> Matrix {
        let mut m = Matrix::zeros(self.module_dim, self.module_dim);
        for (i, xi) in x.iter().enumerate() {
            if *xi != Rational::from_integer(0.into()) {
                m = m.add(&self.action[i].scale(xi));
            }
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.action.iter().all(Matrix::is_zero)
    }

    /// `ρ([e_i,e_j]) = [ρ(e_i), ρ(e_j)]` for all basis pairs.
    pub fn verify(&self) -> Certificate {
        let n = self.algebra.dim();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = self.act(self.algebra.bracket_basis(i, j));
                let a = &self.action[i];
                let b = &self.action[j];
                let rhs = a.mul(b).sub(&b.mul(a));
                if lhs != rhs {
                    return Certificate::fail("representation", json!({"pair": [i, j]}));
                }
            }
        }
        Certificate::new(true, "representation", Value::Null, json!({"module_dim": self.module_dim}))
    }
}

/// Matrix of `Φ ↦ LΦ − ΦR` on `V×U` matrices stored row-major (`row * U + col`).
pub fn hom_action(left: &Matrix, right: &Matrix) -> Matrix {
    let v = left.rows();
    let u = right.rows();
    let d = v * u;
    let mut m = Matrix::zeros(d, d);
    for b in 0..v {
        for a in 0..u {
            let src = b * u + a;
            for b2 in 0..v {
                m.add_at(b2 * u + a, src, left.get(b2, b));
            }
            for a2 in 0..u {
                let x = right.get(a, a2);
                m.add_at(b * u + a2, src, &-x);
            }
        }
    }
    m
}

/// The five representations attached to an ideal.
#[derive(Clone, Debug)]
pub struct StandardReps {
    pub ad: Representation,
    pub ad_i: Representation,
    pub ad_quot: Representation,
    pub ad_hom: Representation,
    pub bott: Representation,
}

/// `ad^i_x = pr_i ∘ ad_x ∘ ι_i` as a k×k matrix.
pub fn ad_i(d: &IdealData, x: &[Rational]) -> Matrix {
    d.pr_i().mul(&d.algebra.ad(x)).mul(d.ideal().basis())
}

/// `ad^{g/i}_x = π ∘ ad_x ∘ s`.
pub fn ad_quot(d: &IdealData, x: &[Rational]) -> Matrix {
    d.pr_ic().mul(&d.algebra.ad(x)).mul(&d.section())
}

pub fn standard_representations(d: &IdealData) -> StandardReps {
    let g = &d.algebra;
    let n = d.n();
    let xs: Vec<Vec<Rational>> = (0..n).map(|i| unit(n, i)).collect();
    let adi: Vec<Matrix> = xs.iter().map(|x| ad_i(d, x)).collect();
    let adq: Vec<Matrix> = xs.iter().map(|x| ad_quot(d, x)).collect();
    let adh: Vec<Matrix> = adq.iter().zip(&adi).map(|(q, i)| hom_action(q, i)).collect();
    let bott: Vec<Matrix> = d
        .ideal()
        .vectors()
        .iter()
        .map(|u| d.pr_ic().mul(&g.ad(u)).mul(&d.section()))
        .collect();
    StandardReps {
        ad: Representation::adjoint(g),
        ad_i: Representation::new(g.clone(), d.k(), adi),
        ad_quot: Representation::new(g.clone(), d.qd(), adq),
        ad_hom: Representation::new(g.clone(), d.qd() * d.k(), adh),
        bott: Representation::new(d.ideal_algebra.clone(), d.qd(), bott),
    }
}

/// Action of `g` on `gl(g)` by `(r_x A)(y) = [x, A y] − A[x, y]`.
pub fn gl_representation(g: &LieAlgebra) -> Representation {
    let action = (0..g.dim()).map(|i| {
        let a = g.ad_basis(i);
        hom_action(&a, &a)
    });
    Representation::new(g.clone(), g.dim() * g.dim(), action.collect())
}

/// Action of `g/i` on itself through the quotient bracket.
pub fn quotient_adjoint(d: &IdealData) -> Representation {
    Representation::adjoint(&d.quotient)
}

/// Action of `g` on `g/i` through `π`: `x · q = [π x, q]`.
pub fn morphism_representation(d: &IdealData) -> Representation {
    let n = d.n();
    let action = (0..n).map(|i| ad_quot(d, &unit(n, i))).collect();
    Representation::new(d.algebra.clone(), d.qd(), action)
}
