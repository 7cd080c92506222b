//! Closed-form brackets for the ideal dgL[1]a and the subalgebra L∞[1]-algebra.

use super::voronov::VoronovData;
use crate::complexes::maps::space_hom;
use crate::error::{Error, Result};
use crate::exactlin::{q, Matrix, Rational};
use crate::liealg::{IdealData, SubalgebraData};
use crate::multilin::{unit, Cochain, CochainSpace, Domain, Module};
use num_traits::Zero;

fn hom_matrix(c: &Cochain, rows: usize, cols: usize) -> Matrix {
    Matrix::from_vec(rows, cols, c.block(0).to_vec())
}

fn check_hom0(d: &IdealData, c: &Cochain) -> Result<()> {
    let ok = c.space.p == 0 && c.space.n == d.n() && c.space.m == d.qd() * d.k();
    ok.then_some(()).ok_or_else(|| Error::Contract("expected a 0-cochain in C(g;i*⊗i^c)".into()))
}

/// `m₂(ψ,φ)(x,u) = −ψ(pr_i[x,φ(u)]) − φ(pr_i[x,ψ(u)])`, returned `g/i`-valued.
pub fn ideal_m2(d: &IdealData, a: &Cochain, b: &Cochain) -> Result<Cochain> {
    check_hom0(d, a)?;
    check_hom0(d, b)?;
    let (n, k, qd) = (d.n(), d.k(), d.qd());
    let psi = hom_matrix(a, qd, k);
    let phi = hom_matrix(b, qd, k);
    let c = d.section();
    let pr_i = d.pr_i();
    let cphi: Vec<Vec<Rational>> = c.mul(&phi).columns();
    let cpsi: Vec<Vec<Rational>> = c.mul(&psi).columns();
    Ok(Cochain::from_fn(space_hom(d, 1), |t| {
        let x = unit(n, t[0]);
        let mut out = vec![Rational::zero(); qd * k];
        for a in 0..k {
            let t1 = psi.mul_vec(&pr_i.mul_vec(&d.bracket(&x, &cphi[a])));
            let t2 = phi.mul_vec(&pr_i.mul_vec(&d.bracket(&x, &cpsi[a])));
            for bq in 0..qd {
                out[bq * k + a] = -(&t1[bq] + &t2[bq]);
            }
        }
        out
    }))
}

/// Closed-form pieces for degree-0 elements `ξ: h → h^c`.
struct SubalgForms<'a> {
    s: &'a SubalgebraData,
    comp: Matrix,
    pr_h: Matrix,
    pr_hc: Matrix,
    hs: Vec<Vec<Rational>>,
}

impl<'a> SubalgForms<'a> {
    fn new(s: &'a SubalgebraData) -> Self {
        SubalgForms {
            s,
            comp: s.split.comp.basis().clone(),
            pr_h: s.split.pr_sub(),
            pr_hc: s.split.pr_comp(),
            hs: s.split.sub.vectors(),
        }
    }

    fn space(&self, p: usize) -> CochainSpace {
        CochainSpace::new(p, self.s.split.k(), Domain::H, Module::Complement, self.comp.cols())
    }

    /// `Ξ` with `Ξ[b][a] = ξ(h_a)_b`.
    fn matrix(&self, xi: &Cochain) -> Matrix {
        let (sd, c) = (self.s.split.k(), self.comp.cols());
        let mut m = Matrix::zeros(c, sd);
        for a in 0..sd {
            for (b, x) in xi.block(a).iter().enumerate() {
                m.set(b, a, x.clone());
            }
        }
        m
    }

    /// `ξ(h_a)` as a vector of `g`.
    fn lifted(&self, xi: &Matrix) -> Vec<Vec<Rational>> {
        self.comp.mul(xi).columns()
    }

    fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        self.s.algebra.bracket(x, y)
    }

    fn hat(&self, xi: &Matrix, v: &[Rational]) -> Vec<Rational> {
        xi.mul_vec(&self.pr_h.mul_vec(v))
    }

    fn two_form(&self, mut f: impl FnMut(usize, usize) -> Vec<Rational>) -> Cochain {
        Cochain::from_fn(self.space(2), |t| f(t[0], t[1]))
    }

    /// `m₁(ξ)(h₁,h₂) = p_{h^c}([h₁,ξh₂] − [h₂,ξh₁]) − ξ̂[h₁,h₂]`.
    fn m1(&self, xi: &Cochain) -> Cochain {
        let m = self.matrix(xi);
        let l = self.lifted(&m);
        self.two_form(|a, b| {
            let mut v = self.bracket(&self.hs[a], &l[b]);
            for (x, y) in v.iter_mut().zip(self.bracket(&self.hs[b], &l[a])) {
                *x -= y;
            }
            let p = self.pr_hc.mul_vec(&v);
            let h = self.hat(&m, &self.bracket(&self.hs[a], &self.hs[b]));
            p.iter().zip(h).map(|(x, y)| x - y).collect()
        })
    }

    /// `m₂(ξ,ξ)(h₁,h₂) = 2p_{h^c}[ξh₁,ξh₂] − 2ξ̂[ξh₁,h₂] + 2ξ̂[ξh₂,h₁]`.
    fn m2_diag(&self, xi: &Cochain) -> Cochain {
        let m = self.matrix(xi);
        let l = self.lifted(&m);
        let two = Rational::from_integer(2.into());
        self.two_form(|a, b| {
            let p = self.pr_hc.mul_vec(&self.bracket(&l[a], &l[b]));
            let h1 = self.hat(&m, &self.bracket(&l[a], &self.hs[b]));
            let h2 = self.hat(&m, &self.bracket(&l[b], &self.hs[a]));
            (0..p.len()).map(|i| &two * (&p[i] - &h1[i] + &h2[i])).collect()
        })
    }

    /// `m₃(ξ,ξ,ξ)(h₁,h₂) = −6ξ̂([ξh₁,ξh₂])`.
    fn m3_diag(&self, xi: &Cochain) -> Cochain {
        let m = self.matrix(xi);
        let l = self.lifted(&m);
        let six = Rational::from_integer((-6).into());
        self.two_form(|a, b| self.hat(&m, &self.bracket(&l[a], &l[b])).iter().map(|x| x * &six).collect())
    }
}

/// Polarization of a homogeneous form of degree `args.len()` from its diagonal.
fn polarize(args: &[Cochain], f: impl Fn(&Cochain) -> Cochain) -> Cochain {
    let k = args.len();
    let mut acc: Option<Cochain> = None;
    for mask in 1u32..(1 << k) {
        let mut sum = args[mask.trailing_zeros() as usize].clone();
        for (i, a) in args.iter().enumerate() {
            if mask & (1 << i) != 0 && i != mask.trailing_zeros() as usize {
                sum = sum.add(a);
            }
        }
        let v = f(&sum);
        let sign = (k - mask.count_ones() as usize) % 2 == 1;
        let v = if sign { v.neg() } else { v };
        acc = Some(match acc {
            Some(x) => x.add(&v),
            None => v,
        });
    }
    let fact: i64 = (1..=k as i64).product();
    acc.expect("at least one argument").scale(&q(1, fact))
}

/// `m_k` of the subalgebra L∞[1]-algebra: closed forms on degree-0 inputs, the generic
/// engine otherwise.
pub fn subalg_m123(s: &SubalgebraData, args: &[Cochain]) -> Result<Cochain> {
    let forms = SubalgForms::new(s);
    let deg0 = forms.space(1);
    let all_deg0 = args.iter().all(|a| a.space.p == 1 && a.space.n == deg0.n && a.space.m == deg0.m);
    if !all_deg0 || args.is_empty() {
        return VoronovData::subalgebra(s).higher_bracket(args);
    }
    Ok(match args.len() {
        1 => forms.m1(&args[0]),
        2 => polarize(args, |x| forms.m2_diag(x)),
        3 => polarize(args, |x| forms.m3_diag(x)),
        _ => Cochain::zero(forms.space(2)),
    })
}
