use super::graded::{extended_unchecked, gerstenhaber_bracket};
use crate::cert::Certificate;
use crate::error::{check_cap, Error, Result, MAX_ARITY};
use crate::exactlin::{Matrix, Rational};
use crate::liealg::{IdealData, SubalgebraData};
use crate::multilin::{end_space, vec_space, Carrier, Cochain, CochainSpace, Domain, GradedElement, Module};
use crate::sample;
use serde_json::json;

/// Which Voronov dataset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Dataset {
    /// `L = C(g;g)[1] ⊕ C(g;gl(g))`, `𝔞 = C(g;i*⊗i^c)`, `Θ = μ_g + ad^g`.
    Ideal(IdealData),
    /// `L = C(g;g)[1]`, `𝔞 = C(h;h^c)[1]`, `Θ = μ_g`.
    Subalgebra(SubalgebraData),
}

/// A Voronov dataset `(L, 𝔞, P, Θ)` with the inclusion `I: 𝔞 → L`.
#[derive(Clone, Debug)]
pub struct VoronovData {
    pub dataset: Dataset,
    pub theta: GradedElement,
    n: usize,
    /// Basis of the complement as columns (`n × c`).
    comp_basis: Matrix,
    /// Basis of the sub-object as columns (`n × s`).
    sub_basis: Matrix,
    pr_sub: Matrix,
    pr_comp: Matrix,
}

impl VoronovData {
    pub fn ideal(d: &IdealData) -> VoronovData {
        let n = d.n();
        let mut theta = GradedElement::from_vec(Carrier::Extended, n, d.algebra.mu_cochain());
        let ad = Cochain::from_fn(end_space(n, n, 1), |t| d.algebra.ad_basis(t[0]).data().to_vec());
        theta.add_end(ad);
        VoronovData {
            theta,
            n,
            comp_basis: d.complement().basis().clone(),
            sub_basis: d.ideal().basis().clone(),
            pr_sub: d.pr_i(),
            pr_comp: d.pr_ic(),
            dataset: Dataset::Ideal(d.clone()),
        }
    }

    pub fn subalgebra(s: &SubalgebraData) -> VoronovData {
        let n = s.algebra.dim();
        VoronovData {
            theta: GradedElement::from_vec(Carrier::Nr, 0, s.algebra.mu_cochain()),
            n,
            comp_basis: s.split.comp.basis().clone(),
            sub_basis: s.split.sub.basis().clone(),
            pr_sub: s.split.pr_sub(),
            pr_comp: s.split.pr_comp(),
            dataset: Dataset::Subalgebra(s.clone()),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn carrier(&self) -> Carrier {
        self.theta.carrier
    }

    pub fn w(&self) -> usize {
        self.theta.w
    }

    pub fn is_ideal(&self) -> bool {
        matches!(self.dataset, Dataset::Ideal(_))
    }

    /// Dimension of the sub-object (`i` or `h`) and of its complement.
    pub fn dims(&self) -> (usize, usize) {
        (self.sub_basis.cols(), self.comp_basis.cols())
    }

    /// The space of `𝔞` elements of the given degree, if that degree exists.
    pub fn a_space(&self, degree: i64) -> Option<CochainSpace> {
        let (s, c) = self.dims();
        match self.dataset {
            Dataset::Ideal(_) => (degree >= 0)
                .then(|| CochainSpace::new(degree as usize, self.n, Domain::G, Module::HomComplement, c * s)),
            Dataset::Subalgebra(_) => {
                (degree >= -1).then(|| CochainSpace::new((degree + 1) as usize, s, Domain::H, Module::Complement, c))
            }
        }
    }

    /// Degree of an `𝔞` element, checking that it lives in `𝔞`.
    pub fn a_degree(&self, a: &Cochain) -> Result<i64> {
        let d = match self.dataset {
            Dataset::Ideal(_) => a.space.p as i64,
            Dataset::Subalgebra(_) => a.space.p as i64 - 1,
        };
        match self.a_space(d) {
            Some(sp) if sp.n == a.space.n && sp.m == a.space.m && sp.domain == a.space.domain => Ok(d),
            _ => Err(Error::Contract(format!(
                "argument with domain {} and coefficients {} is not in 𝔞",
                a.space.domain.descriptor(),
                a.space.coeff.descriptor()
            ))),
        }
    }

    /// `I: 𝔞 → L`.
    pub fn include(&self, a: &Cochain) -> GradedElement {
        let n = self.n;
        match self.dataset {
            Dataset::Ideal(_) => {
                let (s, c) = self.dims();
                let mut out = Cochain::zero(end_space(n, n, a.space.p));
                for r in 0..a.space.combos() {
                    let block = Matrix::from_vec(c, s, a.block(r).to_vec());
                    if block.is_zero() {
                        continue;
                    }
                    let m = self.comp_basis.mul(&block).mul(&self.pr_sub);
                    out.data[r * n * n..(r + 1) * n * n].clone_from_slice(m.data());
                }
                GradedElement::from_end(n, out)
            }
            Dataset::Subalgebra(_) => {
                let cols: Vec<Vec<Rational>> = self.pr_sub.columns();
                let c = Cochain::from_fn(vec_space(n, a.space.p), |t| {
                    let args: Vec<&[Rational]> = t.iter().map(|&i| cols[i].as_slice()).collect();
                    self.comp_basis.mul_vec(&a.eval_refs(&args))
                });
                GradedElement::from_vec(Carrier::Nr, 0, c)
            }
        }
    }

    /// `P: L → 𝔞`, restricted to the component of `𝔞` of the given degree.
    pub fn project(&self, x: &GradedElement, degree: i64) -> Cochain {
        let space = self.a_space(degree).expect("degree of 𝔞");
        let p = space.p;
        match self.dataset {
            Dataset::Ideal(_) => {
                let (s, c) = self.dims();
                let n = self.n;
                let Some(e) = x.end_part(p) else { return Cochain::zero(space) };
                let mut out = Cochain::zero(space);
                for r in 0..e.space.combos() {
                    let m = Matrix::from_vec(n, n, e.block(r).to_vec());
                    if m.is_zero() {
                        continue;
                    }
                    let v = self.pr_comp.mul(&m).mul(&self.sub_basis);
                    out.data[r * c * s..(r + 1) * c * s].clone_from_slice(v.data());
                }
                out
            }
            Dataset::Subalgebra(_) => {
                let Some(v) = x.vec_part(p) else { return Cochain::zero(space) };
                let hs = self.sub_basis.columns();
                Cochain::from_fn(space, |t| {
                    let args: Vec<&[Rational]> = t.iter().map(|&i| hs[i].as_slice()).collect();
                    self.pr_comp.mul_vec(&v.eval_refs(&args))
                })
            }
        }
    }

    /// Every nonzero component of `P x`.
    pub fn project_all(&self, x: &GradedElement) -> Vec<(i64, Cochain)> {
        let degrees: Vec<i64> = match self.dataset {
            Dataset::Ideal(_) => x.ends.keys().map(|&q| q as i64).collect(),
            Dataset::Subalgebra(_) => x.vecs.keys().map(|&r| r as i64 - 1).collect(),
        };
        degrees
            .into_iter()
            .filter(|&d| self.a_space(d).is_some())
            .map(|d| (d, self.project(x, d)))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    pub(crate) fn bracket(&self, a: &GradedElement, b: &GradedElement) -> GradedElement {
        match self.carrier() {
            Carrier::Extended => extended_unchecked(&self.lift(a), &self.lift(b)),
            Carrier::Nr => gerstenhaber_bracket(a, b).expect("elements of C(g;g)[1]"),
        }
    }

    pub(crate) fn lift(&self, x: &GradedElement) -> GradedElement {
        let mut y = x.clone();
        y.carrier = self.carrier();
        y.w = self.w();
        y
    }

    /// `P⟦…⟦⟦x, I a₁⟧, I a₂⟧, …, I a_k⟧`.
    pub fn nested(&self, x: &GradedElement, x_degree: i64, args: &[Cochain]) -> Result<Cochain> {
        let mut deg = x_degree;
        let mut acc = x.clone();
        for a in args {
            deg += self.a_degree(a)?;
            acc = self.bracket(&acc, &self.include(a));
        }
        match self.a_space(deg) {
            Some(_) => Ok(self.project(&acc, deg)),
            None => Err(Error::Contract(format!("nested bracket of degree {deg} has no 𝔞 component"))),
        }
    }

    /// `m_k(a₁,…,a_k) = P⟦…⟦Θ,a₁⟧,…,a_k⟧`.
    pub fn higher_bracket(&self, args: &[Cochain]) -> Result<Cochain> {
        if args.is_empty() {
            return Err(Error::Contract("m_k needs at least one argument".into()));
        }
        check_cap("arity", args.len(), MAX_ARITY)?;
        self.nested(&self.theta, 1, args)
    }

    /// Checks the four defining clauses on `samples` random elements of degrees 0 and 1.
    pub fn validate(&self, samples: usize, seed: u64) -> Certificate {
        let mut rng = sample::rng(seed);
        let theta_sq = self.bracket(&self.theta, &self.theta);
        let mut abelian = true;
        let mut kernel_closed = true;
        let mut section = true;
        let low = if self.is_ideal() { 0 } else { -1 };
        for _ in 0..samples {
            let da = rand::Rng::gen_range(&mut rng, low..=1);
            let db = rand::Rng::gen_range(&mut rng, 0..=1);
            let a = sample::cochain(&mut rng, self.a_space(da).unwrap(), 0.5);
            let b = sample::cochain(&mut rng, self.a_space(db).unwrap(), 0.5);
            if !self.bracket(&self.include(&a), &self.include(&b)).is_zero() {
                abelian = false;
            }
            if !self.project(&self.include(&a), da).sub(&a).is_zero() {
                section = false;
            }
            let x = self.random_kernel(&mut rng, da.max(0));
            let y = self.random_kernel(&mut rng, db);
            let z = self.bracket(&x, &y);
            if !self.project_all(&z).is_empty() {
                kernel_closed = false;
            }
        }
        let theta_in_kernel = self.project_all(&self.theta).is_empty();
        let verdict = abelian && kernel_closed && section && theta_in_kernel && theta_sq.is_zero();
        Certificate::new(
            verdict,
            "voronov-dataset",
            json!({
                "abelian": abelian,
                "kernel_closed": kernel_closed,
                "projection_splits_inclusion": section,
                "theta_in_kernel": theta_in_kernel,
                "theta_squared_zero": theta_sq.is_zero(),
            }),
            json!({"samples": samples}),
        )
    }

    /// A random element `x − I(P x)` of `ker P` of the given degree.
    pub fn random_kernel<R: rand::Rng>(&self, rng: &mut R, degree: i64) -> GradedElement {
        let x = self.random_element(rng, degree);
        let mut out = x.clone();
        for (_, c) in self.project_all(&x) {
            out = out.sub(&self.lift(&self.include(&c)));
        }
        out
    }

    /// A random homogeneous element of `L` of the given degree.
    pub fn random_element<R: rand::Rng>(&self, rng: &mut R, degree: i64) -> GradedElement {
        let n = self.n;
        let mut x = GradedElement::zero(self.carrier(), n, self.w());
        let r = degree + 1;
        if r >= 0 && r as usize <= n {
            x.add_vec(sample::cochain(rng, vec_space(n, r as usize), 0.4));
        }
        if self.carrier() == Carrier::Extended && degree >= 0 && degree as usize <= n {
            x.add_end(sample::cochain(rng, end_space(n, self.w(), degree as usize), 0.3));
        }
        x
    }

    /// Basis of `𝔞` in one degree.
    pub fn a_basis(&self, degree: i64) -> Vec<Cochain> {
        let Some(space) = self.a_space(degree) else { return vec![] };
        (0..space.dim())
            .map(|i| {
                let mut c = Cochain::zero(space.clone());
                c.data[i] = Rational::from_integer(1.into());
                c
            })
            .collect()
    }
}
