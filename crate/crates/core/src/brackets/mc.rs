use super::closed::{ideal_m2, subalg_m123};
use super::cone::{mapping_cone_brackets, ConeElement};
use super::voronov::VoronovData;
use crate::complexes::delta_hom_ideal;
use crate::complexes::maps::{space_hom, space_hom_complement};
use crate::error::{check_cap, Error, Result};
use crate::exactlin::{fmt_rational, q, Rational};
use crate::liealg::{IdealData, SubalgebraData};
use crate::multilin::{end_space, koszul_sign, unshuffles, Carrier, Cochain, GradedElement};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Structure {
    Dgl1aIdeal,
    LinftySubalgebra,
    LinftySimultaneous,
}

impl Structure {
    pub fn name(&self) -> &'static str {
        match self {
            Structure::Dgl1aIdeal => "dgl1a_ideal",
            Structure::LinftySubalgebra => "linfty_subalgebra",
            Structure::LinftySimultaneous => "linfty_simultaneous",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Residual {
    Cochain(Cochain),
    Cone(ConeElement),
}

#[derive(Clone, Debug)]
pub struct MCResidual {
    pub structure: Structure,
    pub residual: Residual,
    pub is_zero: bool,
}

impl MCResidual {
    fn new(structure: Structure, residual: Residual) -> Self {
        let is_zero = match &residual {
            Residual::Cochain(c) => c.is_zero(),
            Residual::Cone(c) => c.is_zero(),
        };
        MCResidual { structure, residual, is_zero }
    }

    pub fn to_json(&self) -> Value {
        let r = match &self.residual {
            Residual::Cochain(c) => c.to_json(),
            Residual::Cone(c) => c.to_json(),
        };
        json!({"structure": self.structure.name(), "zero": self.is_zero, "residual": r})
    }
}

/// The same coefficients read as an `i*⊗g/i`-valued cochain.
pub fn as_quotient_valued(d: &IdealData, c: &Cochain) -> Result<Cochain> {
    retag(c, space_hom(d, c.space.p))
}

/// The same coefficients read as an `i*⊗i^c`-valued cochain.
pub fn as_complement_valued(d: &IdealData, c: &Cochain) -> Result<Cochain> {
    retag(c, space_hom_complement(d, c.space.p))
}

fn retag(c: &Cochain, space: crate::multilin::CochainSpace) -> Result<Cochain> {
    if c.space.n != space.n || c.space.m != space.m || c.data.len() != space.dim() {
        return Err(Error::Contract("cochain does not have i*⊗g/i coefficients".into()));
    }
    Ok(Cochain::from_data(space, c.data.clone()))
}

/// `δ^Hom φ + ½m₂(φ,φ)`; zero exactly when `graph(φ)` is an ideal.
pub fn mc_residual_ideal(d: &IdealData, phi: &Cochain) -> Result<MCResidual> {
    let phi = as_quotient_valued(d, phi)?;
    let r = delta_hom_ideal(d, &phi)?.add(&ideal_m2(d, &phi, &phi)?.scale(&q(1, 2)));
    Ok(MCResidual::new(Structure::Dgl1aIdeal, Residual::Cochain(r)))
}

/// `m₁ξ + ½m₂(ξ,ξ) + ⅙m₃(ξ,ξ,ξ)`; zero exactly when `graph(ξ)` is a subalgebra.
pub fn mc_residual_subalgebra(s: &SubalgebraData, xi: &Cochain) -> Result<MCResidual> {
    let x = std::slice::from_ref(xi);
    let r = subalg_m123(s, x)?
        .add(&subalg_m123(s, &[xi.clone(), xi.clone()])?.scale(&q(1, 2)))
        .add(&subalg_m123(s, &[xi.clone(), xi.clone(), xi.clone()])?.scale(&q(1, 6)));
    Ok(MCResidual::new(Structure::LinftySubalgebra, Residual::Cochain(r)))
}

/// `ad'_x(y) = μ'(x,y)` as a 1-cochain with values in `gl(g)`.
pub fn ad_from_mu(mu: &Cochain) -> Cochain {
    let n = mu.space.n;
    Cochain::from_fn(end_space(n, n, 1), |t| {
        let mut m = vec![Rational::from_integer(0.into()); n * n];
        for col in 0..n {
            for (row, x) in mu.value_basis(&[t[0], col]).into_iter().enumerate() {
                m[row * n + col] = x;
            }
        }
        m
    })
}

/// `m̃₁X + ½m̃₂(X,X) + ⅙m̃₃(X,X,X)` for `X = μ' + ad' + φ`.
pub fn mc_residual_simultaneous(d: &IdealData, mu: &Cochain, ad: &Cochain, phi: &Cochain) -> Result<MCResidual> {
    let expected = ad_from_mu(mu);
    if ad.space.p != 1 || ad.data != expected.data {
        let i = ad.data.iter().zip(&expected.data).position(|(a, b)| a != b).unwrap_or(0);
        return Err(Error::Contract(format!(
            "ad' disagrees with μ' at coefficient {i}: {} instead of {}",
            ad.data.get(i).map(fmt_rational).unwrap_or_default(),
            fmt_rational(&expected.data[i])
        )));
    }
    let v = VoronovData::ideal(d);
    let mut l = GradedElement::from_vec(Carrier::Extended, d.n(), mu.clone());
    l.add_end(Cochain::from_data(end_space(d.n(), d.n(), 1), ad.data.clone()));
    let x = ConeElement::from_l(&v, &l).add(&ConeElement::from_a(&v, as_complement_valued(d, phi)?));
    let r = mapping_cone_brackets(&v, std::slice::from_ref(&x))?
        .add(&mapping_cone_brackets(&v, &[x.clone(), x.clone()])?.scale(&q(1, 2)))
        .add(&mapping_cone_brackets(&v, &[x.clone(), x.clone(), x])?.scale(&q(1, 6)));
    Ok(MCResidual::new(Structure::LinftySimultaneous, Residual::Cone(r)))
}

/// `Σ_{i+j=n+1} Σ_{σ∈Sh(i,n−i)} ε(σ) m_j(m_i(x_σ(1),…,x_σ(i)), x_σ(i+1),…,x_σ(n))`.
///
/// For the ideal and subalgebra structures the arguments must lie in `𝔞`.
pub fn linfty_relation_residual(structure: Structure, v: &VoronovData, args: &[ConeElement]) -> Result<ConeElement> {
    let n = args.len();
    if n == 0 {
        return Err(Error::Contract("relation needs at least one argument".into()));
    }
    check_cap("relation arity", n, 3)?;
    let expect_ideal = structure != Structure::LinftySubalgebra;
    if v.is_ideal() != expect_ideal {
        return Err(Error::Contract(format!("{} needs the matching dataset", structure.name())));
    }
    if structure != Structure::LinftySimultaneous && args.iter().any(|a| !a.l.is_zero()) {
        return Err(Error::Contract("arguments must lie in 𝔞".into()));
    }
    let degrees: Vec<i64> = args
        .iter()
        .map(|a| a.degree(v).unwrap_or(0))
        .collect();
    let mut out = ConeElement::zero(v);
    for i in 1..=n {
        for perm in unshuffles(i, n - i) {
            let eps = koszul_sign(&perm, &degrees);
            let head: Vec<ConeElement> = perm[..i].iter().map(|&k| args[k].clone()).collect();
            let mut outer = vec![mapping_cone_brackets(v, &head)?];
            outer.extend(perm[i..].iter().map(|&k| args[k].clone()));
            let term = mapping_cone_brackets(v, &outer)?;
            out = out.add(&if eps < 0 { term.neg() } else { term });
        }
    }
    Ok(out)
}
