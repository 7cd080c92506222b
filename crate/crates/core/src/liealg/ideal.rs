use super::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{fmt_rational, Matrix, Rational, Subspace};
use num_traits::Zero;

/// How to pick the complement of an ideal or subalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComplementRule {
    Pivot,
    Orthogonal,
    Explicit(Subspace),
}

impl ComplementRule {
    pub fn name(&self) -> &'static str {
        match self {
            ComplementRule::Pivot => "pivot",
            ComplementRule::Orthogonal => "orth",
            ComplementRule::Explicit(_) => "explicit",
        }
    }

    pub fn apply(&self, s: &Subspace) -> Subspace {
        match self {
            ComplementRule::Pivot => s.complement(),
            ComplementRule::Orthogonal => s.orth_complement(),
            ComplementRule::Explicit(c) => c.clone(),
        }
    }
}

/// A direct sum decomposition `V = S ⊕ C` with the coordinate projections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Splitting {
    pub sub: Subspace,
    pub comp: Subspace,
    inv: Matrix,
}

impl Splitting {
    pub fn new(sub: Subspace, comp: Subspace) -> Result<Splitting> {
        let n = sub.ambient();
        if comp.ambient() != n {
            return Err(Error::Input("complement lives in a different ambient space".into()));
        }
        let both = sub.basis().hstack(comp.basis());
        if sub.dim() + comp.dim() != n || both.rank() != n {
            let w = sub.intersection(&comp);
            let v = if w.dim() > 0 { w.vector(0) } else { vec![] };
            return Err(Error::Transversality(format!(
                "complement of dimension {} for a subspace of dimension {} in dimension {n}; common vector ({})",
                comp.dim(),
                sub.dim(),
                v.iter().map(fmt_rational).collect::<Vec<_>>().join(", ")
            )));
        }
        let inv = both.inverse().expect("full rank");
        Ok(Splitting { sub, comp, inv })
    }

    pub fn n(&self) -> usize {
        self.sub.ambient()
    }

    pub fn k(&self) -> usize {
        self.sub.dim()
    }

    /// Coordinates along the subspace basis (k × n).
    pub fn pr_sub(&self) -> Matrix {
        self.inv.row_range(0, self.k())
    }

    /// Coordinates along the complement basis ((n-k) × n).
    pub fn pr_comp(&self) -> Matrix {
        self.inv.row_range(self.k(), self.n())
    }

    pub fn sub_coords(&self, v: &[Rational]) -> Vec<Rational> {
        self.pr_sub().mul_vec(v)
    }

    pub fn comp_coords(&self, v: &[Rational]) -> Vec<Rational> {
        self.pr_comp().mul_vec(v)
    }

    /// Vector of the subspace with the given coordinates.
    pub fn from_sub(&self, a: &[Rational]) -> Vec<Rational> {
        self.sub.basis().mul_vec(a)
    }

    pub fn from_comp(&self, b: &[Rational]) -> Vec<Rational> {
        self.comp.basis().mul_vec(b)
    }
}

/// Structure constants of a subalgebra in the basis of the subspace.
pub fn restricted_algebra(g: &LieAlgebra, split: &Splitting) -> LieAlgebra {
    let k = split.k();
    let vs = split.sub.vectors();
    let pr = split.pr_sub();
    let mut c = vec![Rational::zero(); k * k * k];
    for a in 0..k {
        for b in 0..k {
            let z = pr.mul_vec(&g.bracket(&vs[a], &vs[b]));
            for (t, x) in z.into_iter().enumerate() {
                c[(a * k + b) * k + t] = x;
            }
        }
    }
    LieAlgebra::from_constants(k, c)
}

/// An ideal with a chosen complement and everything derived from it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealData {
    pub algebra: LieAlgebra,
    pub split: Splitting,
    /// `g/i` in the basis `π(c_b)` of pushed complement vectors.
    pub quotient: LieAlgebra,
    /// `i` with its own bracket in the basis `u_a`.
    pub ideal_algebra: LieAlgebra,
    pub rule: String,
}

impl IdealData {
    pub fn n(&self) -> usize {
        self.split.n()
    }

    pub fn k(&self) -> usize {
        self.split.k()
    }

    /// Dimension of `g/i`.
    pub fn qd(&self) -> usize {
        self.n() - self.k()
    }

    pub fn ideal(&self) -> &Subspace {
        &self.split.sub
    }

    pub fn complement(&self) -> &Subspace {
        &self.split.comp
    }

    pub fn pr_i(&self) -> Matrix {
        self.split.pr_sub()
    }

    pub fn pr_ic(&self) -> Matrix {
        self.split.pr_comp()
    }

    /// `π: g → g/i` in the quotient basis; equal to `pr_ic` in coordinates.
    pub fn quotient_projection(&self) -> Matrix {
        self.split.pr_comp()
    }

    /// Right inverse of `π` with image `i^c`.
    pub fn section(&self) -> Matrix {
        self.split.comp.basis().clone()
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        self.algebra.bracket(x, y)
    }
}

pub fn make_ideal_data(g: &LieAlgebra, i: &Subspace, rule: &ComplementRule) -> Result<IdealData> {
    if i.ambient() != g.dim() {
        return Err(Error::Input(format!(
            "subspace of Q^{} for an algebra of dimension {}",
            i.ambient(),
            g.dim()
        )));
    }
    let cert = g.is_ideal(i);
    if !cert.verdict {
        return Err(Error::NotIdeal {
            x: format!("e{}", cert.witness["basis_index"].as_u64().unwrap_or(0) + 1),
            w: cert.witness["w_b"].as_str().unwrap_or("").to_string(),
        });
    }
    let split = Splitting::new(i.clone(), rule.apply(i))?;
    let q = split.n() - split.k();
    let cs = split.comp.vectors();
    let pr = split.pr_comp();
    let mut c = vec![Rational::zero(); q * q * q];
    for a in 0..q {
        for b in 0..q {
            let z = pr.mul_vec(&g.bracket(&cs[a], &cs[b]));
            for (t, x) in z.into_iter().enumerate() {
                c[(a * q + b) * q + t] = x;
            }
        }
    }
    let ideal_algebra = restricted_algebra(g, &split);
    Ok(IdealData {
        algebra: g.clone(),
        split,
        quotient: LieAlgebra::from_constants(q, c),
        ideal_algebra,
        rule: rule.name().to_string(),
    })
}

/// A subalgebra `h` with complement `h^c`, the setting of subalgebra deformations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubalgebraData {
    pub algebra: LieAlgebra,
    pub split: Splitting,
    pub sub_algebra: LieAlgebra,
}

pub fn make_subalgebra_data(g: &LieAlgebra, h: &Subspace, rule: &ComplementRule) -> Result<SubalgebraData> {
    let cert = g.is_subalgebra(h);
    if !cert.verdict {
        return Err(Error::Contract(format!("not a subalgebra: {}", cert.witness)));
    }
    let split = Splitting::new(h.clone(), rule.apply(h))?;
    let sub_algebra = restricted_algebra(g, &split);
    Ok(SubalgebraData { algebra: g.clone(), split, sub_algebra })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::qi;

    #[test]
    fn heisenberg_center_quotient_is_abelian() {
        let g = LieAlgebra::from_brackets(3, &[(0, 1, vec![(2, qi(1))])]);
        let d = make_ideal_data(&g, &Subspace::coordinate(3, &[2]), &ComplementRule::Pivot).unwrap();
        assert_eq!(d.quotient, LieAlgebra::abelian(2));
        assert_eq!(d.quotient_projection().mul(&d.section()), Matrix::identity(2));
        assert!(make_ideal_data(&g, &Subspace::coordinate(3, &[0]), &ComplementRule::Pivot).is_err());
        let whole = make_ideal_data(&g, &Subspace::full(3), &ComplementRule::Pivot).unwrap();
        assert_eq!(whole.quotient.dim(), 0);
    }

    #[test]
    fn explicit_complement_must_be_transverse() {
        let g = LieAlgebra::abelian(2);
        let i = Subspace::coordinate(2, &[0]);
        let r = make_ideal_data(&g, &i, &ComplementRule::Explicit(i.clone()));
        assert!(matches!(r, Err(Error::Transversality(_))));
    }
}
