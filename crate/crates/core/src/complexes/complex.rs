use super::ce::ce_matrix;
use super::homology::{CochainComplex, DegreeCohomology};
use super::maps::{nr_constraints, pi_matrix, pi_star_matrix, space_bott, space_g, space_gl, space_hom, space_morphism, space_quotient};
use crate::cert::Certificate;
use crate::error::{check_cap, Error, Result, MAX_DEGREE};
use crate::exactlin::{Matrix, Subspace};
use crate::liealg::{gl_representation, morphism_representation, standard_representations, IdealData, Representation};
use crate::multilin::{Cochain, CochainSpace};
use num_traits::Zero;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ComplexTag {
    /// `C(g;g)` with the adjoint action.
    Ad,
    /// `C(g;g/i)` for the morphism `π: g → g/i`.
    Morphism,
    /// `C(i;g/i)` with the Bott action.
    Bott,
    /// `C(g;i*⊗g/i)` with `ad^Hom`.
    HomIdeal,
    /// Image of `Π` inside `C(g;i*⊗g/i)`.
    WedgeIdeal,
    /// `C(g/i;g/i)` with the adjoint action.
    Quotient,
    /// `C(g;gl(g,i))`, the kernel of `π_*`.
    GlRestricted,
    /// `C_i(g;g)`.
    NrRestricted,
    /// `C(g;gl(g))`.
    Gl,
    /// `C(g;g) / C_i(g;g)`.
    Coker,
}

impl ComplexTag {
    pub const ALL: [ComplexTag; 10] = [
        ComplexTag::Ad,
        ComplexTag::Morphism,
        ComplexTag::Bott,
        ComplexTag::HomIdeal,
        ComplexTag::WedgeIdeal,
        ComplexTag::Quotient,
        ComplexTag::GlRestricted,
        ComplexTag::NrRestricted,
        ComplexTag::Gl,
        ComplexTag::Coker,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ComplexTag::Ad => "ad",
            ComplexTag::Morphism => "morphism",
            ComplexTag::Bott => "bott",
            ComplexTag::HomIdeal => "hom_ideal",
            ComplexTag::WedgeIdeal => "wedge_ideal",
            ComplexTag::Quotient => "quotient",
            ComplexTag::GlRestricted => "gl_restricted",
            ComplexTag::NrRestricted => "nr_restricted",
            ComplexTag::Gl => "gl",
            ComplexTag::Coker => "coker",
        }
    }

    pub fn parse(s: &str) -> Option<ComplexTag> {
        Self::ALL.into_iter().find(|t| t.name() == s)
    }
}

/// A complex attached to an ideal.
#[derive(Clone, Debug)]
pub struct ComplexId {
    pub tag: ComplexTag,
    pub context: IdealData,
}

/// A complex in coordinates together with the ambient cochains its basis stands for.
#[derive(Clone, Debug)]
pub struct Realized {
    pub complex: CochainComplex,
    /// Columns: ambient coordinates of the coordinate basis in each degree.
    pub basis: Vec<Matrix>,
    /// Ambient coordinates → complex coordinates (only for quotient complexes).
    pub proj: Vec<Option<Matrix>>,
}

impl ComplexId {
    pub fn new(tag: ComplexTag, context: IdealData) -> Self {
        ComplexId { tag, context }
    }

    /// The cochain space the complex lives in (or is a sub/quotient of).
    pub fn space(&self, k: usize) -> CochainSpace {
        let d = &self.context;
        match self.tag {
            ComplexTag::Ad | ComplexTag::NrRestricted | ComplexTag::Coker => space_g(d, k),
            ComplexTag::Morphism => space_morphism(d, k),
            ComplexTag::Bott => space_bott(d, k),
            ComplexTag::HomIdeal | ComplexTag::WedgeIdeal => space_hom(d, k),
            ComplexTag::Quotient => space_quotient(d, k),
            ComplexTag::Gl | ComplexTag::GlRestricted => space_gl(d, k),
        }
    }

    pub fn representation(&self) -> Representation {
        let d = &self.context;
        match self.tag {
            ComplexTag::Ad | ComplexTag::NrRestricted | ComplexTag::Coker => Representation::adjoint(&d.algebra),
            ComplexTag::Morphism => morphism_representation(d),
            ComplexTag::Bott => standard_representations(d).bott,
            ComplexTag::HomIdeal | ComplexTag::WedgeIdeal => standard_representations(d).ad_hom,
            ComplexTag::Quotient => Representation::adjoint(&d.quotient),
            ComplexTag::Gl | ComplexTag::GlRestricted => gl_representation(&d.algebra),
        }
    }

    /// Differential of the ambient cochain space in degree `k`.
    pub fn ambient_matrix(&self, k: usize) -> Matrix {
        let r = self.representation();
        ce_matrix(&r.algebra, &r.action, r.module_dim, k)
    }

    /// Rows cutting out the subcomplex in degree `k`, for the subcomplex tags.
    pub fn constraints(&self, k: usize) -> Option<Matrix> {
        let d = &self.context;
        match self.tag {
            ComplexTag::GlRestricted => Some(pi_star_matrix(d, k)),
            ComplexTag::NrRestricted | ComplexTag::Coker => Some(nr_constraints(d, k)),
            ComplexTag::WedgeIdeal => {
                let pi = pi_matrix(d, k);
                Some(left_annihilator(&pi))
            }
            _ => None,
        }
    }

    /// Basis of the subcomplex (or of the subcomplex being divided out, for `Coker`).
    pub fn sub_basis(&self, k: usize) -> Option<Matrix> {
        let c = self.constraints(k)?;
        if self.tag == ComplexTag::WedgeIdeal {
            return Some(pi_matrix(&self.context, k).image());
        }
        Some(kernel_or_identity(&c))
    }

    /// Membership of an ambient cochain in the subcomplex; always true for full complexes.
    pub fn contains(&self, c: &Cochain) -> Certificate {
        match self.constraints(c.space.p) {
            Some(rows) if self.tag != ComplexTag::Coker => {
                let v = if rows.rows() == 0 { vec![] } else { rows.mul_vec(&c.data) };
                match v.iter().position(|x| !x.is_zero()) {
                    None => Certificate::pass("membership"),
                    Some(i) => Certificate::fail(
                        "membership",
                        json!({"complex": self.tag.name(), "degree": c.space.p, "violated_constraint": i}),
                    ),
                }
            }
            _ => Certificate::pass("membership"),
        }
    }

    /// The complex in coordinates for degrees `0..=top`.
    pub fn realize(&self, top: usize) -> Realized {
        let dims_amb: Vec<usize> = (0..=top).map(|k| self.space(k).dim()).collect();
        let ambient: Vec<Matrix> = (0..top).map(|k| self.ambient_matrix(k)).collect();
        match self.tag {
            ComplexTag::WedgeIdeal | ComplexTag::GlRestricted | ComplexTag::NrRestricted => {
                let basis: Vec<Matrix> = (0..=top).map(|k| self.sub_basis(k).unwrap()).collect();
                let diffs = (0..top)
                    .map(|k| {
                        let img = ambient[k].mul(&basis[k]);
                        basis[k + 1].solve_all(&img).expect("subcomplex is closed under the differential")
                    })
                    .collect();
                let dims = basis.iter().map(Matrix::cols).collect();
                Realized { complex: CochainComplex::new(dims, diffs), basis, proj: vec![None; top + 1] }
            }
            ComplexTag::Coker => {
                let mut lifts = Vec::new();
                let mut proj = Vec::new();
                for k in 0..=top {
                    let n = self.sub_basis(k).unwrap();
                    let sub = Subspace::from_independent(n.clone());
                    let kk = sub.complement().basis().clone();
                    let inv = n.hstack(&kk).inverse().expect("complement is transverse");
                    proj.push(Some(inv.row_range(n.cols(), dims_amb[k])));
                    lifts.push(kk);
                }
                let diffs = (0..top)
                    .map(|k| proj[k + 1].as_ref().unwrap().mul(&ambient[k]).mul(&lifts[k]))
                    .collect();
                let dims = lifts.iter().map(Matrix::cols).collect();
                Realized { complex: CochainComplex::new(dims, diffs), basis: lifts, proj }
            }
            _ => {
                let basis = dims_amb.iter().map(|&m| Matrix::identity(m)).collect();
                Realized { complex: CochainComplex::new(dims_amb, ambient), basis, proj: vec![None; top + 1] }
            }
        }
    }
}

fn kernel_or_identity(c: &Matrix) -> Matrix {
    if c.rows() == 0 {
        Matrix::identity(c.cols())
    } else {
        c.kernel()
    }
}

/// Rows spanning the linear forms that vanish on the column space of `m`.
pub fn left_annihilator(m: &Matrix) -> Matrix {
    if m.cols() == 0 {
        return Matrix::identity(m.rows());
    }
    m.transpose().kernel().transpose()
}

/// Applies the differential of `id` to `c`, checking subcomplex membership on both ends.
pub fn differential(id: &ComplexId, c: &Cochain) -> Result<Cochain> {
    let expected = id.space(c.space.p);
    if c.space.n != expected.n || c.space.m != expected.m {
        return Err(Error::Contract(format!(
            "cochain with domain dimension {} and coefficient dimension {} does not belong to the {} complex",
            c.space.n,
            c.space.m,
            id.tag.name()
        )));
    }
    let before = id.contains(c);
    if !before.verdict {
        return Err(Error::Membership(before.witness.to_string()));
    }
    let out = Cochain::from_data(id.space(c.space.p + 1), id.ambient_matrix(c.space.p).mul_vec(&c.data));
    let after = id.contains(&out);
    if !after.verdict {
        return Err(Error::Membership(format!("differential left the subcomplex: {}", after.witness)));
    }
    Ok(out)
}

/// One row of a cohomology table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeRow {
    pub degree: usize,
    pub dim_c: usize,
    pub dim_z: usize,
    pub dim_b: usize,
    pub dim_h: usize,
}

#[derive(Clone, Debug)]
pub struct CohomologyReport {
    pub tag: ComplexTag,
    pub rule: String,
    pub rows: Vec<DegreeRow>,
    /// Ambient cochains representing a basis of each `H^k`.
    pub representatives: Vec<Vec<Cochain>>,
}

impl CohomologyReport {
    pub fn dim_h(&self, k: usize) -> usize {
        self.rows[k].dim_h
    }

    pub fn to_json(&self) -> Value {
        json!({
            "complex": self.tag.name(),
            "complement": self.rule,
            "degrees": self.rows.iter().map(|r| json!({
                "k": r.degree, "dim_C": r.dim_c, "dim_Z": r.dim_z, "dim_B": r.dim_b, "dim_H": r.dim_h
            })).collect::<Vec<_>>(),
            "representatives": self.representatives.iter().map(|rs| rs.iter().map(Cochain::to_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }
}

pub fn cohomology(id: &ComplexId, max_degree: usize) -> Result<CohomologyReport> {
    check_cap("degree", max_degree + 1, MAX_DEGREE + 1)?;
    let r = id.realize(max_degree + 1);
    let hs: Vec<DegreeCohomology> = r.complex.cohomology(max_degree);
    let mut rows = Vec::new();
    let mut reps = Vec::new();
    for (k, h) in hs.iter().enumerate() {
        rows.push(DegreeRow { degree: k, dim_c: h.dim_c, dim_z: h.dim_z(), dim_b: h.dim_b(), dim_h: h.dim_h() });
        let amb = r.basis[k].mul(&h.reps);
        reps.push((0..amb.cols()).map(|j| Cochain::from_data(id.space(k), amb.col(j))).collect());
    }
    Ok(CohomologyReport { tag: id.tag, rule: id.context.rule.clone(), rows, representatives: reps })
}
