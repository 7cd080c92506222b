//! The two short exact sequences of the commuting diagram and their long exact sequences.
//!
//! Top row: `0 → C_i(g;g)[1] → C(g;g)[1] → (C(g;g)/C_i(g;g))[1] → 0`.
//! Bottom row: `0 → C(g/i;g/i)[1] → C(g;g/i)[1] → C_∧ → 0`.
//! Shifts are truncated, so degree `j` of a shifted row holds degree `j+1`.

use super::complex::{ComplexId, ComplexTag, Realized};
use super::homology::{induced_map, is_chain_map, LongExact, Ses};
use super::maps::{pi_matrix, pibar_star_matrix, pullback_matrix, push_pi_matrix};
use crate::cert::Certificate;
use crate::error::{check_cap, Error, Result, MAX_DEGREE};
use crate::exactlin::Matrix;
use crate::liealg::IdealData;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Row {
    Top,
    Bottom,
}

impl Row {
    pub fn name(&self) -> &'static str {
        match self {
            Row::Top => "top",
            Row::Bottom => "bottom",
        }
    }
}

/// Both rows in shifted coordinates plus the realized complexes they came from.
#[derive(Clone, Debug)]
pub struct Diagram {
    pub top: Ses,
    pub bottom: Ses,
    /// `α, β, γ` in each shifted degree.
    pub alpha: Vec<Matrix>,
    pub beta: Vec<Matrix>,
    pub gamma: Vec<Matrix>,
}

fn shift_maps(ms: Vec<Matrix>) -> Vec<Matrix> {
    ms.into_iter().skip(1).collect()
}

/// Builds the diagram with shifted degrees `0..=top`.
pub fn diagram(d: &IdealData, top: usize) -> Diagram {
    let orig = top + 1;
    let nr: Realized = ComplexId::new(ComplexTag::NrRestricted, d.clone()).realize(orig);
    let ad: Realized = ComplexId::new(ComplexTag::Ad, d.clone()).realize(orig);
    let coker: Realized = ComplexId::new(ComplexTag::Coker, d.clone()).realize(orig);
    let quot: Realized = ComplexId::new(ComplexTag::Quotient, d.clone()).realize(orig);
    let morph: Realized = ComplexId::new(ComplexTag::Morphism, d.clone()).realize(orig);
    let wedge: Realized = ComplexId::new(ComplexTag::WedgeIdeal, d.clone()).realize(top);

    let top_ses = Ses {
        a: nr.complex.shift(),
        b: ad.complex.shift(),
        c: coker.complex.shift(),
        inc: shift_maps(nr.basis.clone()),
        proj: shift_maps(coker.proj.iter().map(|p| p.clone().unwrap()).collect()),
    };
    let pis: Vec<Matrix> = (0..=top).map(|j| pi_matrix(d, j)).collect();
    let bottom_ses = Ses {
        a: quot.complex.shift(),
        b: morph.complex.shift(),
        c: wedge.complex.clone(),
        inc: (1..=orig).map(|k| pullback_matrix(d, k)).collect(),
        proj: (0..=top)
            .map(|j| wedge.basis[j].solve_all(&pis[j]).expect("Π lands in its image"))
            .collect(),
    };
    let alpha = (0..=top).map(|j| pibar_star_matrix(d, j + 1).mul(&nr.basis[j + 1])).collect();
    let beta: Vec<Matrix> = (0..=top).map(|j| push_pi_matrix(d, j + 1)).collect();
    let gamma = (0..=top)
        .map(|j| {
            let img = pis[j].mul(&beta[j]).mul(&coker.basis[j + 1]);
            wedge.basis[j].solve_all(&img).expect("Π̄ lands in C_∧")
        })
        .collect();
    Diagram { top: top_ses, bottom: bottom_ses, alpha, beta, gamma }
}

fn ses_dims(s: &Ses) -> Value {
    json!({"A": s.a.dims, "B": s.b.dims, "C": s.c.dims})
}

fn les_table(l: &LongExact) -> Value {
    let col = |h: &Vec<super::homology::DegreeCohomology>| h.iter().map(|x| x.dim_h()).collect::<Vec<_>>();
    json!({"H_A": col(&l.ha), "H_B": col(&l.hb), "H_C": col(&l.hc)})
}

/// Exactness of one long exact sequence at every node through `max_degree`.
pub fn les_exactness_check(d: &IdealData, which: Row, max_degree: usize) -> Result<Certificate> {
    check_cap("degree", max_degree + 3, MAX_DEGREE)?;
    let dg = diagram(d, max_degree + 2);
    let ses = match which {
        Row::Top => &dg.top,
        Row::Bottom => &dg.bottom,
    };
    ses.check().map_err(Error::Contract)?;
    let les = LongExact::build(ses, max_degree).map_err(Error::Contract)?;
    let defects = les.defects();
    let dims = json!({"row": which.name(), "complexes": ses_dims(ses), "cohomology": les_table(&les)});
    if defects.is_empty() {
        Ok(Certificate::new(true, "les-exactness", Value::Null, dims))
    } else {
        let w: Vec<Value> = defects.iter().map(|(n, i, k)| json!({"node": n, "dim_image": i, "dim_kernel": k})).collect();
        Ok(Certificate::new(false, "les-exactness", json!({"defects": w}), dims))
    }
}

/// Vertical maps are chain maps, the two squares commute, `γ` is invertible, and the
/// connecting maps satisfy `∂_bottom ∘ H(γ) = H(α) ∘ ∂_top` on representatives.
pub fn diagram_check(d: &IdealData, max_degree: usize) -> Result<Certificate> {
    check_cap("degree", max_degree + 3, MAX_DEGREE)?;
    let dg = diagram(d, max_degree + 2);
    let fail = |clause: &str, k: usize| Ok(Certificate::fail("les-diagram", json!({"clause": clause, "degree": k})));
    for (name, src, dst, f) in [
        ("alpha", &dg.top.a, &dg.bottom.a, &dg.alpha),
        ("beta", &dg.top.b, &dg.bottom.b, &dg.beta),
        ("gamma", &dg.top.c, &dg.bottom.c, &dg.gamma),
    ] {
        if let Some(k) = is_chain_map(src, dst, f) {
            return fail(&format!("{name} is not a chain map"), k);
        }
    }
    for j in 0..dg.alpha.len() {
        if dg.beta[j].mul(&dg.top.inc[j]) != dg.bottom.inc[j].mul(&dg.alpha[j]) {
            return fail("left square", j);
        }
        if dg.gamma[j].mul(&dg.top.proj[j]) != dg.bottom.proj[j].mul(&dg.beta[j]) {
            return fail("right square", j);
        }
        if dg.gamma[j].inverse().is_none() {
            return fail("gamma is not invertible", j);
        }
    }
    let top = LongExact::build(&dg.top, max_degree).map_err(Error::Contract)?;
    let bot = LongExact::build(&dg.bottom, max_degree).map_err(Error::Contract)?;
    for k in 0..=max_degree {
        let hg = induced_map(&top.hc[k], &bot.hc[k], &dg.gamma[k]).ok_or(Error::Contract("H(γ) failed".into()))?;
        let ha = induced_map(&top.ha[k + 1], &bot.ha[k + 1], &dg.alpha[k + 1])
            .ok_or(Error::Contract("H(α) failed".into()))?;
        let lhs = bot.maps[k][2].matrix.mul(&hg);
        let rhs = ha.mul(&top.maps[k][2].matrix);
        if lhs != rhs {
            return fail("connecting square", k);
        }
    }
    Ok(Certificate::new(
        true,
        "les-diagram",
        Value::Null,
        json!({"top": les_table(&top), "bottom": les_table(&bot)}),
    ))
}

/// `H^0(res_∧i): H^0(C_∧) → H^1(i;g/i)`, reported as injective/surjective flags.
pub fn res_h0_report(d: &IdealData) -> Certificate {
    let wedge = ComplexId::new(ComplexTag::WedgeIdeal, d.clone()).realize(1);
    let bott = ComplexId::new(ComplexTag::Bott, d.clone()).realize(2).complex;
    let hw = wedge.complex.cohomology_at(0);
    let hb1 = bott.cohomology_at(1);
    let res = super::maps::res_matrix(d, 0).mul(&wedge.basis[0]);
    let Some(m) = induced_map(&hw, &hb1, &res) else {
        return Certificate::fail("res-h0", json!({"reason": "res does not send cocycles to cocycles"}));
    };
    let rank = m.rank();
    let injective = rank == hw.dim_h();
    let surjective = rank == hb1.dim_h();
    Certificate::new(
        injective,
        "res-h0",
        json!({"injective": injective, "surjective": surjective}),
        json!({"H0_wedge": hw.dim_h(), "H1_bott": hb1.dim_h(), "rank": rank}),
    )
}
