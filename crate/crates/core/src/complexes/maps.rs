//! Cochain maps between the complexes attached to an ideal.

use crate::cert::Certificate;
use crate::exactlin::{fmt_rational, Matrix, Rational, Subspace};
use crate::liealg::IdealData;
use crate::multilin::{binomial, unit, wedge_basis, wedge_weights, Cochain, CochainSpace, Domain, Module};
use num_traits::Zero;
use serde_json::json;

pub fn space_g(d: &IdealData, p: usize) -> CochainSpace {
    CochainSpace::new(p, d.n(), Domain::G, Module::G, d.n())
}

pub fn space_morphism(d: &IdealData, p: usize) -> CochainSpace {
    CochainSpace::new(p, d.n(), Domain::G, Module::Quotient, d.qd())
}

pub fn space_hom(d: &IdealData, p: usize) -> CochainSpace {
    CochainSpace::new(p, d.n(), Domain::G, Module::HomQuotient, d.qd() * d.k())
}

pub fn space_hom_complement(d: &IdealData, p: usize) -> CochainSpace {
    CochainSpace::new(p, d.n(), Domain::G, Module::HomComplement, d.qd() * d.k())
}

pub fn space_gl(d: &IdealData, p: usize) -> CochainSpace {
    CochainSpace::new(p, d.n(), Domain::G, Module::Gl, d.n() * d.n())
}

pub fn space_bott(d: &IdealData, p: usize) -> CochainSpace {
    CochainSpace::new(p, d.k(), Domain::I, Module::Quotient, d.qd())
}

pub fn space_quotient(d: &IdealData, p: usize) -> CochainSpace {
    CochainSpace::new(p, d.qd(), Domain::Quotient, Module::Quotient, d.qd())
}

/// Matrix of `ω ↦ (e_S ↦ ω(args(S)))` where `args(S)` lists the vectors fed
/// into `ω` for the target combination `S`, and `post` acts on the value.
fn substitution_matrix(
    src_n: usize,
    src_p: usize,
    src_m: usize,
    dst_combos: &[Vec<usize>],
    dst_m: usize,
    mut args: impl FnMut(&[usize]) -> Vec<Vec<Rational>>,
    post: &Matrix,
) -> Matrix {
    let rows = dst_combos.len() * dst_m;
    let cols = binomial(src_n, src_p) * src_m;
    let mut out = Matrix::zeros(rows, cols);
    for (tr, t) in dst_combos.iter().enumerate() {
        let a = args(t);
        let refs: Vec<&[Rational]> = a.iter().map(|v| v.as_slice()).collect();
        for (r, w) in wedge_weights(src_n, &refs) {
            for b in 0..dst_m {
                for c in 0..src_m {
                    let x = post.get(b, c);
                    if !x.is_zero() {
                        out.add_at(tr * dst_m + b, r * src_m + c, &(&w * x));
                    }
                }
            }
        }
    }
    out
}

/// `Π: C^{k+1}(g;g/i) → C^k(g;i*⊗g/i)`, `φ ↦ (−1)^{k+1} φ(·, …, ·, u)`.
pub fn pi_matrix(d: &IdealData, k: usize) -> Matrix {
    let (n, kk, q) = (d.n(), d.k(), d.qd());
    let combos = wedge_basis(n, k);
    let rows = combos.len() * q * kk;
    let cols = binomial(n, k + 1) * q;
    let mut out = Matrix::zeros(rows, cols);
    let us = d.ideal().vectors();
    let sign = if (k + 1) % 2 == 0 { Rational::from_integer(1.into()) } else { Rational::from_integer((-1).into()) };
    for (tr, s) in combos.iter().enumerate() {
        for (a, u) in us.iter().enumerate() {
            let mut args: Vec<Vec<Rational>> = s.iter().map(|&i| unit(n, i)).collect();
            args.push(u.clone());
            let refs: Vec<&[Rational]> = args.iter().map(|v| v.as_slice()).collect();
            for (r, w) in wedge_weights(n, &refs) {
                for b in 0..q {
                    out.add_at(tr * q * kk + b * kk + a, r * q + b, &(&w * &sign));
                }
            }
        }
    }
    out
}

pub fn map_pi(d: &IdealData, c: &Cochain) -> Cochain {
    assert!(c.space.p >= 1, "Π needs a cochain of degree at least one");
    let k = c.space.p - 1;
    Cochain::from_data(space_hom(d, k), pi_matrix(d, k).mul_vec(&c.data))
}

/// `C^k_∧`, the image of `Π` inside `C^k(g;i*⊗g/i)`.
pub fn wedge_subspace(d: &IdealData, k: usize) -> Subspace {
    Subspace::span(&pi_matrix(d, k))
}

/// `π_*: C^k(g;gl(g)) → C^k(g;i*⊗g/i)`, `ω ↦ π ∘ ω(…)|_i`.
pub fn pi_star_matrix(d: &IdealData, k: usize) -> Matrix {
    let (n, kk, q) = (d.n(), d.k(), d.qd());
    let pi = d.quotient_projection();
    let ib = d.ideal().basis().clone();
    let mut block = Matrix::zeros(q * kk, n * n);
    for b in 0..q {
        for a in 0..kk {
            for r in 0..n {
                for c in 0..n {
                    let x = pi.get(b, r) * ib.get(c, a);
                    if !x.is_zero() {
                        block.set(b * kk + a, r * n + c, x);
                    }
                }
            }
        }
    }
    block_diagonal(&block, binomial(n, k))
}

pub fn map_pi_star(d: &IdealData, c: &Cochain) -> Cochain {
    Cochain::from_data(space_hom(d, c.space.p), pi_star_matrix(d, c.space.p).mul_vec(&c.data))
}

/// `res_∧i: C^k_∧ → C^{k+1}(i;g/i)`, `φ ↦ (−1)^{k+1} φ|_{Λ^{k+1} i}`.
pub fn res_matrix(d: &IdealData, k: usize) -> Matrix {
    let (n, kk, q) = (d.n(), d.k(), d.qd());
    let us = d.ideal().vectors();
    let combos = wedge_basis(kk, k + 1);
    let rows = combos.len() * q;
    let cols = binomial(n, k) * q * kk;
    let mut out = Matrix::zeros(rows, cols);
    let sign = if (k + 1) % 2 == 0 { Rational::from_integer(1.into()) } else { Rational::from_integer((-1).into()) };
    for (tr, t) in combos.iter().enumerate() {
        let last = t[k];
        let args: Vec<&[Rational]> = t[..k].iter().map(|&a| us[a].as_slice()).collect();
        for (r, w) in wedge_weights(n, &args) {
            for b in 0..q {
                out.add_at(tr * q + b, r * q * kk + b * kk + last, &(&w * &sign));
            }
        }
    }
    out
}

pub fn map_res_wedge(d: &IdealData, c: &Cochain) -> crate::error::Result<Cochain> {
    let k = c.space.p;
    if !wedge_subspace(d, k).contains_vec(&c.data) {
        return Err(crate::error::Error::Membership(format!("cochain of degree {k} is not in C_∧")));
    }
    Ok(Cochain::from_data(space_bott(d, k + 1), res_matrix(d, k).mul_vec(&c.data)))
}

/// `ι*: C^k(g;g/i) → C^k(i;g/i)`, restriction to arguments in `i`.
pub fn iota_star_matrix(d: &IdealData, k: usize) -> Matrix {
    let us = d.ideal().vectors();
    let combos = wedge_basis(d.k(), k);
    substitution_matrix(d.n(), k, d.qd(), &combos, d.qd(), |t| t.iter().map(|&a| us[a].clone()).collect(), &Matrix::identity(d.qd()))
}

/// Pullback `C^k(g/i;g/i) → C^k(g;g/i)`, `q ↦ q ∘ π`.
pub fn pullback_matrix(d: &IdealData, k: usize) -> Matrix {
    let pi = d.quotient_projection();
    let combos = wedge_basis(d.n(), k);
    substitution_matrix(d.qd(), k, d.qd(), &combos, d.qd(), |t| t.iter().map(|&i| pi.col(i)).collect(), &Matrix::identity(d.qd()))
}

/// `C^k(g;g) → C^k(g;g/i)`, `φ ↦ π ∘ φ`.
pub fn push_pi_matrix(d: &IdealData, k: usize) -> Matrix {
    block_diagonal(&d.quotient_projection(), binomial(d.n(), k))
}

/// Rows whose vanishing defines `C_i^k(g;g)` inside `C^k(g;g)`.
pub fn nr_constraints(d: &IdealData, k: usize) -> Matrix {
    let n = d.n();
    let pr = d.pr_ic();
    if k == 0 {
        return pr;
    }
    let us = d.ideal().vectors();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let cols = binomial(n, k) * n;
    for u in &us {
        for s in wedge_basis(n, k - 1) {
            let mut args: Vec<&[Rational]> = vec![u.as_slice()];
            let es: Vec<Vec<Rational>> = s.iter().map(|&i| unit(n, i)).collect();
            args.extend(es.iter().map(|v| v.as_slice()));
            let ws = wedge_weights(n, &args);
            for b in 0..d.qd() {
                let mut row = vec![Rational::zero(); cols];
                for (r, w) in &ws {
                    for c in 0..n {
                        let x = pr.get(b, c);
                        if !x.is_zero() {
                            row[r * n + c] += w * x;
                        }
                    }
                }
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return Matrix::zeros(0, cols);
    }
    Matrix::from_rows(rows)
}

/// Basis (as columns) of `C_i^k(g;g)`.
pub fn nr_basis(d: &IdealData, k: usize) -> Matrix {
    let c = nr_constraints(d, k);
    if c.rows() == 0 {
        return Matrix::identity(c.cols());
    }
    c.kernel()
}

pub fn nr_membership(d: &IdealData, c: &Cochain) -> Certificate {
    let n = d.n();
    let k = c.space.p;
    let pr = d.pr_ic();
    if k == 0 {
        let v = pr.mul_vec(&c.data);
        if v.iter().any(|x| !x.is_zero()) {
            return Certificate::fail("nr-membership", json!({"degree": 0, "value_outside_i": true}));
        }
        return Certificate::new(true, "nr-membership", serde_json::Value::Null, json!({"degree": 0}));
    }
    for (a, u) in d.ideal().vectors().iter().enumerate() {
        for s in wedge_basis(n, k - 1) {
            let mut args = vec![u.clone()];
            args.extend(s.iter().map(|&i| unit(n, i)));
            let v = c.evaluate(&args).expect("arity");
            if pr.mul_vec(&v).iter().any(|x| !x.is_zero()) {
                return Certificate::fail(
                    "nr-membership",
                    json!({"ideal_index": a, "other_args": s, "value": v.iter().map(fmt_rational).collect::<Vec<_>>()}),
                );
            }
        }
    }
    Certificate::new(true, "nr-membership", serde_json::Value::Null, json!({"degree": k}))
}

/// `π̄_*: C_i^k(g;g) → C^k(g/i;g/i)`, `φ ↦ π ∘ φ` on lifts through the section.
pub fn pibar_star_matrix(d: &IdealData, k: usize) -> Matrix {
    let sec = d.section();
    let combos = wedge_basis(d.qd(), k);
    substitution_matrix(d.n(), k, d.n(), &combos, d.qd(), |t| t.iter().map(|&b| sec.col(b)).collect(), &d.quotient_projection())
}

pub fn map_pibar_star(d: &IdealData, c: &Cochain) -> crate::error::Result<Cochain> {
    let cert = nr_membership(d, c);
    if !cert.verdict {
        return Err(crate::error::Error::Membership(format!("cochain is not in C_i(g;g): {}", cert.witness)));
    }
    let k = c.space.p;
    Ok(Cochain::from_data(space_quotient(d, k), pibar_star_matrix(d, k).mul_vec(&c.data)))
}

/// `Π̄` on a representative `φ ∈ C^k(g;g)`: `(−1)^k (π ∘ φ)|_{Λ^{k−1}g∧i}`.
pub fn pibar_matrix(d: &IdealData, k: usize) -> Matrix {
    assert!(k >= 1, "Π̄ needs degree at least one");
    pi_matrix(d, k - 1).mul(&push_pi_matrix(d, k))
}

pub fn map_pibar(d: &IdealData, c: &Cochain) -> Cochain {
    let k = c.space.p;
    Cochain::from_data(space_hom(d, k - 1), pibar_matrix(d, k).mul_vec(&c.data))
}

pub fn block_diagonal(block: &Matrix, copies: usize) -> Matrix {
    let (r, c) = (block.rows(), block.cols());
    let mut out = Matrix::zeros(r * copies, c * copies);
    for t in 0..copies {
        for i in 0..r {
            for j in 0..c {
                let x = block.get(i, j);
                if !x.is_zero() {
                    out.set(t * r + i, t * c + j, x.clone());
                }
            }
        }
    }
    out
}
