use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Rational};
use crate::liealg::{LieAlgebra, Representation};
use crate::multilin::{binomial, comb_rank, signed_rank, wedge_basis, Cochain, CochainSpace};
use num_traits::Zero;

/// Matrix of the Chevalley–Eilenberg differential `C^k(g;V) → C^{k+1}(g;V)`
/// for the module given by the action matrices `rho` (one per basis element).
pub fn ce_matrix(g: &LieAlgebra, rho: &[Matrix], m: usize, k: usize) -> Matrix {
    let n = g.dim();
    let rows = binomial(n, k + 1) * m;
    let cols = binomial(n, k) * m;
    let mut d = Matrix::zeros(rows, cols);
    if rows == 0 || cols == 0 {
        return d;
    }
    for (tr, t) in wedge_basis(n, k + 1).iter().enumerate() {
        for i in 0..=k {
            let s: Vec<usize> = t.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &x)| x).collect();
            let sr = comb_rank(n, &s);
            let r = &rho[t[i]];
            for b in 0..m {
                for a in 0..m {
                    let x = r.get(b, a);
                    if x.is_zero() {
                        continue;
                    }
                    let v = if i % 2 == 0 { x.clone() } else { -x };
                    d.add_at(tr * m + b, sr * m + a, &v);
                }
            }
        }
        for i in 0..=k {
            for j in i + 1..=k {
                let rest: Vec<usize> =
                    t.iter().enumerate().filter(|&(l, _)| l != i && l != j).map(|(_, &x)| x).collect();
                for (l, c) in g.bracket_basis(t[i], t[j]).iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let mut idx = vec![l];
                    idx.extend_from_slice(&rest);
                    let Some((odd, sr)) = signed_rank(n, &idx) else { continue };
                    let neg = odd ^ ((i + j) % 2 == 1);
                    let v = if neg { -c } else { c.clone() };
                    for a in 0..m {
                        d.add_at(tr * m + a, sr * m + a, &v);
                    }
                }
            }
        }
    }
    d
}

/// `δ_r c` for a cochain with values in the module of `r`.
pub fn ce_differential(r: &Representation, c: &Cochain) -> Result<Cochain> {
    if c.space.m != r.module_dim || c.space.n != r.algebra.dim() {
        return Err(Error::Contract(format!(
            "cochain in Λ^{}(Q^{})*⊗Q^{} does not match a representation of a {}-dimensional algebra on Q^{}",
            c.space.p,
            c.space.n,
            c.space.m,
            r.algebra.dim(),
            r.module_dim
        )));
    }
    let d = ce_matrix(&r.algebra, &r.action, r.module_dim, c.space.p);
    let space = CochainSpace { p: c.space.p + 1, ..c.space.clone() };
    Ok(Cochain::from_data(space, d.mul_vec(&c.data)))
}

/// Direct evaluation of the differential on basis tuples; an independent check
/// on `ce_matrix` that works through `Cochain::evaluate`.
pub fn ce_differential_brute(r: &Representation, c: &Cochain) -> Cochain {
    let g = &r.algebra;
    let n = g.dim();
    let k = c.space.p;
    let space = CochainSpace { p: k + 1, ..c.space.clone() };
    Cochain::from_fn(space, |t| {
        let xs: Vec<Vec<Rational>> = t.iter().map(|&i| crate::multilin::unit(n, i)).collect();
        let mut out = vec![Rational::zero(); r.module_dim];
        for i in 0..=k {
            let rest: Vec<Vec<Rational>> =
                xs.iter().enumerate().filter(|&(l, _)| l != i).map(|(_, x)| x.clone()).collect();
            let v = r.act(&xs[i]).mul_vec(&c.evaluate(&rest).unwrap());
            for (o, x) in out.iter_mut().zip(v) {
                if i % 2 == 0 {
                    *o += x;
                } else {
                    *o -= x;
                }
            }
        }
        for i in 0..=k {
            for j in i + 1..=k {
                let mut args = vec![g.bracket(&xs[i], &xs[j])];
                args.extend(xs.iter().enumerate().filter(|&(l, _)| l != i && l != j).map(|(_, x)| x.clone()));
                let v = c.evaluate(&args).unwrap();
                for (o, x) in out.iter_mut().zip(v) {
                    if (i + j) % 2 == 0 {
                        *o += x;
                    } else {
                        *o -= x;
                    }
                }
            }
        }
        out
    })
}

/// `δ^Hom` on `C^k(g;i*⊗g/i)` evaluated term by term from the three-sum formula.
pub fn delta_hom_ideal(d: &crate::liealg::IdealData, c: &Cochain) -> Result<Cochain> {
    let (n, kk, q) = (d.n(), d.k(), d.qd());
    if c.space.n != n || c.space.m != q * kk {
        return Err(Error::Contract("delta_hom_ideal expects a cochain in C(g;i*⊗g/i)".into()));
    }
    let g = &d.algebra;
    let k = c.space.p;
    let pr_i = d.pr_i();
    let us = d.ideal().vectors();
    let adq: Vec<Matrix> = (0..n).map(|i| crate::liealg::ad_quot(d, &crate::multilin::unit(n, i))).collect();
    let apply = |f: &[Rational], u: &[Rational]| -> Vec<Rational> {
        (0..q)
            .map(|b| (0..kk).fold(Rational::zero(), |acc, a| acc + &f[b * kk + a] * &u[a]))
            .collect()
    };
    let space = CochainSpace { p: k + 1, ..c.space.clone() };
    Ok(Cochain::from_fn(space, |t| {
        let xs: Vec<Vec<Rational>> = t.iter().map(|&i| crate::multilin::unit(n, i)).collect();
        let mut out = vec![Rational::zero(); q * kk];
        for (a, u) in us.iter().enumerate() {
            let mut ua = vec![Rational::zero(); kk];
            ua[a] = Rational::from_integer(1.into());
            let mut val = vec![Rational::zero(); q];
            for i in 0..=k {
                let sign_pos = i % 2 == 0;
                let rest: Vec<Vec<Rational>> =
                    xs.iter().enumerate().filter(|&(l, _)| l != i).map(|(_, x)| x.clone()).collect();
                let f = c.evaluate(&rest).unwrap();
                let t1 = adq[t[i]].mul_vec(&apply(&f, &ua));
                let xu = pr_i.mul_vec(&g.bracket(&xs[i], u));
                let t2 = apply(&f, &xu);
                for b in 0..q {
                    let term = &t1[b] - &t2[b];
                    if sign_pos {
                        val[b] += term;
                    } else {
                        val[b] -= term;
                    }
                }
            }
            for i in 0..=k {
                for j in i + 1..=k {
                    let mut args = vec![g.bracket(&xs[i], &xs[j])];
                    args.extend(xs.iter().enumerate().filter(|&(l, _)| l != i && l != j).map(|(_, x)| x.clone()));
                    let f = c.evaluate(&args).unwrap();
                    let v = apply(&f, &ua);
                    for b in 0..q {
                        if (i + j) % 2 == 0 {
                            val[b] += &v[b];
                        } else {
                            val[b] -= &v[b];
                        }
                    }
                }
            }
            for b in 0..q {
                out[b * kk + a] = val[b].clone();
            }
        }
        out
    }))
}
