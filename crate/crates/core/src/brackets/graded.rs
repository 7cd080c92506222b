use crate::error::{Error, Result};
use crate::exactlin::Rational;
use crate::multilin::{end_space, splits, vec_space, Carrier, Cochain, GradedElement};
use num_traits::Zero;

/// Value of `c` with a general first argument and basis vectors in the other slots.
fn eval_first(c: &Cochain, v: &[Rational], rest: &[usize]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); c.space.m];
    for (l, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let mut idx = vec![l];
        idx.extend_from_slice(rest);
        for (o, y) in out.iter_mut().zip(c.value_basis(&idx)) {
            if !y.is_zero() {
                *o += x * y;
            }
        }
    }
    out
}

/// `(ξ∘η)(x) = Σ_{τ∈S(s,r−1)} ±ξ(η(x_τ(1..s)), x_τ(s+1..))` for `ξ ∈ Λ^r⊗g`, `η ∈ Λ^s⊗g`.
pub fn compose_vv(xi: &Cochain, eta: &Cochain) -> Cochain {
    let n = xi.space.n;
    let (r, s) = (xi.space.p, eta.space.p);
    if r == 0 {
        return Cochain::zero(vec_space(n, s.saturating_sub(1)));
    }
    let space = vec_space(n, r + s - 1);
    Cochain::from_fn(space, |t| {
        let mut out = vec![Rational::zero(); n];
        for (head, rest, odd) in splits(t.len(), s) {
            let h: Vec<usize> = head.iter().map(|&i| t[i]).collect();
            let rs: Vec<usize> = rest.iter().map(|&i| t[i]).collect();
            let v = eta.value_basis(&h);
            let w = eval_first(xi, &v, &rs);
            for (o, x) in out.iter_mut().zip(w) {
                if odd {
                    *o -= x;
                } else {
                    *o += x;
                }
            }
        }
        out
    })
}

/// `(η∘ξ)(x) = Σ_{τ∈S(p+1,q−1)} ±η(ξ(x_τ(1..p+1)), x_τ(p+2..))`, End-valued.
pub fn compose_ev(eta: &Cochain, xi: &Cochain, w: usize) -> Cochain {
    let n = xi.space.n;
    let (q, r) = (eta.space.p, xi.space.p);
    if q == 0 {
        return Cochain::zero(end_space(n, w, (r + q).saturating_sub(1)));
    }
    let space = end_space(n, w, r + q - 1);
    Cochain::from_fn(space, |t| {
        let mut out = vec![Rational::zero(); w * w];
        for (head, rest, odd) in splits(t.len(), r) {
            let h: Vec<usize> = head.iter().map(|&i| t[i]).collect();
            let rs: Vec<usize> = rest.iter().map(|&i| t[i]).collect();
            let v = xi.value_basis(&h);
            let val = eval_first(eta, &v, &rs);
            for (o, x) in out.iter_mut().zip(val) {
                if odd {
                    *o -= x;
                } else {
                    *o += x;
                }
            }
        }
        out
    })
}

/// `(η∘η')(x) = Σ_{τ∈S(q',q)} ±η(x_τ(q'+1..)) · η'(x_τ(1..q'))` as matrix products.
pub fn compose_ee(eta: &Cochain, eta2: &Cochain, w: usize) -> Cochain {
    let n = eta.space.n;
    let (q, q2) = (eta.space.p, eta2.space.p);
    let space = end_space(n, w, q + q2);
    Cochain::from_fn(space, |t| {
        let mut out = vec![Rational::zero(); w * w];
        for (head, rest, odd) in splits(t.len(), q2) {
            let h: Vec<usize> = head.iter().map(|&i| t[i]).collect();
            let rs: Vec<usize> = rest.iter().map(|&i| t[i]).collect();
            let a = eta.value_basis(&rs);
            let b = eta2.value_basis(&h);
            for i in 0..w {
                for k in 0..w {
                    let x = &a[i * w + k];
                    if x.is_zero() {
                        continue;
                    }
                    for j in 0..w {
                        let y = &b[k * w + j];
                        if y.is_zero() {
                            continue;
                        }
                        let p = x * y;
                        if odd {
                            out[i * w + j] -= p;
                        } else {
                            out[i * w + j] += p;
                        }
                    }
                }
            }
        }
        out
    })
}

fn parity(d: i64) -> bool {
    d.rem_euclid(2) == 1
}

/// Bracket of two vector-valued components of degrees `r−1` and `s−1`.
fn bracket_vv(xi: &Cochain, eta: &Cochain) -> Option<Cochain> {
    if xi.space.p + eta.space.p == 0 {
        return None;
    }
    let (p1, p2) = (xi.space.p as i64 - 1, eta.space.p as i64 - 1);
    let a = compose_vv(xi, eta);
    let b = compose_vv(eta, xi);
    Some(if parity(p1 * p2) { a.neg().sub(&b) } else { a.sub(&b) })
}

/// `⟦ξ,η⟧` for `ξ` vector-valued and `η` End-valued: `−η∘ξ`, or zero when `q = 0`.
fn bracket_ve(xi: &Cochain, eta: &Cochain, w: usize) -> Option<Cochain> {
    (eta.space.p > 0).then(|| compose_ev(eta, xi, w).neg())
}

fn bracket_ee(eta: &Cochain, eta2: &Cochain, w: usize) -> Cochain {
    let (q, q2) = (eta.space.p as i64, eta2.space.p as i64);
    let a = compose_ee(eta, eta2, w);
    let b = compose_ee(eta2, eta, w);
    if parity(q * q2) {
        a.neg().sub(&b)
    } else {
        a.sub(&b)
    }
}

/// The Nijenhuis–Richardson bracket on `C(g;g)[1]`.
pub fn gerstenhaber_bracket(a: &GradedElement, b: &GradedElement) -> Result<GradedElement> {
    if a.carrier != Carrier::Nr || b.carrier != Carrier::Nr || !a.ends.is_empty() || !b.ends.is_empty() {
        return Err(Error::Contract("gerstenhaber_bracket needs elements of C(g;g)[1]".into()));
    }
    if a.n != b.n {
        return Err(Error::Contract("elements over different algebras".into()));
    }
    let mut out = GradedElement::zero(Carrier::Nr, a.n, a.w);
    for x in a.vecs.values() {
        for y in b.vecs.values() {
            if let Some(c) = bracket_vv(x, y) {
                out.add_vec(c);
            }
        }
    }
    Ok(out)
}

/// The bracket on `C(g;g)[1] ⊕ C(g;End W)`.
pub fn extended_bracket(a: &GradedElement, b: &GradedElement) -> Result<GradedElement> {
    if a.carrier != Carrier::Extended || b.carrier != Carrier::Extended {
        return Err(Error::Contract("extended_bracket needs elements of C(g;g)[1] ⊕ C(g;End W)".into()));
    }
    if a.n != b.n || a.w != b.w {
        return Err(Error::Contract("elements over different spaces".into()));
    }
    Ok(extended_unchecked(a, b))
}

pub(crate) fn extended_unchecked(a: &GradedElement, b: &GradedElement) -> GradedElement {
    let w = a.w;
    let mut out = GradedElement::zero(Carrier::Extended, a.n, w);
    for x in a.vecs.values() {
        for y in b.vecs.values() {
            if let Some(c) = bracket_vv(x, y) {
                out.add_vec(c);
            }
        }
        for e in b.ends.values() {
            if let Some(c) = bracket_ve(x, e, w) {
                out.add_end(c);
            }
        }
    }
    for e in a.ends.values() {
        for y in b.vecs.values().filter(|_| e.space.p > 0) {
            let p = y.space.p as i64 - 1;
            let q = e.space.p as i64;
            let v = compose_ev(e, y, w);
            out.add_end(if parity(p * q) { v.neg() } else { v });
        }
        for e2 in b.ends.values() {
            out.add_end(bracket_ee(e, e2, w));
        }
    }
    out
}

/// Bracket dispatching on the carrier of the arguments.
pub fn bracket(a: &GradedElement, b: &GradedElement) -> Result<GradedElement> {
    if a.carrier == Carrier::Nr && b.carrier == Carrier::Nr {
        gerstenhaber_bracket(a, b)
    } else {
        let w = a.w.max(b.w);
        let lift = |x: &GradedElement| {
            let mut y = x.clone();
            y.carrier = Carrier::Extended;
            y.w = w;
            y
        };
        extended_bracket(&lift(a), &lift(b))
    }
}

/// `Jac_μ(x,y,z) = [[x,y],z] + [[y,z],x] + [[z,x],y]` as a 3-cochain.
pub fn jacobiator_cochain(mu: &Cochain) -> Cochain {
    let n = mu.space.n;
    Cochain::from_fn(vec_space(n, 3), |t| {
        let mut out = vec![Rational::zero(); n];
        for (a, b, c) in [(t[0], t[1], t[2]), (t[1], t[2], t[0]), (t[2], t[0], t[1])] {
            let v = mu.value_basis(&[a, b]);
            for (o, x) in out.iter_mut().zip(eval_first(mu, &v, &[c])) {
                *o += x;
            }
        }
        out
    })
}

