//! The L∞[1]-algebra on `L[1] ⊕ 𝔞` built from a Voronov dataset.

use super::voronov::VoronovData;
use crate::error::{Error, Result};
use crate::multilin::{Cochain, GradedElement};
use serde_json::{json, Value};
use std::collections::BTreeMap;

/// An element of `L[1] ⊕ 𝔞`; `a` is keyed by cochain degree `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeElement {
    pub l: GradedElement,
    pub a: BTreeMap<usize, Cochain>,
}

/// A homogeneous piece of a cone element with its degree in `L[1] ⊕ 𝔞`.
#[derive(Clone, Debug)]
enum Piece {
    L(GradedElement, i64),
    A(Cochain, i64),
}

impl Piece {
    fn degree(&self) -> i64 {
        match self {
            Piece::L(_, d) | Piece::A(_, d) => *d,
        }
    }
}

impl ConeElement {
    pub fn zero(v: &VoronovData) -> ConeElement {
        ConeElement { l: GradedElement::zero(v.carrier(), v.n(), v.w()), a: BTreeMap::new() }
    }

    pub fn from_l(v: &VoronovData, x: &GradedElement) -> ConeElement {
        ConeElement { l: v.lift(x), a: BTreeMap::new() }
    }

    pub fn from_a(v: &VoronovData, c: Cochain) -> ConeElement {
        let mut e = Self::zero(v);
        e.a.insert(c.space.p, c);
        e
    }

    pub fn add(&self, other: &ConeElement) -> ConeElement {
        let mut out = self.clone();
        out.l = out.l.add(&other.l);
        for (p, c) in &other.a {
            match out.a.get_mut(p) {
                Some(x) => *x = x.add(c),
                None => {
                    out.a.insert(*p, c.clone());
                }
            }
        }
        out
    }

    pub fn scale(&self, s: &crate::exactlin::Rational) -> ConeElement {
        ConeElement { l: self.l.scale(s), a: self.a.iter().map(|(p, c)| (*p, c.scale(s))).collect() }
    }

    pub fn neg(&self) -> ConeElement {
        self.scale(&crate::exactlin::Rational::from_integer((-1).into()))
    }

    pub fn is_zero(&self) -> bool {
        self.l.is_zero() && self.a.values().all(Cochain::is_zero)
    }

    pub fn to_json(&self) -> Value {
        let vecs: Vec<Value> = self.l.vecs.values().map(Cochain::to_json).collect();
        let ends: Vec<Value> = self.l.ends.values().map(Cochain::to_json).collect();
        let a: Vec<Value> = self.a.values().map(Cochain::to_json).collect();
        json!({"l": {"vec": vecs, "end": ends}, "a": a})
    }

    fn pieces(&self, v: &VoronovData) -> Vec<Piece> {
        let mut out = Vec::new();
        for c in self.l.vecs.values().filter(|c| !c.is_zero()) {
            let x = crate::multilin::GradedElement::from_vec(v.carrier(), v.w(), c.clone());
            out.push(Piece::L(x, c.space.p as i64 - 2));
        }
        for c in self.l.ends.values().filter(|c| !c.is_zero()) {
            out.push(Piece::L(v.lift(&GradedElement::from_end(v.w(), c.clone())), c.space.p as i64 - 1));
        }
        for c in self.a.values().filter(|c| !c.is_zero()) {
            let d = v.a_degree(c).expect("𝔞 component");
            out.push(Piece::A(c.clone(), d));
        }
        out
    }

    /// A random homogeneous element of `𝔞` of the given degree.
    pub fn random_a<R: rand::Rng>(v: &VoronovData, rng: &mut R, degree: i64) -> ConeElement {
        let space = v.a_space(degree).expect("degree of 𝔞");
        Self::from_a(v, crate::sample::cochain(rng, space, 0.5))
    }

    /// A random homogeneous element of `L[1]` of the given cone degree.
    pub fn random_l<R: rand::Rng>(v: &VoronovData, rng: &mut R, degree: i64) -> ConeElement {
        Self::from_l(v, &v.random_element(rng, degree + 1))
    }

    /// Degree of a homogeneous element; `None` for zero or mixed elements.
    pub fn degree(&self, v: &VoronovData) -> Option<i64> {
        let ps = self.pieces(v);
        let d = ps.first()?.degree();
        ps.iter().all(|p| p.degree() == d).then_some(d)
    }
}

fn pure(v: &VoronovData, args: &[Piece]) -> Result<ConeElement> {
    let k = args.len();
    let ls: Vec<usize> = (0..k).filter(|&i| matches!(args[i], Piece::L(..))).collect();
    let mut out = ConeElement::zero(v);
    match ls.len() {
        0 => {
            let cs: Vec<Cochain> = args
                .iter()
                .map(|p| match p {
                    Piece::A(c, _) => c.clone(),
                    Piece::L(..) => unreachable!(),
                })
                .collect();
            let c = v.higher_bracket(&cs)?;
            out.a.insert(c.space.p, c);
        }
        1 => {
            let j = ls[0];
            let Piece::L(x, dx) = &args[j] else { unreachable!() };
            let before: i64 = args[..j].iter().map(Piece::degree).sum();
            let sign_odd = (dx * before).rem_euclid(2) == 1;
            let ldeg = dx + 1;
            if k == 1 {
                out.l = v.bracket(&v.theta, x).neg();
                for (_, c) in v.project_all(x) {
                    out.a.insert(c.space.p, c);
                }
            } else {
                let rest: Vec<Cochain> = args
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != j)
                    .map(|(_, p)| match p {
                        Piece::A(c, _) => c.clone(),
                        Piece::L(..) => unreachable!(),
                    })
                    .collect();
                let mut deg = ldeg;
                for c in &rest {
                    deg += v.a_degree(c)?;
                }
                if v.a_space(deg).is_some() {
                    let c = v.nested(x, ldeg, &rest)?;
                    out.a.insert(c.space.p, c);
                }
            }
            if sign_odd {
                out = out.neg();
            }
        }
        2 if k == 2 => {
            let (Piece::L(x, dx), Piece::L(y, _)) = (&args[0], &args[1]) else { unreachable!() };
            let b = v.bracket(x, y);
            out.l = if (dx + 1).rem_euclid(2) == 1 { b.neg() } else { b };
        }
        _ => {}
    }
    Ok(out)
}

/// `m̃_k(args)` on arbitrary (possibly inhomogeneous) cone elements, by multilinearity.
pub fn mapping_cone_brackets(v: &VoronovData, args: &[ConeElement]) -> Result<ConeElement> {
    if args.is_empty() {
        return Err(Error::Contract("m̃_k needs at least one argument".into()));
    }
    let pieces: Vec<Vec<Piece>> = args.iter().map(|a| a.pieces(v)).collect();
    let mut out = ConeElement::zero(v);
    let mut idx = vec![0usize; args.len()];
    if pieces.iter().any(Vec::is_empty) {
        return Ok(out);
    }
    loop {
        let chosen: Vec<Piece> = idx.iter().enumerate().map(|(i, &j)| pieces[i][j].clone()).collect();
        out = out.add(&pure(v, &chosen)?);
        let mut t = 0;
        loop {
            idx[t] += 1;
            if idx[t] < pieces[t].len() {
                break;
            }
            idx[t] = 0;
            t += 1;
            if t == idx.len() {
                return Ok(out);
            }
        }
    }
}
