use super::cochain::{Cochain, CochainSpace, Domain, Module};
use crate::exactlin::Rational;
use std::collections::BTreeMap;

/// Which graded Lie algebra an element lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Carrier {
    /// `C(g;g)[1]`
    Nr,
    /// `C(g;g)[1] ⊕ C(g;End W)`
    Extended,
}

/// Element of `C(g;g)[1]` or of `C(g;g)[1] ⊕ C(g;End W)`.
///
/// `vecs[r] ∈ Λ^r g*⊗g` has degree `r-1`; `ends[q] ∈ Λ^q g*⊗End W` has degree `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedElement {
    pub carrier: Carrier,
    pub n: usize,
    pub w: usize,
    pub vecs: BTreeMap<usize, Cochain>,
    pub ends: BTreeMap<usize, Cochain>,
}

pub fn vec_space(n: usize, r: usize) -> CochainSpace {
    CochainSpace::new(r, n, Domain::G, Module::G, n)
}

pub fn end_space(n: usize, w: usize, q: usize) -> CochainSpace {
    let module = if w == n { Module::Gl } else { Module::End };
    CochainSpace::new(q, n, Domain::G, module, w * w)
}

impl GradedElement {
    pub fn zero(carrier: Carrier, n: usize, w: usize) -> Self {
        GradedElement { carrier, n, w, vecs: BTreeMap::new(), ends: BTreeMap::new() }
    }

    pub fn from_vec(carrier: Carrier, w: usize, c: Cochain) -> Self {
        assert_eq!(c.space.m, c.space.n, "vector part must be g-valued");
        let mut e = Self::zero(carrier, c.space.n, w);
        e.vecs.insert(c.space.p, c);
        e
    }

    pub fn from_end(w: usize, c: Cochain) -> Self {
        assert_eq!(c.space.m, w * w, "End part has the wrong coefficient size");
        let mut e = Self::zero(Carrier::Extended, c.space.n, w);
        e.ends.insert(c.space.p, c);
        e
    }

    pub fn vec_part(&self, r: usize) -> Option<&Cochain> {
        self.vecs.get(&r)
    }

    pub fn end_part(&self, q: usize) -> Option<&Cochain> {
        self.ends.get(&q)
    }

    /// Common degree of all stored components, if there is one.
    pub fn degree(&self) -> Option<i64> {
        let mut ds = self
            .vecs
            .keys()
            .map(|&r| r as i64 - 1)
            .chain(self.ends.keys().map(|&q| q as i64));
        let d = ds.next()?;
        ds.all(|x| x == d).then_some(d)
    }

    pub fn is_zero(&self) -> bool {
        self.vecs.values().all(Cochain::is_zero) && self.ends.values().all(Cochain::is_zero)
    }

    pub fn add_vec(&mut self, c: Cochain) {
        match self.vecs.get_mut(&c.space.p) {
            Some(x) => *x = x.add(&c),
            None => {
                self.vecs.insert(c.space.p, c);
            }
        }
    }

    pub fn add_end(&mut self, c: Cochain) {
        self.carrier = Carrier::Extended;
        match self.ends.get_mut(&c.space.p) {
            Some(x) => *x = x.add(&c),
            None => {
                self.ends.insert(c.space.p, c);
            }
        }
    }

    pub fn add(&self, other: &GradedElement) -> GradedElement {
        let mut out = self.clone();
        if other.carrier == Carrier::Extended {
            out.carrier = Carrier::Extended;
        }
        for c in other.vecs.values() {
            out.add_vec(c.clone());
        }
        for c in other.ends.values() {
            out.add_end(c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Rational) -> GradedElement {
        let mut out = self.clone();
        for c in out.vecs.values_mut() {
            *c = c.scale(s);
        }
        for c in out.ends.values_mut() {
            *c = c.scale(s);
        }
        out
    }

    pub fn neg(&self) -> GradedElement {
        self.scale(&Rational::from_integer((-1).into()))
    }

    pub fn sub(&self, other: &GradedElement) -> GradedElement {
        self.add(&other.neg())
    }

    /// Equality up to zero components.
    pub fn same_as(&self, other: &GradedElement) -> bool {
        self.sub(other).is_zero()
    }

    /// Homogeneous components, each as its own element.
    pub fn components(&self) -> Vec<GradedElement> {
        let mut out = Vec::new();
        for c in self.vecs.values() {
            out.push(GradedElement::from_vec(self.carrier, self.w, c.clone()));
        }
        for c in self.ends.values() {
            out.push(GradedElement::from_end(self.w, c.clone()));
        }
        out
    }
}
