use super::combinat::{binomial, comb_rank, signed_rank, wedge_basis};
use crate::error::{Error, Result};
use crate::exactlin::{fmt_rational, parse_rational, Rational};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};
use std::collections::BTreeMap;

/// Coefficient module of a cochain space.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Module {
    G,
    Quotient,
    Ideal,
    Complement,
    Gl,
    HomQuotient,
    HomComplement,
    End,
    Trivial,
    Custom(String),
}

impl Module {
    pub fn descriptor(&self) -> String {
        match self {
            Module::G => "g".into(),
            Module::Quotient => "g/i".into(),
            Module::Ideal => "i".into(),
            Module::Complement => "i^c".into(),
            Module::Gl => "gl(g)".into(),
            Module::HomQuotient => "i*⊗g/i".into(),
            Module::HomComplement => "i*⊗i^c".into(),
            Module::End => "End(W)".into(),
            Module::Trivial => "Q".into(),
            Module::Custom(s) => s.clone(),
        }
    }

    pub fn from_descriptor(s: &str) -> Module {
        match s {
            "g" => Module::G,
            "g/i" => Module::Quotient,
            "i" => Module::Ideal,
            "i^c" => Module::Complement,
            "gl(g)" => Module::Gl,
            "i*⊗g/i" => Module::HomQuotient,
            "i*⊗i^c" => Module::HomComplement,
            "End(W)" => Module::End,
            "Q" => Module::Trivial,
            other => Module::Custom(other.to_string()),
        }
    }
}

/// Domain Lie algebra of a cochain space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Domain {
    G,
    I,
    Quotient,
    H,
}

impl Domain {
    pub fn descriptor(&self) -> &'static str {
        match self {
            Domain::G => "g",
            Domain::I => "i",
            Domain::Quotient => "g/i",
            Domain::H => "h",
        }
    }

    pub fn from_descriptor(s: &str) -> Option<Domain> {
        match s {
            "g" => Some(Domain::G),
            "i" => Some(Domain::I),
            "g/i" => Some(Domain::Quotient),
            "h" => Some(Domain::H),
            _ => None,
        }
    }
}

/// `Λ^p D* ⊗ W` with `dim D = n` and `dim W = m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CochainSpace {
    pub p: usize,
    pub n: usize,
    pub domain: Domain,
    pub coeff: Module,
    pub m: usize,
}

impl CochainSpace {
    pub fn new(p: usize, n: usize, domain: Domain, coeff: Module, m: usize) -> Self {
        CochainSpace { p, n, domain, coeff, m }
    }

    pub fn combos(&self) -> usize {
        binomial(self.n, self.p)
    }

    pub fn dim(&self) -> usize {
        self.combos() * self.m
    }

    pub fn with_degree(&self, p: usize) -> Self {
        CochainSpace { p, ..self.clone() }
    }
}

/// Expansion of `e^S(x_1, …, x_p)` over all combinations `S`: returns the
/// nonzero pairs `(rank(S), det((x_j)_{S_i}))`.
pub fn wedge_weights(n: usize, args: &[&[Rational]]) -> Vec<(usize, Rational)> {
    let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
    let supports: Vec<Vec<usize>> = args
        .iter()
        .map(|a| (0..a.len()).filter(|&i| !a[i].is_zero()).collect())
        .collect();
    let mut idx = vec![0usize; args.len()];
    fn rec(
        k: usize,
        n: usize,
        args: &[&[Rational]],
        supports: &[Vec<usize>],
        idx: &mut Vec<usize>,
        w: Rational,
        acc: &mut BTreeMap<usize, Rational>,
    ) {
        if k == args.len() {
            if let Some((odd, r)) = signed_rank(n, idx) {
                let e = acc.entry(r).or_insert_with(Rational::zero);
                if odd {
                    *e -= w;
                } else {
                    *e += w;
                }
            }
            return;
        }
        for &i in &supports[k] {
            if idx[..k].contains(&i) {
                continue;
            }
            idx[k] = i;
            rec(k + 1, n, args, supports, idx, &w * &args[k][i], acc);
        }
    }
    rec(0, n, args, &supports, &mut idx, Rational::from_integer(1.into()), &mut acc);
    acc.into_iter().filter(|(_, w)| !w.is_zero()).collect()
}

/// An element of `Λ^p D* ⊗ W`, stored densely: index `rank(S) * m + a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cochain {
    pub space: CochainSpace,
    pub data: Vec<Rational>,
}

impl Cochain {
    pub fn zero(space: CochainSpace) -> Self {
        let d = space.dim();
        Cochain { space, data: vec![Rational::zero(); d] }
    }

    pub fn from_data(space: CochainSpace, data: Vec<Rational>) -> Self {
        assert_eq!(data.len(), space.dim(), "cochain data length");
        Cochain { space, data }
    }

    /// Builds a cochain from its values on increasing basis tuples.
    pub fn from_fn(space: CochainSpace, mut f: impl FnMut(&[usize]) -> Vec<Rational>) -> Self {
        let mut data = Vec::with_capacity(space.dim());
        for c in wedge_basis(space.n, space.p) {
            let v = f(&c);
            assert_eq!(v.len(), space.m, "coefficient length");
            data.extend(v);
        }
        Cochain { space, data }
    }

    pub fn p(&self) -> usize {
        self.space.p
    }

    pub fn block(&self, rank: usize) -> &[Rational] {
        let m = self.space.m;
        &self.data[rank * m..(rank + 1) * m]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Value on basis vectors with arbitrary (possibly unsorted) indices.
    pub fn value_basis(&self, idx: &[usize]) -> Vec<Rational> {
        match signed_rank(self.space.n, idx) {
            None => vec![Rational::zero(); self.space.m],
            Some((odd, r)) => {
                let b = self.block(r);
                if odd {
                    b.iter().map(|x| -x).collect()
                } else {
                    b.to_vec()
                }
            }
        }
    }

    /// Value on arbitrary vectors by multilinear, alternating expansion.
    pub fn evaluate(&self, args: &[Vec<Rational>]) -> Result<Vec<Rational>> {
        if args.len() != self.space.p {
            return Err(Error::Contract(format!(
                "cochain of degree {} evaluated on {} arguments",
                self.space.p,
                args.len()
            )));
        }
        if let Some(a) = args.iter().find(|a| a.len() != self.space.n) {
            return Err(Error::Contract(format!(
                "argument of length {} for domain of dimension {}",
                a.len(),
                self.space.n
            )));
        }
        let refs: Vec<&[Rational]> = args.iter().map(|a| a.as_slice()).collect();
        Ok(self.eval_refs(&refs))
    }

    pub fn eval_refs(&self, args: &[&[Rational]]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.space.m];
        for (r, w) in wedge_weights(self.space.n, args) {
            for (o, x) in out.iter_mut().zip(self.block(r)) {
                if !x.is_zero() {
                    *o += &w * x;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Cochain) -> Cochain {
        assert_eq!(self.space, other.space, "cochain spaces differ");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Cochain { space: self.space.clone(), data }
    }

    pub fn sub(&self, other: &Cochain) -> Cochain {
        assert_eq!(self.space, other.space, "cochain spaces differ");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Cochain { space: self.space.clone(), data }
    }

    pub fn scale(&self, s: &Rational) -> Cochain {
        Cochain { space: self.space.clone(), data: self.data.iter().map(|a| a * s).collect() }
    }

    pub fn neg(&self) -> Cochain {
        Cochain { space: self.space.clone(), data: self.data.iter().map(|a| -a).collect() }
    }

    pub fn to_json(&self) -> Value {
        let mut coeffs = Map::new();
        for (r, c) in wedge_basis(self.space.n, self.space.p).iter().enumerate() {
            let b = self.block(r);
            if b.iter().all(|x| x.is_zero()) {
                continue;
            }
            let key = format!(
                "[{}]",
                c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
            );
            coeffs.insert(key, Value::Array(b.iter().map(|x| Value::String(fmt_rational(x))).collect()));
        }
        json!({
            "p": self.space.p,
            "domain": self.space.domain.descriptor(),
            "coeff": self.space.coeff.descriptor(),
            "coeffs": coeffs,
        })
    }

    /// Parses the JSON form; `n` and `m` come from the surrounding context.
    pub fn from_json(v: &Value, n: usize, m: usize) -> Result<Cochain> {
        let bad = |s: &str| Error::Input(format!("cochain: {s}"));
        let p = v.get("p").and_then(Value::as_u64).ok_or_else(|| bad("missing \"p\""))? as usize;
        let domain = v
            .get("domain")
            .and_then(Value::as_str)
            .and_then(Domain::from_descriptor)
            .ok_or_else(|| bad("missing or unknown \"domain\""))?;
        let coeff = Module::from_descriptor(
            v.get("coeff").and_then(Value::as_str).ok_or_else(|| bad("missing \"coeff\""))?,
        );
        let space = CochainSpace::new(p, n, domain, coeff, m);
        let mut c = Cochain::zero(space);
        let Some(obj) = v.get("coeffs").and_then(Value::as_object) else {
            return Err(bad("missing \"coeffs\" object"));
        };
        for (k, vals) in obj {
            let inner = k.trim().strip_prefix('[').and_then(|s| s.strip_suffix(']'));
            let inner = inner.ok_or_else(|| bad(&format!("bad key {k:?}")))?;
            let idx: Vec<usize> = if inner.trim().is_empty() {
                vec![]
            } else {
                inner
                    .split(',')
                    .map(|t| t.trim().parse::<usize>().map_err(|_| bad(&format!("bad key {k:?}"))))
                    .collect::<Result<_>>()?
            };
            if idx.len() != p || idx.iter().any(|&i| i >= n) || idx.windows(2).any(|w| w[0] >= w[1]) {
                return Err(bad(&format!("key {k:?} is not an increasing {p}-tuple below {n}")));
            }
            let arr = vals.as_array().ok_or_else(|| bad("block is not an array"))?;
            if arr.len() != m {
                return Err(bad(&format!("block {k:?} has {} entries, expected {m}", arr.len())));
            }
            let r = comb_rank(n, &idx);
            for (a, x) in arr.iter().enumerate() {
                let s = x.as_str().ok_or_else(|| bad("entries must be rational strings"))?;
                c.data[r * m + a] = parse_rational(s).map_err(|e| bad(&e))?;
            }
        }
        Ok(c)
    }
}

/// Standard basis vector of length `n`.
pub fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::from_integer(1.into());
    v
}
