use crate::cert::Certificate;
use crate::error::{check_cap, Error, Result, MAX_DIM};
use crate::exactlin::{fmt_rational, parse_rational, Matrix, Rational, Subspace};
use crate::multilin::{unit, wedge_basis, Cochain, CochainSpace, Domain, Module};
use num_traits::Zero;
use serde_json::{json, Map, Value};

/// A Lie algebra given by structure constants `[e_i, e_j] = Σ_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    c: Vec<Rational>,
    basis_names: Vec<String>,
}

fn vec_str(v: &[Rational]) -> String {
    format!("({})", v.iter().map(fmt_rational).collect::<Vec<_>>().join(", "))
}

impl LieAlgebra {
    /// Structure constants indexed `(i * n + j) * n + k`; no validation is performed.
    pub fn from_constants(dim: usize, c: Vec<Rational>) -> Self {
        assert_eq!(c.len(), dim * dim * dim, "structure constant count");
        let basis_names = (1..=dim).map(|i| format!("e{i}")).collect();
        LieAlgebra { dim, c, basis_names }
    }

    pub fn abelian(dim: usize) -> Self {
        Self::from_constants(dim, vec![Rational::zero(); dim * dim * dim])
    }

    /// Builds the algebra from brackets of pairs `i < j`, completing by skew symmetry.
    pub fn from_brackets(dim: usize, brackets: &[(usize, usize, Vec<(usize, Rational)>)]) -> Self {
        let mut g = Self::abelian(dim);
        for (i, j, coeffs) in brackets {
            for (k, x) in coeffs {
                g.c[(i * dim + j) * dim + k] += x;
                g.c[(j * dim + i) * dim + k] -= x;
            }
        }
        g
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.dim, "basis name count");
        self.basis_names = names;
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Rational] {
        let n = self.dim;
        &self.c[(i * n + j) * n..(i * n + j + 1) * n]
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let n = self.dim;
        let mut out = vec![Rational::zero(); n];
        for i in (0..n).filter(|&i| !x[i].is_zero()) {
            for j in (0..n).filter(|&j| !y[j].is_zero()) {
                let f = &x[i] * &y[j];
                for (o, c) in out.iter_mut().zip(self.bracket_basis(i, j)) {
                    if !c.is_zero() {
                        *o += &f * c;
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad_{e_i}`: column `j` is `[e_i, e_j]`.
    pub fn ad_basis(&self, i: usize) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            for (k, x) in self.bracket_basis(i, j).iter().enumerate() {
                if !x.is_zero() {
                    m.set(k, j, x.clone());
                }
            }
        }
        m
    }

    pub fn ad(&self, x: &[Rational]) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zeros(n, n);
        for i in (0..n).filter(|&i| !x[i].is_zero()) {
            m = m.add(&self.ad_basis(i).scale(&x[i]));
        }
        m
    }

    pub fn jacobiator(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vec<Rational> {
        let a = self.bracket(&self.bracket(x, y), z);
        let b = self.bracket(&self.bracket(y, z), x);
        let c = self.bracket(&self.bracket(z, x), y);
        a.iter().zip(&b).zip(&c).map(|((a, b), c)| a + b + c).collect()
    }

    /// Antisymmetry and the Jacobi identity on basis elements.
    pub fn validate(&self) -> Certificate {
        let n = self.dim;
        for i in 0..n {
            for j in i..n {
                let s: Vec<Rational> = self
                    .bracket_basis(i, j)
                    .iter()
                    .zip(self.bracket_basis(j, i))
                    .map(|(a, b)| a + b)
                    .collect();
                if s.iter().any(|x| !x.is_zero()) {
                    return Certificate::fail(
                        "antisymmetry",
                        json!({"indices": [i, j], "sum": vec_str(&s)}),
                    );
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for l in j + 1..n {
                    let jac = self.jacobiator(&unit(n, i), &unit(n, j), &unit(n, l));
                    if jac.iter().any(|x| !x.is_zero()) {
                        return Certificate::fail(
                            "jacobi",
                            json!({"indices": [i, j, l], "jacobiator": vec_str(&jac)}),
                        );
                    }
                }
            }
        }
        Certificate::new(true, "jacobi", Value::Null, json!({"dim": n}))
    }

    pub fn is_subalgebra(&self, w: &Subspace) -> Certificate {
        let vs = w.vectors();
        for (a, x) in vs.iter().enumerate() {
            for (b, y) in vs.iter().enumerate().skip(a + 1) {
                let z = self.bracket(x, y);
                if !w.contains_vec(&z) {
                    return Certificate::fail(
                        "subalgebra",
                        json!({"pair": [a, b], "w_a": vec_str(x), "w_b": vec_str(y), "bracket": vec_str(&z)}),
                    );
                }
            }
        }
        Certificate::new(true, "subalgebra", Value::Null, json!({"dim": w.dim()}))
    }

    pub fn is_ideal(&self, w: &Subspace) -> Certificate {
        let n = self.dim;
        for a in 0..n {
            for (b, y) in w.vectors().iter().enumerate() {
                let z = self.bracket(&unit(n, a), y);
                if !w.contains_vec(&z) {
                    return Certificate::fail(
                        "ideal",
                        json!({"basis_index": a, "w_index": b, "w_b": vec_str(y), "bracket": vec_str(&z)}),
                    );
                }
            }
        }
        Certificate::new(true, "ideal", Value::Null, json!({"dim": w.dim()}))
    }

    /// The bracket as an element of `Λ² g* ⊗ g`.
    pub fn mu_cochain(&self) -> Cochain {
        let n = self.dim;
        Cochain::from_fn(CochainSpace::new(2, n, Domain::G, Module::G, n), |s| {
            self.bracket_basis(s[0], s[1]).to_vec()
        })
    }

    /// Skew bracket encoded by a cochain in `Λ² g* ⊗ g`.
    pub fn from_cochain(mu: &Cochain) -> Self {
        let n = mu.space.n;
        assert!(mu.space.p == 2 && mu.space.m == n, "bracket cochain must lie in Λ²g*⊗g");
        let mut br = Vec::new();
        for (r, s) in wedge_basis(n, 2).iter().enumerate() {
            let coeffs: Vec<(usize, Rational)> = mu
                .block(r)
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(k, x)| (k, x.clone()))
                .collect();
            br.push((s[0], s[1], coeffs));
        }
        Self::from_brackets(n, &br)
    }

    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let (n1, n2) = (self.dim, other.dim);
        let n = n1 + n2;
        let mut g = LieAlgebra::abelian(n);
        for i in 0..n1 {
            for j in 0..n1 {
                for k in 0..n1 {
                    g.c[(i * n + j) * n + k] = self.c(i, j, k).clone();
                }
            }
        }
        for i in 0..n2 {
            for j in 0..n2 {
                for k in 0..n2 {
                    g.c[((i + n1) * n + j + n1) * n + k + n1] = other.c(i, j, k).clone();
                }
            }
        }
        g
    }

    pub fn to_json(&self) -> Value {
        let n = self.dim;
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut coeffs = Map::new();
                for (k, x) in self.bracket_basis(i, j).iter().enumerate() {
                    if !x.is_zero() {
                        coeffs.insert(k.to_string(), Value::String(fmt_rational(x)));
                    }
                }
                if !coeffs.is_empty() {
                    brackets.push(json!({"i": i, "j": j, "coeffs": coeffs}));
                }
            }
        }
        json!({"dim": n, "basis_names": self.basis_names, "brackets": brackets})
    }

    pub fn from_json(v: &Value) -> Result<LieAlgebra> {
        let bad = |s: String| Error::Input(format!("Lie algebra: {s}"));
        let n = v.get("dim").and_then(Value::as_u64).ok_or_else(|| bad("missing \"dim\"".into()))? as usize;
        check_cap("dim", n, MAX_DIM)?;
        let mut br = Vec::new();
        let list = match v.get("brackets") {
            None => vec![],
            Some(b) => b.as_array().ok_or_else(|| bad("\"brackets\" must be an array".into()))?.clone(),
        };
        for (t, b) in list.iter().enumerate() {
            let idx = |key: &str| -> Result<usize> {
                b.get(key)
                    .and_then(Value::as_u64)
                    .map(|x| x as usize)
                    .ok_or_else(|| bad(format!("brackets[{t}]: missing {key:?}")))
            };
            let (i, j) = (idx("i")?, idx("j")?);
            if i >= j || j >= n {
                return Err(bad(format!("brackets[{t}]: need i < j < dim, got ({i}, {j})")));
            }
            let obj = b
                .get("coeffs")
                .and_then(Value::as_object)
                .ok_or_else(|| bad(format!("brackets[{t}]: missing \"coeffs\" object")))?;
            let mut coeffs = Vec::new();
            for (k, x) in obj {
                let k: usize = k.parse().map_err(|_| bad(format!("brackets[{t}]: bad index {k:?}")))?;
                if k >= n {
                    return Err(bad(format!("brackets[{t}]: index {k} out of range")));
                }
                let s = x.as_str().ok_or_else(|| bad(format!("brackets[{t}]: coefficients must be strings")))?;
                coeffs.push((k, parse_rational(s).map_err(|e| bad(format!("brackets[{t}]: {e}")))?));
            }
            br.push((i, j, coeffs));
        }
        let mut g = LieAlgebra::from_brackets(n, &br);
        if let Some(names) = v.get("basis_names").and_then(Value::as_array) {
            let names: Vec<String> = names.iter().filter_map(|x| x.as_str().map(String::from)).collect();
            if names.len() != n {
                return Err(bad(format!("{} basis names for dimension {n}", names.len())));
            }
            g.basis_names = names;
        }
        Ok(g)
    }
}

/// Subspace JSON: `{"ambient": n, "basis": [[...], ...]}` with column vectors.
pub fn subspace_to_json(s: &Subspace) -> Value {
    let basis: Vec<Vec<String>> =
        s.vectors().iter().map(|v| v.iter().map(fmt_rational).collect()).collect();
    json!({"ambient": s.ambient(), "basis": basis})
}

pub fn subspace_from_json(v: &Value) -> Result<Subspace> {
    let bad = |s: String| Error::Input(format!("subspace: {s}"));
    let n = v.get("ambient").and_then(Value::as_u64).ok_or_else(|| bad("missing \"ambient\"".into()))? as usize;
    let basis = v.get("basis").and_then(Value::as_array).ok_or_else(|| bad("missing \"basis\"".into()))?;
    let mut cols = Vec::new();
    for (t, b) in basis.iter().enumerate() {
        let arr = b.as_array().ok_or_else(|| bad(format!("basis[{t}] is not an array")))?;
        if arr.len() != n {
            return Err(bad(format!("basis[{t}] has length {}, expected {n}", arr.len())));
        }
        let col: Vec<Rational> = arr
            .iter()
            .map(|x| {
                let s = x.as_str().ok_or_else(|| bad(format!("basis[{t}]: entries must be strings")))?;
                parse_rational(s).map_err(|e| bad(format!("basis[{t}]: {e}")))
            })
            .collect::<Result<_>>()?;
        cols.push(col);
    }
    let s = Subspace::span_vectors(n, &cols);
    if s.dim() != cols.len() {
        return Err(bad("basis vectors are linearly dependent".into()));
    }
    Ok(s)
}
