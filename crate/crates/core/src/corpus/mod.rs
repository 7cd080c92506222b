//! Built-in example algebras with named ideals and expected invariants.

use crate::cert::Certificate;
use crate::complexes::{cohomology, ComplexId, ComplexTag};
use crate::error::{Error, Result};
use crate::exactlin::Subspace;
use crate::liealg::{make_ideal_data, subspace_from_json, subspace_to_json, ComplementRule, IdealData, LieAlgebra};
use serde_json::{json, Value};

const SOURCES: [(&str, &str); 8] = [
    ("abelian2", include_str!("data/abelian2.json")),
    ("abelian3", include_str!("data/abelian3.json")),
    ("heisenberg3", include_str!("data/heisenberg3.json")),
    ("solvable2", include_str!("data/solvable2.json")),
    ("sl2", include_str!("data/sl2.json")),
    ("sl2xsl2", include_str!("data/sl2xsl2.json")),
    ("sl2_plus_center", include_str!("data/sl2_plus_center.json")),
    ("t3_upper_triangular", include_str!("data/t3_upper_triangular.json")),
];

pub fn names() -> Vec<&'static str> {
    SOURCES.iter().map(|(n, _)| *n).collect()
}

/// An expected invariant together with its provenance tag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expected {
    pub key: String,
    pub value: u64,
    pub provenance: String,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub algebra: LieAlgebra,
    pub ideals: Vec<(String, Subspace)>,
    pub expected: Vec<Expected>,
}

impl CorpusEntry {
    pub fn ideal(&self, name: &str) -> Option<&Subspace> {
        self.ideals.iter().find(|(n, _)| n == name).map(|(_, s)| s)
    }

    pub fn ideal_data(&self, name: &str, rule: &ComplementRule) -> Result<IdealData> {
        let i = self
            .ideal(name)
            .ok_or_else(|| Error::Input(format!("{} has no ideal named {name:?}", self.name)))?;
        make_ideal_data(&self.algebra, i, rule)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "algebra": self.algebra.to_json(),
            "ideals": self.ideals.iter().map(|(n, s)| json!({"name": n, "subspace": subspace_to_json(s)})).collect::<Vec<_>>(),
            "expected": self.expected.iter().map(|e| json!({"key": e.key, "value": e.value, "provenance": e.provenance})).collect::<Vec<_>>(),
        })
    }

    /// Parses and validates: the bracket must be a Lie bracket and every listed subspace an ideal.
    pub fn from_json(v: &Value) -> Result<CorpusEntry> {
        let name = v.get("name").and_then(Value::as_str).unwrap_or("").to_string();
        let algebra = LieAlgebra::from_json(v.get("algebra").ok_or_else(|| Error::Input("missing \"algebra\"".into()))?)?;
        let cert = algebra.validate();
        if !cert.verdict {
            return Err(Error::Input(format!("{name}: bracket fails the Jacobi identity: {}", cert.witness)));
        }
        let mut ideals = Vec::new();
        for item in v.get("ideals").and_then(Value::as_array).cloned().unwrap_or_default() {
            let iname = item.get("name").and_then(Value::as_str).unwrap_or("").to_string();
            let s = subspace_from_json(item.get("subspace").unwrap_or(&Value::Null))?;
            let c = algebra.is_ideal(&s);
            if !c.verdict {
                return Err(Error::Input(format!("{name}/{iname} is not an ideal: {}", c.witness)));
            }
            ideals.push((iname, s));
        }
        let mut expected = Vec::new();
        for item in v.get("expected").and_then(Value::as_array).cloned().unwrap_or_default() {
            expected.push(Expected {
                key: item["key"].as_str().unwrap_or("").to_string(),
                value: item["value"].as_u64().ok_or_else(|| Error::Input("expected value must be a count".into()))?,
                provenance: item["provenance"].as_str().unwrap_or("").to_string(),
            });
        }
        Ok(CorpusEntry { name, algebra, ideals, expected })
    }

    /// Recomputes one invariant: `dim`, `<ideal>.dim` or `<ideal>.<complex>.H<k>`.
    pub fn compute(&self, key: &str) -> Result<u64> {
        let parts: Vec<&str> = key.split('.').collect();
        let bad = || Error::Input(format!("unknown invariant {key:?}"));
        match parts.as_slice() {
            ["dim"] => Ok(self.algebra.dim() as u64),
            [ideal, "dim"] => Ok(self.ideal(ideal).ok_or_else(bad)?.dim() as u64),
            [ideal, tag, h] => {
                let tag = ComplexTag::parse(tag).ok_or_else(bad)?;
                let k: usize = h.strip_prefix('H').and_then(|x| x.parse().ok()).ok_or_else(bad)?;
                let d = self.ideal_data(ideal, &ComplementRule::Pivot)?;
                Ok(cohomology(&ComplexId::new(tag, d), k)?.dim_h(k) as u64)
            }
            _ => Err(bad()),
        }
    }

    /// Re-derives every expected value.
    pub fn self_check(&self) -> Certificate {
        let mut mismatches = Vec::new();
        for e in &self.expected {
            match self.compute(&e.key) {
                Ok(v) if v == e.value => {}
                Ok(v) => mismatches.push(json!({"key": e.key, "expected": e.value, "computed": v, "provenance": e.provenance})),
                Err(err) => mismatches.push(json!({"key": e.key, "error": err.to_string()})),
            }
        }
        let dims = json!({"checked": self.expected.len()});
        if mismatches.is_empty() {
            Certificate::new(true, "corpus-self-check", Value::Null, dims)
        } else {
            Certificate::new(false, "corpus-self-check", json!({"mismatches": mismatches}), dims)
        }
    }
}

pub fn load(name: &str) -> Result<CorpusEntry> {
    let src = SOURCES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, s)| *s)
        .ok_or_else(|| Error::UnknownCorpus(name.to_string()))?;
    let v: Value = serde_json::from_str(src).map_err(|e| Error::Input(format!("{name}: {e}")))?;
    CorpusEntry::from_json(&v)
}

/// Every `(entry, ideal)` pair of the corpus with the pivot complement.
pub fn all_pairs() -> Vec<(String, String, IdealData)> {
    let mut out = Vec::new();
    for name in names() {
        let e = load(name).expect("corpus entries are valid");
        for (iname, _) in &e.ideals {
            let d = e.ideal_data(iname, &ComplementRule::Pivot).expect("corpus ideals are ideals");
            out.push((name.to_string(), iname.clone(), d));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_loads_and_checks() {
        for n in names() {
            let e = load(n).unwrap();
            let c = e.self_check();
            assert!(c.verdict, "{n}: {}", c.witness);
        }
        assert!(matches!(load("nope"), Err(Error::UnknownCorpus(_))));
    }
}
