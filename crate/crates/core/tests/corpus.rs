use ideform::corpus::*;
use ideform::liealg::ComplementRule;
use ideform::Error;

#[test]
fn every_entry_loads_and_checks() {
    assert_eq!(names().len(), 8);
    for name in names() {
        let e = load(name).unwrap();
        assert_eq!(e.name, name);
        assert!(e.algebra.validate().verdict, "{name}");
        for (i, s) in &e.ideals {
            assert!(e.algebra.is_ideal(s).verdict, "{name}/{i}");
            assert!(e.ideal_data(i, &ComplementRule::Pivot).is_ok());
        }
        let c = e.self_check();
        assert!(c.verdict, "{name}: {}", c.witness);
    }
}

#[test]
fn json_round_trip() {
    for name in names() {
        let e = load(name).unwrap();
        let back = CorpusEntry::from_json(&e.to_json()).unwrap();
        assert_eq!(back.algebra, e.algebra);
        assert_eq!(back.expected, e.expected);
        assert_eq!(back.ideals.len(), e.ideals.len());
        for ((n1, s1), (n2, s2)) in back.ideals.iter().zip(&e.ideals) {
            assert!(n1 == n2 && s1.same_as(s2));
        }
    }
}

#[test]
fn computed_invariants() {
    let h = load("heisenberg3").unwrap();
    assert_eq!(h.compute("dim").unwrap(), 3);
    assert_eq!(h.compute("center.dim").unwrap(), 1);
    assert_eq!(h.compute("center.hom_ideal.H0").unwrap(), 2);
    assert_eq!(h.compute("center.quotient.H2").unwrap(), 2);
    assert!(h.compute("center.nonsense.H0").is_err());
    assert!(h.compute("nowhere.dim").is_err());
    assert_eq!(load("sl2").unwrap().compute("whole.ad.H1").unwrap(), 0);
}

#[test]
fn rejects_bad_entries() {
    assert!(matches!(load("nope"), Err(Error::UnknownCorpus(_))));
    let mut v = load("heisenberg3").unwrap().to_json();
    v["ideals"] = serde_json::json!([{"name": "e1", "subspace": {"ambient": 3, "basis": [["1", "0", "0"]]}}]);
    assert!(CorpusEntry::from_json(&v).is_err());
    let mut v = load("heisenberg3").unwrap().to_json();
    v["expected"] = serde_json::json!([{"key": "center.hom_ideal.H0", "value": 5, "provenance": "derived"}]);
    let e = CorpusEntry::from_json(&v).unwrap();
    assert!(!e.self_check().verdict);
}

#[test]
fn all_pairs_cover_every_ideal() {
    let total: usize = names().iter().map(|n| load(n).unwrap().ideals.len()).sum();
    assert_eq!(all_pairs().len(), total);
}
