//! Command-line front end: argument parsing, input loading, report rendering and exit codes.

use clap::{Parser, ValueEnum};
use ideform::brackets::mc_residual_ideal;
use ideform::complexes::{cohomology, diagram_check, les_exactness_check, ComplexId, ComplexTag, Row};
use ideform::corpus;
use ideform::deform::{
    certify_rigidity, certify_stability, extend_to_second_order, graph_subspace, hom_cochain, kuranishi,
    tangent_dimension, RigidityMethod, StabilityMethod,
};
use ideform::exactlin::{fmt_rational, parse_rational, Matrix, Rational};
use ideform::liealg::{make_ideal_data, subspace_from_json, ComplementRule, IdealData, LieAlgebra};
use ideform::{Certificate, Error, Result};
use rayon::prelude::*;
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::path::Path;

/// Largest number of grid points a scan may visit.
pub const MAX_GRID: usize = 1_000_000;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Verb {
    Validate,
    Cohomology,
    McCheck,
    Kuranishi,
    Certify,
    LesCheck,
    Scan,
}

#[derive(Parser, Debug)]
#[command(name = "ideform", version, about = "Deformations of ideals in Lie algebras over Q")]
pub struct Cli {
    pub verb: Verb,
    /// Built-in example name.
    #[arg(long, conflicts_with = "algebra")]
    pub corpus: Option<String>,
    /// Lie algebra JSON file (a bare algebra or an entry with "algebra" and "ideals").
    #[arg(long)]
    pub algebra: Option<String>,
    /// Ideal name from the entry, or a subspace JSON file.
    #[arg(long)]
    pub ideal: Option<String>,
    /// `pivot`, `orth`, or a subspace JSON file.
    #[arg(long, default_value = "pivot")]
    pub complement: String,
    #[arg(long)]
    pub max_degree: Option<usize>,
    /// h1 | h1-wedge | h0pi | whitehead.
    #[arg(long)]
    pub method: Option<String>,
    #[arg(long)]
    pub json: bool,
    /// First-order data for `kuranishi`: one row per ideal basis vector, complement coordinates.
    #[arg(long)]
    pub eta: Option<String>,
    /// The map `i → i^c` for `mc-check`, in the same layout as `--eta`.
    #[arg(long)]
    pub phi: Option<String>,
    /// Complex tag for `cohomology`.
    #[arg(long, default_value = "hom_ideal")]
    pub complex: String,
    /// Grid step for `scan`.
    #[arg(long, default_value = "1/4")]
    pub step: String,
    /// Grid radius for `scan`.
    #[arg(long, default_value = "1")]
    pub radius: String,
}

/// Exit code, stdout text and the JSON payload of one invocation.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
    pub report: Value,
}

struct Loaded {
    name: String,
    algebra: LieAlgebra,
    ideals: Vec<(String, Value)>,
    entry: Option<corpus::CorpusEntry>,
}

fn read_json(path: &str) -> Result<Value> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{path}: {e}")))?;
    serde_json::from_str(&text)
        .map_err(|e| Error::Input(format!("{path}: malformed JSON at line {}, column {}: {e}", e.line(), e.column())))
}

fn load(cli: &Cli) -> Result<Loaded> {
    if let Some(name) = &cli.corpus {
        let e = corpus::load(name)?;
        let ideals = e.ideals.iter().map(|(n, s)| (n.clone(), ideform::liealg::subspace_to_json(s))).collect();
        return Ok(Loaded { name: e.name.clone(), algebra: e.algebra.clone(), ideals, entry: Some(e) });
    }
    let path = cli.algebra.as_ref().ok_or_else(|| Error::Input("one of --corpus or --algebra is required".into()))?;
    let v = read_json(path)?;
    let algebra = LieAlgebra::from_json(v.get("algebra").unwrap_or(&v))?;
    let mut ideals = Vec::new();
    for item in v.get("ideals").and_then(Value::as_array).cloned().unwrap_or_default() {
        let n = item.get("name").and_then(Value::as_str).unwrap_or("").to_string();
        ideals.push((n, item.get("subspace").cloned().unwrap_or(Value::Null)));
    }
    let name = v.get("name").and_then(Value::as_str).unwrap_or(path).to_string();
    Ok(Loaded { name, algebra, ideals, entry: None })
}

fn require_valid(g: &LieAlgebra) -> Result<()> {
    let c = g.validate();
    if c.verdict {
        Ok(())
    } else {
        Err(Error::Input(format!("bracket is not a Lie bracket: {}", c.witness)))
    }
}

fn complement_rule(s: &str) -> Result<ComplementRule> {
    match s {
        "pivot" => Ok(ComplementRule::Pivot),
        "orth" | "orthogonal" => Ok(ComplementRule::Orthogonal),
        path => Ok(ComplementRule::Explicit(subspace_from_json(&read_json(path)?)?)),
    }
}

fn ideal_subspace(cli: &Cli, l: &Loaded) -> Result<ideform::exactlin::Subspace> {
    let name = cli.ideal.as_ref().ok_or_else(|| Error::Input("--ideal is required".into()))?;
    match l.ideals.iter().find(|(n, _)| n == name) {
        Some((_, v)) => subspace_from_json(v),
        None if Path::new(name).exists() => subspace_from_json(&read_json(name)?),
        None => Err(Error::Input(format!("{} has no ideal {name:?} and no such file exists", l.name))),
    }
}

fn ideal_data(cli: &Cli, l: &Loaded) -> Result<IdealData> {
    require_valid(&l.algebra)?;
    let i = ideal_subspace(cli, l)?;
    make_ideal_data(&l.algebra, &i, &complement_rule(&cli.complement)?)
}

/// Parses `[[b_0, …], …]` with one row per ideal basis vector into `Φ` (`qd × k`).
pub fn parse_map(s: &str, d: &IdealData) -> Result<Matrix> {
    let v: Value = serde_json::from_str(s)
        .map_err(|e| Error::Input(format!("map: malformed JSON at column {}: {e}", e.column())))?;
    let rows = v.as_array().ok_or_else(|| Error::Input("map must be an array of rows".into()))?;
    if rows.len() != d.k() {
        return Err(Error::Input(format!("map has {} rows, the ideal has dimension {}", rows.len(), d.k())));
    }
    let mut m = Matrix::zeros(d.qd(), d.k());
    for (a, row) in rows.iter().enumerate() {
        let row = row.as_array().ok_or_else(|| Error::Input(format!("row {a} is not an array")))?;
        if row.len() != d.qd() {
            return Err(Error::Input(format!("row {a} has {} entries, the complement has dimension {}", row.len(), d.qd())));
        }
        for (b, x) in row.iter().enumerate() {
            let x = match x {
                Value::String(s) => parse_rational(s).map_err(Error::Input)?,
                Value::Number(n) => parse_rational(&n.to_string()).map_err(Error::Input)?,
                _ => return Err(Error::Input(format!("entry ({a}, {b}) must be a rational string"))),
            };
            m.set(b, a, x);
        }
    }
    Ok(m)
}

fn map_json(m: &Matrix) -> Value {
    let rows: Vec<Vec<String>> = (0..m.cols()).map(|a| m.col(a).iter().map(fmt_rational).collect()).collect();
    json!(rows)
}

/// Every point of the grid `{−r, −r+s, …, r}^{dim}` in `C⁰(g; i*⊗i^c)` with zero Maurer–Cartan residual.
pub fn scan_mc(d: &IdealData, step: &Rational, radius: &Rational) -> Result<Vec<Matrix>> {
    use num_traits::{Signed, ToPrimitive, Zero};
    if !step.is_positive() || radius.is_negative() {
        return Err(Error::Input("scan needs a positive step and a non-negative radius".into()));
    }
    let ratio = (radius * Rational::from_integer(2.into())) / step;
    if !ratio.is_integer() {
        return Err(Error::Input("2·radius must be a multiple of the step".into()));
    }
    let per_axis = ratio.to_integer().to_usize().unwrap_or(usize::MAX).saturating_add(1);
    let dim = d.qd() * d.k();
    let total = (0..dim).try_fold(1usize, |acc, _| acc.checked_mul(per_axis).filter(|&t| t <= MAX_GRID));
    let total = total.ok_or(Error::Capacity { what: "grid points", value: MAX_GRID + 1, cap: MAX_GRID })?;
    let point = |mut idx: usize| {
        let mut data = vec![Rational::zero(); dim];
        for x in data.iter_mut() {
            *x = -radius + step * Rational::from_integer(((idx % per_axis) as i64).into());
            idx /= per_axis;
        }
        Matrix::from_vec(d.qd(), d.k(), data)
    };
    let hits: Result<Vec<Option<Matrix>>> = (0..total)
        .into_par_iter()
        .map(|t| {
            let m = point(t);
            let r = mc_residual_ideal(d, &hom_cochain(d, &m))?;
            Ok(r.is_zero.then_some(m))
        })
        .collect();
    Ok(hits?.into_iter().flatten().collect())
}

fn cert_text(c: &Certificate) -> String {
    let mut s = format!("{}: {}\n", c.method, if c.verdict { "true" } else { "false" });
    if !c.dims.is_null() && c.dims != json!({}) {
        let _ = writeln!(s, "  dims: {}", c.dims);
    }
    if !c.witness.is_null() {
        let _ = writeln!(s, "  witness: {}", c.witness);
    }
    s
}

fn cert_json(c: &Certificate) -> Value {
    serde_json::to_value(c).expect("certificate serializes")
}

fn execute(cli: &Cli) -> Result<(bool, Value, String)> {
    let l = load(cli)?;
    match cli.verb {
        Verb::Validate => {
            let mut certs = vec![l.algebra.validate()];
            if let Some(e) = &l.entry {
                certs.push(e.self_check());
            }
            if cli.ideal.is_some() {
                certs.push(l.algebra.is_ideal(&ideal_subspace(cli, &l)?));
            }
            let ok = certs.iter().all(|c| c.verdict);
            let text: String = certs.iter().map(cert_text).collect();
            Ok((ok, json!({"verb": "validate", "name": l.name, "verdict": ok, "certificates": certs.iter().map(cert_json).collect::<Vec<_>>()}), text))
        }
        Verb::Cohomology => {
            let d = ideal_data(cli, &l)?;
            let tag = ComplexTag::parse(&cli.complex).ok_or_else(|| Error::Input(format!("unknown complex {:?}", cli.complex)))?;
            let rep = cohomology(&ComplexId::new(tag, d), cli.max_degree.unwrap_or(2))?;
            let mut text = format!("{} ({} complement)\n  k  dim C  dim Z  dim B  dim H\n", tag.name(), rep.rule);
            for r in &rep.rows {
                let _ = writeln!(text, "{:>3} {:>6} {:>6} {:>6} {:>6}", r.degree, r.dim_c, r.dim_z, r.dim_b, r.dim_h);
            }
            let mut j = rep.to_json();
            j["verb"] = json!("cohomology");
            Ok((true, j, text))
        }
        Verb::McCheck => {
            let d = ideal_data(cli, &l)?;
            let phi = parse_map(cli.phi.as_deref().ok_or_else(|| Error::Input("--phi is required".into()))?, &d)?;
            let r = mc_residual_ideal(&d, &hom_cochain(&d, &phi))?;
            let graph = graph_subspace(&d, &hom_cochain(&d, &phi))?;
            let ideal = d.algebra.is_ideal(&graph).verdict;
            let text = format!("residual zero: {}\ngraph is an ideal: {ideal}\n", r.is_zero);
            let mut j = r.to_json();
            j["verb"] = json!("mc-check");
            j["complement"] = json!(d.rule);
            j["graph_is_ideal"] = json!(ideal);
            Ok((r.is_zero, j, text))
        }
        Verb::Kuranishi => {
            let d = ideal_data(cli, &l)?;
            let eta = parse_map(cli.eta.as_deref().ok_or_else(|| Error::Input("--eta is required".into()))?, &d)?;
            let eta = hom_cochain(&d, &eta);
            let k = kuranishi(&d, &eta)?;
            let omega = extend_to_second_order(&d, &eta)?;
            let z0 = tangent_dimension(&d);
            let mut text = format!(
                "Kuranishi class is zero: {}\nsecond-order extension: {}\n",
                k.class_is_zero,
                if omega.is_some() { "exists" } else { "none" }
            );
            if !k.class_is_zero {
                let _ = writeln!(text, "cocycle: {}", k.cocycle.to_json());
            }
            let mut j = k.to_json();
            j["verb"] = json!("kuranishi");
            j["complement"] = json!(d.rule);
            j["omega"] = omega.map(|w| w.to_json()).unwrap_or(Value::Null);
            j["dim_Z0"] = json!(z0);
            Ok((k.class_is_zero, j, text))
        }
        Verb::Certify => {
            let d = ideal_data(cli, &l)?;
            let m = cli.method.as_deref().ok_or_else(|| Error::Input("--method is required".into()))?;
            let c = if let Some(r) = RigidityMethod::parse(m) {
                certify_rigidity(&d, r)?
            } else if let Some(s) = StabilityMethod::parse(m) {
                certify_stability(&d, s)?
            } else {
                return Err(Error::Input(format!("unknown method {m:?}")));
            };
            let mut j = cert_json(&c);
            j["verb"] = json!("certify");
            j["complement"] = json!(d.rule);
            Ok((c.verdict, j, cert_text(&c)))
        }
        Verb::LesCheck => {
            let d = ideal_data(cli, &l)?;
            let k = cli.max_degree.unwrap_or(2);
            let certs = [les_exactness_check(&d, Row::Top, k)?, les_exactness_check(&d, Row::Bottom, k)?, diagram_check(&d, k)?];
            let ok = certs.iter().all(|c| c.verdict);
            let text: String = certs.iter().map(cert_text).collect();
            Ok((ok, json!({"verb": "les-check", "complement": d.rule, "verdict": ok, "certificates": certs.iter().map(cert_json).collect::<Vec<_>>()}), text))
        }
        Verb::Scan => {
            let d = ideal_data(cli, &l)?;
            let step = parse_rational(&cli.step).map_err(Error::Input)?;
            let radius = parse_rational(&cli.radius).map_err(Error::Input)?;
            let sols = scan_mc(&d, &step, &radius)?;
            let mut text = format!("{} Maurer–Cartan grid points\n", sols.len());
            for s in &sols {
                let _ = writeln!(text, "  {}", map_json(s));
            }
            let j = json!({
                "verb": "scan", "complement": d.rule,
                "step": fmt_rational(&step), "radius": fmt_rational(&radius),
                "solutions": sols.iter().map(map_json).collect::<Vec<_>>(),
            });
            Ok((true, j, text))
        }
    }
}

/// Runs one invocation; `args` excludes the program name.
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once(std::ffi::OsString::from("ideform")).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return Outcome { code, output: e.to_string(), report: json!({"error": e.kind().to_string()}) };
        }
    };
    match execute(&cli) {
        Ok((verdict, report, text)) => {
            let output = if cli.json { format!("{report}\n") } else { text };
            Outcome { code: if verdict { 0 } else { 1 }, output, report }
        }
        Err(e) => {
            let report = json!({"error": e.to_string()});
            let output = if cli.json { format!("{report}\n") } else { format!("error: {e}\n") };
            Outcome { code: 2, output, report }
        }
    }
}
