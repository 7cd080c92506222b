//! End-to-end acceptance run: one line per criterion, nonzero exit if any fails.

use ideform::brackets::*;
use ideform::complexes::maps::*;
use ideform::complexes::*;
use ideform::corpus::{all_pairs, load, names};
use ideform::deform::*;
use ideform::exactlin::{q, qi, Matrix, Rational, Subspace};
use ideform::liealg::{make_subalgebra_data, ComplementRule, IdealData, LieAlgebra, SubalgebraData};
use ideform::multilin::{unit, vec_space, Carrier, Cochain, GradedElement};
use ideform::sample::{self, SampleRng};
use std::time::Instant;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn pair(a: &str, i: &str) -> IdealData {
    load(a).unwrap().ideal_data(i, &ComplementRule::Pivot).unwrap()
}

fn nr(c: &Cochain) -> GradedElement {
    GradedElement::from_vec(Carrier::Nr, c.space.n, c.clone())
}

fn id(tag: ComplexTag, d: &IdealData) -> ComplexId {
    ComplexId::new(tag, d.clone())
}

fn delta(tag: ComplexTag, d: &IdealData, c: &Cochain) -> Cochain {
    differential(&id(tag, d), c).expect("differential")
}

/// `P μ(P⁻¹·, P⁻¹·)`.
fn transport(g: &LieAlgebra, p: &Matrix) -> Cochain {
    let inv = p.inverse().expect("invertible");
    let n = g.dim();
    Cochain::from_fn(vec_space(n, 2), |s| {
        p.mul_vec(&g.bracket(&inv.mul_vec(&unit(n, s[0])), &inv.mul_vec(&unit(n, s[1]))))
    })
}

fn exp_nilpotent(m: &Matrix) -> Matrix {
    let mut out = Matrix::identity(m.rows());
    let mut term = Matrix::identity(m.rows());
    for j in 1..=m.rows() {
        term = term.mul(m).scale(&q(1, j as i64));
        out = out.add(&term);
    }
    out
}

fn is_nilpotent(m: &Matrix) -> bool {
    let mut p = m.clone();
    for _ in 1..m.rows() {
        p = p.mul(m);
    }
    p.is_zero()
}

fn criterion_1() -> Outcome {
    let mut rng = sample::rng(101);
    for t in 0..100 {
        let n = 3 + t % 3;
        let mu = sample::skew_bracket(&mut rng, n);
        let lhs = gerstenhaber_bracket(&nr(&mu), &nr(&mu)).map_err(|e| e.to_string())?;
        let rhs = GradedElement::from_vec(Carrier::Nr, n, jacobiator_cochain(&mu).scale(&qi(-2)));
        ensure!(lhs.same_as(&rhs), "sample {t} on Q^{n}");
    }
    for name in names() {
        let mu = load(name).unwrap().algebra.mu_cochain();
        ensure!(gerstenhaber_bracket(&nr(&mu), &nr(&mu)).unwrap().is_zero(), "{name}");
    }
    Ok("100 random brackets, 8 corpus brackets".into())
}

fn criterion_2() -> Outcome {
    let mut count = 0;
    for (a, i, d) in all_pairs() {
        for tag in ComplexTag::ALL {
            let r = id(tag, &d).realize(5);
            ensure!(r.complex.square_defect().is_none(), "{a}/{i} {}", tag.name());
            count += 1;
        }
    }
    Ok(format!("{count} complexes, degrees 0..=3"))
}

fn criterion_3() -> Outcome {
    let mut rng = sample::rng(103);
    for (a, i, d) in all_pairs() {
        let v = VoronovData::ideal(&d);
        for k in 0..2 {
            for x in v.a_basis(k) {
                let m1 = v.higher_bracket(std::slice::from_ref(&x)).unwrap();
                let dh = delta_hom_ideal(&d, &as_quotient_valued(&d, &x).unwrap()).unwrap();
                ensure!(m1.data == dh.data, "{a}/{i}: m1 differs from δ^Hom in degree {k}");
            }
        }
        let space = v.a_space(0).unwrap();
        for t in 0..50 {
            let x = sample::cochain(&mut rng, space.clone(), 0.7);
            let y = sample::cochain(&mut rng, space.clone(), 0.7);
            let generic = v.higher_bracket(&[x.clone(), y.clone()]).unwrap();
            ensure!(generic.data == ideal_m2(&d, &x, &y).unwrap().data, "{a}/{i}: m2 sample {t}");
        }
        for t in 0..20 {
            let xs: Vec<Cochain> = (0..4).map(|_| sample::cochain(&mut rng, space.clone(), 0.7)).collect();
            ensure!(v.higher_bracket(&xs[..3]).unwrap().is_zero(), "{a}/{i}: m3 sample {t}");
            ensure!(v.higher_bracket(&xs).unwrap().is_zero(), "{a}/{i}: m4 sample {t}");
        }
    }
    Ok("m1, m2, m3, m4 on every pair".into())
}

fn sub_graph(s: &SubalgebraData, xi: &Cochain) -> Subspace {
    let (h, c) = (s.split.sub.dim(), s.split.comp.dim());
    let m = Matrix::from_vec(c, h, (0..c * h).map(|i| xi.data[(i % h) * c + i / h].clone()).collect());
    Subspace::span(&s.split.sub.basis().add(&s.split.comp.basis().mul(&m)))
}

fn chart_coords(s: &SubalgebraData, w: &Subspace) -> Option<Vec<Rational>> {
    let (sub, comp) = (&s.split.sub, &s.split.comp);
    let coords = sub.basis().hstack(comp.basis()).solve_all(w.basis())?;
    let a = coords.row_range(0, sub.dim()).inverse()?;
    let xi = coords.row_range(sub.dim(), coords.rows()).mul(&a);
    let c = comp.dim();
    Some((0..sub.dim() * c).map(|i| xi.get(i % c, i / c).clone()).collect())
}

fn criterion_4() -> Outcome {
    let mut rng = sample::rng(104);
    let (mut ideal_hits, mut ideal_total) = (0, 0);
    for (a, i, d) in all_pairs() {
        let space = space_hom_complement(&d, 0);
        for t in 0..200 {
            let phi = match t % 4 {
                0 => Cochain::zero(space.clone()),
                1 => sample::cochain(&mut rng, space.clone(), 0.3),
                2 => {
                    let v = sample::vector(&mut rng, space.dim());
                    Cochain::from_data(space.clone(), v.iter().map(|x| qi(if *x > qi(0) { 1 } else { 0 })).collect())
                }
                _ => sample::cochain(&mut rng, space.clone(), 0.8),
            };
            let r = mc_residual_ideal(&d, &phi).unwrap();
            let w = graph_subspace(&d, &phi).unwrap();
            ensure!(r.is_zero == d.algebra.is_ideal(&w).verdict, "{a}/{i}: ideal sample {t}");
            ideal_hits += r.is_zero as usize;
            ideal_total += 1;
        }
    }

    let mut sub_hits = 0;
    let cases = [("sl2", vec![0, 1]), ("sl2xsl2", vec![0, 3]), ("t3_upper_triangular", vec![0, 1]), ("heisenberg3", vec![0])];
    for (name, idx) in cases {
        let g = load(name).unwrap().algebra;
        let h = Subspace::coordinate(g.dim(), &idx);
        let s = make_subalgebra_data(&g, &h, &ComplementRule::Pivot).unwrap();
        let space = VoronovData::subalgebra(&s).a_space(0).unwrap();
        let nilpotent: Vec<Matrix> = (0..g.dim()).map(|i| g.ad_basis(i)).filter(|m| !m.is_zero() && is_nilpotent(m)).collect();
        for t in 0..50 {
            let xi = if t % 2 == 1 && !nilpotent.is_empty() {
                let m = nilpotent[t % nilpotent.len()].scale(&sample::nonzero_rational(&mut rng));
                let moved = Subspace::span(&exp_nilpotent(&m).mul(h.basis()));
                match chart_coords(&s, &moved) {
                    Some(data) => Cochain::from_data(space.clone(), data),
                    None => continue,
                }
            } else {
                sample::cochain(&mut rng, space.clone(), 0.5)
            };
            let r = mc_residual_subalgebra(&s, &xi).unwrap();
            ensure!(r.is_zero == g.is_subalgebra(&sub_graph(&s, &xi)).verdict, "{name}: subalgebra sample {t}");
            sub_hits += r.is_zero as usize;
        }
    }

    let mut sim_hits = 0;
    let sims = [("heisenberg3", "center"), ("solvable2", "derived"), ("abelian3", "e12"), ("sl2_plus_center", "center"), ("abelian2", "e1")];
    for t in 0..50 {
        let (a, i) = sims[t % sims.len()];
        let d = pair(a, i);
        let n = d.n();
        let space = space_hom_complement(&d, 0);
        // Even draws transport the bracket and, every other time, read the moved ideal in the chart of `i`.
        let (mu, phi) = if t % 2 == 0 {
            let p = sample::invertible_matrix(&mut rng, n);
            let mu = transport(&d.algebra, &p).sub(&d.algebra.mu_cochain());
            let moved = Subspace::span(&p.mul(d.ideal().basis()));
            let phi = if t % 4 == 0 {
                chart_inverse(&d, &moved).unwrap_or_else(|_| Cochain::zero(space.clone()))
            } else {
                sample::cochain(&mut rng, space.clone(), 0.5)
            };
            (mu, phi)
        } else {
            (sample::skew_bracket(&mut rng, n), sample::cochain(&mut rng, space.clone(), 0.5))
        };
        let r = mc_residual_simultaneous(&d, &mu, &ad_from_mu(&mu), &phi).unwrap();
        let g2 = LieAlgebra::from_cochain(&d.algebra.mu_cochain().add(&mu));
        let expect = g2.validate().verdict && g2.is_ideal(&graph_subspace(&d, &phi).unwrap()).verdict;
        ensure!(r.is_zero == expect, "{a}/{i}: simultaneous sample {t}");
        sim_hits += r.is_zero as usize;
    }
    ensure!(sub_hits > 0 && sim_hits > 0, "no positive instances: subalgebra {sub_hits}, simultaneous {sim_hits}");
    Ok(format!("MC solutions hit: ideal {ideal_hits}/{ideal_total}, subalgebra {sub_hits}, simultaneous {sim_hits}/50"))
}

fn criterion_5() -> Outcome {
    let d = pair("heisenberg3", "center");
    let c0 = space_hom_complement(&d, 0).dim();
    let rep = cohomology(&id(ComplexTag::HomIdeal, &d), 1).unwrap();
    let z0 = rep.rows[0].dim_z;
    let h0 = rep.dim_h(0);
    ensure!(c0 == 2 && z0 == 2 && h0 == 2, "dim C0 = {c0}, Z0 = {z0}, H0 = {h0}");
    ensure!(id(ComplexTag::HomIdeal, &d).ambient_matrix(0).is_zero(), "δ^Hom is nonzero on C0");
    for (al, be) in [(1, 0), (0, 1), (1, 1), (1, -1)] {
        let eta = Cochain::from_data(space_hom_complement(&d, 0), vec![qi(al), qi(be)]);
        ensure!(!kuranishi(&d, &eta).unwrap().class_is_zero, "Kuranishi class vanishes at ({al}, {be})");
        ensure!(extend_to_second_order(&d, &eta).unwrap().is_none(), "extension exists at ({al}, {be})");
    }
    let sols = ideform_cli::scan_mc(&d, &q(1, 4), &qi(1)).map_err(|e| e.to_string())?;
    ensure!(sols.len() == 1 && sols[0].is_zero(), "scan found {} points", sols.len());
    // The displayed form is −(α²y − αβx, αβy − β²x) on x e1 + y e2.
    let mut sign = None;
    for (al, be) in [(1, 0), (0, 1), (2, 3), (-1, 2)] {
        let (al, be) = (qi(al), qi(be));
        let eta = Cochain::from_data(space_hom_complement(&d, 0), vec![al.clone(), be.clone()]);
        let k = kuranishi(&d, &eta).unwrap().cocycle;
        for (x, y) in [(1, 0), (0, 1), (2, -1)] {
            let (x, y) = (qi(x), qi(y));
            let v = k.evaluate(&[vec![x.clone(), y.clone(), qi(0)]]).unwrap();
            let shown = [-(&al * &al * &y - &al * &be * &x), -(&al * &be * &y - &be * &be * &x)];
            if shown.iter().all(|s| *s == qi(0)) {
                ensure!(v.iter().all(|s| *s == qi(0)), "nonzero value where the display vanishes");
                continue;
            }
            let s = if v[0] == shown[0] && v[1] == shown[1] {
                1
            } else if v[0] == -&shown[0] && v[1] == -&shown[1] {
                -1
            } else {
                return Err("Kuranishi form does not match the displayed shape".into());
            };
            ensure!(*sign.get_or_insert(s) == s, "inconsistent global sign");
        }
    }
    Ok(format!("golden values hold; Kuranishi form equals the display times {}", sign.unwrap_or(1)))
}

fn criterion_6() -> Outcome {
    let mut rng = sample::rng(106);
    for (a, i) in [("heisenberg3", "center"), ("sl2xsl2", "factor1")] {
        let d = pair(a, i);
        let (n, qd) = (d.n(), d.qd());
        for t in 0..50 {
            let k = t % 3;
            let c = sample::cochain(&mut rng, space_morphism(&d, k + 1), 0.5);
            let lhs = map_pi(&d, &delta(ComplexTag::Morphism, &d, &c).neg());
            ensure!(lhs == delta(ComplexTag::HomIdeal, &d, &map_pi(&d, &c)), "{a}/{i}: Π sample {t}");

            let g = sample::cochain(&mut rng, space_gl(&d, k), 0.5);
            let lhs = map_pi_star(&d, &delta(ComplexTag::Gl, &d, &g));
            ensure!(lhs == delta(ComplexTag::HomIdeal, &d, &map_pi_star(&d, &g)), "{a}/{i}: π_* sample {t}");

            let w = map_pi(&d, &c);
            let lhs = map_res_wedge(&d, &delta(ComplexTag::HomIdeal, &d, &w)).unwrap();
            let rhs = delta(ComplexTag::Bott, &d, &map_res_wedge(&d, &w).unwrap()).neg();
            ensure!(lhs == rhs, "{a}/{i}: res sample {t}");

            let iota = iota_star_matrix(&d, k + 1).mul_vec(&c.data);
            ensure!(map_res_wedge(&d, &w).unwrap().data == iota, "{a}/{i}: res∘Π sample {t}");

            let y = sample::cochain(&mut rng, space_quotient(&d, k), 0.5);
            let lhs = pullback_matrix(&d, k + 1).mul_vec(&delta(ComplexTag::Quotient, &d, &y).data);
            let rhs = delta(ComplexTag::Morphism, &d, &Cochain::from_data(space_morphism(&d, k), pullback_matrix(&d, k).mul_vec(&y.data)));
            ensure!(lhs == rhs.data, "{a}/{i}: pullback sample {t}");

            let basis = nr_basis(&d, k);
            let x = Cochain::from_data(space_g(&d, k), basis.mul_vec(&sample::vector(&mut rng, basis.cols())));
            let lhs = map_pibar_star(&d, &delta(ComplexTag::Ad, &d, &x)).unwrap();
            let rhs = delta(ComplexTag::Quotient, &d, &map_pibar_star(&d, &x).unwrap());
            ensure!(lhs == rhs, "{a}/{i}: π̄_* differential sample {t}");

            if k >= 1 {
                let b2 = nr_basis(&d, 3 - k);
                let y = Cochain::from_data(space_g(&d, 3 - k), b2.mul_vec(&sample::vector(&mut rng, b2.cols())));
                let up = gerstenhaber_bracket(&nr(&x), &nr(&y)).unwrap();
                let z = up.vec_part(2).cloned().unwrap_or_else(|| Cochain::zero(vec_space(n, 2)));
                let down = |c: &Cochain| {
                    let v = map_pibar_star(&d, c).unwrap();
                    nr(&Cochain::from_data(vec_space(qd, c.space.p), v.data))
                };
                let rhs = gerstenhaber_bracket(&down(&x), &down(&y)).unwrap();
                ensure!(down(&z).same_as(&rhs), "{a}/{i}: π̄_* bracket sample {t}");
            }
        }
    }
    Ok("50 samples per identity on two pairs".into())
}

fn criterion_7() -> Outcome {
    for (a, i, d) in all_pairs() {
        for k in 1..=3 {
            let wedge = wedge_subspace(&d, k - 1);
            let gap = space_g(&d, k).dim() - nr_basis(&d, k).cols();
            ensure!(gap == wedge.dim(), "{a}/{i}: k = {k}, {gap} vs {}", wedge.dim());
            let coker = id(ComplexTag::Coker, &d).realize(k).basis[k].clone();
            let img = pibar_matrix(&d, k).mul(&coker);
            let coords = wedge.basis().solve_all(&img).ok_or(format!("{a}/{i}: Π̄ leaves C_∧"))?;
            ensure!(coords.rows() == coords.cols() && coords.inverse().is_some(), "{a}/{i}: Π̄ not bijective at k = {k}");
        }
    }
    Ok("k = 1, 2, 3 on every pair".into())
}

fn criterion_8() -> Outcome {
    for (a, i) in [("heisenberg3", "center"), ("sl2xsl2", "factor1")] {
        let d = pair(a, i);
        for row in [Row::Top, Row::Bottom] {
            let c = les_exactness_check(&d, row, 2).map_err(|e| e.to_string())?;
            ensure!(c.verdict, "{a}/{i} {}: {}", row.name(), c.witness);
        }
        let c = diagram_check(&d, 2).map_err(|e| e.to_string())?;
        ensure!(c.verdict, "{a}/{i} diagram: {}", c.witness);
    }
    Ok("both rows exact through degree 2, connecting squares commute".into())
}

fn criterion_9() -> Outcome {
    let (sl, spc, heis) = (pair("sl2xsl2", "factor1"), pair("sl2_plus_center", "center"), pair("heisenberg3", "center"));
    ensure!(certify_stability(&sl, StabilityMethod::H1).unwrap().verdict, "sl2xsl2/factor1 not stable");
    ensure!(certify_stability(&spc, StabilityMethod::H1).unwrap().verdict, "sl2_plus_center/center not stable");
    ensure!(certify_rigidity(&spc, RigidityMethod::Whitehead).unwrap().verdict, "sl2_plus_center/center not rigid");
    let c = certify_rigidity(&heis, RigidityMethod::Whitehead).unwrap();
    ensure!(!c.verdict && c.dims["dim_H2_quotient"] == 2, "heisenberg3/center: {}", c.dims);
    let t = certify_stability(&heis, StabilityMethod::H1).unwrap();
    ensure!(tangent_dimension(&heis) == 2 && t.dims["tangent_dim"] == 2, "tangent dimension {}", t.dims);
    Ok("stability, rigidity and tangent dimension as expected".into())
}

fn random_transverse(rng: &mut SampleRng, w: &Subspace) -> Subspace {
    loop {
        let c = sample::subspace(rng, w.ambient(), w.ambient() - w.dim());
        if w.intersection(&c).dim() == 0 {
            return c;
        }
    }
}

fn criterion_10() -> Outcome {
    for (a, i, d) in all_pairs() {
        let c = vertical_tangent_check(&d);
        ensure!(c.verdict, "{a}/{i}: {}", c.witness);
    }
    let mut rng = sample::rng(110);
    let ns = names();
    for t in 0..100 {
        let g = load(ns[t % ns.len()]).unwrap().algebra;
        let w = sample::subspace(&mut rng, g.dim(), (t / ns.len()) % (g.dim() + 1));
        let c = tau_identity_check(&g, &w).map_err(|e| e.to_string())?;
        ensure!(c.verdict, "τ sample {t}: {}", c.witness);
    }
    let (mut done, mut skipped) = (0, 0);
    while done < 50 {
        let n = 2 + (done + skipped) % 4;
        let k = 1 + (done + skipped) % (n - 1);
        let w = sample::subspace(&mut rng, n, k);
        let (c1, c2) = (random_transverse(&mut rng, &w), random_transverse(&mut rng, &w));
        let phi1 = sample::matrix(&mut rng, n - k, k);
        let g1 = Subspace::span(&w.basis().add(&c1.basis().mul(&phi1)));
        if g1.intersection(&c2).dim() > 0 {
            skipped += 1;
            continue;
        }
        let phi2 = chart_transition(&w, &c1, &c2, &phi1).map_err(|e| e.to_string())?;
        let g2 = Subspace::span(&w.basis().add(&c2.basis().mul(&phi2)));
        ensure!(g1.same_as(&g2), "chart transition moved a graph");
        done += 1;
    }
    Ok(format!("{} pairs, 100 τ samples, 50 transitions ({skipped} off-overlap draws skipped)", all_pairs().len()))
}

fn criterion_11() -> Outcome {
    let mut rng = sample::rng(111);
    for (a, i) in [("heisenberg3", "center"), ("sl2xsl2", "factor1"), ("solvable2", "derived")] {
        let v = VoronovData::ideal(&pair(a, i));
        for t in 0..3 {
            let aa: Vec<ConeElement> = (0..3).map(|j| ConeElement::random_a(&v, &mut rng, ((t + j) % 2) as i64)).collect();
            let mixed: Vec<ConeElement> = (0..3)
                .map(|j| match (t + j) % 3 {
                    0 => ConeElement::random_a(&v, &mut rng, (j % 2) as i64),
                    1 => ConeElement::random_l(&v, &mut rng, 0),
                    _ => ConeElement::random_l(&v, &mut rng, -1),
                })
                .collect();
            for n in 1..=3 {
                ensure!(linfty_relation_residual(Structure::Dgl1aIdeal, &v, &aa[..n]).unwrap().is_zero(), "{a}/{i}: ideal n = {n}");
                ensure!(
                    linfty_relation_residual(Structure::LinftySimultaneous, &v, &mixed[..n]).unwrap().is_zero(),
                    "{a}/{i}: simultaneous n = {n}"
                );
            }
        }
    }
    for (name, idx) in [("sl2xsl2", vec![0, 3]), ("sl2", vec![0, 1])] {
        let g = load(name).unwrap().algebra;
        let s = make_subalgebra_data(&g, &Subspace::coordinate(g.dim(), &idx), &ComplementRule::Pivot).unwrap();
        let v = VoronovData::subalgebra(&s);
        for t in 0..3 {
            let aa: Vec<ConeElement> = (0..3).map(|j| ConeElement::random_a(&v, &mut rng, [0, -1, 1][(t + j) % 3])).collect();
            for n in 1..=3 {
                ensure!(linfty_relation_residual(Structure::LinftySubalgebra, &v, &aa[..n]).unwrap().is_zero(), "{name}: n = {n}");
            }
        }
    }
    Ok("n = 1, 2, 3 for all three structures".into())
}

fn main() {
    let criteria: [(usize, fn() -> Outcome); 11] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
        (11, criterion_11),
    ];
    let results: Vec<(usize, Outcome, f64)> = std::thread::scope(|s| {
        let handles: Vec<_> = criteria
            .iter()
            .map(|&(n, f)| {
                s.spawn(move || {
                    let start = Instant::now();
                    let r = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
                    (n, r, start.elapsed().as_secs_f64())
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let mut failed = 0;
    for (n, r, secs) in &results {
        match r {
            Ok(note) => println!("criterion {n}: pass ({note}; {secs:.1}s)"),
            Err(why) => {
                failed += 1;
                println!("criterion {n}: fail ({why}; {secs:.1}s)");
            }
        }
    }
    println!("{} of {} criteria passed", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
