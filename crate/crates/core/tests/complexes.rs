mod common;

use common::short_pairs;
use ideform::complexes::maps::*;
use ideform::complexes::*;
use ideform::corpus::{all_pairs, load};
use ideform::exactlin::{qi, Matrix, Subspace};
use ideform::liealg::{ComplementRule, IdealData};
use ideform::multilin::{vec_space, Carrier, Cochain, GradedElement};
use ideform::sample;
use ideform::brackets::gerstenhaber_bracket;

fn pair(name: &str, ideal: &str) -> IdealData {
    load(name).unwrap().ideal_data(ideal, &ComplementRule::Pivot).unwrap()
}

fn dh(d: &IdealData, tag: ComplexTag, top: usize) -> Vec<usize> {
    let r = cohomology(&ComplexId::new(tag, d.clone()), top).unwrap();
    (0..=top).map(|k| r.dim_h(k)).collect()
}

fn mat(d: &IdealData, tag: ComplexTag, k: usize) -> Matrix {
    ComplexId::new(tag, d.clone()).ambient_matrix(k)
}

#[test]
fn differential_squares_to_zero() {
    for (a, i, d) in all_pairs() {
        for tag in ComplexTag::ALL {
            let r = ComplexId::new(tag, d.clone()).realize(4);
            assert_eq!(r.complex.square_defect(), None, "{a}/{i}/{}", tag.name());
        }
    }
}

#[test]
fn ce_matches_brute_force_and_delta_hom() {
    let mut rng = sample::rng(3);
    for (a, i, d) in short_pairs() {
        let id = ComplexId::new(ComplexTag::HomIdeal, d.clone());
        let rep = id.representation();
        for k in 0..3 {
            let c = sample::cochain(&mut rng, id.space(k), 0.5);
            let fast = ce_differential(&rep, &c).unwrap();
            assert_eq!(fast, ce_differential_brute(&rep, &c), "{a}/{i} k={k}");
            assert_eq!(fast.data, delta_hom_ideal(&d, &c).unwrap().data, "{a}/{i} k={k}");
        }
        let ad = ComplexId::new(ComplexTag::Ad, d.clone());
        let c = sample::cochain(&mut rng, ad.space(1), 0.5);
        assert_eq!(ce_differential(&ad.representation(), &c).unwrap(), ce_differential_brute(&ad.representation(), &c));
    }
}

#[test]
fn cohomology_examples() {
    let h = pair("heisenberg3", "center");
    assert_eq!(dh(&h, ComplexTag::HomIdeal, 3), vec![2, 4, 4, 2]);
    assert_eq!(dh(&h, ComplexTag::Quotient, 2)[2], 2);
    assert!(mat(&h, ComplexTag::HomIdeal, 0).is_zero());
    let a = pair("abelian3", "e1");
    assert_eq!(dh(&a, ComplexTag::Ad, 3), vec![3, 9, 9, 3]);
    let s = pair("sl2", "whole");
    assert_eq!(dh(&s, ComplexTag::Ad, 3), vec![0, 0, 0, 0]);
    let rep = cohomology(&ComplexId::new(ComplexTag::HomIdeal, h.clone()), 1).unwrap();
    assert_eq!(rep.representatives[0].len(), 2);
    for c in &rep.representatives[1] {
        assert!(differential(&ComplexId::new(ComplexTag::HomIdeal, h.clone()), c).unwrap().is_zero());
    }
    assert!(cohomology(&ComplexId::new(ComplexTag::Ad, h), 9).is_err());
}

#[test]
fn chain_map_identities_on_bases() {
    for (a, i, d) in short_pairs() {
        for k in 0..3 {
            let ctx = format!("{a}/{i} k={k}");
            let lhs = pi_matrix(&d, k + 1).mul(&mat(&d, ComplexTag::Morphism, k + 1)).neg();
            assert_eq!(lhs, mat(&d, ComplexTag::HomIdeal, k).mul(&pi_matrix(&d, k)), "Π {ctx}");
            let lhs = pi_star_matrix(&d, k + 1).mul(&mat(&d, ComplexTag::Gl, k));
            assert_eq!(lhs, mat(&d, ComplexTag::HomIdeal, k).mul(&pi_star_matrix(&d, k)), "π_* {ctx}");
            let w = pi_matrix(&d, k);
            let lhs = res_matrix(&d, k + 1).mul(&mat(&d, ComplexTag::HomIdeal, k)).mul(&w);
            let rhs = mat(&d, ComplexTag::Bott, k + 1).mul(&res_matrix(&d, k)).mul(&w).neg();
            assert_eq!(lhs, rhs, "res {ctx}");
            assert_eq!(res_matrix(&d, k).mul(&pi_matrix(&d, k)), iota_star_matrix(&d, k + 1), "res∘Π {ctx}");
            let lhs = pullback_matrix(&d, k + 1).mul(&mat(&d, ComplexTag::Quotient, k));
            assert_eq!(lhs, mat(&d, ComplexTag::Morphism, k).mul(&pullback_matrix(&d, k)), "pullback {ctx}");
            let nr = nr_basis(&d, k);
            let lhs = pibar_star_matrix(&d, k + 1).mul(&mat(&d, ComplexTag::Ad, k)).mul(&nr);
            let rhs = mat(&d, ComplexTag::Quotient, k).mul(&pibar_star_matrix(&d, k)).mul(&nr);
            assert_eq!(lhs, rhs, "π̄_* {ctx}");
        }
    }
}

#[test]
fn pibar_star_preserves_brackets() {
    let mut rng = sample::rng(11);
    for (a, i) in [("heisenberg3", "center"), ("sl2xsl2", "factor1"), ("t3_upper_triangular", "nilradical")] {
        let d = pair(a, i);
        let (n, q) = (d.n(), d.qd());
        let nr_elem = |rng: &mut sample::SampleRng, k: usize| {
            let b = nr_basis(&d, k);
            Cochain::from_data(vec_space(n, k), b.mul_vec(&sample::vector(rng, b.cols())))
        };
        let down = |c: &Cochain| {
            let v = map_pibar_star(&d, c).unwrap();
            GradedElement::from_vec(Carrier::Nr, q, Cochain::from_data(vec_space(q, c.space.p), v.data))
        };
        for (p, r) in [(1, 1), (1, 2), (2, 2)] {
            let x = nr_elem(&mut rng, p);
            let y = nr_elem(&mut rng, r);
            let up = gerstenhaber_bracket(
                &GradedElement::from_vec(Carrier::Nr, n, x.clone()),
                &GradedElement::from_vec(Carrier::Nr, n, y.clone()),
            )
            .unwrap();
            let z = up.vec_part(p + r - 1).cloned().unwrap_or_else(|| Cochain::zero(vec_space(n, p + r - 1)));
            assert!(nr_membership(&d, &z).verdict, "{a}/{i}");
            let lhs = down(&z);
            let rhs = gerstenhaber_bracket(&down(&x), &down(&y)).unwrap();
            assert!(lhs.same_as(&rhs), "{a}/{i} degrees ({p}, {r})");
        }
    }
}

#[test]
fn map_examples() {
    let d = pair("heisenberg3", "center");
    let mu = d.algebra.mu_cochain();
    let c = Cochain::from_data(space_morphism(&d, 2), push_pi_matrix(&d, 2).mul_vec(&mu.data));
    assert!(map_pi(&d, &c).is_zero());
    let id = Cochain::from_data(space_g(&d, 1), Matrix::identity(3).data().to_vec());
    assert!(nr_membership(&d, &id).verdict);
    assert!(map_pibar(&d, &id).is_zero());
    let mut bad = Cochain::zero(space_g(&d, 1));
    // φ(e3) = e1 leaves the ideal.
    bad.data[2 * 3] = qi(1);
    assert!(!nr_membership(&d, &bad).verdict);
    assert!(map_pibar_star(&d, &bad).is_err());
    let eta = Cochain::from_data(space_hom(&d, 0), vec![qi(1), qi(0)]);
    assert_eq!(wedge_subspace(&d, 0).dim(), 2);
    assert_eq!(map_res_wedge(&d, &eta).unwrap().data, vec![qi(-1), qi(0)]);
    let s = pair("sl2xsl2", "factor1");
    // A degree-1 element with φ(u₀)(u₀) ≠ 0 is not alternating on the ideal.
    let mut diag = Cochain::zero(space_hom(&s, 1));
    diag.data[0] = qi(1);
    assert!(map_res_wedge(&s, &diag).is_err());
}

#[test]
fn cokernel_dimensions_and_pibar() {
    for (a, i, d) in all_pairs() {
        for k in 1..=3 {
            let full = space_g(&d, k).dim();
            let nr = nr_basis(&d, k).cols();
            let wedge = wedge_subspace(&d, k - 1);
            assert_eq!(full - nr, wedge.dim(), "{a}/{i} k={k}");
            let coker = ComplexId::new(ComplexTag::Coker, d.clone()).realize(k).basis[k].clone();
            let img = pibar_matrix(&d, k).mul(&coker);
            assert_eq!(img.rank(), wedge.dim(), "{a}/{i} k={k}");
            assert!(wedge.contains(&Subspace::span(&img)));
        }
    }
}

#[test]
fn long_exact_sequences() {
    for (a, i, top) in [("heisenberg3", "center", 2), ("sl2xsl2", "factor1", 1), ("abelian3", "e1", 2)] {
        let d = pair(a, i);
        for row in [Row::Top, Row::Bottom] {
            let c = les_exactness_check(&d, row, top).unwrap();
            assert!(c.verdict, "{a}/{i} {} {}", row.name(), c.witness);
        }
        assert!(diagram_check(&d, top).unwrap().verdict, "{a}/{i}");
    }
    assert!(les_exactness_check(&pair("heisenberg3", "center"), Row::Top, 6).is_err());
}

#[test]
fn res_is_injective_in_degree_zero() {
    for (a, i, d) in short_pairs() {
        let c = res_h0_report(&d);
        assert!(c.verdict, "{a}/{i}: {}", c.witness);
    }
}
