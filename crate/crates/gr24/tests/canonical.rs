mod common;

use common::{fixture, segment_oracle};
use gr24::adjoint::{adjoint_space, to_surd_poly};
use gr24::canonical::*;
use gr24::exact::{monomials, Field, MultiPoly, Rat, Surd, UniPoly};
use gr24::io::parse_poly;
use proptest::prelude::*;

mod example {
    include!("../examples/canonical_form.rs");
}

const QUADRIC_ADJOINT: &str = "2p12^2 + p12p13 + 16p12p14 + 5p13p14 + 5p12p23 + 4p12p24 + 32p13p24 + 7p23p24 \
    - 34p12p34 + 2p13p34 + 8p14p34 + 10p23p34 + 2p24p34 + 2p34^2";

#[test]
fn example_certificates() {
    let all = example::run_example();
    for s in &all {
        assert_eq!(s.assignment.verdict, CertVerdict::PositiveGeometryCertified, "{}", s.name);
        assert!(s.assignment.connected);
        assert_eq!(s.degrees.iter().sum::<usize>(), 2 * s.edges);
        assert_eq!(s.line_segments + s.conic_segments, s.edges);
    }
    let get = |n: &str| all.iter().find(|s| s.name == n).unwrap();
    assert_eq!(get("pentahedron").assignment.adjoint, "p12 + p23 + 2*p24 + 2*p34");
    let quad = get("hexahedron_quadric");
    assert_eq!((quad.vertices, quad.edges, quad.conic_segments), (14, 26, 4));
    assert_eq!(quad.assignment.poly.clone().unwrap(), parse_poly(QUADRIC_ADJOINT).unwrap());
    let conic = get("hexahedron_conic");
    assert_eq!((conic.vertices, conic.line_segments, conic.conic_segments), (14, 20, 7));
    let net = get("hexahedron_net");
    assert_eq!((net.vertices, net.edges, net.line_segments, net.conic_segments), (16, 32, 20, 12));
    assert!(net.degrees.iter().all(|&d| d == 4));
    assert_eq!(net.assignment.adjoint, "6*p13p23 + 2*p13p14 + 4*p23p24 + p14p24");
}

#[test]
fn skeleton_of_the_quadric_hexahedron() {
    let sk = boundary_skeleton(&fixture("hexahedron_quadric")).unwrap();
    let deg = sk.degrees();
    // ten vertices of degree four, four more where a line meets h1 or h2 tangentially to two facets
    assert_eq!(deg.iter().filter(|&&d| d == 4).count(), 10);
    assert_eq!(deg.iter().filter(|&&d| d == 3).count(), 4);
    for (v, d) in sk.vertices.iter().zip(&deg) {
        if *d == 3 {
            assert_eq!(v.vanishing.len(), 5, "{:?}", v.vanishing);
        }
    }
    assert!(sk.is_connected());
}

#[test]
fn printed_adjoint_passes_every_edge() {
    let spec = fixture("hexahedron_quadric");
    let sk = boundary_skeleton(&spec).unwrap();
    let a = parse_poly(QUADRIC_ADJOINT).unwrap();
    let reports = edge_residues(&spec, &sk, &a);
    for (c, r) in sk.curves.iter().zip(&reports) {
        assert!(r.passes, "{:?}", r);
        for &(x, y) in &c.segments {
            assert_eq!(r.residues[x].clone() + &r.residues[y], Surd::zero());
        }
        segment_oracle(&spec, c, &a, &r.residues).unwrap();
    }
    assert_eq!(certify(&spec, &sk, &a).verdict, CertVerdict::PositiveGeometryCertified);
}

#[test]
fn plucker_quadric_is_not_an_adjoint() {
    let spec = fixture("hexahedron_quadric");
    let sk = boundary_skeleton(&spec).unwrap();
    let qq = to_surd_poly(&gr24::grassmann::plucker_quadric());
    let c = certify(&spec, &sk, &qq);
    assert_eq!(c.verdict, CertVerdict::Inconsistent);
    assert!(c.edges.iter().all(|e| !e.passes));
}

#[test]
fn non_canonical_member_of_the_net_fails() {
    let spec = fixture("hexahedron_net");
    let sk = boundary_skeleton(&spec).unwrap();
    let a = parse_poly("2p23p14 + 4p23p24 + p14p24").unwrap();
    assert!(adjoint_space(&spec).unwrap().contains(&a));
    let c = certify(&spec, &sk, &a);
    assert_eq!(c.verdict, CertVerdict::Inconsistent);
    assert!(c.edges.iter().any(|e| !e.passes));
}

#[test]
fn canonical_member_of_the_net() {
    let spec = fixture("hexahedron_net");
    let sk = boundary_skeleton(&spec).unwrap();
    let basis = adjoint_space(&spec).unwrap();
    let c = select_canonical_adjoint(&spec, &sk, &basis);
    assert_eq!(c.verdict, CertVerdict::PositiveGeometryCertified);
    let half = |s: &str| parse_poly(s).unwrap().scale(&Surd::from_rat(&Rat::new(1, 2)));
    let expected = half("4p13p14 - 4p23p24 + p14p24").add(&half("12p13p23 + 12p23p24 + p14p24"));
    assert_eq!(c.poly.clone().unwrap(), expected);
    for (curve, r) in sk.curves.iter().zip(&c.edges) {
        segment_oracle(&spec, curve, &expected, &r.residues).unwrap();
    }
}

#[test]
fn every_unit_perturbation_breaks_certification() {
    let spec = fixture("hexahedron_quadric");
    let sk = boundary_skeleton(&spec).unwrap();
    let a = parse_poly(QUADRIC_ADJOINT).unwrap();
    let ms = monomials(6, 2);
    assert_eq!(ms.len(), 21);
    for m in ms {
        let b = a.add(&MultiPoly::from_terms(6, [(m.clone(), Surd::one())]));
        assert_eq!(certify(&spec, &sk, &b).verdict, CertVerdict::Inconsistent, "{m:?}");
    }
}

#[test]
fn interval_form_residues() {
    let r = partial_fraction_residues(&[(Rat::zero(), Rat::one())], &UniPoly::from_ints(&[1])).unwrap();
    assert_eq!(r, vec![(Rat::one(), -Rat::one())]);
    assert_eq!(partial_fraction_residues(&[(Rat::one(), Rat::zero())], &UniPoly::from_ints(&[1])), Err(CanonicalError::RepeatedPoles));
    assert!(matches!(
        partial_fraction_residues(&[(Rat::zero(), Rat::one())], &UniPoly::from_ints(&[0, 1])),
        Err(CanonicalError::NumeratorDegree(1, 0))
    ));
}

#[test]
fn two_interval_numerator_is_unique() {
    let poles = [(Rat::int(0), Rat::int(1)), (Rat::int(2), Rat::int(3))];
    let f = interval_union_numerator(&poles);
    let r = partial_fraction_residues(&poles, &f).unwrap();
    assert_eq!(r, vec![(Rat::one(), -Rat::one()), (Rat::one(), -Rat::one())]);
    // independent solve of f(r_i) = target_i * D'(r_i) for the three coefficients of f
    let den = UniPoly::from_ints(&[0, 1, -1]).mul(&UniPoly::from_ints(&[-6, 5, -1]));
    let dd = den.derivative();
    let pts = [0, 1, 2, 3];
    let target = [1, -1, 1, -1];
    let rows: Vec<Vec<Rat>> = pts.iter().map(|&t| (0..3).map(|k| Rat::int(t).pow(k)).collect()).collect();
    let m = gr24::exact::Matrix::from_rows(3, rows.clone());
    assert_eq!(m.rank(), 3);
    let rhs: Vec<Rat> = pts.iter().zip(target).map(|(&t, s)| dd.eval(&Rat::int(t)) * Rat::int(s)).collect();
    let sol = gr24::exact::Matrix::from_rows(3, rows[..3].to_vec()).solve(&rhs[..3]).unwrap();
    assert_eq!(UniPoly::new(sol.clone()).eval(&Rat::int(3)), rhs[3]);
    assert_eq!(UniPoly::new(sol), f);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn residues_sum_to_zero(gaps in prop::collection::vec(1i64..5, 2..7), coeffs in prop::collection::vec(-9i64..=9, 11)) {
        let mut cuts = vec![0i64];
        for g in &gaps {
            cuts.push(cuts.last().unwrap() + g);
        }
        let n = cuts.len() / 2;
        let poles: Vec<(Rat, Rat)> = (0..n).map(|i| (Rat::int(cuts[2 * i]), Rat::int(cuts[2 * i + 1]))).collect();
        let f = UniPoly::from_ints(&coeffs[..2 * n - 1]);
        let r = partial_fraction_residues(&poles, &f).unwrap();
        let total = r.iter().fold(Rat::zero(), |acc, (a, b)| acc + a + b);
        prop_assert!(total.is_zero());
        let g = interval_union_numerator(&poles);
        let rg = partial_fraction_residues(&poles, &g).unwrap();
        prop_assert!(rg.iter().all(|(a, b)| a.is_one() && *b == -Rat::one()));
    }
}

#[test]
fn pentahedron_with_unjoined_positive_vertices() {
    // positive coefficients only at p13, p24: no Grassmannian line joins the two vertices
    let spec = gr24::region::RegionSpec::from_ints(&[[-6, 4, -9, -9, 8, -6]]);
    let basis = adjoint_space(&spec).unwrap();
    assert_eq!(basis.dims(), (2, 2));
    let closed = to_surd_poly(&gr24::adjoint::pentahedron_adjoint(&spec.hyperplanes()[0]).unwrap().poly());
    assert!(basis.contains(&closed));

    // here the region splits into two pieces and residues cannot fix the relative scale
    let spec = gr24::region::RegionSpec::from_ints(&[[-7, -4, 4, 2, -6, -3]]);
    let sk = boundary_skeleton(&spec).unwrap();
    assert!(!sk.is_connected());
    let closed = to_surd_poly(&gr24::adjoint::pentahedron_adjoint(&spec.hyperplanes()[0]).unwrap().poly());
    let c = certify(&spec, &sk, &closed);
    assert!(c.edges.iter().all(|e| e.passes));
    assert_eq!(c.verdict, CertVerdict::Undetermined);
    assert_eq!(select_canonical_adjoint(&spec, &sk, &adjoint_space(&spec).unwrap()).verdict, CertVerdict::Undetermined);
}
