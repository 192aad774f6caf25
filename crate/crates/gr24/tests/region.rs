mod common;

use common::{edges_by_label, fixture, isomorphic};
use gr24::adjoint::random_valid_spec;
use gr24::exact::{Field, Surd};
use gr24::grassmann::{coordinate_point, decompose_linear_cap_quadric, positroid_planes, qq, Kind, Subspace, P12, P13, P14, P23, P24, P34};
use gr24::region::arrangement::v_intersection;
use gr24::region::classify::classify_linear;
use gr24::region::{check_prop_v_intersection, residual_arrangement, residual_arrangement_polytope, RegionSpec, ResidualArrangement, Verdict};
use rand::SeedableRng;

mod example {
    include!("../examples/residual_arrangement.rs");
}

fn kinds(ra: &ResidualArrangement) -> Vec<(Kind, usize)> {
    let mut v: Vec<Kind> = ra.items.iter().map(|i| i.kind).collect();
    v.sort();
    let mut out: Vec<(Kind, usize)> = Vec::new();
    for k in v {
        match out.last_mut() {
            Some((l, n)) if *l == k => *n += 1,
            _ => out.push((k, 1)),
        }
    }
    out
}

/// Every listed incidence is a real intersection and every pair of meeting items is listed.
fn incidences_are_exact(ra: &ResidualArrangement) {
    for a in 0..ra.items.len() {
        for b in a + 1..ra.items.len() {
            let (x, y) = (&ra.items[a], &ra.items[b]);
            let meet = x.span.intersect(&y.span);
            let real_meet = match meet.dim() {
                d if d < 0 => false,
                0 => qq(&meet.basis()[0]).is_zero(),
                _ => true,
            };
            if x.is_linear() && y.is_linear() {
                assert_eq!(ra.incidence.contains(&(a, b)), real_meet, "{} {}", x.label, y.label);
            } else if ra.incidence.contains(&(a, b)) {
                assert!(meet.dim() >= 0, "{} {}", x.label, y.label);
            }
        }
    }
}

#[test]
fn example_arrangements() {
    let all = example::run_example();
    assert_eq!(all.len(), 4);
    for s in &all {
        incidences_are_exact(&s.region);
        assert!(!s.polytope.is_empty(), "{}", s.name);
    }
}

#[test]
fn quadric_hexahedron_arrangement() {
    let ra = residual_arrangement(&fixture("hexahedron_quadric")).unwrap();
    assert_eq!(kinds(&ra), vec![(Kind::Line, 6), (Kind::QuadricSurface, 1)]);
    let q = ra.find("Q").unwrap();
    assert_eq!(q.vanishing, vec!["h1", "h2"]);
    let drawn_edges = [
        ("Q", "L1"), ("Q", "L2"), ("Q", "L3"), ("Q", "L4"),
        ("L1", "L2"), ("L1", "L5"), ("L2", "L5"),
        ("L3", "L4"), ("L3", "L6"), ("L4", "L6"),
    ];
    let labels = ["Q", "L1", "L2", "L3", "L4", "L5", "L6"];
    assert!(isomorphic(7, &ra.incidence, &edges_by_label(&labels, &drawn_edges)));
}

#[test]
fn conic_hexahedron_arrangement() {
    let ra = residual_arrangement(&fixture("hexahedron_conic")).unwrap();
    assert_eq!(kinds(&ra), vec![(Kind::Point, 1), (Kind::Line, 8), (Kind::Conic, 1)]);
    assert_eq!(ra.isolated_points().len(), 1);
    // the drawn incidence graph, with its isolated point appended
    let drawn_edges = [
        ("C", "L1"), ("C", "L2"), ("C", "L5"), ("C", "L6"),
        ("L1", "L2"), ("L5", "L6"), ("L1", "L3"), ("L2", "L4"), ("L3", "L4"), ("L4", "L8"), ("L8", "L7"),
    ];
    let labels = ["C", "L1", "L2", "L3", "L4", "L5", "L6", "L7", "L8", "pt"];
    let drawn = edges_by_label(&labels, &drawn_edges);
    assert_eq!(ra.incidence.len(), drawn.len() + 1);
    let explained = (0..ra.incidence.len()).filter(|&k| {
        let mut e = ra.incidence.clone();
        e.remove(k);
        isomorphic(10, &e, &drawn)
    });
    assert!(explained.count() > 0);
}

#[test]
fn conic_hexahedron_point_pair_splits() {
    let spec = fixture("hexahedron_conic");
    let f = spec.form_vectors();
    let l = Subspace::from_equations(vec![coordinate_point(P12), coordinate_point(P34), f[4].clone(), f[5].clone()]);
    let pair = &decompose_linear_cap_quadric(&l)[0];
    let verdicts: Vec<Verdict> = pair.pieces.iter().map(|p| classify_linear(p, &f).verdict).collect();
    assert!(verdicts.contains(&Verdict::Face) && verdicts.contains(&Verdict::Residual));
}

#[test]
fn sign_switched_hexahedron_arrangement() {
    let ra = residual_arrangement(&fixture("hexahedron_planes")).unwrap();
    assert_eq!(kinds(&ra), vec![(Kind::Point, 2), (Kind::Line, 4), (Kind::Plane, 2)]);
}

#[test]
fn net_hexahedron_arrangement() {
    let ra = residual_arrangement(&fixture("hexahedron_net")).unwrap();
    assert_eq!(kinds(&ra), vec![(Kind::Line, 4), (Kind::QuadricSurface, 1), (Kind::ConjugatePointPair, 1)]);
    let q = ra.find("Q").unwrap();
    assert_eq!(q.span.to_owned(), Subspace::coordinate(&[P14, P23]).to_surd());
    let lines = [[P12, P13, P23, P24], [P13, P23, P24, P34], [P12, P13, P14, P24], [P13, P14, P24, P34]];
    for z in lines {
        assert!(ra.items.iter().any(|i| i.span == Subspace::coordinate(&z).to_surd()));
    }
    let pp = ra.items.iter().find(|i| i.kind == Kind::ConjugatePointPair).unwrap();
    assert!(ra.neighbours(ra.items.iter().position(|i| i == pp).unwrap()).is_empty());
    let drawn_edges = [("Q", "L1"), ("Q", "L2"), ("Q", "L3"), ("Q", "L4"), ("L1", "L2"), ("L2", "L4"), ("L4", "L3"), ("L3", "L1")];
    let labels = ["Q", "L1", "L2", "L3", "L4", "pp"];
    assert!(isomorphic(6, &ra.incidence, &edges_by_label(&labels, &drawn_edges)));
}

#[test]
fn classification_of_known_strata() {
    let forms = fixture("hexahedron_quadric").form_vectors();
    let e12 = Subspace::from_basis(vec![coordinate_point(P12)]);
    assert_eq!(classify_linear(&e12, &forms).verdict, Verdict::Face);
    let net = fixture("hexahedron_net").form_vectors();
    let q = decompose_linear_cap_quadric(&Subspace::coordinate(&[P14, P23]));
    assert_eq!(gr24::region::classify_component(&q[0], &net).verdict, Verdict::Residual);
}

#[test]
fn nonnegative_grassmannian_has_no_residual_arrangement() {
    let spec = RegionSpec::new(vec![]).unwrap();
    assert!(residual_arrangement(&spec).unwrap().is_empty());
    assert!(residual_arrangement_polytope(&spec).is_empty());
}

fn rat_span(ra: &ResidualArrangement) -> Vec<Subspace<Surd>> {
    ra.items.iter().map(|i| i.span.clone()).collect()
}

#[test]
fn associated_polytope_arrangements() {
    let spec = fixture("hexahedron_conic");
    let f = spec.form_vectors();
    let rp = residual_arrangement_polytope(&spec);
    let expected = [
        Subspace::from_equations(vec![coordinate_point(P13), f[4].clone()]),
        Subspace::coordinate(&[P12, P14, P34]),
        Subspace::from_equations(vec![coordinate_point(P23), coordinate_point(P24), f[5].clone()]),
    ];
    assert_eq!(rp.items.len(), 3);
    for e in &expected {
        assert!(rat_span(&rp).contains(&e.to_surd()));
    }

    let spec = fixture("hexahedron_net");
    let f = spec.form_vectors();
    let rp = residual_arrangement_polytope(&spec);
    let expected = [
        Subspace::coordinate(&[P13, P24]),
        Subspace::coordinate(&[P14, P23]),
        Subspace::from_equations(vec![coordinate_point(P12), coordinate_point(P34), f[4].clone(), f[5].clone()]),
    ];
    assert_eq!(rp.items.len(), 3);
    for e in &expected {
        assert!(rat_span(&rp).contains(&e.to_surd()));
    }
}

#[test]
fn positroid_traces_on_fixtures() {
    let spec = fixture("hexahedron_quadric");
    let r = check_prop_v_intersection(&spec).unwrap();
    assert!(r.holds, "{r:?}");
    let trace = v_intersection(&rat_span(&residual_arrangement(&spec).unwrap()));
    for z in [[P12, P13, P23, P34], [P12, P14, P24, P34]] {
        assert!(trace.contains(&Subspace::coordinate(&z).to_surd()));
    }

    let spec = fixture("hexahedron_net");
    assert!(check_prop_v_intersection(&spec).unwrap().holds);
    let trace = v_intersection(&rat_span(&residual_arrangement(&spec).unwrap()));
    for z in [[P12, P13, P23, P24], [P13, P23, P24, P34], [P12, P13, P14, P24], [P13, P14, P24, P34]] {
        assert!(trace.contains(&Subspace::coordinate(&z).to_surd()));
    }
}

#[test]
fn positroid_traces_on_random_hexahedra() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    for _ in 0..8 {
        let spec = random_valid_spec(&mut rng, 2, 9);
        let r = check_prop_v_intersection(&spec).unwrap();
        assert!(r.holds, "{:?} {r:?}", spec.hyperplanes());
    }
}

#[test]
fn positroid_planes_are_not_residual_for_the_simplex() {
    let forms = RegionSpec::new(vec![]).unwrap().form_vectors();
    for pl in positroid_planes() {
        assert_eq!(classify_linear(&pl, &forms).verdict, Verdict::Face);
    }
}
