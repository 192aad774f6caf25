mod common;

use common::{fixture, rats};
use gr24::exact::{Field, MultiPoly, Rat};
use gr24::grassmann::*;
use gr24::io::parse_poly;
use proptest::prelude::*;

mod example {
    include!("../examples/plucker_geometry.rs");
}

#[test]
fn example_geometry() {
    let s = example::run_example();
    // 2x2 minors of [[1, 2, -1, 3], [0, 5, 4, -2]] worked by hand
    assert_eq!(s.minors, rats(&[5, 4, 13, -2, -19, -10]));
    assert!(s.qq_at_minors.is_zero());
    assert_eq!(s.planes, 8);
    assert_eq!(s.points_per_plane, vec![3; 8]);
    assert_eq!(s.section_kinds, vec![Kind::QuadricSurface]);
    assert!(s.facet_meets.iter().all(|m| *m == FacetMeet::Meets));
}

#[test]
fn quadric_values() {
    assert_eq!(qq(&coordinate_point(P12)), Rat::zero());
    assert_eq!(qq(&rats(&[1, 1, 1, 1, 1, 1])), Rat::one());
    assert_eq!(plucker_quadric().eval(&rats(&[1, 1, 1, 1, 1, 1])), Rat::one());
}

#[test]
fn positroid_planes_hold_three_coordinate_points() {
    for pl in positroid_planes() {
        assert!(pl.lies_on_gr());
        let n = (0..6).filter(|&i| pl.contains_point(&coordinate_point(i))).count();
        assert_eq!(n, 3);
    }
}

#[test]
fn coordinate_line_lies_on_gr() {
    let l = Subspace::coordinate(&[P13, P23, P24, P34]);
    assert_eq!(l.gram().rank(), 0);
    let c = decompose_linear_cap_quadric(&l);
    assert_eq!(c.len(), 1);
    assert_eq!(c[0].kind, Kind::Line);
}

#[test]
fn conjugate_points_on_a_section_line() {
    let spec = fixture("hexahedron_conic");
    let f = spec.form_vectors();
    let l = Subspace::from_equations(vec![coordinate_point(P12), coordinate_point(P34), f[4].clone(), f[5].clone()]);
    assert_eq!(l.dim(), 1);
    assert_eq!(l.gram().rank(), 2);
    let c = decompose_linear_cap_quadric(&l);
    assert_eq!(c.len(), 1);
    assert_eq!(c[0].kind, Kind::ConjugatePointPair);
    assert_eq!(c[0].pieces.len(), 2);
    // 46^2 + 4 * 11 * 13 = 2688 = 8^2 * 42
    let d = c[0].disc.clone().unwrap();
    let ratio = d.clone() / Rat::int(42);
    let square = |n: &num_bigint::BigInt| n.sqrt().pow(2) == *n;
    assert!(ratio.signum() > 0 && square(ratio.numer()) && square(ratio.denom()), "disc {d}");
    let q = gr24::region::arrangement::quadric_in_coordinates(&l, &[P14, P24]).unwrap();
    let expected = parse_poly("11p12^2 - 46p12p13 - 13p13^2").unwrap();
    let scaled = q.scale(&Rat::int(16));
    assert_eq!(scaled.map(|c| gr24::exact::Surd::from_rat(c)).format_with(&["a", "b"]), expected.format_with(&["a", "b"]));
}

#[test]
fn quadric_surface_section() {
    let c = decompose_linear_cap_quadric(&Subspace::coordinate(&[P14, P23]));
    assert_eq!(c.len(), 1);
    assert_eq!(c[0].kind, Kind::QuadricSurface);
    assert_eq!(c[0].dim(), 2);
    assert_eq!(c[0].degree(), 2);
}

#[test]
fn restriction_to_a_line() {
    let t = MultiPoly::<Rat>::var(1, 0);
    let one = MultiPoly::constant(1, Rat::one());
    let zero = MultiPoly::zero(1);
    let subs = vec![t.clone(), zero.clone(), zero.clone(), one.sub(&t), zero.clone(), zero];
    assert_eq!(MultiPoly::<Rat>::var(6, P12).compose(&subs), t);
}

#[test]
fn segre_parametrization_lies_on_gr() {
    for pair in MONOMIAL_PAIRS {
        let phi = segre_parametrization(pair).unwrap();
        assert!(plucker_quadric().compose(&phi).is_zero());
        assert!(phi[pair.0].is_zero() && phi[pair.1].is_zero());
    }
}

#[test]
fn adjoint_vanishes_on_a_coordinate_line() {
    let a = parse_poly(
        "2p12^2 + p12p13 + 16p12p14 + 5p13p14 + 5p12p23 + 4p12p24 + 32p13p24 + 7p23p24 - 34p12p34 \
         + 2p13p34 + 8p14p34 + 10p23p34 + 2p24p34 + 2p34^2",
    )
    .unwrap();
    let s = MultiPoly::var(2, 0);
    let t = MultiPoly::var(2, 1);
    let z = MultiPoly::zero(2);
    assert!(a.compose(&[z.clone(), z.clone(), z.clone(), s, t, z]).is_zero());
}

#[test]
fn facet_meets_examples() {
    let ones = rats(&[1, 1, 1, 1, 1, 1]);
    assert_eq!(facet_meets_positive_cell(&ones, P12), FacetMeet::MissesPositive);
    let h = rats(&[-5, 1, 1, 1, 1, 1]);
    assert_eq!(facet_meets_positive_cell(&h, P34), FacetMeet::Meets);
    assert_eq!(facet_meets_positive_cell(&h, P12), FacetMeet::MissesPositive);
    let signs = sampled_signs(&h, P34, 2000, 5);
    assert!(signs.0 && signs.1);
    let signs = sampled_signs(&h, P12, 2000, 5);
    assert!(signs.0 && !signs.1);
}

/// Signs of `h` seen on random points of the facet cell `{p_J = 0}` of the nonnegative
/// Grassmannian: `(positive seen, nonpositive seen)`.
fn sampled_signs(h: &[Rat], facet: usize, tries: usize, seed: u64) -> (bool, bool) {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let cols = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)][facet];
    let (mut pos, mut nonpos) = (false, false);
    for _ in 0..tries {
        let mut m: [[Rat; 4]; 2] = std::array::from_fn(|_| std::array::from_fn(|_| Rat::new(rng.gen_range(-9..=9), rng.gen_range(1..=4))));
        let lambda = Rat::new(rng.gen_range(-5..=5), rng.gen_range(1..=3));
        for r in 0..2 {
            m[r][cols.1] = m[r][cols.0].clone() * &lambda;
        }
        let mut p = minors(&m);
        if p.iter().all(|c| c.signum() <= 0) {
            p = p.iter().map(|c| -c).collect();
        }
        if !p.iter().all(|c| c.signum() >= 0) || p.iter().all(|c| c.is_zero()) {
            continue;
        }
        let v = dot(h, &p);
        pos |= v.signum() > 0;
        nonpos |= v.signum() <= 0;
    }
    (pos, nonpos)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn minors_lie_on_gr(e in prop::collection::vec(-50i64..=50, 8)) {
        let m = [[Rat::int(e[0]), Rat::int(e[1]), Rat::int(e[2]), Rat::int(e[3])], [Rat::int(e[4]), Rat::int(e[5]), Rat::int(e[6]), Rat::int(e[7])]];
        prop_assert!(qq(&minors(&m)).is_zero());
    }

    #[test]
    fn facet_test_matches_sampling(h in prop::collection::vec(-6i64..=6, 6), f in 0usize..4, seed in 0u64..1000) {
        let j = FACET_COORDS[f];
        let h = rats(&h);
        let (pos, nonpos) = sampled_signs(&h, j, 400, seed);
        match facet_meets_positive_cell(&h, j) {
            FacetMeet::MissesPositive => prop_assert!(!nonpos),
            FacetMeet::MissesNegative => prop_assert!(!pos),
            FacetMeet::Meets => {}
        }
        if pos && nonpos {
            prop_assert_eq!(facet_meets_positive_cell(&h, j), FacetMeet::Meets);
        }
    }
}
