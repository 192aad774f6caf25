mod common;

use common::fixture;
use gr24::combinatorics::*;
use gr24::grassmann::{P12, P13, P14, P23, P24, P34};
use gr24::region::residual_arrangement;

mod example {
    include!("../examples/combinatorial_types.rs");
}

#[test]
fn example_types() {
    let s = example::run_example();
    assert_eq!(s.symmetries, 16);
    assert_eq!((s.pairings.unordered, s.pairings.identified, s.pairings.total), (420, 210, 1680));
    let sig = |n: &str| s.signatures.iter().find(|(m, _)| *m == n).unwrap().1.describe();
    assert_eq!(sig("hexahedron_conic"), "point^1 line^8 conic^1");
    assert_eq!(sig("hexahedron_planes"), "point^2 line^4 plane^2");
    assert_eq!(sig("hexahedron_net"), "point^2 line^4 quadric surface^1");
    assert!(!s.conic_vs_planes.equivalent);
    assert!(s.conic_vs_relabeled.equivalent);
}

#[test]
fn symmetry_group() {
    let syms = quadric_symmetries();
    assert_eq!(syms.len(), 16);
    assert_eq!(syms, quadric_symmetries());
    assert!(syms.contains(&QuadricSymmetry::identity()));
    let mut swap = [0, 1, 2, 3, 4, 5];
    swap[P12] = P14;
    swap[P14] = P12;
    swap[P34] = P23;
    swap[P23] = P34;
    assert!(syms.contains(&QuadricSymmetry { perm: swap }));
    for s in &syms {
        assert!(syms.contains(&s.inverse()));
        assert_eq!([P13, P24].iter().filter(|&&i| [P13, P24].contains(&s.perm[i])).count() % 2, 0);
    }
}

#[test]
fn pairing_enumeration() {
    let t = pairing_table();
    assert_eq!(t.ordered, 2520);
    assert_eq!(t.unordered, t.ordered / 6);
    assert_eq!(t.minus_marked_orbits, t.ordered / 2);
    assert_eq!(pairing_counts(), (420, 210, 1680));
}

#[test]
fn signatures_are_symmetry_invariant() {
    for name in ["hexahedron_conic", "hexahedron_planes", "hexahedron_net"] {
        let spec = fixture(name);
        let base = signature(&residual_arrangement(&spec).unwrap());
        for s in quadric_symmetries() {
            let moved = spec.permuted(&s.perm);
            let sig = signature(&residual_arrangement(&moved).unwrap());
            assert_eq!(sig, base, "{name} {:?}", s.perm);
        }
    }
}

#[test]
fn equivalence_witnesses() {
    let spec = fixture("hexahedron_net");
    let e = equivalent(&spec, &spec);
    assert!(e.equivalent);
    assert_eq!(e.witness, Some(QuadricSymmetry::identity()));
    assert!(!e.swapped);
    for s in quadric_symmetries().iter().step_by(5) {
        let other = spec.permuted(&s.perm);
        let e = equivalent(&spec, &other);
        assert!(e.equivalent, "{:?}", s.perm);
        let w = e.witness.unwrap();
        assert_eq!(face_lattice(&spec.permuted(&w.perm)), face_lattice(&other));
    }
    assert!(!equivalent(&fixture("hexahedron_conic"), &fixture("hexahedron_planes")).equivalent);
}

#[test]
fn face_lattices_of_sign_switched_pair() {
    let a = face_lattice(&fixture("hexahedron_conic"));
    let b = face_lattice(&fixture("hexahedron_planes"));
    assert_eq!(a.len(), b.len());
    // the empty intersection of no facets is the whole polytope
    assert!(a.contains(&vec![]));
    assert!(a.iter().all(|f| f.len() <= 5));
}

#[test]
fn canonical_label_ignores_vertex_order() {
    let colours = [(1, 1), (1, 1), (1, 2), (0, 1)];
    let a = canonical_label(&colours, &[(0, 1), (1, 2)]);
    let b = canonical_label(&[(1, 2), (1, 1), (0, 1), (1, 1)], &[(0, 1), (1, 3)]);
    assert_eq!(a, b);
    let c = canonical_label(&colours, &[(0, 2), (1, 2)]);
    assert_ne!(a, c);
}
