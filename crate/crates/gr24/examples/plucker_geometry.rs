// Plücker coordinates, positroid planes and linear sections of Gr(2,4).

use gr24::exact::Rat;
use gr24::grassmann::{
    coordinate_point, decompose_linear_cap_quadric, facet_meets_positive_cell, minors, positroid_planes, qq, FacetMeet,
    Kind, Subspace, NAMES, P12, P14, P23,
};

pub struct GeometrySummary {
    pub minors: Vec<Rat>,
    pub qq_at_minors: Rat,
    pub planes: usize,
    pub points_per_plane: Vec<usize>,
    /// Kinds of the components of `{p14 = p23 = 0} ∩ Gr`.
    pub section_kinds: Vec<Kind>,
    pub facet_meets: Vec<FacetMeet>,
}

pub fn run_example() -> GeometrySummary {
    let r = |n: i64| Rat::int(n);
    let m = [[r(1), r(2), r(-1), r(3)], [r(0), r(5), r(4), r(-2)]];
    let p = minors(&m);
    let q = qq(&p);
    println!("minors {:?}, qq = {q}", p.iter().map(|c| c.to_string()).collect::<Vec<_>>());

    let planes = positroid_planes();
    let per_plane: Vec<usize> = planes
        .iter()
        .map(|pl| (0..6).filter(|&i| pl.contains_point(&coordinate_point(i))).count())
        .collect();
    for (pl, n) in planes.iter().zip(&per_plane) {
        println!("plane with {n} coordinate points: {:?}", pl.equations().len());
    }

    let section = decompose_linear_cap_quadric(&Subspace::coordinate(&[P14, P23]));
    let kinds: Vec<Kind> = section.iter().map(|c| c.kind).collect();
    println!("{{p14 = p23 = 0}} meets Gr in {:?}", kinds);

    let h: Vec<Rat> = [1, -3, 1, -8, 2, 2].into_iter().map(Rat::int).collect();
    let meets: Vec<FacetMeet> = [P12, P23, 5, P14].iter().map(|&j| facet_meets_positive_cell(&h, j)).collect();
    for (j, mt) in [P12, P23, 5, P14].iter().zip(&meets) {
        println!("h on facet {} = 0: {:?}", NAMES[*j], mt);
    }

    GeometrySummary {
        qq_at_minors: q,
        minors: p,
        planes: planes.len(),
        points_per_plane: per_plane,
        section_kinds: kinds,
        facet_meets: meets,
    }
}

#[allow(dead_code)]
fn main() {
    let s = run_example();
    assert!(s.qq_at_minors.is_zero());
}
