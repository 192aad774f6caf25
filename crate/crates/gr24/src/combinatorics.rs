//! Combinatorial types of positive hexahedra: symmetries of the Plücker quadric, pairing
//! counts, residual-arrangement signatures and combinatorial equivalence.

use crate::exact::MultiPoly;
use crate::grassmann::{plucker_quadric, Kind, Subspace};
use crate::region::classify::classify_linear;
use crate::region::{RegionSpec, ResidualArrangement, Verdict};
use itertools::Itertools;
use serde::Serialize;
use std::collections::BTreeSet;

/// A permutation of the six Plücker coordinates: coordinate `i` is sent to `perm[i]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct QuadricSymmetry {
    pub perm: [usize; 6],
}

impl QuadricSymmetry {
    pub fn identity() -> Self {
        QuadricSymmetry { perm: [0, 1, 2, 3, 4, 5] }
    }

    pub fn apply_poly(&self, p: &MultiPoly) -> MultiPoly {
        let subs: Vec<MultiPoly> = (0..6).map(|i| MultiPoly::var(6, self.perm[i])).collect();
        p.compose(&subs)
    }

    pub fn inverse(&self) -> Self {
        let mut perm = [0; 6];
        for i in 0..6 {
            perm[self.perm[i]] = i;
        }
        QuadricSymmetry { perm }
    }
}

/// All coordinate permutations that fix `qq` as a polynomial.
pub fn quadric_symmetries() -> Vec<QuadricSymmetry> {
    let q = plucker_quadric();
    (0..6)
        .permutations(6)
        .map(|p| QuadricSymmetry { perm: p.try_into().unwrap() })
        .filter(|s| s.apply_poly(&q) == q)
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PairingCounts {
    /// Ordered triples of disjoint pairs of facet labels out of eight.
    pub ordered: usize,
    /// Unordered triples.
    pub unordered: usize,
    /// Unordered triples with the two sign-`+` monomials identified, counted by halving.
    pub identified: usize,
    /// Ordered triples up to exchanging the first and last pair (the middle one marks the
    /// `-` monomial), by orbit enumeration.
    pub minus_marked_orbits: usize,
    /// `identified` times the eight types of simple 5-polytopes with eight facets.
    pub total: usize,
}

fn disjoint_pairs() -> Vec<(usize, usize)> {
    (0..8).tuple_combinations().collect()
}

pub fn pairing_table() -> PairingCounts {
    let pairs = disjoint_pairs();
    let disjoint = |a: &(usize, usize), b: &(usize, usize)| a.0 != b.0 && a.0 != b.1 && a.1 != b.0 && a.1 != b.1;
    let mut ordered = Vec::new();
    for a in &pairs {
        for b in pairs.iter().filter(|b| disjoint(a, b)) {
            for c in pairs.iter().filter(|c| disjoint(a, c) && disjoint(b, c)) {
                ordered.push([*a, *b, *c]);
            }
        }
    }
    let unordered: BTreeSet<Vec<(usize, usize)>> = ordered
        .iter()
        .map(|t| {
            let mut v = t.to_vec();
            v.sort();
            v
        })
        .collect();
    let marked: BTreeSet<[(usize, usize); 3]> =
        ordered.iter().map(|&[a, b, c]| if a <= c { [a, b, c] } else { [c, b, a] }).collect();
    let identified = unordered.len() / 2;
    PairingCounts {
        ordered: ordered.len(),
        unordered: unordered.len(),
        identified,
        minus_marked_orbits: marked.len(),
        total: 8 * identified,
    }
}

/// `(unordered triples, identified, total types)`.
pub fn pairing_counts() -> (usize, usize, usize) {
    let t = pairing_table();
    (t.unordered, t.identified, t.total)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TypeSignature {
    /// `(dimension, degree, count)` of the residual components, conjugate pieces counted apart.
    pub components: Vec<(i32, u32, usize)>,
    pub isolated_points: usize,
    /// Canonical adjacency string of the incidence graph with vertices coloured by `(dim, degree)`.
    pub graph: String,
}

impl TypeSignature {
    pub fn describe(&self) -> String {
        self.components
            .iter()
            .map(|&(d, g, n)| {
                let name = match (d, g) {
                    (0, _) => "point",
                    (1, 1) => "line",
                    (1, _) => "conic",
                    (2, 1) => "plane",
                    (2, _) => "quadric surface",
                    (3, 1) => "P3",
                    _ => "other",
                };
                format!("{name}^{n}")
            })
            .join(" ")
    }
}

fn colour(it: &crate::region::Item) -> Vec<(i32, u32)> {
    match it.component.as_ref().map(|c| c.kind) {
        Some(Kind::ConjugatePointPair) => vec![(0, 1), (0, 1)],
        Some(Kind::ConjugatePair) => vec![(it.dim(), 1), (it.dim(), 1)],
        Some(_) => vec![(it.dim(), it.component.as_ref().unwrap().degree())],
        None => vec![(it.dim(), 1)],
    }
}

/// Lexicographically smallest adjacency string over colour-preserving orderings.
pub fn canonical_label(colours: &[(i32, u32)], edges: &[(usize, usize)]) -> String {
    let n = colours.len();
    let mut adj = vec![vec![false; n]; n];
    for &(a, b) in edges {
        adj[a][b] = true;
        adj[b][a] = true;
    }
    let deg: Vec<usize> = adj.iter().map(|r| r.iter().filter(|&&x| x).count()).collect();
    let mut classes: Vec<((i32, u32), usize, Vec<usize>)> = Vec::new();
    for v in 0..n {
        let key = (colours[v], deg[v]);
        match classes.iter_mut().find(|c| (c.0, c.1) == key) {
            Some(c) => c.2.push(v),
            None => classes.push((key.0, key.1, vec![v])),
        }
    }
    classes.sort_by_key(|c| (c.0, c.1));
    let head: String = classes.iter().map(|c| format!("{}.{}.{}x{};", c.0 .0, c.0 .1, c.1, c.2.len())).collect();
    let mut best: Option<Vec<bool>> = None;
    let perms = classes.iter().map(|c| c.2.iter().copied().permutations(c.2.len()).collect::<Vec<_>>());
    for choice in perms.multi_cartesian_product() {
        let order: Vec<usize> = choice.into_iter().flatten().collect();
        let bits: Vec<bool> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| adj[order[i]][order[j]]).collect();
        if best.as_ref().map_or(true, |b| bits < *b) {
            best = Some(bits);
        }
    }
    let bits: String = best.unwrap_or_default().into_iter().map(|b| if b { '1' } else { '0' }).collect();
    head + &bits
}

pub fn signature(ra: &ResidualArrangement) -> TypeSignature {
    let mut colours = Vec::new();
    let mut owner = Vec::new();
    for (i, it) in ra.items.iter().enumerate() {
        for c in colour(it) {
            colours.push(c);
            owner.push(i);
        }
    }
    let mut edges = Vec::new();
    for a in 0..owner.len() {
        for b in a + 1..owner.len() {
            let (x, y) = (owner[a], owner[b]);
            if ra.incidence.contains(&(x.min(y), x.max(y))) {
                edges.push((a, b));
            }
        }
    }
    let mut keys = colours.clone();
    keys.sort();
    let components = keys.into_iter().dedup_with_count().map(|(n, (d, g))| (d, g, n)).collect();
    let isolated_points = ra
        .isolated_points()
        .iter()
        .map(|it| colour(it).len())
        .sum();
    TypeSignature { components, isolated_points, graph: canonical_label(&colours, &edges) }
}

/// Facet-label sets of the nonempty faces of the associated polytope.
///
/// Labels: coordinates `0..6` in Plücker order, then `6 + j` for `h_{j+1}`.
pub fn face_lattice(spec: &RegionSpec) -> BTreeSet<Vec<usize>> {
    let forms = spec.form_vectors();
    // form index -> label
    let label = |k: usize| -> usize {
        let name = spec.forms()[k].name.clone();
        match crate::grassmann::coord_index(&name) {
            Some(i) => i,
            None => 6 + name[1..].parse::<usize>().unwrap() - 1,
        }
    };
    let labels: Vec<usize> = (0..forms.len()).map(label).collect();
    let mut out = BTreeSet::new();
    for k in 0..=forms.len() {
        for sub in (0..forms.len()).combinations(k) {
            let l = Subspace::from_equations(sub.iter().map(|&i| forms[i].clone()).collect());
            if l.is_empty() {
                continue;
            }
            let closed: Vec<usize> = (0..forms.len()).filter(|&i| l.kills(&forms[i])).collect();
            if closed != sub {
                continue;
            }
            if classify_linear(&l, &forms).verdict == Verdict::Face {
                let mut v: Vec<usize> = sub.iter().map(|&i| labels[i]).collect();
                v.sort();
                out.insert(v);
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Equivalence {
    pub equivalent: bool,
    /// Coordinate permutation taking the first spec to the second.
    pub witness: Option<QuadricSymmetry>,
    /// Whether the additional hyperplanes are exchanged.
    pub swapped: bool,
}

fn relabel(faces: &BTreeSet<Vec<usize>>, s: &QuadricSymmetry, swap: bool, m: usize) -> BTreeSet<Vec<usize>> {
    faces
        .iter()
        .map(|f| {
            let mut v: Vec<usize> = f
                .iter()
                .map(|&l| match l {
                    l if l < 6 => s.perm[l],
                    l if swap => 6 + (m - 1 - (l - 6)),
                    l => l,
                })
                .collect();
            v.sort();
            v
        })
        .collect()
}

/// Searches quadric symmetries and exchanges of the additional hyperplanes for a relabeling
/// identifying the face lattices of the associated polytopes.
pub fn equivalent(a: &RegionSpec, b: &RegionSpec) -> Equivalence {
    let none = Equivalence { equivalent: false, witness: None, swapped: false };
    if a.m() != b.m() {
        return none;
    }
    let fa = face_lattice(a);
    let fb = face_lattice(b);
    if fa.len() != fb.len() {
        return none;
    }
    let swaps: &[bool] = if a.m() == 2 { &[false, true] } else { &[false] };
    for s in quadric_symmetries() {
        for &swap in swaps {
            if relabel(&fa, &s, swap, a.m()) == fb {
                return Equivalence { equivalent: true, witness: Some(s), swapped: swap };
            }
        }
    }
    none
}
