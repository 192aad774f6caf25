//! Strata of a positive polytope and its residual arrangements.

use super::classify::{classify_component, classify_linear, Classification, Verdict};
use super::{RegionError, RegionSpec};
use crate::exact::{Field, Matrix, MultiPoly, Rat, Surd};
use crate::grassmann::{
    decompose_linear_cap_quadric, dot, positroid_planes, qq, restricted_quadric, Component, Kind, Subspace, NAMES,
};
use itertools::Itertools;
use serde::Serialize;
use std::fmt::Write;

/// A component of an intersection of facet closures, with the facet forms vanishing on it.
#[derive(Clone, Debug, PartialEq)]
pub struct Stratum {
    pub facets: Vec<usize>,
    pub component: Component,
}

fn push_unique(comps: &mut Vec<Component>, c: Component) -> bool {
    if comps.iter().any(|d| d.span == c.span) {
        return false;
    }
    comps.push(c);
    true
}

/// Components of `L ∩ Gr`, plus the real singular locus of any conjugate or imaginary pair.
fn components_of(l: &Subspace) -> Vec<Component> {
    let mut out = Vec::new();
    for c in decompose_linear_cap_quadric(l) {
        if matches!(c.kind, Kind::ConjugatePair | Kind::ImaginaryPair) {
            let kernel = c.span.gram().nullspace();
            if !kernel.is_empty() {
                let k = c.span.sub_from_coords(&kernel);
                out.extend(decompose_linear_cap_quadric(&k));
            }
        }
        out.push(c);
    }
    out
}

/// Rejects subsets of facet hyperplanes whose intersection with Gr is a double linear space
/// of positive dimension.
fn check_simple(spec: &RegionSpec) -> Result<(), RegionError> {
    let forms = spec.forms();
    let n = spec.facet_count();
    for k in 2..=4.min(n) {
        for sub in (0..n).combinations(k) {
            let l = Subspace::from_equations(sub.iter().map(|&i| forms[i].coeffs.clone()).collect());
            if l.is_empty() {
                continue;
            }
            let g = l.gram();
            if g.rank() == 1 && l.dim() >= 2 {
                let names: Vec<&str> = sub.iter().map(|&i| forms[i].name.as_str()).collect();
                return Err(RegionError::NonSimple(format!(
                    "{{{}}} meets Gr(2,4) in a double {}",
                    names.iter().map(|n| format!("{n} = 0")).join(", "),
                    Kind::linear(l.dim() - 1).label()
                )));
            }
        }
    }
    Ok(())
}

/// All irreducible components of intersections of facet closures, closed under pairwise
/// intersection. Facet closures themselves come first.
pub fn enumerate_strata(spec: &RegionSpec) -> Result<Vec<Stratum>, RegionError> {
    check_simple(spec)?;
    let forms = spec.forms();
    let nf = spec.facet_count();
    let mut comps: Vec<Component> = Vec::new();
    for f in forms.iter().take(nf) {
        for c in components_of(&Subspace::from_equations(vec![f.coeffs.clone()])) {
            push_unique(&mut comps, c);
        }
    }
    let mut i = 1;
    while i < comps.len() {
        for j in 0..i {
            let l = comps[i].span.intersect(&comps[j].span);
            if l.is_empty() {
                continue;
            }
            for c in components_of(&l) {
                push_unique(&mut comps, c);
            }
        }
        i += 1;
    }
    Ok(comps
        .into_iter()
        .map(|c| {
            let facets = (0..nf).filter(|&k| c.kills(&forms[k].coeffs)).collect();
            Stratum { facets, component: c }
        })
        .collect())
}

/// A member of a residual arrangement: a rational component, or one real piece of a
/// conjugate pair defined over a quadratic field.
#[derive(Clone, Debug, PartialEq)]
pub struct Item {
    pub label: String,
    pub kind: Kind,
    pub span: Subspace<Surd>,
    /// The rational component, when the item is defined over Q.
    pub component: Option<Component>,
    pub vanishing: Vec<String>,
    pub classification: Classification,
}

impl Item {
    /// Dimension of the item as a variety.
    pub fn dim(&self) -> i32 {
        match &self.component {
            Some(c) => c.dim(),
            None => self.span.dim(),
        }
    }

    pub fn is_rational(&self) -> bool {
        self.component.is_some()
    }

    /// Whether the variety is the full linear span.
    pub fn is_linear(&self) -> bool {
        self.component.as_ref().map_or(true, |c| c.kind.is_linear())
    }

    pub fn equations(&self) -> Vec<String> {
        self.span.equations().iter().map(|e| format_linear(e)).collect()
    }
}

pub fn format_linear<F: Field + std::fmt::Display>(e: &[F]) -> String {
    MultiPoly::linear(e).format_with(&NAMES)
}

/// The Plücker quadric restricted to a subspace, written in the given coordinates, which
/// must restrict to a coordinate system on it.
pub fn quadric_in_coordinates(span: &Subspace, coords: &[usize]) -> Option<MultiPoly> {
    let n = span.basis().len();
    if coords.len() != n {
        return None;
    }
    let m = Matrix::from_rows(n, span.basis().iter().map(|b| coords.iter().map(|&c| b[c].clone()).collect()).collect());
    if m.rank() < n {
        return None;
    }
    // new basis vectors with unit coordinates at `coords`
    let mut new_basis = Vec::new();
    for k in 0..n {
        let target: Vec<Rat> = (0..n).map(|i| if i == k { Rat::one() } else { Rat::zero() }).collect();
        let s = m.transpose().solve(&target)?;
        new_basis.push(span.point(&s));
    }
    let subs: Vec<MultiPoly> =
        (0..6).map(|k| MultiPoly::linear(&new_basis.iter().map(|b| b[k].clone()).collect::<Vec<_>>())).collect();
    Some(crate::grassmann::plucker_quadric().compose(&subs))
}

#[derive(Clone, Debug, PartialEq)]
pub struct ResidualArrangement {
    pub items: Vec<Item>,
    /// Pairs of item indices with nonempty intersection.
    pub incidence: Vec<(usize, usize)>,
    /// Number of candidate components examined.
    pub candidates: usize,
}

impl ResidualArrangement {
    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn labels(&self) -> Vec<&str> {
        self.items.iter().map(|i| i.label.as_str()).collect()
    }

    pub fn find(&self, label: &str) -> Option<&Item> {
        self.items.iter().find(|i| i.label == label)
    }

    pub fn neighbours(&self, i: usize) -> Vec<usize> {
        self.incidence
            .iter()
            .filter_map(|&(a, b)| if a == i { Some(b) } else if b == i { Some(a) } else { None })
            .collect()
    }

    /// Zero-dimensional items meeting no other item.
    pub fn isolated_points(&self) -> Vec<&Item> {
        (0..self.items.len())
            .filter(|&i| self.items[i].dim() == 0 && self.neighbours(i).is_empty())
            .map(|i| &self.items[i])
            .collect()
    }

    /// Counts of items per `(dimension, degree)`, sorted.
    pub fn signature(&self) -> Vec<(i32, u32, usize)> {
        let mut keys: Vec<(i32, u32)> = self
            .items
            .iter()
            .map(|i| (i.dim(), i.component.as_ref().map_or(1, |c| c.degree())))
            .collect();
        keys.sort();
        keys.into_iter().dedup_with_count().map(|(n, (d, g))| (d, g, n)).collect()
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("graph {name} {{\n");
        for it in &self.items {
            let _ = writeln!(s, "  \"{}\" [label=\"{}\"];", it.label, it.label);
        }
        for &(a, b) in &self.incidence {
            let _ = writeln!(s, "  \"{}\" -- \"{}\";", self.items[a].label, self.items[b].label);
        }
        s.push_str("}\n");
        s
    }

    pub fn report(&self) -> ArrangementReport {
        ArrangementReport {
            components: self
                .items
                .iter()
                .map(|it| ItemReport {
                    label: it.label.clone(),
                    kind: it.kind,
                    dim: it.dim(),
                    rational: it.is_rational(),
                    equations: it.equations(),
                    vanishing: it.vanishing.clone(),
                    verdict: it.classification.verdict,
                    certificate: it.classification.certificate.clone(),
                })
                .collect(),
            incidence: self
                .incidence
                .iter()
                .map(|&(a, b)| (self.items[a].label.clone(), self.items[b].label.clone()))
                .collect(),
            isolated_points: self.isolated_points().iter().map(|i| i.label.clone()).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ItemReport {
    pub label: String,
    pub kind: Kind,
    pub dim: i32,
    pub rational: bool,
    pub equations: Vec<String>,
    pub vanishing: Vec<String>,
    pub verdict: Verdict,
    pub certificate: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ArrangementReport {
    pub components: Vec<ItemReport>,
    pub incidence: Vec<(String, String)>,
    pub isolated_points: Vec<String>,
}

fn prefix(kind: Kind) -> &'static str {
    match kind {
        Kind::Point => "pt",
        Kind::Line => "L",
        Kind::Plane => "E",
        Kind::P3 => "T",
        Kind::P4 => "H",
        Kind::Conic => "C",
        Kind::QuadricSurface => "Q",
        Kind::QuadricThreefold => "X",
        Kind::ConjugatePointPair => "pp",
        Kind::ConjugatePair => "LL",
        Kind::ImaginaryPair => "I",
    }
}

fn display_rank(kind: Kind) -> u8 {
    match kind {
        Kind::QuadricThreefold => 0,
        Kind::QuadricSurface => 1,
        Kind::P4 => 2,
        Kind::P3 => 3,
        Kind::ImaginaryPair => 4,
        Kind::Plane => 5,
        Kind::Conic => 6,
        Kind::ConjugatePair => 7,
        Kind::Line => 8,
        Kind::ConjugatePointPair => 9,
        Kind::Point => 10,
    }
}

fn intersects(a: &Item, b: &Item, on_gr: bool) -> bool {
    let l = a.span.intersect(&b.span);
    match l.dim() {
        -1 => false,
        0 if on_gr => qq(&l.basis()[0]).is_zero(),
        _ => true,
    }
}

/// Sorts, labels and links the items.
fn assemble(mut items: Vec<Item>, candidates: usize, on_gr: bool) -> ResidualArrangement {
    // drop items strictly contained in another
    let keep: Vec<bool> = (0..items.len())
        .map(|i| {
            !(0..items.len()).any(|j| {
                j != i && items[j].span.dim() > items[i].span.dim() && items[j].span.contains(&items[i].span)
            })
        })
        .collect();
    let mut it = keep.iter();
    items.retain(|_| *it.next().unwrap());
    items.sort_by_cached_key(|i| (display_rank(i.kind), i.equations()));
    let mut counts = std::collections::BTreeMap::new();
    for i in &items {
        *counts.entry(prefix(i.kind)).or_insert(0usize) += 1;
    }
    let mut seen = std::collections::BTreeMap::new();
    for i in items.iter_mut() {
        let p = prefix(i.kind);
        let k = seen.entry(p).or_insert(0usize);
        *k += 1;
        i.label = if counts[p] > 1 { format!("{p}{k}") } else { p.to_string() };
    }
    let mut incidence = Vec::new();
    for a in 0..items.len() {
        for b in a + 1..items.len() {
            if intersects(&items[a], &items[b], on_gr) {
                incidence.push((a, b));
            }
        }
    }
    ResidualArrangement { items, incidence, candidates }
}

fn vanishing_names(span: &Subspace<Surd>, spec: &RegionSpec) -> Vec<String> {
    spec.forms()
        .into_iter()
        .filter(|f| span.kills(&f.coeffs.iter().map(Surd::from_rat).collect::<Vec<_>>()))
        .map(|f| f.name)
        .collect()
}

/// Classification of every stratum below the facet closures.
pub fn classify_strata(spec: &RegionSpec) -> Result<Vec<(Stratum, Classification)>, RegionError> {
    let forms = spec.form_vectors();
    Ok(enumerate_strata(spec)?
        .into_iter()
        .filter(|s| s.component.span.dim() < 4)
        .map(|s| {
            let c = classify_component(&s.component, &forms);
            (s, c)
        })
        .collect())
}

/// Components of intersections of facet closures of `S` containing no face of `S`,
/// maximal under inclusion.
pub fn residual_arrangement(spec: &RegionSpec) -> Result<ResidualArrangement, RegionError> {
    let strata = classify_strata(spec)?;
    let n = strata.len();
    let mut items = Vec::new();
    for (s, cl) in strata {
        let c = &s.component;
        match cl.verdict {
            Verdict::Undetermined => {
                return Err(RegionError::Undetermined(format!(
                    "{} {{{}}}: {}",
                    c.kind.label(),
                    c.span.equations().iter().map(|e| format_linear(e)).join(", "),
                    cl.certificate
                )))
            }
            Verdict::Residual => {
                let span = c.span.to_surd();
                items.push(Item {
                    label: String::new(),
                    kind: c.kind,
                    vanishing: vanishing_names(&span, spec),
                    span,
                    component: Some(c.clone()),
                    classification: cl,
                });
            }
            Verdict::Face => {
                // a conjugate pair with one face piece leaves the other piece residual
                for (piece, (v, _)) in c.pieces.iter().zip(&cl.pieces) {
                    if *v == Verdict::Residual {
                        items.push(Item {
                            label: String::new(),
                            kind: Kind::linear(piece.dim()),
                            vanishing: vanishing_names(piece, spec),
                            span: piece.clone(),
                            component: None,
                            classification: Classification {
                                verdict: Verdict::Residual,
                                witness: None,
                                certificate: "real piece of a conjugate pair with no face".into(),
                                pieces: vec![],
                            },
                        });
                    }
                }
            }
        }
    }
    Ok(assemble(items, n, true))
}

/// Flats of the `6 + m` hyperplanes of the associated polytope.
pub fn polytope_flats(spec: &RegionSpec) -> Vec<Subspace> {
    let forms = spec.form_vectors();
    let mut flats: Vec<Subspace> = Vec::new();
    for k in 1..=forms.len() {
        for sub in (0..forms.len()).combinations(k) {
            let l = Subspace::from_equations(sub.iter().map(|&i| forms[i].clone()).collect());
            if !l.is_empty() && !flats.contains(&l) {
                flats.push(l);
            }
        }
    }
    flats
}

/// Residual arrangement of the associated polytope in P^5: maximal flats of its
/// hyperplane arrangement that support no face.
pub fn residual_arrangement_polytope(spec: &RegionSpec) -> ResidualArrangement {
    let forms = spec.form_vectors();
    let flats = polytope_flats(spec);
    let n = flats.len();
    let items = flats
        .into_iter()
        .filter_map(|l| {
            let cl = classify_linear(&l, &forms);
            (cl.verdict == Verdict::Residual).then(|| {
                let span = l.to_surd();
                Item {
                    label: String::new(),
                    kind: Kind::linear(l.dim()),
                    vanishing: vanishing_names(&span, spec),
                    span,
                    component: Some(Component::linear(l, false)),
                    classification: cl,
                }
            })
        })
        .collect();
    assemble(items, n, false)
}

/// Alias kept for symmetry with [`ResidualArrangement`].
pub type PolytopeArrangement = ResidualArrangement;

/// Maximal members of a family of linear spaces.
pub fn maximal_spaces(mut spaces: Vec<Subspace<Surd>>) -> Vec<Subspace<Surd>> {
    spaces.retain(|s| !s.is_empty());
    let mut out: Vec<Subspace<Surd>> = Vec::new();
    for s in spaces {
        if out.iter().any(|o| o.contains(&s)) {
            continue;
        }
        out.retain(|o| !s.contains(o));
        out.push(s);
    }
    out.sort_by_cached_key(|s| (-s.dim(), s.equations().iter().map(|e| format_linear(e)).collect::<Vec<_>>()));
    out
}

/// `V ∩ X` for the union `X` of the given spans, where `V` is the union of the positroid
/// planes. Since those planes lie on Gr, each piece is the linear space `span ∩ plane`.
pub fn v_intersection(spans: &[Subspace<Surd>]) -> Vec<Subspace<Surd>> {
    let planes: Vec<Subspace<Surd>> = positroid_planes().iter().map(|p| p.to_surd()).collect();
    maximal_spaces(spans.iter().flat_map(|s| planes.iter().map(move |p| s.intersect(p))).collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct PropVReport {
    pub holds: bool,
    /// Maximal linear pieces of the common intersection.
    pub common: Vec<String>,
    pub only_region: Vec<String>,
    pub only_polytope: Vec<String>,
}

fn describe(s: &Subspace<Surd>) -> String {
    format!(
        "{} {{{}}}",
        Kind::linear(s.dim()).label(),
        s.equations().iter().map(|e| format!("{} = 0", format_linear(e))).join(", ")
    )
}

/// Compares the intersections of the positroid planes with the residual arrangements of
/// the region and of its associated polytope.
pub fn check_prop_v_intersection(spec: &RegionSpec) -> Result<PropVReport, RegionError> {
    let rs = residual_arrangement(spec)?;
    let rp = residual_arrangement_polytope(spec);
    let a = v_intersection(&rs.items.iter().map(|i| i.span.clone()).collect::<Vec<_>>());
    let b = v_intersection(&rp.items.iter().map(|i| i.span.clone()).collect::<Vec<_>>());
    let common: Vec<String> = a.iter().filter(|s| b.contains(s)).map(describe).collect();
    let only_region: Vec<String> = a.iter().filter(|s| !b.contains(s)).map(describe).collect();
    let only_polytope: Vec<String> = b.iter().filter(|s| !a.contains(s)).map(describe).collect();
    Ok(PropVReport { holds: only_region.is_empty() && only_polytope.is_empty(), common, only_region, only_polytope })
}

/// Evaluates a linear form at every basis vector of a rational subspace.
pub fn restriction(form: &[Rat], span: &Subspace) -> Vec<Rat> {
    span.basis().iter().map(|b| dot(form, b)).collect()
}

/// Restricted Plücker quadric of an item, for rational items.
pub fn item_quadric(item: &Item) -> Option<MultiPoly> {
    item.component.as_ref().map(|c| restricted_quadric(&c.span))
}
