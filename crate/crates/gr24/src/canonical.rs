//! Boundary 1-skeleton, residues of the candidate canonical form along boundary curves,
//! and selection of the canonical adjoint.

use crate::adjoint::{format_poly, to_surd_poly, AdjointBasis};
use crate::exact::{Field, Matrix, MultiPoly, Rat, Surd, UniPoly};
use crate::grassmann::{dot, projection_parametrization, Kind, Subspace};
use crate::region::cad::merged_roots;
use crate::region::classify::real_point;
use crate::region::arrangement::classify_strata;
use crate::region::{RegionError, RegionSpec, Verdict};
use serde::Serialize;

#[derive(Debug, thiserror::Error, Clone, PartialEq)]
pub enum CanonicalError {
    #[error("non-simple boundary: {0}")]
    NonSimple(String),
    #[error("repeated poles")]
    RepeatedPoles,
    #[error("numerator degree {0} exceeds {1}")]
    NumeratorDegree(i64, i64),
    #[error(transparent)]
    Region(#[from] RegionError),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Vertex {
    pub point: Vec<Surd>,
    pub vanishing: Vec<String>,
}

/// A Face-classified line or conic with a rational parametrization by `u ∈ P^1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Curve {
    pub kind: Kind,
    pub span: Subspace<Surd>,
    pub vanishing: Vec<String>,
    /// Plücker coordinates as polynomials in `u`; the point at `u = ∞` lies on no boundary form.
    pub param: Vec<UniPoly<Surd>>,
    /// Indices of the forms in the denominator of the restricted canonical form.
    pub denominator: Vec<usize>,
    /// Segment endpoints on the curve as `(vertex, parameter)`, in increasing parameter order.
    pub endpoints: Vec<(usize, Surd)>,
    /// Segments as `(start, end)` indices into `endpoints`, oriented by increasing parameter.
    pub segments: Vec<(usize, usize)>,
}

impl Curve {
    pub fn degree(&self) -> usize {
        if self.kind == Kind::Conic {
            2
        } else {
            1
        }
    }

    pub fn describe(&self) -> String {
        format!("{} {{{}}}", self.kind.label(), self.vanishing.iter().map(|n| format!("{n} = 0")).collect::<Vec<_>>().join(", "))
    }

    pub fn restrict(&self, p: &MultiPoly<Surd>) -> UniPoly<Surd> {
        let subs: Vec<MultiPoly<Surd>> = self.param.iter().map(uni_to_multi).collect();
        p.compose(&subs).to_uni()
    }

    pub fn restrict_linear(&self, f: &[Rat]) -> UniPoly<Surd> {
        let mut acc = UniPoly::zero();
        for (c, x) in f.iter().zip(&self.param) {
            if !c.is_zero() {
                acc = acc.add(&x.scale(&Surd::from_rat(c)));
            }
        }
        acc
    }
}

fn uni_to_multi(p: &UniPoly<Surd>) -> MultiPoly<Surd> {
    let mut out = MultiPoly::zero(1);
    for (k, c) in p.coeffs().iter().enumerate() {
        out.add_term(crate::exact::Mono(vec![k as u32]), c.clone());
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub curve: usize,
    pub a: usize,
    pub b: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundarySkeleton {
    pub vertices: Vec<Vertex>,
    pub curves: Vec<Curve>,
    pub edges: Vec<Edge>,
}

impl BoundarySkeleton {
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.vertices.len()];
        for e in &self.edges {
            d[e.a] += 1;
            d[e.b] += 1;
        }
        d
    }

    pub fn line_segments(&self) -> usize {
        self.edges.iter().filter(|e| self.curves[e.curve].kind != Kind::Conic).count()
    }

    pub fn conic_segments(&self) -> usize {
        self.edges.iter().filter(|e| self.curves[e.curve].kind == Kind::Conic).count()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for e in &self.edges {
                for (x, y) in [(e.a, e.b), (e.b, e.a)] {
                    if x == v && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Segments per curve.
    pub fn segments_on(&self, curve: usize) -> usize {
        self.edges.iter().filter(|e| e.curve == curve).count()
    }
}

fn binary_to_uni(f: &MultiPoly<Surd>, k: i64) -> UniPoly<Surd> {
    // (s, t) = (k u + 1, u): u = ∞ maps to (k : 1)
    let u = MultiPoly::var(1, 0);
    let s = u.scale(&Surd::from_int(k)).add(&MultiPoly::constant(1, Surd::one()));
    f.compose(&[s, u]).to_uni()
}

fn parameter_of(param: &[UniPoly<Surd>], v: &[Surd]) -> Option<Surd> {
    let i = v.iter().position(|c| !c.is_zero())?;
    let mut g = UniPoly::zero();
    for j in 0..6 {
        let m = param[j].scale(&v[i]).sub(&param[i].scale(&v[j]));
        g = g.gcd(&m);
    }
    if g.deg() != 1 {
        return None;
    }
    Some(-g.coeff(0) / &g.coeff(1))
}

fn cell_samples(roots: &[crate::exact::RootInterval]) -> Vec<Rat> {
    if roots.is_empty() {
        return vec![Rat::zero()];
    }
    let mut out = vec![roots[0].lo.clone() - Rat::one()];
    for w in roots.windows(2) {
        let (a, b) = (&w[0].hi, &w[1].lo);
        out.push(if a < b { Rat::simple_between(a, b) } else { a.clone() });
    }
    out.push(roots.last().unwrap().hi.clone() + Rat::one());
    out
}

fn sign_pattern(vals: &[i8]) -> bool {
    !vals.is_empty() && (vals.iter().all(|&s| s > 0) || vals.iter().all(|&s| s < 0))
}

/// Builds the boundary 1-skeleton: Face points and the segments of Face curves between them.
pub fn boundary_skeleton(spec: &RegionSpec) -> Result<BoundarySkeleton, CanonicalError> {
    let forms = spec.forms();
    let vecs = spec.form_vectors();
    let nf = spec.facet_count();
    let strata = classify_strata(spec)?;
    if let Some((s, c)) = strata.iter().find(|(_, c)| c.verdict == Verdict::Undetermined) {
        return Err(RegionError::Undetermined(format!("{}: {}", s.component.kind.label(), c.certificate)).into());
    }
    let names_on = |span: &Subspace<Surd>| -> Vec<String> {
        forms
            .iter()
            .filter(|f| span.kills(&f.coeffs.iter().map(Surd::from_rat).collect::<Vec<_>>()))
            .map(|f| f.name.clone())
            .collect()
    };
    let mut vertices = Vec::new();
    let mut carriers: Vec<(Kind, Subspace<Surd>, Option<Subspace>)> = Vec::new();
    for (s, cl) in &strata {
        let c = &s.component;
        if c.dim() == 0 {
            if c.kind == Kind::Point && cl.verdict == Verdict::Face {
                let span = c.span.to_surd();
                vertices.push(Vertex { point: span.basis()[0].clone(), vanishing: names_on(&span) });
            }
            for (p, (v, _)) in c.pieces.iter().zip(&cl.pieces) {
                if *v == Verdict::Face {
                    vertices.push(Vertex { point: p.basis()[0].clone(), vanishing: names_on(p) });
                }
            }
        } else if c.dim() == 1 {
            match c.kind {
                Kind::Line | Kind::Conic if cl.verdict == Verdict::Face => {
                    carriers.push((c.kind, c.span.to_surd(), Some(c.span.clone())))
                }
                Kind::ConjugatePair => {
                    for (p, (v, _)) in c.pieces.iter().zip(&cl.pieces) {
                        if *v == Verdict::Face {
                            carriers.push((Kind::Line, p.clone(), None));
                        }
                    }
                }
                _ => {}
            }
        }
    }
    let mut curves = Vec::new();
    let mut edges = Vec::new();
    for (kind, span, rat) in carriers {
        // binary parametrization in (s, t)
        let binary: Vec<MultiPoly<Surd>> = if kind == Kind::Conic {
            let l = rat.expect("conics are rational");
            let g = l.gram();
            let x0 = real_point(&g).ok_or_else(|| CanonicalError::NonSimple("face conic without real points".into()))?;
            let piv = x0.iter().position(|c| !c.is_zero()).unwrap();
            let w: Vec<Vec<Surd>> = (0..3)
                .filter(|&k| k != piv)
                .map(|k| (0..3).map(|i| if i == k { Surd::one() } else { Surd::zero() }).collect())
                .collect();
            let phi = projection_parametrization(&g.map(Surd::from_rat), &x0, &w);
            let b = l.to_surd();
            (0..6)
                .map(|k| {
                    let mut acc = MultiPoly::zero(2);
                    for (j, p) in phi.iter().enumerate() {
                        acc = acc.add(&p.scale(&b.basis()[j][k]));
                    }
                    acc
                })
                .collect()
        } else {
            (0..6).map(|k| MultiPoly::linear(&[span.basis()[0][k].clone(), span.basis()[1][k].clone()])).collect()
        };
        let inactive: Vec<usize> = (0..vecs.len())
            .filter(|&j| !span.kills(&vecs[j].iter().map(Surd::from_rat).collect::<Vec<_>>()))
            .collect();
        let on_curve: Vec<usize> = (0..vertices.len()).filter(|&v| span.contains_point(&vertices[v].point)).collect();
        let at = |k: i64| -> Vec<Surd> {
            binary.iter().map(|p| p.eval(&[Surd::from_int(k), Surd::one()])).collect()
        };
        let shift = (0i64..)
            .map(|i| if i % 2 == 0 { i / 2 } else { -(i + 1) / 2 })
            .take(200)
            .find(|&k| {
                let x = at(k);
                inactive.iter().all(|&j| !dot(&vecs[j].iter().map(Surd::from_rat).collect::<Vec<_>>(), &x).is_zero())
                    && on_curve.iter().all(|&v| {
                        let p = &vertices[v].point;
                        let i = p.iter().position(|c| !c.is_zero()).unwrap();
                        (0..6).any(|j| !(x[j].clone() * &p[i] - x[i].clone() * &p[j]).is_zero())
                    })
            })
            .ok_or_else(|| CanonicalError::NonSimple("no admissible parametrization".into()))?;
        let param: Vec<UniPoly<Surd>> = binary.iter().map(|p| binary_to_uni(p, shift)).collect();
        let mut curve = Curve { kind, vanishing: names_on(&span), span, param, denominator: vec![], endpoints: vec![], segments: vec![] };
        let gs: Vec<UniPoly<Surd>> = inactive.iter().map(|&j| curve.restrict_linear(&vecs[j])).collect();
        let roots = merged_roots(&gs);
        let inside: Vec<bool> = cell_samples(&roots)
            .iter()
            .map(|u| sign_pattern(&gs.iter().map(|g| g.eval_rat(u).signum()).collect::<Vec<_>>()))
            .collect();
        let nroots = roots.len();
        if nroots == 0 || inside.iter().all(|&b| b) {
            if inside.iter().any(|&b| b) {
                return Err(CanonicalError::NonSimple(format!("{} is a closed boundary curve", curve.describe())));
            }
            continue;
        }
        // locate every vertex on the curve
        let params: Vec<(usize, Surd)> =
            on_curve.iter().filter_map(|&v| parameter_of(&curve.param, &vertices[v].point).map(|u| (v, u))).collect();
        let vertex_at = |r: usize| -> Result<(usize, Surd), CanonicalError> {
            let iv = &roots[r];
            params
                .iter()
                .find(|(_, u)| (u.clone() - &Surd::from_rat(&iv.lo)).signum() >= 0 && (u.clone() - &Surd::from_rat(&iv.hi)).signum() <= 0)
                .cloned()
                .ok_or_else(|| CanonicalError::NonSimple(format!("segment endpoint on {} is not a vertex", curve.describe())))
        };
        // cells 0..=nroots, cell 0 and cell nroots joined through infinity
        let mut starts = Vec::new();
        for r in 0..nroots {
            let (before, after) = (inside[r], inside[r + 1]);
            if before && after {
                return Err(CanonicalError::NonSimple(format!("interior tangency on {}", curve.describe())));
            }
            if before != after {
                starts.push((r, after));
            }
        }
        let mut ends: Vec<(usize, Surd)> = Vec::new();
        for &(r, _) in &starts {
            ends.push(vertex_at(r)?);
        }
        let ci = curves.len();
        let k = starts.len();
        for i in 0..k {
            if starts[i].1 {
                let j = (i + 1) % k;
                edges.push(Edge { curve: ci, a: ends[i].0, b: ends[j].0 });
                curve.segments.push((i, j));
            }
        }
        let mut den: Vec<usize> = (0..nf).filter(|&j| inactive.contains(&j)).collect();
        // p13 and p24 sit at indices nf and nf + 1; a curve inside exactly one of their
        // hyperplanes keeps the other as a pole
        let (on13, on24) = (!inactive.contains(&nf), !inactive.contains(&(nf + 1)));
        if on13 && !on24 {
            den.push(nf + 1);
        }
        if on24 && !on13 {
            den.push(nf);
        }
        curve.denominator = den;
        curve.endpoints = ends;
        curves.push(curve);
    }
    Ok(BoundarySkeleton { vertices, curves, edges })
}

/// Reduced-form data of the restricted canonical form along one boundary curve.
#[derive(Clone, Debug, Serialize)]
pub struct EdgeResidueReport {
    pub curve: String,
    pub segments: usize,
    pub numerator: String,
    pub denominator: Vec<String>,
    pub reduced_numerator_degree: i64,
    pub reduced_denominator_degree: i64,
    /// Residues at the segment endpoints, in parameter order.
    pub residues: Vec<Surd>,
    pub passes: bool,
    pub failure: Option<String>,
}

fn vanishing_product(points: &[Surd]) -> UniPoly<Surd> {
    points.iter().fold(UniPoly::constant(Surd::one()), |acc, u| acc.mul(&UniPoly::new(vec![-u.clone(), Surd::one()])))
}

/// Residue pattern check of `N/D du` on one curve.
fn curve_report(spec: &RegionSpec, curve: &Curve, segments: usize, adjoint: &MultiPoly<Surd>) -> EdgeResidueReport {
    let vecs = spec.form_vectors();
    let names: Vec<String> = spec.forms().into_iter().map(|f| f.name).collect();
    let n = curve.restrict(adjoint);
    let d = curve
        .denominator
        .iter()
        .fold(UniPoly::constant(Surd::one()), |acc, &j| acc.mul(&curve.restrict_linear(&vecs[j])));
    let mut rep = EdgeResidueReport {
        curve: curve.describe(),
        segments,
        numerator: format!("{n}"),
        denominator: curve.denominator.iter().map(|&j| names[j].clone()).collect(),
        reduced_numerator_degree: -1,
        reduced_denominator_degree: -1,
        residues: vec![],
        passes: false,
        failure: None,
    };
    if n.is_zero() {
        rep.failure = Some("adjoint contains boundary curve".into());
        return rep;
    }
    if d.deg() - n.deg() != 2 {
        rep.failure = Some(format!("degree balance {} - {} != 2", d.deg(), n.deg()));
        return rep;
    }
    let g = n.gcd(&d);
    let nr = n.div_rem(&g).0;
    let dr = d.div_rem(&g).0;
    rep.reduced_numerator_degree = nr.deg();
    rep.reduced_denominator_degree = dr.deg();
    let ends: Vec<Surd> = curve.endpoints.iter().map(|(_, u)| u.clone()).collect();
    let v = vanishing_product(&ends);
    if dr.monic() != v {
        rep.failure = Some("reduced denominator does not vanish exactly at the segment endpoints".into());
        return rep;
    }
    let dd = dr.derivative();
    rep.residues = ends.iter().map(|u| nr.eval(u) / &dd.eval(u)).collect();
    let r0 = rep.residues[0].abs();
    if r0.is_zero() || rep.residues.iter().any(|r| r.abs() != r0) {
        rep.failure = Some("endpoint residues differ in absolute value".into());
        return rep;
    }
    if curve.segments.iter().any(|&(a, b)| !(rep.residues[a].clone() + &rep.residues[b]).is_zero()) {
        rep.failure = Some("residues at the ends of a segment do not have opposite signs".into());
        return rep;
    }
    rep.passes = true;
    rep
}

/// Restricted-form checks along every boundary curve.
pub fn edge_residues(spec: &RegionSpec, sk: &BoundarySkeleton, adjoint: &MultiPoly<Surd>) -> Vec<EdgeResidueReport> {
    sk.curves
        .iter()
        .enumerate()
        .map(|(i, c)| curve_report(spec, c, sk.segments_on(i), adjoint))
        .collect()
}

/// Residues of `f(t) dt / Π (t - a_i)(b_i - t)` at `a_i` and `b_i`.
pub fn partial_fraction_residues(poles: &[(Rat, Rat)], numerator: &UniPoly) -> Result<Vec<(Rat, Rat)>, CanonicalError> {
    let flat: Vec<&Rat> = poles.iter().flat_map(|(a, b)| [a, b]).collect();
    if flat.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CanonicalError::RepeatedPoles);
    }
    let n = poles.len() as i64;
    if numerator.deg() > 2 * n - 2 {
        return Err(CanonicalError::NumeratorDegree(numerator.deg(), 2 * n - 2));
    }
    let den = poles.iter().fold(UniPoly::constant(Rat::one()), |acc, (a, b)| {
        acc.mul(&UniPoly::new(vec![-a.clone(), Rat::one()])).mul(&UniPoly::new(vec![b.clone(), -Rat::one()]))
    });
    let dd = den.derivative();
    let res = |t: &Rat| numerator.eval(t) / &dd.eval(t);
    Ok(poles.iter().map(|(a, b)| (res(a), res(b))).collect())
}

/// Numerator `f` of the canonical form `f dt / Π (t - a_i)(b_i - t)` of a union of intervals,
/// with residue `+1` at each `a_i` and `-1` at each `b_i`.
pub fn interval_union_numerator(poles: &[(Rat, Rat)]) -> UniPoly {
    let factor = |(a, b): &(Rat, Rat)| UniPoly::new(vec![-a.clone(), Rat::one()]).mul(&UniPoly::new(vec![b.clone(), -Rat::one()]));
    (0..poles.len()).fold(UniPoly::zero(), |acc, i| {
        let rest = poles
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(UniPoly::constant(Rat::one()), |p, (_, ab)| p.mul(&factor(ab)));
        acc.add(&rest.scale(&(poles[i].1.clone() - &poles[i].0)))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertVerdict {
    PositiveGeometryCertified,
    Inconsistent,
    Undetermined,
}

#[derive(Clone, Debug, Serialize)]
pub struct CanonicalAssignment {
    pub adjoint: String,
    #[serde(skip)]
    pub poly: Option<MultiPoly<Surd>>,
    /// Dimension of the adjoint family cut out by the residue conditions.
    pub solution_dim: usize,
    /// Residue sign at each vertex along the first curve through it.
    pub vertex_signs: Vec<i8>,
    pub connected: bool,
    pub edges: Vec<EdgeResidueReport>,
    pub verdict: CertVerdict,
    pub note: Option<String>,
}

/// Normalizes a form to a primitive integer form when rational, else to leading coefficient one.
pub fn normalize(p: &MultiPoly<Surd>) -> MultiPoly<Surd> {
    match crate::adjoint::to_rat_poly(p) {
        Some(r) => to_surd_poly(&r.primitive()),
        None => crate::adjoint::monic(p),
    }
}

/// Certifies a given adjoint against the skeleton.
pub fn certify(spec: &RegionSpec, sk: &BoundarySkeleton, adjoint: &MultiPoly<Surd>) -> CanonicalAssignment {
    let edges = edge_residues(spec, sk, adjoint);
    let connected = sk.is_connected();
    let mut vertex_signs = vec![0i8; sk.vertices.len()];
    for (c, rep) in sk.curves.iter().zip(&edges) {
        for ((v, _), r) in c.endpoints.iter().zip(&rep.residues) {
            if vertex_signs[*v] == 0 {
                vertex_signs[*v] = r.signum();
            }
        }
    }
    let all = edges.iter().all(|e| e.passes);
    // residues on different components of the skeleton cannot be compared
    let verdict = match (all, connected && !sk.edges.is_empty()) {
        (false, _) => CertVerdict::Inconsistent,
        (true, true) => CertVerdict::PositiveGeometryCertified,
        (true, false) => CertVerdict::Undetermined,
    };
    let note = if !connected { Some("boundary 1-skeleton is disconnected".into()) } else { None };
    CanonicalAssignment {
        adjoint: format_poly(&normalize(adjoint)),
        poly: Some(normalize(adjoint)),
        solution_dim: 1,
        vertex_signs,
        connected,
        edges,
        verdict,
        note,
    }
}

/// Linear conditions on the restriction `N` of an adjoint along a curve: `N` vanishes at every
/// non-endpoint zero of the denominator, and, given a sign pattern, the endpoint residues equal
/// the pattern times a common value.
fn curve_conditions(spec: &RegionSpec, c: &Curve, basis: &[MultiPoly<Surd>], signs: Option<&[i8]>) -> Vec<Vec<Surd>> {
    let vecs = spec.form_vectors();
    let d = c.denominator.iter().fold(UniPoly::constant(Surd::one()), |acc, &j| acc.mul(&c.restrict_linear(&vecs[j])));
    let ends: Vec<Surd> = c.endpoints.iter().map(|(_, u)| u.clone()).collect();
    let v = vanishing_product(&ends);
    let (e, r) = d.div_rem(&v);
    if !r.is_zero() {
        return vec![];
    }
    let ns: Vec<UniPoly<Surd>> = basis.iter().map(|a| c.restrict(a)).collect();
    let rems: Vec<UniPoly<Surd>> = ns.iter().map(|n| n.rem(&e)).collect();
    let maxdeg = rems.iter().map(|p| p.deg()).max().unwrap_or(-1);
    let mut rows: Vec<Vec<Surd>> = (0..=maxdeg).map(|k| rems.iter().map(|p| p.coeff(k as usize)).collect()).collect();
    if let Some(signs) = signs {
        // once N = E Q, the residue at an endpoint r is Q(r) / V'(r)
        let dv = v.derivative();
        let res: Vec<Vec<Surd>> = ends
            .iter()
            .map(|u| ns.iter().map(|n| n.div_rem(&e).0.eval(u) / &dv.eval(u)).collect())
            .collect();
        for i in 1..ends.len() {
            let s = Surd::from_int((signs[i] * signs[0]) as i64);
            rows.push(res[i].iter().zip(&res[0]).map(|(a, b)| a.clone() - &(s.clone() * b)).collect());
        }
    }
    rows
}

/// Endpoint sign vectors with opposite signs at the two ends of each segment, the first segment
/// starting with `+1`. The all-positive choice of segment starts comes first.
fn sign_patterns(c: &Curve) -> Vec<Vec<i8>> {
    let n = c.segments.len();
    (0..1u32 << (n - 1))
        .map(|m| {
            let mut s = vec![0i8; c.endpoints.len()];
            for (k, &(a, b)) in c.segments.iter().enumerate() {
                let sign = if k > 0 && m >> (k - 1) & 1 == 1 { -1 } else { 1 };
                s[a] = sign;
                s[b] = -sign;
            }
            s
        })
        .collect()
}

fn combine(fam: &[MultiPoly<Surd>], y: &[Surd]) -> MultiPoly<Surd> {
    y.iter().zip(fam).fold(MultiPoly::zero(6), |a, (yi, p)| a.add(&p.scale(yi)))
}

/// Picks the adjoint in the family whose restricted forms have equal residues up to sign at the
/// endpoints of every boundary curve.
///
/// Curves carrying several segments are processed first, branching over the possible sign
/// patterns; every surviving one-dimensional branch is then certified on the whole skeleton.
pub fn select_canonical_adjoint(spec: &RegionSpec, sk: &BoundarySkeleton, basis: &AdjointBasis) -> CanonicalAssignment {
    let fam = &basis.modulo;
    let k = fam.len();
    let fail = |verdict, dim, note: String| CanonicalAssignment {
        adjoint: String::new(),
        poly: None,
        solution_dim: dim,
        vertex_signs: vec![],
        connected: sk.is_connected(),
        edges: vec![],
        verdict,
        note: Some(note),
    };
    if k == 0 {
        return fail(CertVerdict::Inconsistent, 0, "no adjoints".into());
    }
    let mut order: Vec<usize> = (0..sk.curves.len()).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(sk.segments_on(i)), sk.curves[i].describe()));
    // branches: accumulated rows and the current solution dimension
    let mut branches: Vec<(Vec<Vec<Surd>>, usize)> = vec![(vec![], k)];
    for &i in &order {
        if branches.iter().all(|(_, d)| *d <= 1) {
            break;
        }
        let c = &sk.curves[i];
        let patterns: Vec<Option<Vec<i8>>> =
            if c.segments.len() > 1 { sign_patterns(c).into_iter().map(Some).collect() } else { vec![None] };
        let mut next = Vec::new();
        for (rows, dim) in branches {
            if dim <= 1 {
                next.push((rows, dim));
                continue;
            }
            for pat in &patterns {
                let mut r = rows.clone();
                r.extend(curve_conditions(spec, c, fam, pat.as_deref()));
                let d = Matrix::from_rows(k, r.clone()).nullspace().len();
                if d > 0 {
                    next.push((r, d));
                }
            }
        }
        branches = next;
    }
    if branches.is_empty() {
        return fail(CertVerdict::Inconsistent, 0, "residue conditions admit no adjoint".into());
    }
    if let Some((_, d)) = branches.iter().find(|(_, d)| *d > 1) {
        return fail(CertVerdict::Undetermined, *d, format!("residue conditions leave a {d}-dimensional family"));
    }
    let mut found: Vec<CanonicalAssignment> = Vec::new();
    let mut unresolved = None;
    for (rows, _) in branches {
        let y = Matrix::from_rows(k, rows).nullspace().remove(0);
        let cert = certify(spec, sk, &combine(fam, &y));
        match cert.verdict {
            CertVerdict::PositiveGeometryCertified if !found.iter().any(|f| f.poly == cert.poly) => found.push(cert),
            CertVerdict::Undetermined => unresolved = Some(cert),
            _ => {}
        }
    }
    match found.len() {
        0 => unresolved.unwrap_or_else(|| fail(CertVerdict::Inconsistent, 0, "no candidate passes the residue checks".into())),
        1 => found.remove(0),
        n => fail(CertVerdict::Undetermined, n, format!("{n} non-proportional adjoints pass the residue checks")),
    }
}
