//! Deciding whether a component of an intersection of facet closures contains a face.
//!
//! A component `X` contains a face exactly when some real point of `X` makes every
//! form that does not vanish identically on `X` strictly positive (or, projectively,
//! strictly negative).

use super::cad::{open_samples, search_open_cells, BiPoly};
use super::lp::max_slack;
use crate::exact::{Field, Matrix, MultiPoly, Rat, Surd, UniPoly};
use crate::grassmann::{dot, projection_parametrization, Component, Kind, Subspace, ToSurd};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Face,
    Residual,
    Undetermined,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Classification {
    pub verdict: Verdict,
    /// For `Face`: a point of the component with all inactive forms of one strict sign.
    pub witness: Option<Vec<Surd>>,
    /// How the verdict was reached.
    pub certificate: String,
    /// Per real piece, for conjugate pairs.
    pub pieces: Vec<(Verdict, Option<Vec<Surd>>)>,
}

impl Classification {
    fn new(verdict: Verdict, witness: Option<Vec<Surd>>, certificate: impl Into<String>) -> Self {
        Classification { verdict, witness, certificate: certificate.into(), pieces: vec![] }
    }
}

/// Indices of the forms that do not vanish identically on the subspace.
pub fn inactive<F: Field + ToSurd>(span: &Subspace<F>, forms: &[Vec<Rat>]) -> Vec<usize> {
    (0..forms.len())
        .filter(|&i| {
            let f: Vec<F> = forms[i].iter().map(F::from_rat).collect();
            !span.kills(&f)
        })
        .collect()
}

/// Whether `x` lies on all active forms and has all inactive forms of one strict sign.
pub fn check_witness(x: &[Surd], forms: &[Vec<Rat>], inactive: &[usize]) -> bool {
    let signs: Vec<i8> = inactive
        .iter()
        .map(|&i| dot(&forms[i].iter().map(Surd::from_rat).collect::<Vec<_>>(), x).signum())
        .collect();
    !signs.is_empty() && (signs.iter().all(|&s| s > 0) || signs.iter().all(|&s| s < 0))
}

fn orient(x: Vec<Surd>, forms: &[Vec<Rat>], inactive: &[usize]) -> Vec<Surd> {
    let i = inactive[0];
    let v = dot(&forms[i].iter().map(Surd::from_rat).collect::<Vec<_>>(), &x);
    if v.signum() < 0 {
        x.into_iter().map(|c| -c).collect()
    } else {
        x
    }
}

/// Exact LP on a linear space: maximize the common slack of the inactive forms.
pub fn classify_linear<F: Field + ToSurd>(span: &Subspace<F>, forms: &[Vec<Rat>]) -> Classification {
    let idx = inactive(span, forms);
    if idx.is_empty() {
        return Classification::new(Verdict::Residual, None, "all forms vanish");
    }
    let rows: Vec<Vec<F>> = idx
        .iter()
        .map(|&i| {
            let f: Vec<F> = forms[i].iter().map(F::from_rat).collect();
            span.basis().iter().map(|b| dot(&f, b)).collect()
        })
        .collect();
    match max_slack(&rows) {
        Some((tau, s)) if tau.signum() > 0 => {
            let x: Vec<Surd> = span.point(&s).iter().map(|c| c.to_surd()).collect();
            let x = orient(x, forms, &idx);
            debug_assert!(check_witness(&x, forms, &idx));
            Classification::new(Verdict::Face, Some(x), format!("lp slack {tau} > 0"))
        }
        Some((tau, _)) => Classification::new(Verdict::Residual, None, format!("lp slack optimum {tau} <= 0")),
        None => Classification::new(Verdict::Residual, None, "inactive forms sum to zero"),
    }
}

/// Congruence diagonalization of a symmetric matrix: returns `(v, q(v))` pairs for an
/// orthogonal basis, where `q(s) = s^T G s / 2`.
pub fn diagonalize<F: Field>(g: &Matrix<F>) -> Vec<(Vec<F>, F)> {
    let n = g.nrows();
    let half = F::from_rat(&Rat::new(1, 2));
    let bil = |x: &[F], y: &[F]| dot(x, &g.mul_vec(y));
    let mut rest: Vec<Vec<F>> = (0..n).map(|i| (0..n).map(|j| if i == j { F::one() } else { F::zero() }).collect()).collect();
    let mut out = Vec::new();
    while !rest.is_empty() {
        let pick = match rest.iter().position(|v| !bil(v, v).is_zero()) {
            Some(i) => rest.remove(i),
            None => {
                let mut found = None;
                'f: for i in 0..rest.len() {
                    for j in i + 1..rest.len() {
                        if !bil(&rest[i], &rest[j]).is_zero() {
                            found = Some((i, j));
                            break 'f;
                        }
                    }
                }
                match found {
                    Some((i, j)) => {
                        let s: Vec<F> = rest[i].iter().zip(&rest[j]).map(|(a, b)| a.clone() + b).collect();
                        rest.remove(i);
                        s
                    }
                    None => {
                        for v in rest.drain(..) {
                            out.push((v, F::zero()));
                        }
                        break;
                    }
                }
            }
        };
        let bpp = bil(&pick, &pick);
        for w in rest.iter_mut() {
            let c = bil(w, &pick) / &bpp;
            for (wi, pi) in w.iter_mut().zip(&pick) {
                *wi = wi.clone() - &(c.clone() * pi);
            }
        }
        let q = bpp * &half;
        out.push((pick, q));
    }
    out
}

fn qform(g: &Matrix<Rat>, x: &[Rat], y: &[Rat]) -> Rat {
    dot(x, &g.mul_vec(y))
}

/// A real point on the quadric `s^T G s = 0` away from its singular locus, preferring
/// rational points. `None` when the form is semidefinite.
pub fn real_point(g: &Matrix<Rat>) -> Option<Vec<Surd>> {
    let diag = diagonalize(g);
    let pos = diag.iter().find(|(_, q)| q.signum() > 0)?.0.clone();
    let neg = diag.iter().find(|(_, q)| q.signum() < 0)?.0.clone();
    let n = g.nrows();
    let smooth = |x: &[Rat]| g.mul_vec(x).iter().any(|c| !c.is_zero());
    // rational search over lines through small integer vectors
    let mut pool: Vec<Vec<Rat>> = diag.iter().map(|(v, _)| v.clone()).collect();
    let vals = [0i64, 1, -1, 2, -2];
    let mut idx = vec![0usize; n];
    'gen: loop {
        let v: Vec<Rat> = idx.iter().map(|&k| Rat::int(vals[k])).collect();
        if v.iter().any(|c| !c.is_zero()) {
            pool.push(v);
        }
        for k in 0..n {
            idx[k] += 1;
            if idx[k] < vals.len() {
                continue 'gen;
            }
            idx[k] = 0;
        }
        break;
    }
    pool.truncate(60);
    for u in &pool {
        if qform(g, u, u).is_zero() && smooth(u) {
            return Some(u.iter().map(Surd::from_rat).collect());
        }
    }
    for (i, u) in pool.iter().enumerate() {
        for w in &pool[i + 1..] {
            let a = qform(g, u, u);
            let b = qform(g, u, w) * Rat::int(2);
            let c = qform(g, w, w);
            if a.is_zero() {
                continue;
            }
            let d = b.clone() * &b - Rat::int(4) * &a * &c;
            if d.signum() < 0 {
                continue;
            }
            let sq = Surd::sqrt_rat(&d);
            if let Some(r) = sq.as_rat() {
                for root in [(-b.clone() + &r) / (Rat::int(2) * &a), (-b.clone() - &r) / (Rat::int(2) * &a)] {
                    let x: Vec<Rat> = u.iter().zip(w).map(|(ui, wi)| root.clone() * ui + wi).collect();
                    if smooth(&x) {
                        return Some(x.iter().map(Surd::from_rat).collect());
                    }
                }
            }
        }
    }
    // the line through a positive and a negative vector meets the quadric in two real points
    let a = qform(g, &pos, &pos);
    let b = qform(g, &pos, &neg) * Rat::int(2);
    let c = qform(g, &neg, &neg);
    let d = b.clone() * &b - Rat::int(4) * &a * &c;
    let root = (Surd::from_rat(&-b) + &Surd::sqrt_rat(&d)) / &Surd::from_rat(&(Rat::int(2) * &a));
    Some(pos.iter().zip(&neg).map(|(p, q)| root.clone() * &Surd::from_rat(p) + &Surd::from_rat(q)).collect())
}

/// Linear factors (or the form itself) whose zero sets cover the real zeros of a ternary
/// quadratic form, up to isolated points which are made cell boundaries.
fn ternary_atoms(g: &MultiPoly<Surd>) -> Vec<MultiPoly<Surd>> {
    let mut m = Matrix::<Surd>::zeros(3, 3);
    let half = Surd::from_rat(&Rat::new(1, 2));
    for (mono, c) in g.terms() {
        let e = &mono.0;
        let idx: Vec<usize> = (0..3).flat_map(|i| std::iter::repeat(i).take(e[i] as usize)).collect();
        if idx.len() != 2 {
            continue;
        }
        let (i, j) = (idx[0], idx[1]);
        if i == j {
            m[(i, i)] = c.clone();
        } else {
            m[(i, j)] = c.clone() * &half;
            m[(j, i)] = c.clone() * &half;
        }
    }
    let lin = |l: &[Surd]| MultiPoly::linear(l);
    let cross = |a: &[Surd], b: &[Surd]| -> Vec<Surd> {
        vec![
            a[1].clone() * &b[2] - a[2].clone() * &b[1],
            a[2].clone() * &b[0] - a[0].clone() * &b[2],
            a[0].clone() * &b[1] - a[1].clone() * &b[0],
        ]
    };
    let (rr, _) = m.rref();
    match rr.nrows() {
        0 => vec![],
        1 => vec![lin(rr.row(0))],
        2 => {
            let k = m.nullspace().remove(0);
            let (u, v) = (rr.row(0).to_vec(), rr.row(1).to_vec());
            let quad = |x: &[Surd], y: &[Surd]| dot(x, &m.mul_vec(y));
            let a = quad(&u, &u);
            let b = quad(&u, &v) * &Surd::from_int(2);
            let c = quad(&v, &v);
            let d = b.clone() * &b - Surd::from_int(4) * &a * &c;
            if d.signum() < 0 {
                // only the vertex is real: bound it by two lines through it
                let mut out = Vec::new();
                for e in 0..3 {
                    let basis: Vec<Surd> = (0..3).map(|i| if i == e { Surd::one() } else { Surd::zero() }).collect();
                    let l = cross(&k, &basis);
                    if l.iter().any(|x| !x.is_zero()) && out.len() < 2 {
                        out.push(lin(&l));
                    }
                }
                return out;
            }
            let Some(dr) = d.as_rat() else { return vec![g.clone()] };
            let sq = Surd::sqrt_rat(&dr);
            let roots: Vec<(Surd, Surd)> = if !a.is_zero() {
                let two_a = a.clone() * &Surd::from_int(2);
                vec![((-b.clone() + &sq) / &two_a, Surd::one()), ((-b.clone() - &sq) / &two_a, Surd::one())]
            } else {
                vec![(Surd::one(), Surd::zero()), (-c.clone(), b.clone())]
            };
            roots
                .into_iter()
                .map(|(s, t)| {
                    let w: Vec<Surd> = u.iter().zip(&v).map(|(ui, vi)| s.clone() * ui + &(t.clone() * vi)).collect();
                    lin(&cross(&k, &w))
                })
                .collect()
        }
        _ => vec![g.clone()],
    }
}

fn normalize(p: &MultiPoly<Surd>) -> MultiPoly<Surd> {
    match p.terms().last() {
        Some((_, c)) => p.scale(&c.inv()),
        None => p.clone(),
    }
}

fn to_bipoly(p: &MultiPoly<Surd>) -> BiPoly<Surd> {
    // dehomogenize y2 = 1, then view as a polynomial in y1 over y0
    let a = MultiPoly::var(2, 0);
    let b = MultiPoly::var(2, 1);
    let one = MultiPoly::constant(2, Surd::one());
    let aff = p.compose(&[a, b, one]);
    aff.coeffs_in(1).into_iter().map(|c| c.to_uni()).collect()
}

/// Decides the face condition on a quadric (conic or surface) through the projection from
/// a real point. Returns a witness in span coordinates, or `None` when infeasible.
fn quadric_face(
    g: &Matrix<Rat>,
    x0: &[Surd],
    forms_s: &[Vec<Surd>],
) -> Result<Option<Vec<Surd>>, String> {
    let n = x0.len();
    let piv = x0.iter().position(|c| !c.is_zero()).expect("nonzero point");
    let w: Vec<Vec<Surd>> = (0..n)
        .filter(|&k| k != piv)
        .map(|k| (0..n).map(|i| if i == k { Surd::one() } else { Surd::zero() }).collect())
        .collect();
    let gs = g.map(Surd::from_rat);
    let phi = projection_parametrization(&gs, x0, &w);
    let pulled: Vec<MultiPoly<Surd>> = forms_s
        .iter()
        .map(|f| {
            let mut acc = MultiPoly::zero(n - 1);
            for (fk, pk) in f.iter().zip(&phi) {
                acc = acc.add(&pk.scale(fk));
            }
            acc
        })
        .collect();
    let feasible = |y: &[Surd]| {
        let signs: Vec<i8> = pulled.iter().map(|p| p.eval(y).signum()).collect();
        signs.iter().all(|&s| s > 0) || signs.iter().all(|&s| s < 0)
    };
    let image = |y: &[Surd]| -> Vec<Surd> { phi.iter().map(|p| p.eval(y)).collect() };
    if n == 3 {
        let inf = [Surd::one(), Surd::zero()];
        if feasible(&inf) {
            return Ok(Some(image(&inf)));
        }
        let unis: Vec<UniPoly<Surd>> = pulled
            .iter()
            .map(|p| {
                let t = MultiPoly::var(1, 0);
                p.compose(&[t, MultiPoly::constant(1, Surd::one())]).to_uni()
            })
            .collect();
        for t in open_samples(&unis) {
            let y = [Surd::from_rat(&t), Surd::one()];
            if feasible(&y) {
                return Ok(Some(image(&y)));
            }
        }
        return Ok(None);
    }
    if n != 4 {
        return Err(format!("no decision procedure for quadrics in {n} variables"));
    }
    let mut atoms: Vec<MultiPoly<Surd>> = Vec::new();
    for p in &pulled {
        for a in ternary_atoms(p) {
            let a = normalize(&a);
            if !atoms.contains(&a) {
                atoms.push(a);
            }
        }
    }
    let family: Vec<BiPoly<Surd>> = atoms.iter().map(to_bipoly).collect();
    let hit = search_open_cells(&family, |a, b| feasible(&[Surd::from_rat(a), Surd::from_rat(b), Surd::one()]))
        .map_err(|e| e.to_string())?;
    Ok(hit.map(|(a, b)| image(&[Surd::from_rat(&a), Surd::from_rat(&b), Surd::one()])))
}

fn classify_quadric(span: &Subspace, forms: &[Vec<Rat>]) -> Classification {
    let idx = inactive(span, forms);
    let g = span.gram();
    let Some(x0) = real_point(&g) else {
        return Classification::new(Verdict::Residual, None, "restricted quadric is semidefinite; no smooth real points");
    };
    let forms_s: Vec<Vec<Surd>> = idx
        .iter()
        .map(|&i| span.basis().iter().map(|b| Surd::from_rat(&dot(&forms[i], b))).collect())
        .collect();
    match quadric_face(&g, &x0, &forms_s) {
        Ok(Some(s)) => {
            let x = span.to_surd().point(&s);
            let x = orient(x, forms, &idx);
            debug_assert!(check_witness(&x, forms, &idx));
            let how = if x0.iter().all(|c| c.is_rational()) { "rational" } else { "quadratic" };
            Classification::new(Verdict::Face, Some(x), format!("feasible cell found via projection from a {how} point"))
        }
        Ok(None) => Classification::new(Verdict::Residual, None, "every open cell violates a strict inequality"),
        Err(e) => Classification::new(Verdict::Undetermined, None, e),
    }
}

/// Face test for a component against the `6 + m` forms.
pub fn classify_component(c: &Component, forms: &[Vec<Rat>]) -> Classification {
    match c.kind {
        k if k.is_linear() => classify_linear(&c.span, forms),
        Kind::ConjugatePointPair | Kind::ConjugatePair => {
            let pieces: Vec<(Verdict, Option<Vec<Surd>>)> = c
                .pieces
                .iter()
                .map(|p| {
                    let r = classify_linear(p, forms);
                    (r.verdict, r.witness)
                })
                .collect();
            let face = pieces.iter().position(|(v, _)| *v == Verdict::Face);
            let mut out = match face {
                Some(i) => Classification::new(Verdict::Face, pieces[i].1.clone(), "a real piece contains a face"),
                None => Classification::new(Verdict::Residual, None, "no real piece contains a face"),
            };
            out.pieces = pieces;
            out
        }
        Kind::ImaginaryPair => Classification::new(Verdict::Residual, None, "real points lie in the singular locus only"),
        Kind::Conic | Kind::QuadricSurface => classify_quadric(&c.span, forms),
        _ => Classification::new(Verdict::Undetermined, None, "threefolds are not classified"),
    }
}
