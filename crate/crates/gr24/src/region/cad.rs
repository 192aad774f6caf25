//! Open-cell sampling in one and two variables.
//!
//! Only full-dimensional cells are sampled, which is enough to decide whether a
//! system of strict polynomial inequalities has a real solution.

use crate::exact::unipoly::root_bound;
use crate::exact::{Field, Rat, RootInterval, Sturm, UniPoly};

struct Root<F: Field> {
    iv: RootInterval,
    poly: usize,
    sturm: std::rc::Rc<Sturm<F>>,
}

fn separated(a: &RootInterval, b: &RootInterval) -> bool {
    let (a, b) = if a.lo <= b.lo { (a, b) } else { (b, a) };
    a.hi < b.lo || (a.hi == b.lo && !a.is_exact() && !b.is_exact())
}

/// Whether the common factor of the two polynomials has a root lying in both intervals.
fn same_root<F: Field>(a: &Root<F>, b: &Root<F>) -> bool {
    let g = a.sturm.poly().gcd(b.sturm.poly());
    if g.deg() <= 0 {
        return false;
    }
    let lo = if a.iv.lo > b.iv.lo { &a.iv.lo } else { &b.iv.lo };
    let hi = if a.iv.hi < b.iv.hi { &a.iv.hi } else { &b.iv.hi };
    if lo > hi {
        return false;
    }
    if lo == hi {
        return a.iv.contains(lo) && b.iv.contains(lo) && g.eval_rat(lo).is_zero();
    }
    Sturm::new(&g).map(|s| s.count_open(lo, hi) > 0).unwrap_or(false)
}

/// Distinct real roots of a family of polynomials as pairwise separated intervals,
/// sorted increasingly. Zero and constant polynomials contribute nothing.
pub fn merged_roots<F: Field>(polys: &[UniPoly<F>]) -> Vec<RootInterval> {
    let mut roots: Vec<Root<F>> = Vec::new();
    for (i, p) in polys.iter().enumerate() {
        if p.deg() <= 0 {
            continue;
        }
        let st = std::rc::Rc::new(Sturm::new(p).expect("nonzero polynomial"));
        let b = root_bound(st.poly());
        for iv in st.isolate(&-b.clone(), &b) {
            roots.push(Root { iv, poly: i, sturm: st.clone() });
        }
    }
    loop {
        let mut clash = None;
        'outer: for i in 0..roots.len() {
            for j in i + 1..roots.len() {
                if !separated(&roots[i].iv, &roots[j].iv) {
                    clash = Some((i, j));
                    break 'outer;
                }
            }
        }
        let Some((i, j)) = clash else { break };
        if roots[i].poly != roots[j].poly && same_root(&roots[i], &roots[j]) {
            // keep the narrower interval
            let drop = if roots[i].iv.width() <= roots[j].iv.width() { j } else { i };
            roots.remove(drop);
            continue;
        }
        for k in [i, j] {
            if !roots[k].iv.is_exact() {
                let w = roots[k].iv.width() * Rat::new(1, 2);
                roots[k].iv = roots[k].sturm.refine(&roots[k].iv, &w);
            }
        }
    }
    let mut out: Vec<RootInterval> = roots.into_iter().map(|r| r.iv).collect();
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    out
}

/// One rational point in every open interval cut out by the real roots of the family,
/// including the two unbounded ones.
pub fn open_samples<F: Field>(polys: &[UniPoly<F>]) -> Vec<Rat> {
    let roots = merged_roots(polys);
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

/// A polynomial in `b` whose coefficients are polynomials in `a`, lowest power first.
pub type BiPoly<F> = Vec<UniPoly<F>>;

fn trim<F: Field>(p: &BiPoly<F>) -> BiPoly<F> {
    let mut p = p.clone();
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn c<F: Field>(p: &BiPoly<F>, k: usize) -> UniPoly<F> {
    p.get(k).cloned().unwrap_or_else(UniPoly::zero)
}

/// Resultant in `b` of two polynomials of degree at most two in `b`, up to sign.
fn res_b<F: Field>(p: &BiPoly<F>, q: &BiPoly<F>) -> UniPoly<F> {
    let (dp, dq) = (p.len() - 1, q.len() - 1);
    match (dp, dq) {
        (1, 1) => c(p, 1).mul(&c(q, 0)).sub(&c(p, 0).mul(&c(q, 1))),
        (2, 1) | (1, 2) => {
            let (a, l) = if dp == 2 { (p, q) } else { (q, p) };
            // a2 l0^2 - a1 l0 l1 + a0 l1^2
            c(a, 2)
                .mul(&c(l, 0).pow(2))
                .sub(&c(a, 1).mul(&c(l, 0)).mul(&c(l, 1)))
                .add(&c(a, 0).mul(&c(l, 1).pow(2)))
        }
        (2, 2) => {
            let x = c(p, 2).mul(&c(q, 0)).sub(&c(p, 0).mul(&c(q, 2)));
            let y = c(p, 2).mul(&c(q, 1)).sub(&c(p, 1).mul(&c(q, 2)));
            let z = c(p, 1).mul(&c(q, 0)).sub(&c(p, 0).mul(&c(q, 1)));
            x.pow(2).sub(&y.mul(&z))
        }
        _ => panic!("resultant only implemented for degrees up to two"),
    }
}

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum CadError {
    #[error("projection polynomial vanishes identically; input family has a common factor")]
    Degenerate,
    #[error("degree above two in the fiber variable")]
    Degree,
}

/// Projection set of a family of squarefree, pairwise coprime polynomials of degree
/// at most two in `b`: leading coefficients, discriminants and pairwise resultants.
pub fn projection<F: Field>(family: &[BiPoly<F>]) -> Result<Vec<UniPoly<F>>, CadError> {
    let fam: Vec<BiPoly<F>> = family.iter().map(trim).filter(|p| !p.is_empty()).collect();
    let mut out = Vec::new();
    for p in &fam {
        let d = p.len() - 1;
        if d > 2 {
            return Err(CadError::Degree);
        }
        out.push(p[d].clone());
        if d == 2 {
            let disc = p[1].pow(2).sub(&p[0].mul(&p[2]).scale(&F::from_int(4)));
            if disc.is_zero() {
                return Err(CadError::Degenerate);
            }
            out.push(disc);
        }
    }
    for i in 0..fam.len() {
        for j in i + 1..fam.len() {
            if fam[i].len() < 2 || fam[j].len() < 2 {
                continue;
            }
            let r = res_b(&fam[i], &fam[j]);
            if r.is_zero() {
                return Err(CadError::Degenerate);
            }
            out.push(r);
        }
    }
    Ok(out)
}

/// Evaluates the coefficients at `a`.
pub fn fiber<F: Field>(p: &BiPoly<F>, a: &Rat) -> UniPoly<F> {
    UniPoly::new(p.iter().map(|c| c.eval_rat(a)).collect())
}

/// Sample points `(a, b)` from every two-dimensional cell of a cylindrical decomposition
/// adapted to the family. The first point accepted by `test` is returned.
pub fn search_open_cells<F: Field>(
    family: &[BiPoly<F>],
    mut test: impl FnMut(&Rat, &Rat) -> bool,
) -> Result<Option<(Rat, Rat)>, CadError> {
    let proj = projection(family)?;
    for a in open_samples(&proj) {
        let fibers: Vec<UniPoly<F>> = family.iter().map(|p| fiber(p, &a)).collect();
        for b in open_samples(&fibers) {
            if test(&a, &b) {
                return Ok(Some((a, b)));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shared_roots_merge() {
        let p = UniPoly::from_ints(&[-2, 1]).mul(&UniPoly::from_ints(&[-3, 0, 1]));
        let q = UniPoly::from_ints(&[-2, 1]).mul(&UniPoly::from_ints(&[-5, 1]));
        let r = merged_roots(&[p, q]);
        assert_eq!(r.len(), 4);
        let s = open_samples(&[UniPoly::from_ints(&[-2, 1]), UniPoly::from_ints(&[-2, 0, 1])]);
        assert_eq!(s.len(), 4);
    }

    #[test]
    fn disc_of_circle() {
        // a^2 + b^2 - 1 < 0 has points; a^2 + b^2 + 1 < 0 has none
        let circ: BiPoly<Rat> = vec![UniPoly::from_ints(&[-1, 0, 1]), UniPoly::zero(), UniPoly::from_ints(&[1])];
        let hit = search_open_cells(&[circ.clone()], |a, b| {
            let v = a.clone() * a + &(b.clone() * b) - Rat::one();
            v.signum() < 0
        })
        .unwrap();
        assert!(hit.is_some());
        let miss = search_open_cells(&[circ], |a, b| {
            let v = a.clone() * a + &(b.clone() * b) + Rat::one();
            v.signum() < 0
        })
        .unwrap();
        assert!(miss.is_none());
    }
}
