//! Interpolation spaces of adjoint hypersurfaces.

use crate::exact::{monomials, Field, Matrix, MultiPoly, Rat, Surd};
use crate::grassmann::{facet_meets_positive_cell, plucker_quadric, restricted_quadric, FacetMeet, Subspace, FACET_COORDS, NAMES};
use crate::region::arrangement::{v_intersection, Item};
use crate::region::{residual_arrangement, residual_arrangement_polytope, RegionError, RegionSpec, ResidualArrangement};
use rand::Rng;
use serde::Serialize;

#[derive(Debug, thiserror::Error, Clone, PartialEq)]
pub enum AdjointError {
    #[error("unsupported adjoint degree {0}; expected 1 or 2")]
    Unsupported(usize),
    #[error("non-simple associated polytope: {0}")]
    NonSimple(String),
    #[error("hyperplane does not cut Gr≥0")]
    NoCut,
    #[error(transparent)]
    Region(#[from] RegionError),
}

/// Restrictions of the degree-`d` monomials of P^5 to a subspace, in its basis coordinates.
fn restricted_monomials<F: Field>(span: &Subspace<F>, d: u32) -> Vec<MultiPoly<F>> {
    let subs: Vec<MultiPoly<F>> = (0..6)
        .map(|k| MultiPoly::linear(&span.basis().iter().map(|b| b[k].clone()).collect::<Vec<_>>()))
        .collect();
    monomials(6, d)
        .into_iter()
        .map(|m| MultiPoly::from_terms(6, [(m, F::one())]).compose(&subs))
        .collect()
}

/// Coefficient matrix: one row per monomial of the restriction, one column per unknown.
fn restriction_rows<F: Field>(restricted: &[MultiPoly<F>], extra: Option<&MultiPoly<F>>, k: usize, d: u32) -> Vec<Vec<F>> {
    let ncols = restricted.len() + usize::from(extra.is_some());
    monomials(k, d)
        .into_iter()
        .map(|m| {
            let mut row: Vec<F> = restricted.iter().map(|p| p.coeff(&m)).collect();
            if let Some(q) = extra {
                row.push(q.coeff(&m));
            }
            debug_assert_eq!(row.len(), ncols);
            row
        })
        .filter(|r| r.iter().any(|c| !c.is_zero()))
        .collect()
}

/// Eliminates the last column from a system of rows, returning conditions on the others.
fn eliminate_last<F: Field>(rows: Vec<Vec<F>>) -> Vec<Vec<F>> {
    let last = rows.first().map_or(0, |r| r.len() - 1);
    let Some(p) = rows.iter().position(|r| !r[last].is_zero()) else {
        return rows.into_iter().map(|mut r| {
            r.pop();
            r
        }).collect();
    };
    let pivot = rows[p].clone();
    rows.iter()
        .enumerate()
        .filter(|&(i, _)| i != p)
        .map(|(_, r)| {
            let f = r[last].clone() / &pivot[last];
            r[..last].iter().zip(&pivot).map(|(a, b)| a.clone() - &(f.clone() * b)).collect()
        })
        .collect()
}

/// Linear conditions on the coefficients of a degree-`d` form vanishing on `span ∩ Gr`.
///
/// When `whole` is set the variety is the full span and the restriction must vanish;
/// otherwise it is a quadric in its span and the restriction must be a multiple of the
/// restricted Plücker quadric (for `d = 2`) or vanish (for `d = 1`).
pub fn conditions<F: Field>(span: &Subspace<F>, whole: bool, d: u32) -> Vec<Vec<F>> {
    let k = span.basis().len();
    if k == 0 {
        return vec![];
    }
    let r = restricted_monomials(span, d);
    if whole || d == 1 {
        return restriction_rows(&r, None, k, d);
    }
    let q = restricted_quadric(span);
    eliminate_last(restriction_rows(&r, Some(&q), k, d))
}

fn item_conditions(item: &Item, d: u32) -> Vec<Vec<Surd>> {
    conditions(&item.span, item.is_linear(), d)
}

/// Whether a degree-`d` form vanishes on the item.
pub fn vanishes_on(p: &MultiPoly<Surd>, item: &Item) -> bool {
    let d = p.degree().unwrap_or(0);
    let v = p.coeff_vector(d);
    item_conditions(item, d).iter().all(|row| crate::exact::matrix::dot(row, &v).is_zero())
}

#[derive(Clone, Debug, PartialEq)]
pub struct AdjointBasis {
    pub degree: u32,
    /// Forms of the given degree vanishing on the whole arrangement.
    pub raw: Vec<MultiPoly<Surd>>,
    /// Complement of the Plücker quadric in `raw` (equal to `raw` when `qq` is not in it).
    pub modulo: Vec<MultiPoly<Surd>>,
    pub contains_plucker: bool,
    pub conditions: usize,
}

impl AdjointBasis {
    pub fn dims(&self) -> (usize, usize) {
        (self.raw.len(), self.modulo.len())
    }

    fn rank_with(&self, extra: &[MultiPoly<Surd>]) -> usize {
        let n = monomials(6, self.degree).len();
        let rows = self.raw.iter().chain(extra).map(|p| p.coeff_vector(self.degree)).collect();
        Matrix::from_rows(n, rows).rank()
    }

    /// Membership in the raw space.
    pub fn contains(&self, p: &MultiPoly<Surd>) -> bool {
        p.is_zero() || self.rank_with(std::slice::from_ref(p)) == self.raw.len()
    }

    /// Whether the rational coefficients are all rational.
    pub fn is_rational(&self) -> bool {
        self.raw.iter().all(|p| p.terms().all(|(_, c)| c.is_rational()))
    }

    pub fn rational_raw(&self) -> Option<Vec<MultiPoly>> {
        self.raw.iter().map(|p| to_rat_poly(p)).collect()
    }

    pub fn report(&self) -> AdjointReport {
        AdjointReport {
            degree: self.degree,
            raw_dim: self.raw.len(),
            mod_dim: self.modulo.len(),
            contains_plucker: self.contains_plucker,
            raw_basis: self.raw.iter().map(format_poly).collect(),
            mod_basis: self.modulo.iter().map(format_poly).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AdjointReport {
    pub degree: u32,
    pub raw_dim: usize,
    pub mod_dim: usize,
    pub contains_plucker: bool,
    pub raw_basis: Vec<String>,
    pub mod_basis: Vec<String>,
}

pub fn format_poly<F: Field + std::fmt::Display>(p: &MultiPoly<F>) -> String {
    p.format_with(&NAMES)
}

pub fn to_rat_poly(p: &MultiPoly<Surd>) -> Option<MultiPoly> {
    let terms: Option<Vec<_>> = p.terms().map(|(m, c)| c.as_rat().map(|r| (m.clone(), r))).collect();
    terms.map(|t| MultiPoly::from_terms(p.nvars(), t))
}

pub fn to_surd_poly(p: &MultiPoly) -> MultiPoly<Surd> {
    p.map(Surd::from_rat)
}

/// Scales a form so that its leading coefficient is one.
pub fn monic(p: &MultiPoly<Surd>) -> MultiPoly<Surd> {
    match p.terms().last() {
        Some((_, c)) => p.scale(&c.inv()),
        None => p.clone(),
    }
}

/// Solution space of a homogeneous system in the degree-`d` monomial coefficients.
pub fn solve_space(rows: Vec<Vec<Surd>>, d: u32) -> AdjointBasis {
    let n = monomials(6, d).len();
    let m = Matrix::from_rows(n, rows);
    let conditions = m.rank();
    let raw: Vec<MultiPoly<Surd>> = m.nullspace().iter().map(|v| MultiPoly::from_coeff_vector(6, d, v)).collect();
    let qq = to_surd_poly(&plucker_quadric());
    let mut basis = AdjointBasis { degree: d, raw, modulo: vec![], contains_plucker: false, conditions };
    basis.contains_plucker = d == 2 && basis.contains(&qq);
    basis.modulo = if basis.contains_plucker {
        let mut kept: Vec<MultiPoly<Surd>> = vec![qq];
        for p in &basis.raw {
            let rows: Vec<Vec<Surd>> = kept.iter().chain([p]).map(|x| x.coeff_vector(d)).collect();
            if Matrix::from_rows(n, rows).rank() == kept.len() + 1 {
                kept.push(p.clone());
            }
        }
        kept.split_off(1)
    } else {
        basis.raw.clone()
    };
    basis
}

/// Forms of degree `d` interpolating every item of a residual arrangement.
pub fn interpolation_space(ra: &ResidualArrangement, d: usize) -> Result<AdjointBasis, AdjointError> {
    if !(1..=2).contains(&d) {
        return Err(AdjointError::Unsupported(d));
    }
    let rows = ra.items.iter().flat_map(|it| item_conditions(it, d as u32)).collect();
    Ok(solve_space(rows, d as u32))
}

/// Adjoints of a positive pentahedron or hexahedron.
pub fn adjoint_space(spec: &RegionSpec) -> Result<AdjointBasis, AdjointError> {
    let ra = residual_arrangement(spec)?;
    interpolation_space(&ra, spec.m())
}

#[derive(Clone, Debug, Serialize)]
pub struct PentahedronAdjoint {
    pub coefficients: Vec<Rat>,
    pub adjoint: Vec<Rat>,
    pub meets: Vec<FacetMeet>,
    pub warnings: Vec<String>,
}

impl PentahedronAdjoint {
    pub fn poly(&self) -> MultiPoly {
        MultiPoly::linear(&self.adjoint)
    }
}

/// Closed-form adjoint `Σ max(c_I, 0) p_I` of the pentahedron `{h ≥ 0} ∩ Gr≥0`.
pub fn pentahedron_adjoint(h: &[Rat]) -> Result<PentahedronAdjoint, AdjointError> {
    if h.len() != 6 {
        return Err(RegionError::BadLength(1, h.len()).into());
    }
    let zeros: Vec<&str> = (0..6).filter(|&i| h[i].is_zero()).map(|i| NAMES[i]).collect();
    if !zeros.is_empty() {
        return Err(AdjointError::NonSimple(format!("h vanishes at the coordinate points of {}", zeros.join(", "))));
    }
    if h.iter().all(|c| c.signum() > 0) || h.iter().all(|c| c.signum() < 0) {
        return Err(AdjointError::NoCut);
    }
    let meets: Vec<FacetMeet> = FACET_COORDS.iter().map(|&j| facet_meets_positive_cell(h, j)).collect();
    let warnings = FACET_COORDS
        .iter()
        .zip(&meets)
        .filter(|(_, m)| **m != FacetMeet::Meets)
        .map(|(&j, _)| format!("h = 0 misses the facet {} = 0 of Gr≥0", NAMES[j]))
        .collect();
    let adjoint = h.iter().map(|c| if c.signum() > 0 { c.clone() } else { Rat::zero() }).collect();
    Ok(PentahedronAdjoint { coefficients: h.to_vec(), adjoint, meets, warnings })
}

#[derive(Clone, Debug)]
pub struct QuadricCount {
    /// Maximal linear pieces of `V ∩ R(P)`.
    pub pieces: Vec<Subspace<Surd>>,
    pub basis: AdjointBasis,
}

impl QuadricCount {
    pub fn dim(&self) -> usize {
        self.basis.raw.len()
    }
    pub fn contains_plucker(&self) -> bool {
        self.basis.contains_plucker
    }
}

/// Quadrics vanishing on the intersection of the positroid planes with the residual
/// arrangement of the associated polytope.
pub fn quadrics_through_v_cap_rp(spec: &RegionSpec) -> QuadricCount {
    let rp = residual_arrangement_polytope(spec);
    let pieces = v_intersection(&rp.items.iter().map(|i| i.span.clone()).collect::<Vec<_>>());
    let rows = pieces.iter().flat_map(|p| conditions(p, true, 2)).collect();
    QuadricCount { pieces, basis: solve_space(rows, 2) }
}

/// A random hexahedron passing the validity checks, with integer coefficients in `[-h, h] \ {0}`.
pub fn random_valid_spec(rng: &mut impl Rng, m: usize, h: i64) -> RegionSpec {
    loop {
        let hs: Vec<[i64; 6]> = (0..m)
            .map(|_| {
                std::array::from_fn(|_| loop {
                    let c = rng.gen_range(-h..=h);
                    if c != 0 {
                        break c;
                    }
                })
            })
            .collect();
        let spec = RegionSpec::from_ints(&hs);
        if spec.validate().is_valid() {
            return spec;
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ExperimentRow {
    pub spec: String,
    pub mod_dim: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExperimentReport {
    pub rows: Vec<ExperimentRow>,
    pub skipped: usize,
    pub max_dim: usize,
    pub exceeding_three: usize,
}

/// Short stable identifier of a spec.
pub fn spec_hash(spec: &RegionSpec) -> String {
    use std::hash::{Hash, Hasher};
    let mut h = std::collections::hash_map::DefaultHasher::new();
    spec.hyperplanes().iter().map(|r| r.iter().map(|c| c.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>().hash(&mut h);
    format!("{:016x}", h.finish())
}

/// Distribution of adjoint dimensions modulo the Plücker quadric over random hexahedra.
pub fn conjecture_experiment(samples: usize, seed: u64) -> ExperimentReport {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::new();
    let mut skipped = 0;
    for _ in 0..samples {
        let spec = random_valid_spec(&mut rng, 2, 9);
        let dim = adjoint_space(&spec).ok().map(|b| b.modulo.len());
        if dim.is_none() {
            skipped += 1;
        }
        rows.push(ExperimentRow { spec: spec_hash(&spec), mod_dim: dim });
    }
    let max_dim = rows.iter().filter_map(|r| r.mod_dim).max().unwrap_or(0);
    let exceeding_three = rows.iter().filter(|r| r.mod_dim.is_some_and(|d| d > 3)).count();
    ExperimentReport { rows, skipped, max_dim, exceeding_three }
}
