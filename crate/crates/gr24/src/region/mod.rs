//! Positive polytopes `S = Gr(2,4) ∩ P`: specification, validity, face classification
//! and residual arrangements.

pub mod arrangement;
pub mod cad;
pub mod classify;
pub mod lp;

pub use arrangement::{
    check_prop_v_intersection, enumerate_strata, residual_arrangement, residual_arrangement_polytope, Item,
    PolytopeArrangement, PropVReport, ResidualArrangement, Stratum,
};
pub use classify::{classify_component, Classification, Verdict};

use crate::exact::Rat;
use crate::grassmann::{coordinate_point, FACET_COORDS, NAMES, NON_FACET_COORDS};
use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Debug, thiserror::Error, Clone, PartialEq)]
pub enum RegionError {
    #[error("hyperplane h{0} has {1} coefficients, expected 6")]
    BadLength(usize, usize),
    #[error("invalid region: {0}")]
    Invalid(String),
    #[error("non-simple arrangement: {0}")]
    NonSimple(String),
    #[error("undetermined classification of {0}")]
    Undetermined(String),
}

/// A linear form among the `6 + m` defining the associated polytope.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Form {
    pub name: String,
    pub coeffs: Vec<Rat>,
    /// Whether the form cuts out a facet of `S` (the four positroid facets and each `h_j`).
    pub facet: bool,
}

/// `S = {p ∈ Gr≥0(2,4) : h_j(p) ≥ 0}` for rational linear forms `h_1, …, h_m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RegionSpec {
    hyperplanes: Vec<Vec<Rat>>,
}

impl RegionSpec {
    pub fn new(hyperplanes: Vec<Vec<Rat>>) -> Result<Self, RegionError> {
        for (i, h) in hyperplanes.iter().enumerate() {
            if h.len() != 6 {
                return Err(RegionError::BadLength(i + 1, h.len()));
            }
        }
        Ok(RegionSpec { hyperplanes })
    }

    pub fn from_ints(hs: &[[i64; 6]]) -> Self {
        Self::new(hs.iter().map(|h| h.iter().map(|&c| Rat::int(c)).collect()).collect()).unwrap()
    }

    pub fn hyperplanes(&self) -> &[Vec<Rat>] {
        &self.hyperplanes
    }

    pub fn m(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn facet_count(&self) -> usize {
        4 + self.m()
    }

    /// All `6 + m` forms: facet forms `p12, p23, p34, p14, h1, …` then `p13, p24`.
    pub fn forms(&self) -> Vec<Form> {
        let coord = |i: usize, facet| Form { name: NAMES[i].to_string(), coeffs: coordinate_point(i), facet };
        let mut out: Vec<Form> = FACET_COORDS.iter().map(|&i| coord(i, true)).collect();
        for (j, h) in self.hyperplanes.iter().enumerate() {
            out.push(Form { name: format!("h{}", j + 1), coeffs: h.clone(), facet: true });
        }
        out.extend(NON_FACET_COORDS.iter().map(|&i| coord(i, false)));
        out
    }

    pub fn form_vectors(&self) -> Vec<Vec<Rat>> {
        self.forms().into_iter().map(|f| f.coeffs).collect()
    }

    /// Applies a permutation of the Plücker coordinates: coordinate `i` becomes `perm[i]`.
    pub fn permuted(&self, perm: &[usize; 6]) -> Self {
        let hs = self
            .hyperplanes
            .iter()
            .map(|h| {
                let mut out = vec![Rat::zero(); 6];
                for i in 0..6 {
                    out[perm[i]] = h[i].clone();
                }
                out
            })
            .collect();
        RegionSpec { hyperplanes: hs }
    }

    pub fn swapped(&self) -> Self {
        let mut hs = self.hyperplanes.clone();
        hs.reverse();
        RegionSpec { hyperplanes: hs }
    }

    /// Checks simplicity, general position and that every facet form supports a facet.
    pub fn validate(&self) -> Validity {
        let mut zero_coefficients = Vec::new();
        for (j, h) in self.hyperplanes.iter().enumerate() {
            for (i, c) in h.iter().enumerate() {
                if c.is_zero() {
                    let pre = if self.m() > 1 { format!("h{}: ", j + 1) } else { String::new() };
                    zero_coefficients.push(format!("{pre}c_{} = 0 violates simplicity", &NAMES[i][1..]));
                }
            }
        }
        let vecs = self.form_vectors();
        let mut dependent = Vec::new();
        for k in 2..=6.min(vecs.len()) {
            for sub in (0..vecs.len()).combinations(k) {
                let m = crate::exact::Matrix::from_rows(6, sub.iter().map(|&i| vecs[i].clone()).collect());
                if m.rank() < k {
                    dependent.push(sub);
                }
            }
        }
        let forms = self.forms();
        let facet_witnesses: Vec<Option<Vec<Rat>>> =
            (0..self.facet_count()).map(|i| facet_witness(&forms, i, 4000)).collect();
        Validity { zero_coefficients, dependent_subsets: dependent, facet_witnesses, facet_names: forms.iter().map(|f| f.name.clone()).collect() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Validity {
    pub zero_coefficients: Vec<String>,
    /// Subsets (of at most six forms) that are linearly dependent.
    pub dependent_subsets: Vec<Vec<usize>>,
    /// A point of the relative interior of each facet, when one was found.
    pub facet_witnesses: Vec<Option<Vec<Rat>>>,
    #[serde(skip)]
    facet_names: Vec<String>,
}

impl Validity {
    pub fn is_valid(&self) -> bool {
        self.problems().is_empty()
    }
    pub fn problems(&self) -> Vec<String> {
        let mut out = self.zero_coefficients.clone();
        for s in &self.dependent_subsets {
            let names: Vec<&str> = s.iter().map(|&i| self.facet_names[i].as_str()).collect();
            out.push(format!("forms {} are linearly dependent", names.join(", ")));
        }
        for (i, w) in self.facet_witnesses.iter().enumerate() {
            if w.is_none() {
                out.push(format!("no relative interior point found on facet {}", self.facet_names[i]));
            }
        }
        out
    }
}

/// Plücker vector in one of two positive charts of Gr≥0(2,4), given four parameters.
///
/// Chart 0 normalizes `p12 = 1`, chart 1 normalizes `p34 = 1`; positive parameters
/// with a positive quadratic coordinate give points of Gr>0(2,4).
fn chart_point(chart: usize, u: &[Rat; 4]) -> Vec<Rat> {
    let [a, b, c, d] = u;
    match chart {
        0 => vec![Rat::one(), c.clone(), a.clone(), d.clone(), b.clone(), b.clone() * c - a.clone() * d],
        _ => vec![b.clone() * c - a.clone() * d, c.clone(), a.clone(), d.clone(), b.clone(), Rat::one()],
    }
}

/// Searches for a point of `{f_i = 0} ∩ Gr(2,4)` with every other form strictly positive.
///
/// Each chart coordinate is affine in every single parameter, so fixing three parameters
/// and solving the facet equation for the fourth keeps the witness rational.
pub fn facet_witness(forms: &[Form], i: usize, tries: usize) -> Option<Vec<Rat>> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed + i as u64);
    let f = &forms[i].coeffs;
    let eval = |u: &[Rat; 4], chart| crate::grassmann::dot(f, &chart_point(chart, u));
    for _ in 0..tries {
        let chart = rng.gen_range(0..2);
        let k = rng.gen_range(0..4);
        let mut u: [Rat; 4] = std::array::from_fn(|_| Rat::new(rng.gen_range(1..40i64), rng.gen_range(1..8i64)));
        // f is affine in u[k]: f = f0 + f1 u[k]
        u[k] = Rat::zero();
        let f0 = eval(&u, chart);
        u[k] = Rat::one();
        let f1 = eval(&u, chart) - &f0;
        if f1.is_zero() {
            continue;
        }
        u[k] = -f0 / &f1;
        let p = chart_point(chart, &u);
        let ok = forms
            .iter()
            .enumerate()
            .all(|(j, g)| j == i || crate::grassmann::dot(&g.coeffs, &p).signum() > 0);
        if ok && p.iter().all(|x| x.signum() >= 0) {
            return Some(p);
        }
    }
    None
}
