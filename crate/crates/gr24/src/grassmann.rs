//! The Grassmannian Gr(2,4) as the Plücker quadric in P^5.
//!
//! Coordinates are always ordered `p12, p13, p23, p14, p24, p34`.

use crate::exact::{Field, Matrix, MultiPoly, Rat, Surd};
use serde::Serialize;

pub const NAMES: [&str; 6] = ["p12", "p13", "p23", "p14", "p24", "p34"];
pub const P12: usize = 0;
pub const P13: usize = 1;
pub const P23: usize = 2;
pub const P14: usize = 3;
pub const P24: usize = 4;
pub const P34: usize = 5;

/// The four coordinates whose vanishing cuts out facets of Gr≥0(2,4), in facet order.
pub const FACET_COORDS: [usize; 4] = [P12, P23, P34, P14];
/// Coordinates that vanish only in codimension two on Gr≥0(2,4).
pub const NON_FACET_COORDS: [usize; 2] = [P13, P24];
/// The three pairs of coordinates multiplied together in the Plücker quadric.
pub const MONOMIAL_PAIRS: [(usize, usize); 3] = [(P12, P34), (P13, P24), (P14, P23)];

/// Index of the coordinate named by a two-letter subset such as "24".
pub fn coord_index(name: &str) -> Option<usize> {
    let n = name.trim_start_matches('p');
    NAMES.iter().position(|s| &s[1..] == n)
}

/// `p12 p34 - p13 p24 + p14 p23`.
pub fn plucker_quadric() -> MultiPoly {
    let x = |i| MultiPoly::<Rat>::var(6, i);
    x(P12).mul(&x(P34)).sub(&x(P13).mul(&x(P24))).add(&x(P14).mul(&x(P23)))
}

pub fn qq<F: Field>(x: &[F]) -> F {
    x[P12].clone() * &x[P34] - x[P13].clone() * &x[P24] + x[P14].clone() * &x[P23]
}

/// Polarization `qq(x + y) - qq(x) - qq(y)`.
pub fn polar<F: Field>(x: &[F], y: &[F]) -> F {
    x[P12].clone() * &y[P34] + x[P34].clone() * &y[P12] - x[P13].clone() * &y[P24] - x[P24].clone() * &y[P13]
        + x[P14].clone() * &y[P23]
        + x[P23].clone() * &y[P14]
}

pub fn coordinate_point(i: usize) -> Vec<Rat> {
    (0..6).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect()
}

/// Plücker coordinates of the row span of a 2×4 matrix.
pub fn minors<F: Field>(m: &[[F; 4]; 2]) -> Vec<F> {
    let d = |i: usize, j: usize| m[0][i].clone() * &m[1][j] - m[0][j].clone() * &m[1][i];
    vec![d(0, 1), d(0, 2), d(1, 2), d(0, 3), d(1, 3), d(2, 3)]
}

/// A linear form in the Plücker coordinates, written as its coefficient vector.
pub fn linear_form(c: &[Rat]) -> MultiPoly {
    MultiPoly::linear(c)
}

pub fn dot<F: Field>(a: &[F], b: &[F]) -> F {
    crate::exact::matrix::dot(a, b)
}

/// A projective linear subspace of P^5, stored by canonical equations and basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace<F: Field = Rat> {
    eqs: Vec<Vec<F>>,
    basis: Vec<Vec<F>>,
}

impl<F: Field> Subspace<F> {
    pub fn whole() -> Self {
        Self::from_equations(vec![])
    }
    pub fn from_equations(rows: Vec<Vec<F>>) -> Self {
        let m = Matrix::from_rows(6, rows);
        let eqs = m.rref().0.row_vecs();
        let basis = m.nullspace();
        Subspace { eqs, basis }
    }
    pub fn from_basis(vecs: Vec<Vec<F>>) -> Self {
        let m = Matrix::from_rows(6, vecs);
        let eqs = m.nullspace();
        Self::from_equations(eqs)
    }
    pub fn equations(&self) -> &[Vec<F>] {
        &self.eqs
    }
    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }
    /// Projective dimension; `-1` for the empty subspace.
    pub fn dim(&self) -> i32 {
        self.basis.len() as i32 - 1
    }
    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }
    pub fn contains_point(&self, x: &[F]) -> bool {
        self.eqs.iter().all(|e| dot(e, x).is_zero())
    }
    pub fn contains(&self, o: &Self) -> bool {
        o.basis.iter().all(|b| self.contains_point(b))
    }
    pub fn intersect(&self, o: &Self) -> Self {
        Self::from_equations(self.eqs.iter().chain(&o.eqs).cloned().collect())
    }
    pub fn join(&self, o: &Self) -> Self {
        Self::from_basis(self.basis.iter().chain(&o.basis).cloned().collect())
    }
    pub fn with_equation(&self, e: Vec<F>) -> Self {
        let mut rows = self.eqs.clone();
        rows.push(e);
        Self::from_equations(rows)
    }
    /// Whether the linear form vanishes on the whole subspace.
    pub fn kills(&self, form: &[F]) -> bool {
        self.basis.iter().all(|b| dot(form, b).is_zero())
    }
    /// The point with the given coordinates in the stored basis.
    pub fn point(&self, s: &[F]) -> Vec<F> {
        let mut x = vec![F::zero(); 6];
        for (si, b) in s.iter().zip(&self.basis) {
            if si.is_zero() {
                continue;
            }
            for k in 0..6 {
                x[k] = x[k].clone() + &(si.clone() * &b[k]);
            }
        }
        x
    }
    /// Basis coordinates of a point of the subspace.
    pub fn coords_of(&self, x: &[F]) -> Option<Vec<F>> {
        let m = Matrix::from_rows(6, self.basis.clone()).transpose();
        m.solve(x)
    }
    /// Gram matrix of the polarized Plücker quadric on the basis, so that
    /// `qq(point(s)) = s^T G s / 2`.
    pub fn gram(&self) -> Matrix<F> {
        let n = self.basis.len();
        let mut g = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let v = polar(&self.basis[i], &self.basis[j]);
                g[(i, j)] = v.clone();
                g[(j, i)] = v;
            }
        }
        g
    }
    pub fn lies_on_gr(&self) -> bool {
        self.gram().rank() == 0
    }
    /// The subspace spanned by `s`-coordinate vectors.
    pub fn sub_from_coords(&self, coords: &[Vec<F>]) -> Self {
        Self::from_basis(coords.iter().map(|s| self.point(s)).collect())
    }
}

impl<F: Field + ToSurd> Subspace<F> {
    pub fn to_surd(&self) -> Subspace<Surd> {
        Subspace {
            eqs: self.eqs.iter().map(|r| r.iter().map(|c| c.to_surd()).collect()).collect(),
            basis: self.basis.iter().map(|r| r.iter().map(|c| c.to_surd()).collect()).collect(),
        }
    }
}

/// Lift of a field element into the surd field.
pub trait ToSurd {
    fn to_surd(&self) -> Surd;
}
impl ToSurd for Rat {
    fn to_surd(&self) -> Surd {
        Surd::from_rat(self)
    }
}
impl ToSurd for Surd {
    fn to_surd(&self) -> Surd {
        self.clone()
    }
}

impl Subspace<Rat> {
    pub fn coordinate(zero: &[usize]) -> Self {
        Self::from_equations(zero.iter().map(|&i| coordinate_point(i)).collect())
    }
    pub fn equation_polys(&self) -> Vec<MultiPoly> {
        self.eqs.iter().map(|e| linear_form(e)).collect()
    }
}

/// The eight planes of Gr(2,4) on which all three Plücker monomials vanish.
pub fn positroid_planes() -> Vec<Subspace> {
    let mut out = Vec::new();
    for mask in 0..8u32 {
        let zero: Vec<usize> = MONOMIAL_PAIRS
            .iter()
            .enumerate()
            .map(|(k, &(a, b))| if mask >> k & 1 == 0 { a } else { b })
            .collect();
        out.push(Subspace::coordinate(&zero));
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, PartialOrd, Ord)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Point,
    Line,
    Plane,
    P3,
    P4,
    Conic,
    QuadricSurface,
    QuadricThreefold,
    /// Two real linear spaces conjugate over a real quadratic field.
    ConjugatePointPair,
    ConjugatePair,
    /// Two complex conjugate linear spaces; real points only on their intersection.
    ImaginaryPair,
}

impl Kind {
    pub fn linear(dim: i32) -> Kind {
        match dim {
            0 => Kind::Point,
            1 => Kind::Line,
            2 => Kind::Plane,
            3 => Kind::P3,
            _ => Kind::P4,
        }
    }
    pub fn is_linear(self) -> bool {
        matches!(self, Kind::Point | Kind::Line | Kind::Plane | Kind::P3 | Kind::P4)
    }
    pub fn is_quadric(self) -> bool {
        matches!(self, Kind::Conic | Kind::QuadricSurface | Kind::QuadricThreefold)
    }
    pub fn label(self) -> &'static str {
        match self {
            Kind::Point => "point",
            Kind::Line => "line",
            Kind::Plane => "plane",
            Kind::P3 => "P3",
            Kind::P4 => "hyperplane",
            Kind::Conic => "conic",
            Kind::QuadricSurface => "quadric surface",
            Kind::QuadricThreefold => "quadric threefold",
            Kind::ConjugatePointPair => "conjugate point pair",
            Kind::ConjugatePair => "conjugate pair",
            Kind::ImaginaryPair => "imaginary pair",
        }
    }
}

/// An irreducible (over Q) component of `L ∩ Gr(2,4)` for a rational linear space `L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub kind: Kind,
    /// Linear span of the component.
    pub span: Subspace,
    /// Rank of the Plücker quadric restricted to the span.
    pub rank: usize,
    /// Set when the restricted quadric was a double hyperplane and the reduced piece was kept.
    pub nonreduced: bool,
    /// For conjugate pairs, the discriminant `D` with pieces defined over Q(sqrt D).
    pub disc: Option<Rat>,
    /// Real linear pieces of a conjugate pair.
    pub pieces: Vec<Subspace<Surd>>,
}

impl Component {
    pub fn linear(span: Subspace, nonreduced: bool) -> Self {
        Component { kind: Kind::linear(span.dim()), span, rank: 0, nonreduced, disc: None, pieces: vec![] }
    }
    /// Projective dimension of the component itself.
    pub fn dim(&self) -> i32 {
        if self.kind.is_linear() {
            self.span.dim()
        } else {
            self.span.dim() - 1
        }
    }
    pub fn degree(&self) -> u32 {
        match self.kind {
            k if k.is_linear() => 1,
            _ => 2,
        }
    }
    /// Whether a linear form vanishes on the whole component.
    pub fn kills(&self, form: &[Rat]) -> bool {
        self.span.kills(form)
    }
    /// Restriction of the Plücker quadric to the span, in basis coordinates.
    pub fn restricted_quadric(&self) -> MultiPoly {
        restricted_quadric(&self.span)
    }
}

/// The Plücker quadric pulled back to basis coordinates of `l`.
pub fn restricted_quadric<F: Field>(l: &Subspace<F>) -> MultiPoly<F> {
    let n = l.basis().len();
    let subs: Vec<MultiPoly<F>> = (0..6)
        .map(|k| MultiPoly::linear(&l.basis().iter().map(|b| b[k].clone()).collect::<Vec<_>>()))
        .collect();
    let q = plucker_quadric().map(|c| F::from_rat(c));
    if n == 0 {
        return MultiPoly::zero(0);
    }
    q.compose(&subs)
}

/// Splits `l ∩ Gr(2,4)` into components according to the rank of the restricted quadric.
pub fn decompose_linear_cap_quadric(l: &Subspace) -> Vec<Component> {
    let n = l.basis().len();
    if n == 0 {
        return vec![];
    }
    let g = l.gram();
    let rank = g.rank();
    let kernel = g.nullspace();
    match rank {
        0 => vec![Component::linear(l.clone(), false)],
        1 => {
            if kernel.is_empty() {
                return vec![];
            }
            vec![Component::linear(l.sub_from_coords(&kernel), true)]
        }
        2 => split_rank_two(l, &g, &kernel),
        _ => {
            let kind = match l.dim() {
                2 => Kind::Conic,
                3 => Kind::QuadricSurface,
                _ => Kind::QuadricThreefold,
            };
            vec![Component { kind, span: l.clone(), rank, nonreduced: false, disc: None, pieces: vec![] }]
        }
    }
}

fn split_rank_two(l: &Subspace, g: &Matrix<Rat>, kernel: &[Vec<Rat>]) -> Vec<Component> {
    // the row space of a symmetric form is a complement of its kernel
    let rows = g.rref().0.row_vecs();
    let (u, v) = (&rows[0], &rows[1]);
    let half = Rat::new(1, 2);
    let quad = |x: &[Rat], y: &[Rat]| dot(x, &g.mul_vec(y));
    let a = quad(u, u) * &half;
    let b = quad(u, v);
    let c = quad(v, v) * &half;
    let d = b.clone() * &b - Rat::int(4) * &a * &c;
    // roots (s : t) of a s^2 + b s t + c t^2
    let roots = |sq: Surd| -> Vec<(Surd, Surd)> {
        let (a, b, c) = (a.to_surd(), b.to_surd(), c.to_surd());
        if !a.is_zero() {
            let two_a = a * &Surd::from_int(2);
            vec![
                ((-b.clone() + &sq) / &two_a, Surd::one()),
                ((-b - &sq) / &two_a, Surd::one()),
            ]
        } else {
            vec![(Surd::one(), Surd::zero()), (-c, b)]
        }
    };
    let piece = |(s, t): (Surd, Surd)| -> Subspace<Surd> {
        let mut coords: Vec<Vec<Surd>> = kernel.iter().map(|k| k.iter().map(|x| x.to_surd()).collect()).collect();
        coords.push(u.iter().zip(v).map(|(ui, vi)| s.clone() * &ui.to_surd() + &(t.clone() * &vi.to_surd())).collect());
        l.to_surd().sub_from_coords(&coords)
    };
    let dim = l.dim() - 1;
    match d.signum() {
        -1 => vec![Component {
            kind: Kind::ImaginaryPair,
            span: l.clone(),
            rank: 2,
            nonreduced: false,
            disc: Some(d),
            pieces: vec![],
        }],
        _ => {
            let sq = Surd::sqrt_rat(&d);
            let pieces: Vec<Subspace<Surd>> = roots(sq.clone()).into_iter().map(piece).collect();
            if sq.is_rational() {
                pieces
                    .into_iter()
                    .map(|p| Component::linear(surd_subspace_to_rat(&p).expect("rational piece"), false))
                    .collect()
            } else {
                let kind = if dim == 0 { Kind::ConjugatePointPair } else { Kind::ConjugatePair };
                vec![Component { kind, span: l.clone(), rank: 2, nonreduced: false, disc: Some(d), pieces }]
            }
        }
    }
}

pub fn surd_subspace_to_rat(s: &Subspace<Surd>) -> Option<Subspace> {
    let eqs: Option<Vec<Vec<Rat>>> = s.equations().iter().map(|r| r.iter().map(|c| c.as_rat()).collect()).collect();
    eqs.map(Subspace::from_equations)
}

/// Result of intersecting a hyperplane with a facet cell of Gr≥0(2,4).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FacetMeet {
    Meets,
    MissesPositive,
    MissesNegative,
}

/// Whether `{h = 0}` meets the facet `{p_J = 0} ∩ Gr≥0(2,4)`.
///
/// The facet cell is connected and contains every coordinate point `e_I` with `I ≠ J`,
/// so `h` vanishes somewhere on it unless its other five coefficients share a strict sign.
pub fn facet_meets_positive_cell(h: &[Rat], facet: usize) -> FacetMeet {
    let others: Vec<i8> = (0..6).filter(|&i| i != facet).map(|i| h[i].signum()).collect();
    if others.iter().all(|&s| s > 0) {
        FacetMeet::MissesPositive
    } else if others.iter().all(|&s| s < 0) {
        FacetMeet::MissesNegative
    } else {
        FacetMeet::Meets
    }
}

/// Rational parametrization of a quadric through a known point by projection.
///
/// With `x0` on the quadric and `w` spanning a complement, `v ↦ q(v) x0 - B(x0, v) v`
/// sends each direction to the second intersection of the line `x0 + t v`.
/// Coordinates are returned as quadratic forms in `w.len()` variables, in span coordinates.
pub fn projection_parametrization<F: Field>(g: &Matrix<F>, x0: &[F], w: &[Vec<F>]) -> Vec<MultiPoly<F>> {
    let n = x0.len();
    let k = w.len();
    let half = F::from_rat(&Rat::new(1, 2));
    // v = sum_j y_j w_j
    let vcoord: Vec<MultiPoly<F>> =
        (0..n).map(|i| MultiPoly::linear(&w.iter().map(|wj| wj[i].clone()).collect::<Vec<_>>())).collect();
    let gx0 = g.mul_vec(x0);
    let bx0v = MultiPoly::linear(&w.iter().map(|wj| dot(&gx0, wj)).collect::<Vec<_>>());
    let mut qv = MultiPoly::zero(k);
    for a in 0..k {
        for b in 0..k {
            let c = dot(&w[a], &g.mul_vec(&w[b])) * &half;
            let mut e = vec![0u32; k];
            e[a] += 1;
            e[b] += 1;
            qv.add_term(crate::exact::Mono(e), c);
        }
    }
    (0..n)
        .map(|i| qv.scale(&x0[i]).sub(&bx0v.mul(&vcoord[i])))
        .collect()
}

/// Segre parametrization of `{p_a = p_b = 0} ∩ Gr` for a complementary pair `(a, b)`.
///
/// Returns six bilinear forms in `(s0, s1; t0, t1)`.
pub fn segre_parametrization(pair: (usize, usize)) -> Option<Vec<MultiPoly>> {
    let idx = MONOMIAL_PAIRS.iter().position(|&(a, b)| (a, b) == pair || (b, a) == pair)?;
    let v = |i| MultiPoly::<Rat>::var(4, i);
    let mut out = vec![MultiPoly::zero(4); 6];
    let others: Vec<(usize, usize)> = (0..3).filter(|&k| k != idx).map(|k| MONOMIAL_PAIRS[k]).collect();
    let (x1, y1) = others[0];
    let (x2, y2) = others[1];
    // the remaining quadric is ±(x1 y1) ± (x2 y2); match the sign of the second pair
    let s = |i: usize, j: usize| if (i, j) == (P13, P24) { -Rat::one() } else { Rat::one() };
    let sgn = s(x1, y1) * &s(x2, y2);
    out[x1] = v(0).mul(&v(2));
    out[y1] = v(1).mul(&v(3));
    out[x2] = v(0).mul(&v(3));
    out[y2] = v(1).mul(&v(2)).scale(&-sgn);
    Some(out)
}
