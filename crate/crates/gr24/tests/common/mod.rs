#![allow(dead_code)]

use gr24::exact::{Field, MultiPoly, Rat, Surd};
use gr24::grassmann::{polar, qq, Kind, Subspace};
use gr24::io::SpecFile;
use gr24::region::classify::real_point;
use gr24::region::{Item, RegionSpec};
use itertools::Itertools;
use rand::Rng;

pub fn data(name: &str) -> String {
    format!("{}/data/{name}.json", env!("CARGO_MANIFEST_DIR"))
}

pub fn fixture(name: &str) -> RegionSpec {
    SpecFile::read(&data(name)).and_then(|f| f.to_spec()).expect("fixture")
}

pub fn rats(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&c| Rat::int(c)).collect()
}

pub fn surds(v: &[i64]) -> Vec<Surd> {
    v.iter().map(|&c| Surd::from_int(c)).collect()
}

/// Brute-force graph isomorphism on small graphs.
pub fn isomorphic(n: usize, a: &[(usize, usize)], b: &[(usize, usize)]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let norm = |e: &[(usize, usize)]| -> Vec<(usize, usize)> {
        let mut v: Vec<_> = e.iter().map(|&(x, y)| (x.min(y), x.max(y))).collect();
        v.sort();
        v
    };
    let target = norm(b);
    (0..n).permutations(n).any(|p| norm(&a.iter().map(|&(x, y)| (p[x], p[y])).collect::<Vec<_>>()) == target)
}

/// Edges given by labels, mapped onto item indices of `labels`.
pub fn edges_by_label(labels: &[&str], edges: &[(&str, &str)]) -> Vec<(usize, usize)> {
    let idx = |l: &str| labels.iter().position(|x| *x == l).unwrap_or_else(|| panic!("no label {l}"));
    edges.iter().map(|&(a, b)| (idx(a), idx(b))).collect()
}

fn random_combination(rng: &mut impl Rng, basis: &[Vec<Surd>]) -> Vec<Surd> {
    let mut x = vec![Surd::zero(); 6];
    for b in basis {
        let c = Surd::from_int(rng.gen_range(-20..=20));
        for k in 0..6 {
            x[k] = x[k].clone() + &(c.clone() * &b[k]);
        }
    }
    x
}

/// Random real points of an item, found independently of the interpolation conditions.
///
/// Linear pieces are sampled by random combinations of a basis. Quadric sections are
/// sampled as second intersections of random lines through a known point.
pub fn sample_points(item: &Item, rng: &mut impl Rng, count: usize) -> Vec<Vec<Surd>> {
    let kind = item.component.as_ref().map_or(item.kind, |c| c.kind);
    match kind {
        Kind::ConjugatePointPair | Kind::ConjugatePair => {
            let pieces = &item.component.as_ref().unwrap().pieces;
            (0..count).map(|i| random_combination(rng, pieces[i % pieces.len()].basis())).collect()
        }
        Kind::ImaginaryPair => vec![],
        k if k.is_quadric() => {
            let span = &item.component.as_ref().unwrap().span;
            let s = span.to_surd();
            let x0 = s.point(&real_point(&span.gram()).expect("real point"));
            let mut out = Vec::new();
            while out.len() < count {
                let v = random_combination(rng, s.basis());
                let qv = qq(&v);
                if qv.is_zero() {
                    continue;
                }
                // qq(x0 + t v) = t B(x0, v) + t^2 qq(v)
                let t = -polar(&x0, &v) / qv;
                let x: Vec<Surd> = (0..6).map(|k| x0[k].clone() + &(t.clone() * &v[k])).collect();
                if x.iter().any(|c| !c.is_zero()) {
                    out.push(x);
                }
            }
            out
        }
        _ => (0..count).map(|_| random_combination(rng, item.span.basis())).collect(),
    }
}

pub fn on_span(s: &Subspace<Surd>, x: &[Surd]) -> bool {
    s.contains_point(x)
}

pub fn eval(p: &MultiPoly<Surd>, x: &[Surd]) -> Surd {
    p.eval(x)
}

fn eval_f64(p: &gr24::exact::UniPoly<Surd>, u: f64) -> f64 {
    p.coeffs().iter().rev().fold(0.0, |acc, c| acc * u + c.to_f64())
}

/// Relative tolerance for floating-point residue cross-checks.
pub const RESIDUE_RTOL: f64 = 1e-3;

/// Floating-point check of the restricted form `N/D du` on every segment of a curve: constant
/// sign in the interior, and residues at the endpoints close to the exact ones reported.
pub fn segment_oracle(
    spec: &RegionSpec,
    curve: &gr24::canonical::Curve,
    adjoint: &MultiPoly<Surd>,
    exact_residues: &[Surd],
) -> Result<(), String> {
    let vecs = spec.form_vectors();
    let n = curve.restrict(adjoint);
    let d = curve.denominator.iter().fold(gr24::exact::UniPoly::constant(Surd::one()), |acc, &j| acc.mul(&curve.restrict_linear(&vecs[j])));
    let f = |u: f64| eval_f64(&n, u) / eval_f64(&d, u);
    let ends: Vec<f64> = curve.endpoints.iter().map(|(_, u)| u.to_f64()).collect();
    for &(a, b) in &curve.segments {
        let (ua, ub) = (ends[a], ends[b]);
        let samples: Vec<f64> = if ua < ub {
            (1..200).map(|k| ua + (ub - ua) * k as f64 / 200.0).collect()
        } else {
            // through infinity: (ua, +inf) then (-inf, ub)
            (1..100).map(|k| ua + (k as f64).powi(3) / 10.0).chain((1..100).map(|k| ub - (k as f64).powi(3) / 10.0)).collect()
        };
        let signs: Vec<f64> = samples.iter().map(|&u| f(u)).filter(|v| v.is_finite() && *v != 0.0).map(f64::signum).collect();
        if signs.windows(2).any(|w| w[0] != w[1]) {
            return Err(format!("sign change inside a segment of {}", curve.describe()));
        }
    }
    for (k, &u) in ends.iter().enumerate() {
        let eps = 1e-6 * (1.0 + u.abs());
        let approx = 0.5 * (eps * f(u + eps) - eps * f(u - eps));
        let exact = exact_residues[k].to_f64();
        if (approx - exact).abs() > RESIDUE_RTOL * exact.abs().max(1e-12) {
            return Err(format!("residue {approx} vs {exact} on {}", curve.describe()));
        }
    }
    Ok(())
}

/// Counts sign changes of a cubic on a fine grid refined by bisection.
pub fn bisection_roots(c: &[i64; 4]) -> Vec<f64> {
    let f = |t: f64| c[0] as f64 + t * (c[1] as f64 + t * (c[2] as f64 + t * c[3] as f64));
    let bound = 1.0 + c.iter().take(3).map(|x| (*x as f64).abs()).fold(0.0, f64::max) / (c[3] as f64).abs();
    let n = 20_000;
    let mut roots = Vec::new();
    let mut prev = -bound;
    for i in 1..=n {
        let x = -bound + 2.0 * bound * i as f64 / n as f64;
        if f(prev) == 0.0 {
            roots.push(prev);
        } else if f(prev) * f(x) < 0.0 {
            let (mut lo, mut hi) = (prev, x);
            for _ in 0..80 {
                let mid = 0.5 * (lo + hi);
                if f(lo) * f(mid) <= 0.0 {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            roots.push(0.5 * (lo + hi));
        }
        prev = x;
    }
    roots
}
