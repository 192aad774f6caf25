//! Dense two-phase simplex over an exact ordered field, with Bland's rule.

use crate::exact::{Field, Matrix};

#[derive(Clone, Debug, PartialEq)]
pub enum LpResult<F: Field> {
    Optimal { value: F, x: Vec<F> },
    Infeasible,
    Unbounded,
}

struct Tableau<F: Field> {
    t: Vec<Vec<F>>,
    basis: Vec<usize>,
    ncols: usize,
}

impl<F: Field> Tableau<F> {
    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.t[r][c].clone().inv();
        for v in self.t[r].iter_mut() {
            *v = v.clone() * &p;
        }
        let prow = self.t[r].clone();
        for (i, row) in self.t.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&prow) {
                if !pv.is_zero() {
                    *v = v.clone() - &(f.clone() * pv);
                }
            }
        }
        self.basis[r] = c;
    }

    /// Maximizes `obj · x` over the current feasible basis, restricted to the allowed columns.
    fn optimize(&mut self, obj: &[F], allowed: usize) -> Result<(), ()> {
        let m = self.t.len();
        let rhs = self.ncols;
        loop {
            // reduced cost of column j: obj_j - sum_i obj_{basis_i} t[i][j]
            let mut enter = None;
            for j in 0..allowed {
                if self.basis.contains(&j) {
                    continue;
                }
                let mut rc = obj[j].clone();
                for i in 0..m {
                    if !self.t[i][j].is_zero() {
                        rc = rc - &(obj[self.basis[i]].clone() * &self.t[i][j]);
                    }
                }
                if rc.signum() > 0 {
                    enter = Some(j);
                    break;
                }
            }
            let Some(c) = enter else { return Ok(()) };
            let mut leave: Option<(usize, F)> = None;
            for i in 0..m {
                if self.t[i][c].signum() > 0 {
                    let ratio = self.t[i][rhs].clone() / &self.t[i][c];
                    let better = match &leave {
                        None => true,
                        Some((li, lr)) => {
                            let o = ratio.cmp_val(lr);
                            o.is_lt() || (o.is_eq() && self.basis[i] < self.basis[*li])
                        }
                    };
                    if better {
                        leave = Some((i, ratio));
                    }
                }
            }
            let Some((r, _)) = leave else { return Err(()) };
            self.pivot(r, c);
        }
    }
}

/// Maximizes `c · x` subject to `a x = b`, `x ≥ 0`.
pub fn simplex<F: Field>(a: &Matrix<F>, b: &[F], c: &[F]) -> LpResult<F> {
    let m = a.nrows();
    let n = a.ncols();
    let total = n + m;
    let mut t = Vec::with_capacity(m);
    for i in 0..m {
        let neg = b[i].signum() < 0;
        let mut row = vec![F::zero(); total + 1];
        for j in 0..n {
            row[j] = if neg { -a[(i, j)].clone() } else { a[(i, j)].clone() };
        }
        row[n + i] = F::one();
        row[total] = if neg { -b[i].clone() } else { b[i].clone() };
        t.push(row);
    }
    let mut tab = Tableau { t, basis: (n..total).collect(), ncols: total };
    // phase one: maximize minus the sum of artificials
    let mut obj1 = vec![F::zero(); total];
    for o in obj1.iter_mut().skip(n) {
        *o = -F::one();
    }
    if tab.optimize(&obj1, total).is_err() {
        return LpResult::Infeasible;
    }
    let infeas = (0..m).any(|i| tab.basis[i] >= n && !tab.t[i][total].is_zero());
    if infeas {
        return LpResult::Infeasible;
    }
    // drive remaining (zero-valued) artificials out of the basis
    let mut i = 0;
    while i < tab.t.len() {
        if tab.basis[i] >= n {
            if let Some(j) = (0..n).find(|&j| !tab.t[i][j].is_zero()) {
                tab.pivot(i, j);
                i += 1;
            } else {
                tab.t.remove(i);
                tab.basis.remove(i);
            }
        } else {
            i += 1;
        }
    }
    let mut obj2 = vec![F::zero(); total];
    obj2[..n].clone_from_slice(c);
    if tab.optimize(&obj2, n).is_err() {
        return LpResult::Unbounded;
    }
    let mut x = vec![F::zero(); n];
    for (i, &bj) in tab.basis.iter().enumerate() {
        if bj < n {
            x[bj] = tab.t[i][total].clone();
        }
    }
    let value = crate::exact::matrix::dot(c, &x);
    LpResult::Optimal { value, x }
}

/// Maximizes the common slack `τ` with `f_j(s) ≥ τ` for every row `f_j`, normalized by
/// `Σ f_j(s) = 1`, over free variables `s`. Returns `(τ*, s*)`, or `None` when the
/// normalization is infeasible (the forms sum to zero identically on the domain).
pub fn max_slack<F: Field>(forms: &[Vec<F>]) -> Option<(F, Vec<F>)> {
    let r = forms.len();
    let n = forms.first().map_or(0, |f| f.len());
    // columns: s+ (n), s- (n), tau+, tau-, slack (r)
    let cols = 2 * n + 2 + r;
    let mut a = Matrix::zeros(r + 1, cols);
    let mut b = vec![F::zero(); r + 1];
    for (j, f) in forms.iter().enumerate() {
        for k in 0..n {
            a[(j, k)] = f[k].clone();
            a[(j, n + k)] = -f[k].clone();
            a[(r, k)] = a[(r, k)].clone() + &f[k];
            a[(r, n + k)] = a[(r, n + k)].clone() - &f[k];
        }
        a[(j, 2 * n)] = -F::one();
        a[(j, 2 * n + 1)] = F::one();
        a[(j, 2 * n + 2 + j)] = -F::one();
    }
    b[r] = F::one();
    let mut c = vec![F::zero(); cols];
    c[2 * n] = F::one();
    c[2 * n + 1] = -F::one();
    match simplex(&a, &b, &c) {
        LpResult::Optimal { value, x } => {
            let s = (0..n).map(|k| x[k].clone() - &x[n + k]).collect();
            Some((value, s))
        }
        LpResult::Infeasible => None,
        LpResult::Unbounded => unreachable!("slack is bounded by the normalization"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rat;

    fn r(v: i64) -> Rat {
        Rat::int(v)
    }

    #[test]
    fn small_lp() {
        // max x + y, x + 2y = 4, x - y + s = 1
        let a = Matrix::from_rows(3, vec![vec![r(1), r(2), r(0)], vec![r(1), r(-1), r(1)]]);
        match simplex(&a, &[r(4), r(1)], &[r(1), r(1), r(0)]) {
            LpResult::Optimal { value, .. } => assert_eq!(value, r(3)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn infeasible_and_unbounded() {
        let a = Matrix::from_rows(1, vec![vec![r(1)]]);
        assert_eq!(simplex(&a, &[r(-1)], &[r(1)]), LpResult::Infeasible);
        let a = Matrix::from_rows(2, vec![vec![r(1), r(-1)]]);
        assert_eq!(simplex(&a, &[r(0)], &[r(1), r(0)]), LpResult::Unbounded);
    }

    #[test]
    fn slack_detects_open_cone() {
        // s0 > 0, s1 > 0 feasible
        let (t, _) = max_slack(&[vec![r(1), r(0)], vec![r(0), r(1)]]).unwrap();
        assert!(t.signum() > 0);
        // s0 > 0 and -s0 > 0 infeasible
        let res = max_slack(&[vec![r(1), r(0)], vec![r(-1), r(0)], vec![r(0), r(1)]]).unwrap();
        assert!(res.0.signum() <= 0);
    }
}
