use super::field::Field;
use super::rat::Rat;
use std::fmt;

/// Dense row-major matrix over an exact field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F: Field = Rat> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

pub type RatMatrix = Matrix<Rat>;

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }
    pub fn from_rows(cols: usize, rows: Vec<Vec<F>>) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in &rows {
            assert_eq!(r.len(), cols, "ragged matrix");
            data.extend(r.iter().cloned());
        }
        Matrix { rows: rows.len(), cols, data }
    }
    pub fn nrows(&self) -> usize {
        self.rows
    }
    pub fn ncols(&self) -> usize {
        self.cols
    }
    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
    pub fn row_vecs(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }
    pub fn push_row(&mut self, r: Vec<F>) {
        assert_eq!(r.len(), self.cols);
        self.data.extend(r);
        self.rows += 1;
    }
    pub fn stack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }
    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }
    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows);
        let mut m = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let v = m[(i, j)].clone() + &(self[(i, k)].clone() * &o[(k, j)]);
                    m[(i, j)] = v;
                }
            }
        }
        m
    }
    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| dot(self.row(i), v))
            .collect()
    }
    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Reduced row echelon form (zero rows dropped) and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else { continue };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv();
            for j in c..m.cols {
                let v = m[(r, j)].clone() * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone();
                    for j in c..m.cols {
                        let v = m[(i, j)].clone() - &(f.clone() * &m[(r, j)]);
                        m[(i, j)] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.data.truncate(r * m.cols);
        m.rows = r;
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel in canonical form: the rows of the RREF of the kernel.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let (r, piv) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !piv.contains(c)).collect();
        let mut basis = Vec::new();
        for &f in &free {
            let mut v = vec![F::zero(); self.cols];
            v[f] = F::one();
            for (i, &p) in piv.iter().enumerate() {
                v[p] = -r[(i, f)].clone();
            }
            basis.push(v);
        }
        if basis.is_empty() {
            return basis;
        }
        Matrix::from_rows(self.cols, basis).rref().0.row_vecs()
    }

    /// Solves `self * x = b`; returns one solution if consistent.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let (r, piv) = aug.rref();
        if piv.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (i, &p) in piv.iter().enumerate() {
            x[p] = r[(i, self.cols)].clone();
        }
        Some(x)
    }

    pub fn det(&self) -> F {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        let n = self.rows;
        let mut det = F::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else { return F::zero() };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            det = det * &m[(c, c)];
            let inv = m[(c, c)].inv();
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone() * &inv;
                for j in c..n {
                    let v = m[(i, j)].clone() - &(f.clone() * &m[(c, j)]);
                    m[(i, j)] = v;
                }
            }
        }
        det
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

pub fn dot<F: Field>(a: &[F], b: &[F]) -> F {
    a.iter().zip(b).fold(F::zero(), |acc, (x, y)| if x.is_zero() || y.is_zero() { acc } else { acc + &(x.clone() * y) })
}

/// Row space basis of a list of vectors, in RREF.
pub fn row_space<F: Field>(cols: usize, rows: Vec<Vec<F>>) -> Vec<Vec<F>> {
    if rows.is_empty() {
        return vec![];
    }
    Matrix::from_rows(cols, rows).rref().0.row_vecs()
}

impl<F: Field> std::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}
impl<F: Field> std::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let r: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", r.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: Vec<Vec<i64>>) -> RatMatrix {
        let c = rows[0].len();
        Matrix::from_rows(c, rows.into_iter().map(|r| r.into_iter().map(Rat::int).collect()).collect())
    }

    #[test]
    fn rref_small() {
        let (r, p) = m(vec![vec![1, 2], vec![2, 4]]).rref();
        assert_eq!(p, vec![0]);
        assert_eq!(r, m(vec![vec![1, 2]]));
        let (r, p) = RatMatrix::identity(2).rref();
        assert_eq!(p, vec![0, 1]);
        assert_eq!(r, RatMatrix::identity(2));
    }

    #[test]
    fn kernel() {
        assert!(RatMatrix::identity(3).nullspace().is_empty());
        assert_eq!(RatMatrix::zeros(1, 3).nullspace().len(), 3);
        let k = m(vec![vec![1, 1, 1]]).nullspace();
        assert_eq!(k.len(), 2);
        assert_eq!(k[0][0], Rat::one());
    }

    #[test]
    fn determinant() {
        assert_eq!(m(vec![vec![2, 1], vec![7, 4]]).det(), Rat::one());
        assert_eq!(m(vec![vec![0, 1], vec![1, 0]]).det(), Rat::int(-1));
    }
}
