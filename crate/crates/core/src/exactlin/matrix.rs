use super::rational::{qi, Rational};
use num_traits::{One, Zero};
use std::fmt;

/// Dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Rational>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length");
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| qi(x)).collect()).collect())
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_cols(rows: usize, cols: &[Vec<Rational>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length");
            for (i, x) in c.iter().enumerate() {
                if !x.is_zero() {
                    m.data[i * m.cols + j] = x.clone();
                }
            }
        }
        m
    }

    pub fn column_vector(v: &[Rational]) -> Self {
        Self::from_vec(v.len(), 1, v.to_vec())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[Rational] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Rational) {
        self.data[i * self.cols + j] = x;
    }

    pub fn add_at(&mut self, i: usize, j: usize, x: &Rational) {
        if !x.is_zero() {
            self.data[i * self.cols + j] += x;
        }
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Rational>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let x = self.get(i, j);
                if !x.is_zero() {
                    t.data[j * self.rows + i] = x.clone();
                }
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                let brow = other.row(l);
                for (j, b) in brow.iter().enumerate() {
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector product");
        let nz: Vec<usize> = (0..v.len()).filter(|&j| !v[j].is_zero()).collect();
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let mut acc = Rational::zero();
                for &j in &nz {
                    if !row[j].is_zero() {
                        acc += &row[j] * &v[j];
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        let data = self.data.iter().map(|a| a * s).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Matrix {
        let data = self.data.iter().map(|a| -a).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.extend_from_slice(other.row(i));
        }
        Matrix { rows: self.rows, cols, data }
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(self.rows, idx.len());
        for i in 0..self.rows {
            for (k, &j) in idx.iter().enumerate() {
                m.data[i * idx.len() + k] = self.get(i, j).clone();
            }
        }
        m
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        Matrix { rows: idx.len(), cols: self.cols, data }
    }

    pub fn row_range(&self, lo: usize, hi: usize) -> Matrix {
        self.select_rows(&(lo..hi).collect::<Vec<_>>())
    }

    /// Gauss-Jordan elimination restricted to pivots among the first `limit` columns.
    fn eliminate(&self, limit: usize) -> (Vec<Vec<Rational>>, Vec<usize>) {
        let mut rows: Vec<Vec<Rational>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..limit.min(self.cols) {
            if r == rows.len() {
                break;
            }
            let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            let inv = rows[r][c].recip();
            let nz: Vec<usize> = (c..self.cols).filter(|&j| !rows[r][j].is_zero()).collect();
            for &j in &nz {
                rows[r][j] *= &inv;
            }
            let pivot_row: Vec<(usize, Rational)> =
                nz.iter().map(|&j| (j, rows[r][j].clone())).collect();
            for i in 0..rows.len() {
                if i == r || rows[i][c].is_zero() {
                    continue;
                }
                let f = rows[i][c].clone();
                for (j, x) in &pivot_row {
                    let d = &f * x;
                    rows[i][*j] -= d;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (rows, pivots)
    }

    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let (rows, piv) = self.eliminate(self.cols);
        let data = rows.into_iter().flatten().collect();
        (Matrix { rows: self.rows, cols: self.cols, data }, piv)
    }

    pub fn rank(&self) -> usize {
        self.eliminate(self.cols).1.len()
    }

    /// Columns spanning the null space; one basis vector per free column.
    pub fn kernel(&self) -> Matrix {
        let (rows, piv) = self.eliminate(self.cols);
        let free: Vec<usize> = (0..self.cols).filter(|j| !piv.contains(j)).collect();
        let mut k = Matrix::zeros(self.cols, free.len());
        for (t, &f) in free.iter().enumerate() {
            k.set(f, t, Rational::one());
            for (r, &p) in piv.iter().enumerate() {
                let x = &rows[r][f];
                if !x.is_zero() {
                    k.set(p, t, -x);
                }
            }
        }
        k
    }

    /// The pivot columns of `self`, which form a basis of the column space.
    pub fn image(&self) -> Matrix {
        let piv = self.eliminate(self.cols).1;
        self.select_cols(&piv)
    }

    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        self.solve_many(&Matrix::column_vector(b)).pop().unwrap()
    }

    /// Solves `self x = b_j` for every column `b_j` of `rhs`.
    pub fn solve_many(&self, rhs: &Matrix) -> Vec<Option<Vec<Rational>>> {
        assert_eq!(self.rows, rhs.rows, "right-hand side length");
        let aug = self.hstack(rhs);
        let (rows, piv) = aug.eliminate(self.cols);
        let rank = piv.len();
        (0..rhs.cols)
            .map(|t| {
                let c = self.cols + t;
                if rows[rank..].iter().any(|row| !row[c].is_zero()) {
                    return None;
                }
                let mut x = vec![Rational::zero(); self.cols];
                for (r, &p) in piv.iter().enumerate() {
                    x[p] = rows[r][c].clone();
                }
                Some(x)
            })
            .collect()
    }

    /// Solutions of `self X = rhs` as a matrix; `None` if some column has no solution.
    pub fn solve_all(&self, rhs: &Matrix) -> Option<Matrix> {
        let sols = self.solve_many(rhs);
        let mut out = Matrix::zeros(self.cols, rhs.cols);
        for (t, s) in sols.into_iter().enumerate() {
            let s = s?;
            for (i, x) in s.into_iter().enumerate() {
                out.set(i, t, x);
            }
        }
        Some(out)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        if self.rank() != self.rows {
            return None;
        }
        self.solve_all(&Matrix::identity(self.rows))
    }
}
