//! Dense matrices over exact scalars.
//!
//! Classification instances are tiny (dimension at most a few dozen), so
//! everything is dense and row-major. Dimension mismatches are programming
//! errors and panic; numerical questions (symmetry, membership, solvability)
//! are reported through `Result` or `Option` by the callers in `linalg`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::Scalar;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        assert!(!rows.is_empty(), "empty matrix");
        let cols = rows[0].len();
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let r = rows.len();
        Matrix { rows: r, cols, data: rows.into_iter().flatten().collect() }
    }

    /// Square matrix from an integer table, row by row.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Scalar::from_int(v)).collect())
                .collect(),
        )
    }

    pub fn diag(entries: &[Scalar]) -> Self {
        let n = entries.len();
        let mut m = Matrix::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    pub fn column(entries: Vec<Scalar>) -> Self {
        let rows = entries.len();
        Matrix { rows, cols: 1, data: entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_real(&self) -> bool {
        self.data.iter().all(Scalar::is_real)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn conj_transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r).conj())
    }

    pub fn conj(&self) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |r, c| self.at(r, c).conj())
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |r, c| self.at(r, c) * s)
    }

    pub fn trace(&self) -> Scalar {
        assert!(self.is_square());
        let mut t = Scalar::zero();
        for i in 0..self.rows {
            t = &t + self.at(i, i);
        }
        t
    }

    /// `a*b - b*a`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self * other - other * self
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn is_skew(&self) -> bool {
        self.is_square() && *self == -&self.transpose()
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square() && *self == self.conj_transpose()
    }

    pub fn is_skew_hermitian(&self) -> bool {
        self.is_square() && *self == -&self.conj_transpose()
    }

    /// Kronecker product; row/column index pairs are taken row-major, so
    /// `(a ⊗ b)[(i,j),(k,l)] = a[i,k] * b[j,l]`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (m, n) = (self.rows, self.cols);
        let (p, q) = (other.rows, other.cols);
        Matrix::from_fn(m * p, n * q, |r, c| {
            let (i, j) = (r / p, r % p);
            let (k, l) = (c / q, c % q);
            self.at(i, k) * other.at(j, l)
        })
    }

    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(r, c, self.at(r, c).clone());
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                m.set(self.rows + r, self.cols + c, other.at(r, c).clone());
            }
        }
        m
    }

    /// Stacks blocks vertically; all blocks must share a column count.
    pub fn vstack(blocks: &[&Matrix]) -> Matrix {
        assert!(!blocks.is_empty());
        let cols = blocks[0].cols;
        assert!(blocks.iter().all(|b| b.cols == cols));
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for b in blocks {
            data.extend(b.data.iter().cloned());
        }
        Matrix { rows, cols, data }
    }

    /// Columns `idx` gathered into a new matrix.
    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.rows, idx.len(), |r, c| self.at(r, idx[c]).clone())
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        Matrix::from_fn(rows.len(), cols.len(), |r, c| self.at(rows[r], cols[c]).clone())
    }

    pub fn column_vec(&self, c: usize) -> Matrix {
        self.select_columns(&[c])
    }

    /// Flattens row-major into a column vector.
    pub fn vectorize(&self) -> Matrix {
        Matrix::column(self.data.clone())
    }

    pub fn entries(&self) -> impl Iterator<Item = &Scalar> {
        self.data.iter()
    }

    pub fn pow(&self, k: usize) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// `row[target] += f * row[source]`, skipping zero factors.
    pub fn row_add(&mut self, target: usize, source: usize, f: &Scalar) {
        if f.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let v = self.at(source, c);
            if v.is_zero() {
                continue;
            }
            let sum = self.at(target, c) + &(f * v);
            self.set(target, c, sum);
        }
    }

    /// `col[target] += f * col[source]`, skipping zero factors.
    pub fn col_add(&mut self, target: usize, source: usize, f: &Scalar) {
        if f.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let v = self.at(r, source);
            if v.is_zero() {
                continue;
            }
            let sum = self.at(r, target) + &(f * v);
            self.set(r, target, sum);
        }
    }

    pub fn scale_row(&mut self, r: usize, f: &Scalar) {
        for c in 0..self.cols {
            let v = self.at(r, c) * f;
            self.set(r, c, v);
        }
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |r, c| self.at(r, c) + rhs.at(r, c))
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |r, c| self.at(r, c) - rhs.at(r, c))
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |r, c| -self.at(r, c))
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.at(r, c) + &(a * b);
                    out.set(r, c, v);
                }
            }
        }
        out
    }
}

macro_rules! forward_owned_matrix {
    ($trait:ident, $method:ident) => {
        impl $trait for Matrix {
            type Output = Matrix;
            fn $method(self, rhs: Matrix) -> Matrix {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Matrix> for Matrix {
            type Output = Matrix;
            fn $method(self, rhs: &Matrix) -> Matrix {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_matrix!(Add, add);
forward_owned_matrix!(Sub, sub);
forward_owned_matrix!(Mul, mul);

impl Neg for Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        -&self
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.at(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
