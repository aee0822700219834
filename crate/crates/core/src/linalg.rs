//! Dense matrices over an exact [`Field`] and Gaussian elimination.

use rand::Rng;

use crate::field::{Field, PrimeField};

/// A dense row-major matrix. Zero-sized shapes (`0 x n`, `n x 0`) are legal
/// and stand for the unique map to or from the zero space.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<E>) -> Self {
        assert_eq!(rows * cols, data.len(), "matrix data does not match shape");
        Matrix { rows, cols, data }
    }

    pub fn filled(rows: usize, cols: usize, value: E) -> Self {
        Matrix { rows, cols, data: vec![value; rows * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, r: usize, c: usize) -> &E {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: E) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[E] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    /// Rows `range` of `self`.
    pub fn row_block(&self, start: usize, end: usize) -> Self {
        Matrix { rows: end - start, cols: self.cols, data: self.data[start * self.cols..end * self.cols].to_vec() }
    }

    /// Columns `start..end` of `self`.
    pub fn col_block(&self, start: usize, end: usize) -> Self {
        let mut data = Vec::with_capacity(self.rows * (end - start));
        for r in 0..self.rows {
            data.extend_from_slice(&self.row(r)[start..end]);
        }
        Matrix { rows: self.rows, cols: end - start, data }
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let mut data = Vec::with_capacity(self.data.len() + other.data.len());
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(other.row(r));
        }
        Matrix { rows: self.rows, cols: self.cols + other.cols, data }
    }

    /// `[self ; other]`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn map<T: Clone>(&self, f: impl Fn(&E) -> T) -> Matrix<T> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }
}

pub fn zeros<F: Field>(field: &F, rows: usize, cols: usize) -> Matrix<F::Elem> {
    Matrix::filled(rows, cols, field.zero())
}

pub fn identity<F: Field>(field: &F, n: usize) -> Matrix<F::Elem> {
    let mut m = zeros(field, n, n);
    for i in 0..n {
        m.set(i, i, field.one());
    }
    m
}

pub fn from_i64<F: Field>(field: &F, rows: usize, cols: usize, entries: &[i64]) -> Matrix<F::Elem> {
    Matrix::from_vec(rows, cols, entries.iter().map(|&v| field.from_i64(v)).collect())
}

pub fn mul<F: Field>(field: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    assert_eq!(a.cols, b.rows, "matrix product shape mismatch");
    let mut out = zeros(field, a.rows, b.cols);
    for i in 0..a.rows {
        for k in 0..a.cols {
            let aik = a.get(i, k);
            if field.is_zero(aik) {
                continue;
            }
            for j in 0..b.cols {
                let v = field.add(out.get(i, j), &field.mul(aik, b.get(k, j)));
                out.set(i, j, v);
            }
        }
    }
    out
}

pub fn add<F: Field>(field: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    assert_eq!(a.shape(), b.shape(), "matrix sum shape mismatch");
    let data = a.data.iter().zip(&b.data).map(|(x, y)| field.add(x, y)).collect();
    Matrix { rows: a.rows, cols: a.cols, data }
}

pub fn sub<F: Field>(field: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    assert_eq!(a.shape(), b.shape(), "matrix difference shape mismatch");
    let data = a.data.iter().zip(&b.data).map(|(x, y)| field.sub(x, y)).collect();
    Matrix { rows: a.rows, cols: a.cols, data }
}

pub fn scale<F: Field>(field: &F, s: &F::Elem, a: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    a.map(|x| field.mul(s, x))
}

pub fn is_zero_matrix<F: Field>(field: &F, a: &Matrix<F::Elem>) -> bool {
    a.data.iter().all(|x| field.is_zero(x))
}

/// Block-diagonal sum `a ⊕ b`.
pub fn direct_sum<F: Field>(field: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    let top = a.hstack(&zeros(field, a.rows, b.cols));
    let bottom = zeros(field, b.rows, a.cols).hstack(b);
    top.vstack(&bottom)
}

/// Reduced row echelon form. Returns the reduced matrix and its pivot columns.
pub fn rref<F: Field>(field: &F, a: &Matrix<F::Elem>) -> (Matrix<F::Elem>, Vec<usize>) {
    let mut m = a.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols {
        if row == m.rows {
            break;
        }
        let Some(p) = (row..m.rows).find(|&r| !field.is_zero(m.get(r, col))) else {
            continue;
        };
        if p != row {
            for c in 0..m.cols {
                let tmp = m.get(p, c).clone();
                m.set(p, c, m.get(row, c).clone());
                m.set(row, c, tmp);
            }
        }
        let inv = field.inv(m.get(row, col)).expect("pivot is nonzero");
        for c in col..m.cols {
            let v = field.mul(&inv, m.get(row, c));
            m.set(row, c, v);
        }
        for r in 0..m.rows {
            if r == row || field.is_zero(m.get(r, col)) {
                continue;
            }
            let factor = m.get(r, col).clone();
            for c in col..m.cols {
                let v = field.sub(m.get(r, c), &field.mul(&factor, m.get(row, c)));
                m.set(r, c, v);
            }
        }
        pivots.push(col);
        row += 1;
    }
    (m, pivots)
}

pub fn rank<F: Field>(field: &F, a: &Matrix<F::Elem>) -> usize {
    if a.rows == 0 || a.cols == 0 {
        return 0;
    }
    rref(field, a).1.len()
}

/// A basis of the right kernel `{x : a x = 0}`, one column vector per entry.
pub fn kernel_basis<F: Field>(field: &F, a: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let (r, pivots) = rref(field, a);
    let free: Vec<usize> = (0..a.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![field.zero(); a.cols];
            v[fc] = field.one();
            for (pr, &pc) in pivots.iter().enumerate() {
                v[pc] = field.neg(r.get(pr, fc));
            }
            v
        })
        .collect()
}

pub fn nullity<F: Field>(field: &F, a: &Matrix<F::Elem>) -> usize {
    a.cols - rank(field, a)
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse<F: Field>(field: &F, a: &Matrix<F::Elem>) -> Option<Matrix<F::Elem>> {
    assert_eq!(a.rows, a.cols, "inverse of a non-square matrix");
    let n = a.rows;
    if n == 0 {
        return Some(a.clone());
    }
    let (r, pivots) = rref(field, &a.hstack(&identity(field, n)));
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(r.col_block(n, 2 * n))
}

pub fn random_matrix<R: Rng>(field: &PrimeField, rows: usize, cols: usize, rng: &mut R) -> Matrix<u64> {
    let p = field.modulus();
    Matrix::from_vec(rows, cols, (0..rows * cols).map(|_| rng.gen_range(0..p)).collect())
}

/// A uniformly random invertible matrix, by rejection sampling.
pub fn random_invertible<R: Rng>(field: &PrimeField, n: usize, rng: &mut R) -> (Matrix<u64>, Matrix<u64>) {
    loop {
        let m = random_matrix(field, n, n, rng);
        if let Some(inv) = inverse(field, &m) {
            return (m, inv);
        }
    }
}
