use std::ops::{Index, IndexMut};

use super::{Field, LinalgError, Scalar};

/// Fixed-length vector of scalars over one field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector {
    field: Field,
    data: Vec<Scalar>,
}

impl Vector {
    pub fn zeros(field: Field, n: usize) -> Vector {
        Vector { field, data: vec![field.zero(); n] }
    }

    pub fn basis(field: Field, n: usize, i: usize) -> Vector {
        let mut v = Vector::zeros(field, n);
        v.data[i] = field.one();
        v
    }

    pub fn from_vec(field: Field, data: Vec<Scalar>) -> Vector {
        debug_assert!(data.iter().all(|s| s.field() == field));
        Vector { field, data }
    }

    pub fn from_i64(field: Field, data: &[i64]) -> Vector {
        Vector { field, data: data.iter().map(|&v| field.from_i64(v)).collect() }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn as_slice(&self) -> &[Scalar] {
        &self.data
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Scalar> {
        self.data.iter()
    }

    /// Nonzero entries with their indices.
    pub fn support(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.data.iter().enumerate().filter(|(_, s)| !s.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &Vector) -> Vector {
        assert_eq!(self.len(), other.len(), "vector length mismatch");
        Vector { field: self.field, data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        assert_eq!(self.len(), other.len(), "vector length mismatch");
        Vector { field: self.field, data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, s: &Scalar) -> Vector {
        Vector { field: self.field, data: self.data.iter().map(|a| a * s).collect() }
    }

    /// `self += s * other`
    pub fn axpy(&mut self, s: &Scalar, other: &Vector) {
        assert_eq!(self.len(), other.len(), "vector length mismatch");
        if s.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            a.add_product(s, b);
        }
    }

    pub fn dot(&self, other: &Vector) -> Scalar {
        assert_eq!(self.len(), other.len(), "vector length mismatch");
        let mut acc = self.field.zero();
        for (a, b) in self.data.iter().zip(&other.data) {
            acc.add_product(a, b);
        }
        acc
    }

    pub fn into_vec(self) -> Vec<Scalar> {
        self.data
    }
}

impl Index<usize> for Vector {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.data[i]
    }
}

impl IndexMut<usize> for Vector {
    fn index_mut(&mut self, i: usize) -> &mut Scalar {
        &mut self.data[i]
    }
}

/// Dense row-major matrix. A linear map is stored with the images of the
/// source basis as columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_rows(field: Field, cols: usize, rows: &[Vector]) -> Matrix {
        let mut m = Matrix::zeros(field, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "row length mismatch");
            for j in 0..cols {
                m[(i, j)] = r[j].clone();
            }
        }
        m
    }

    pub fn from_columns(field: Field, rows: usize, cols: &[Vector]) -> Matrix {
        let mut m = Matrix::zeros(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for i in 0..rows {
                m[(i, j)] = c[i].clone();
            }
        }
        m
    }

    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vector> = rows.iter().map(|r| Vector::from_i64(field, r)).collect();
        Matrix::from_rows(field, cols, &rows)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> Vector {
        Vector::from_vec(self.field, self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector::from_vec(self.field, (0..self.rows).map(|i| self[(i, j)].clone()).collect())
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    out[(i, j)].add_product(a, b);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix/vector shape mismatch");
        let mut out = Vector::zeros(self.field, self.rows);
        for (k, x) in v.support() {
            for i in 0..self.rows {
                out[i].add_product(&self[(i, k)], x);
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix shape mismatch");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix shape mismatch");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a * s).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    /// Kronecker product, row index `i*r2 + k`, column index `j*c2 + l`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (r2, c2) = (other.rows, other.cols);
        let mut out = Matrix::zeros(self.field, self.rows * r2, self.cols * c2);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..r2 {
                    for l in 0..c2 {
                        out[(i * r2 + k, j * c2 + l)] = a * &other[(k, l)];
                    }
                }
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = self.field.one();
        }
        let (r, pivots) = rref(&aug);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    /// Basis of the null space, one vector per free column (that free variable set to 1).
    pub fn kernel(&self) -> Vec<Vector> {
        let (r, pivots) = rref(self);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = Vector::basis(self.field, self.cols, f);
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -&r[(row, f)];
                }
                v
            })
            .collect()
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "matrix shape mismatch");
        let mut out = Matrix::zeros(self.field, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..other.cols {
                out[(i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        out
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

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

/// Reduced row echelon form and its pivot columns. Zero rows stay at the bottom.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols {
        if row == a.rows {
            break;
        }
        let Some(p) = (row..a.rows).find(|&r| !a[(r, col)].is_zero()) else {
            continue;
        };
        a.swap_rows(row, p);
        let inv = a[(row, col)].inv().unwrap();
        for j in col..a.cols {
            let v = &a[(row, j)] * &inv;
            a[(row, j)] = v;
        }
        for r in 0..a.rows {
            if r == row || a[(r, col)].is_zero() {
                continue;
            }
            let factor = a[(r, col)].clone();
            for j in col..a.cols {
                if a[(row, j)].is_zero() {
                    continue;
                }
                let v = &factor * &a[(row, j)];
                a[(r, j)] -= &v;
            }
        }
        pivots.push(col);
        row += 1;
    }
    (a, pivots)
}

/// Canonical solution of `A x = b`: free variables are zero. `None` if inconsistent.
pub fn solve(a: &Matrix, b: &Vector) -> Result<Option<Vector>, LinalgError> {
    if a.rows != b.len() {
        return Err(LinalgError::Shape(format!(
            "system has {} rows but right-hand side has length {}",
            a.rows,
            b.len()
        )));
    }
    let aug = a.hstack(&Matrix::from_columns(a.field, a.rows, std::slice::from_ref(b)));
    let (r, pivots) = rref(&aug);
    if pivots.last() == Some(&a.cols) {
        return Ok(None);
    }
    let mut x = Vector::zeros(a.field, a.cols);
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = r[(row, a.cols)].clone();
    }
    Ok(Some(x))
}

/// RREF basis (as rows) of the span of `vectors` in a space of dimension `n`.
pub fn subspace_basis(field: Field, n: usize, vectors: &[Vector]) -> Matrix {
    let m = Matrix::from_rows(field, n, vectors);
    let (r, pivots) = rref(&m);
    let rows: Vec<Vector> = (0..pivots.len()).map(|i| r.row(i)).collect();
    Matrix::from_rows(field, n, &rows)
}

/// Whether `v` lies in the row span of an RREF basis with the given pivots.
pub fn in_row_span(basis: &Matrix, pivots: &[usize], v: &Vector) -> bool {
    let mut rest = v.clone();
    for (row, &p) in pivots.iter().enumerate() {
        if rest[p].is_zero() {
            continue;
        }
        let c = -&rest[p];
        rest.axpy(&c, &basis.row(row));
    }
    rest.is_zero()
}


/// Row echelon basis grown one vector at a time.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    width: usize,
    rows: std::collections::BTreeMap<usize, Vector>,
}

impl Echelon {
    pub fn new(field: Field, width: usize) -> Echelon {
        Echelon { field, width, rows: Default::default() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.width
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vector) -> bool {
        assert_eq!(v.len(), self.width, "echelon row has wrong width");
        debug_assert_eq!(v.field(), self.field);
        let mut start = 0;
        loop {
            let Some(p) = (start..self.width).find(|&i| !v[i].is_zero()) else {
                return false;
            };
            match self.rows.get(&p) {
                Some(row) => {
                    let c = -&v[p];
                    v.axpy(&c, row);
                    start = p + 1;
                }
                None => {
                    let inv = v[p].inv().expect("nonzero pivot");
                    self.rows.insert(p, v.scale(&inv));
                    return true;
                }
            }
        }
    }
}
