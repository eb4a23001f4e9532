use std::fmt;

use num_traits::{One, Zero};

use super::scalar::{format_scalar, int, Scalar};
use super::vector::Vector;
use crate::error::Error;

/// Linear map between coordinate spaces, stored as a dense row-major matrix.
/// Column `j` holds the image of the source basis vector `e_j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearMap {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Result of a successful solve: one exact solution plus a basis of the
/// kernel, so every solution is `particular + span(kernel)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub particular: Vector,
    pub kernel: Vec<Vector>,
}

impl LinearMap {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        LinearMap { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one();
        }
        m
    }

    pub fn diagonal(entries: &[Scalar]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.data[i * n + i] = e.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, Error> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged matrix rows".into()));
        }
        Ok(LinearMap { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
            .expect("rectangular literal")
    }

    /// Builds the map whose `j`-th column is `cols[j]`.
    pub fn from_columns(rows: usize, cols: &[Vector]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.dim(), rows, "column length mismatch");
            for i in 0..rows {
                m.data[i * m.cols + j] = c[i].clone();
            }
        }
        m
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

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        assert_eq!(v.dim(), self.cols, "matrix/vector dimension mismatch");
        let mut out = Vector::zeros(self.rows);
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for i in 0..self.rows {
                let a = &self.data[i * self.cols + j];
                if !a.is_zero() {
                    out[i] += a * x;
                }
            }
        }
        out
    }

    pub fn try_apply(&self, v: &Vector) -> Result<Vector, Error> {
        if v.dim() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "map expects a vector of length {}, got {}",
                self.cols,
                v.dim()
            )));
        }
        Ok(self.apply(v))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> LinearMap {
        assert_eq!(self.cols, other.rows, "composition dimension mismatch");
        let mut out = LinearMap::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> LinearMap {
        let mut out = LinearMap::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> LinearMap {
        LinearMap { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn add(&self, other: &LinearMap) -> LinearMap {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "sum of maps of different shape");
        LinearMap {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &LinearMap) -> LinearMap {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn neg(&self) -> LinearMap {
        self.scale(&-Scalar::one())
    }

    pub fn pow(&self, e: u32) -> LinearMap {
        assert!(self.is_square());
        let mut r = LinearMap::identity(self.rows);
        for _ in 0..e {
            r = r.compose(self);
        }
        r
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &LinearMap) -> LinearMap {
        let mut out = LinearMap::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    /// Kronecker product; basis `e_i ⊗ f_j` ordered with `i` major.
    pub fn kronecker(&self, other: &LinearMap) -> LinearMap {
        let mut out = LinearMap::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.set(i * other.rows + k, j * other.cols + l, a * other.get(k, l));
                    }
                }
            }
        }
        out
    }

    /// Reduced row echelon form together with the pivot columns.
    fn rref(&self) -> (LinearMap, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).recip();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = m.get(r, j) * &f;
                    if !v.is_zero() {
                        m.data[i * m.cols + j] -= v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space, one vector per free column, each scaled so
    /// its first nonzero coordinate is positive.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let (red, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = Vector::zeros(self.cols);
                v[f] = Scalar::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -red.get(r, f).clone();
                }
                match v.iter().find(|x| !x.is_zero()) {
                    Some(lead) if lead < &Scalar::zero() => -v,
                    _ => v,
                }
            })
            .collect()
    }

    /// Solves `self · x = b`. `Ok(None)` iff `b` is outside the image.
    pub fn solve(&self, b: &Vector) -> Result<Option<Solution>, Error> {
        if b.dim() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side has length {}, matrix has {} rows",
                b.dim(),
                self.rows
            )));
        }
        let mut aug = LinearMap::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (red, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = Vector::zeros(self.cols);
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = red.get(r, self.cols).clone();
        }
        Ok(Some(Solution { particular: x, kernel: self.kernel_basis() }))
    }

    pub fn determinant(&self) -> Scalar {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Scalar::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Scalar::zero();
            };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let piv = m.get(c, c).clone();
            det *= &piv;
            for i in c + 1..n {
                let f = m.get(i, c) / &piv;
                if f.is_zero() {
                    continue;
                }
                for j in c..n {
                    let v = m.get(c, j) * &f;
                    m.data[i * n + j] -= v;
                }
            }
        }
        det
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && !self.determinant().is_zero()
    }

    pub fn inverse(&self) -> Option<LinearMap> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = LinearMap::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Scalar::one());
        }
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = LinearMap::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, red.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    /// Inverse, or a precondition error naming the map.
    pub fn inverse_named(&self, name: &str) -> Result<LinearMap, Error> {
        self.inverse().ok_or_else(|| Error::NotInvertible(name.to_string()))
    }
}

impl fmt::Debug for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(format_scalar).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}
