//! Exact rational vectors and matrices.
//!
//! Row reduction is the single primitive everything else leans on: the
//! reduced row-echelon form of a rational matrix is unique, so canonical
//! subspace representatives (see [`crate::subspace`]) come for free.

use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A coordinate vector over the rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vector {
    entries: Vec<Scalar>,
}

impl Vector {
    pub fn zero(dim: usize) -> Self {
        Vector {
            entries: vec![Scalar::zero(); dim],
        }
    }

    /// The standard basis vector `e_i`, `i` 1-based.
    pub fn unit(dim: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= dim, "unit index {i} out of 1..={dim}");
        let mut v = Vector::zero(dim);
        v.entries[i - 1] = Scalar::one();
        v
    }

    pub fn from_entries(entries: Vec<Scalar>) -> Self {
        Vector { entries }
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        Vector {
            entries: entries.iter().map(|&n| Scalar::from_int(n)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    /// Coordinate at 1-based basis index `i`.
    pub fn coord1(&self, i: usize) -> &Scalar {
        &self.entries[i - 1]
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Scalar> {
        self.entries.iter()
    }

    /// 1-based indices of the nonzero coordinates.
    pub fn support1(&self) -> Vec<usize> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(j, _)| j + 1)
            .collect()
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        Vector {
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    /// `self += c * other`.
    pub fn axpy(&mut self, c: &Scalar, other: &Vector) {
        assert_eq!(self.dim(), other.dim());
        if c.is_zero() {
            return;
        }
        for (a, b) in self.entries.iter_mut().zip(other.entries.iter()) {
            *a += &(c * b);
        }
    }

    pub fn dot(&self, other: &Vector) -> Scalar {
        assert_eq!(self.dim(), other.dim());
        let mut acc = Scalar::zero();
        for (a, b) in self.entries.iter().zip(other.entries.iter()) {
            acc += &(a * b);
        }
        acc
    }
}

impl Index<usize> for Vector {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.entries[i]
    }
}

impl Add<&Vector> for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim());
        Vector {
            entries: self
                .entries
                .iter()
                .zip(rhs.entries.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub<&Vector> for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim());
        Vector {
            entries: self
                .entries
                .iter()
                .zip(rhs.entries.iter())
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector {
            entries: self.entries.iter().map(|x| -x).collect(),
        }
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (j, x) in self.entries.iter().enumerate() {
            if j > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Vector {
    /// A JSON array of scalar strings.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Vector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Ok(Vector {
            entries: Vec::<Scalar>::deserialize(deserializer)?,
        })
    }
}

/// A dense rational matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vector>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vector::dim);
        assert!(rows.iter().all(|v| v.dim() == c), "ragged rows");
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            data.extend(row.entries);
        }
        Mat { rows: r, cols: c, data }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Mat::from_rows(rows.iter().map(|r| Vector::from_ints(r)).collect())
    }

    /// An `rows x cols` matrix with no rows; `span` of nothing.
    pub fn empty(cols: usize) -> Self {
        Mat { rows: 0, cols, data: Vec::new() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> Vector {
        Vector::from_entries(self.data[r * self.cols..(r + 1) * self.cols].to_vec())
    }

    pub fn row_slice(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for r in 0..self.rows {
            for c in 0..r {
                if self[(r, c)] != self[(c, r)] {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn mul_mat(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Mat::zero(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = &rhs[(k, c)];
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a * b;
                    out[(r, c)] += &prod;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &Vector) -> Vector {
        assert_eq!(self.cols, v.dim(), "matrix-vector shape mismatch");
        let mut out = Vector::zero(self.rows);
        for r in 0..self.rows {
            let mut acc = Scalar::zero();
            for c in 0..self.cols {
                let a = &self[(r, c)];
                if a.is_zero() {
                    continue;
                }
                acc += &(a * &v[c]);
            }
            out.entries[r] = acc;
        }
        out
    }

    pub fn vstack(&self, below: &Mat) -> Mat {
        assert_eq!(self.cols, below.cols, "vstack width mismatch");
        let mut data = self.data.clone();
        data.extend(below.data.iter().cloned());
        Mat {
            rows: self.rows + below.rows,
            cols: self.cols,
            data,
        }
    }

    /// Unique reduced row-echelon form with zero rows trimmed, plus the rank.
    pub fn rref(&self) -> (Mat, usize) {
        let mut m = self.clone();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(r) = (pivot_row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(pivot_row, r);
            let inv = m[(pivot_row, col)].recip().expect("pivot is nonzero");
            if !inv.is_one() {
                for c in col..m.cols {
                    let x = &m[(pivot_row, c)] * &inv;
                    m[(pivot_row, c)] = x;
                }
            }
            for r in 0..m.rows {
                if r == pivot_row || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for c in col..m.cols {
                    let x = &m[(r, c)] - &(&factor * &m[(pivot_row, c)]);
                    m[(r, c)] = x;
                }
            }
            pivot_row += 1;
        }
        let rank = pivot_row;
        m.truncate_rows(rank);
        (m, rank)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Pivot columns of a matrix already in trimmed RREF.
    pub fn pivot_cols(&self) -> Vec<usize> {
        (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .find(|&c| !self[(r, c)].is_zero())
                    .expect("RREF row is nonzero")
            })
            .collect()
    }

    /// Determinant by fraction-tracking Gaussian elimination.
    pub fn det(&self) -> Scalar {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Scalar::one();
        for col in 0..n {
            let Some(r) = (col..n).find(|&r| !m[(r, col)].is_zero()) else {
                return Scalar::zero();
            };
            if r != col {
                m.swap_rows(col, r);
                det = -det;
            }
            let pivot = m[(col, col)].clone();
            det = det * &pivot;
            let inv = pivot.recip().expect("pivot is nonzero");
            for r in col + 1..n {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let factor = &m[(r, col)] * &inv;
                for c in col..n {
                    let x = &m[(r, c)] - &(&factor * &m[(col, c)]);
                    m[(r, c)] = x;
                }
            }
        }
        det
    }

    /// The canonical particular solution of `self * x = b` (free variables
    /// set to zero), if the system is consistent.
    pub fn solve(&self, b: &Vector) -> Result<Vector> {
        if b.dim() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "solve: {} equations vs rhs of length {}",
                self.rows,
                b.dim()
            )));
        }
        let mut aug = Mat::zero(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, self.cols)] = b[r].clone();
        }
        let (red, _) = aug.rref();
        let mut x = Vector::zero(self.cols);
        for r in 0..red.rows() {
            let pivot = (0..=self.cols)
                .find(|&c| !red[(r, c)].is_zero())
                .expect("RREF row is nonzero");
            if pivot == self.cols {
                return Err(Error::NoSolution);
            }
            x.entries[pivot] = red[(r, self.cols)].clone();
        }
        Ok(x)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn truncate_rows(&mut self, rows: usize) {
        self.data.truncate(rows * self.cols);
        self.rows = rows;
    }
}

impl Index<(usize, usize)> for Mat {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }
}

impl Mul<&Mat> for &Mat {
    type Output = Mat;
    fn mul(self, rhs: &Mat) -> Mat {
        self.mul_mat(rhs)
    }
}

impl Serialize for Mat {
    /// A row-major JSON array of arrays of scalar strings.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<&Scalar>> = (0..self.rows)
            .map(|r| self.row_slice(r).iter().collect())
            .collect();
        rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Mat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<Scalar>>::deserialize(deserializer)?;
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(de::Error::custom("ragged matrix rows"));
        }
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            data.extend(row);
        }
        Ok(Mat { rows: r, cols: c, data })
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for r in 0..self.rows {
            write!(f, "  [")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(r, c)])?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}
