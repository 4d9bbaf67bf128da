//! Canonical subspaces of rational coordinate space.
//!
//! A [`Subspace`] stores the unique trimmed RREF basis of its row span, so
//! equal sets have bit-identical representations and `==` is set equality.
//! That canonicity is what makes golden tests and deterministic pipelines
//! possible downstream.

use crate::error::{Error, Result};
use crate::linalg::{Mat, Vector};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Mat,
}

impl Subspace {
    /// The zero subspace of `Q^d`.
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Mat::empty(ambient_dim),
        }
    }

    /// All of `Q^d`.
    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Mat::identity(ambient_dim),
        }
    }

    pub fn span(vectors: &[Vector]) -> Result<Self> {
        let Some(first) = vectors.first() else {
            return Err(Error::DimensionMismatch(
                "span of an empty list has no ambient dimension; use Subspace::zero".into(),
            ));
        };
        let d = first.dim();
        if vectors.iter().any(|v| v.dim() != d) {
            return Err(Error::DimensionMismatch("span of mixed-dimension vectors".into()));
        }
        Ok(Self::from_rows(Mat::from_rows(vectors.to_vec())))
    }

    /// Canonicalizes the row span of `rows`.
    pub fn from_rows(rows: Mat) -> Self {
        let ambient_dim = rows.cols();
        let (basis, _) = rows.rref();
        Subspace { ambient_dim, basis }
    }

    /// Span of the standard basis vectors at the given 1-based coordinates.
    pub fn coordinate_span(ambient_dim: usize, coords1: &[usize]) -> Self {
        if coords1.is_empty() {
            return Subspace::zero(ambient_dim);
        }
        let rows: Vec<Vector> = coords1
            .iter()
            .map(|&i| Vector::unit(ambient_dim, i))
            .collect();
        Subspace::from_rows(Mat::from_rows(rows))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// The canonical RREF basis, one vector per row.
    pub fn basis_rows(&self) -> &Mat {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.row_vectors()
    }

    pub fn contains(&self, v: &Vector) -> Result<bool> {
        self.check_ambient(v.dim())?;
        Ok(self.reduce(v).is_zero())
    }

    /// Residue of `v` after eliminating the pivots of this subspace; zero
    /// iff `v` lies in the subspace.
    pub fn reduce(&self, v: &Vector) -> Vector {
        let mut w = v.clone();
        for (r, &p) in self.basis.pivot_cols().iter().enumerate() {
            let c = w[p].clone();
            if c.is_zero() {
                continue;
            }
            w.axpy(&-c, &self.basis.row(r));
        }
        w
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other.ambient_dim)?;
        for r in 0..other.dim() {
            if !self.contains(&other.basis.row(r))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient_dim)?;
        Ok(Subspace::from_rows(self.basis.vstack(&other.basis)))
    }

    /// Intersection via the null space of the stacked dual systems: a vector
    /// lies in a row span iff it is annihilated by the span's null space.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient_dim)?;
        let dual_a = nullspace(&self.basis);
        let dual_b = nullspace(&other.basis);
        let stacked = dual_a.basis.vstack(&dual_b.basis);
        Ok(nullspace(&stacked))
    }

    /// The coordinate complement: standard basis vectors at the non-pivot
    /// columns. Deterministic, and a true complement of `self`.
    pub fn complement(&self) -> Subspace {
        let free: Vec<usize> = self.free_cols1();
        Subspace::coordinate_span(self.ambient_dim, &free)
    }

    /// 1-based pivot columns of the canonical basis.
    pub fn pivot_cols1(&self) -> Vec<usize> {
        self.basis.pivot_cols().iter().map(|&c| c + 1).collect()
    }

    /// 1-based non-pivot columns, in increasing order.
    pub fn free_cols1(&self) -> Vec<usize> {
        let pivots = self.basis.pivot_cols();
        (0..self.ambient_dim)
            .filter(|c| !pivots.contains(c))
            .map(|c| c + 1)
            .collect()
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies here.
    ///
    /// For an RREF basis the coordinates can be read off at the pivot
    /// columns; membership is then confirmed exactly.
    pub fn coordinates(&self, v: &Vector) -> Result<Vector> {
        self.check_ambient(v.dim())?;
        let coords: Vec<Scalar> = self
            .basis
            .pivot_cols()
            .iter()
            .map(|&p| v[p].clone())
            .collect();
        let coords = Vector::from_entries(coords);
        let mut recon = Vector::zero(self.ambient_dim);
        for (r, c) in coords.iter().enumerate() {
            recon.axpy(c, &self.basis.row(r));
        }
        if &recon != v {
            return Err(Error::NoSolution);
        }
        Ok(coords)
    }

    fn check_ambient(&self, other: usize) -> Result<()> {
        if self.ambient_dim != other {
            return Err(Error::DimensionMismatch(format!(
                "ambient dimension {} vs {}",
                self.ambient_dim, other
            )));
        }
        Ok(())
    }
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace(dim {} of Q^{}) {:?}", self.dim(), self.ambient_dim, self.basis)
    }
}

/// `{ v : m v = 0 }`, canonical.
pub fn nullspace(m: &Mat) -> Subspace {
    let (red, rank) = m.rref();
    let cols = m.cols();
    let pivots = red.pivot_cols();
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut rows = Vec::with_capacity(cols - rank);
    for &f in &free {
        let mut entries = vec![Scalar::zero(); cols];
        entries[f] = Scalar::one();
        for (r, &p) in pivots.iter().enumerate() {
            entries[p] = -&red[(r, f)];
        }
        rows.push(Vector::from_entries(entries));
    }
    if rows.is_empty() {
        return Subspace::zero(cols);
    }
    Subspace::from_rows(Mat::from_rows(rows))
}
