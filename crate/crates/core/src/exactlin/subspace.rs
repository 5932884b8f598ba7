//! Subspaces in canonical reduced row echelon form.
//!
//! Two [`Subspace`] values compare equal exactly when they span the same set,
//! which lets ideals, derived terms and spins be compared as plain data.

use num::Zero;

use super::matrix::Matrix;
use super::rational::{axpy, is_zero_vector, zero_vector, Rational, Vector};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vector>,
}

/// Incrementally grown span kept in fully reduced echelon form.
///
/// Every stored row has a leading 1 at its pivot and zeros at the pivots of all
/// other rows, so reducing a vector is one pass over the rows in any order.
#[derive(Clone, Debug)]
pub struct SpanBuilder {
    ambient_dim: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl SpanBuilder {
    pub fn new(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_subspace(s: &Subspace) -> Self {
        Self {
            ambient_dim: s.ambient_dim,
            pivots: s.pivots(),
            rows: s.basis.clone(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Remainder of `v` after eliminating every stored pivot.
    pub fn reduce(&self, v: &[Rational]) -> Vector {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let c = -v[p].clone();
                axpy(&mut v, &c, row);
            }
        }
        v
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        is_zero_vector(&self.reduce(v))
    }

    /// Adds `v` to the span. Returns `false` when it was already contained.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient_dim, "vector length must match ambient dimension");
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].recip();
        for x in r.iter_mut() {
            *x *= &inv;
        }
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = -row[p].clone();
                axpy(row, &c, &r);
            }
        }
        self.rows.push(r);
        self.pivots.push(p);
        true
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn into_subspace(self) -> Subspace {
        let mut pairs: Vec<(usize, Vector)> = self.pivots.into_iter().zip(self.rows).collect();
        pairs.sort_by_key(|(p, _)| *p);
        Subspace {
            ambient_dim: self.ambient_dim,
            basis: pairs.into_iter().map(|(_, r)| r).collect(),
        }
    }
}

impl Subspace {
    /// Canonical reduced row echelon basis of the span of `vectors`.
    pub fn canonicalize(vectors: &[Vector], ambient_dim: usize) -> Result<Self> {
        let mut b = SpanBuilder::new(ambient_dim);
        for v in vectors {
            if v.len() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    found: v.len(),
                });
            }
            b.insert(v);
        }
        Ok(b.into_subspace())
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim)
            .map(|i| super::rational::unit_vector(ambient_dim, i))
            .collect();
        Self { ambient_dim, basis }
    }

    /// Span of the listed standard basis vectors.
    pub fn coordinate(ambient_dim: usize, indices: &[usize]) -> Result<Self> {
        let vectors: Vec<Vector> = indices
            .iter()
            .map(|&i| {
                if i >= ambient_dim {
                    Err(Error::IndexOutOfRange {
                        locus: "coordinate subspace".into(),
                        index: i,
                        dim: ambient_dim,
                    })
                } else {
                    Ok(super::rational::unit_vector(ambient_dim, i))
                }
            })
            .collect::<Result<_>>()?;
        Self::canonicalize(&vectors, ambient_dim)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient_dim
    }

    /// Proper and nonzero.
    pub fn is_nontrivial(&self) -> bool {
        !self.is_zero() && !self.is_full()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis
            .iter()
            .map(|v| v.iter().position(|x| !x.is_zero()).expect("basis vectors are nonzero"))
            .collect()
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        Ok(())
    }

    /// Remainder of `v` modulo the subspace; zero at every pivot column.
    pub fn reduce(&self, v: &[Rational]) -> Vector {
        let mut v = v.to_vec();
        for (row, p) in self.basis.iter().zip(self.pivots()) {
            if !v[p].is_zero() {
                let c = -v[p].clone();
                axpy(&mut v, &c, row);
            }
        }
        v
    }

    pub fn contains_vector(&self, v: &[Rational]) -> bool {
        v.len() == self.ambient_dim && is_zero_vector(&self.reduce(v))
    }

    /// Coefficients of `v` in the canonical basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vector> {
        if !self.contains_vector(v) {
            return None;
        }
        Some(self.pivots().into_iter().map(|p| v[p].clone()).collect())
    }

    /// Inverse of [`Subspace::coordinates`].
    pub fn from_coordinates(&self, coords: &[Rational]) -> Vector {
        let mut v = zero_vector(self.ambient_dim);
        for (c, row) in coords.iter().zip(&self.basis) {
            axpy(&mut v, c, row);
        }
        v
    }

    /// `ambient_dim x dim` matrix whose columns are the basis vectors.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_columns(self.ambient_dim, &self.basis).expect("basis shares ambient length")
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(other.basis.iter().all(|v| self.contains_vector(v)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut b = SpanBuilder::from_subspace(self);
        for v in &other.basis {
            b.insert(v);
        }
        Ok(b.into_subspace())
    }

    /// Intersection through the relation system `sum x_i a_i - sum y_j b_j = 0`.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let n = self.ambient_dim;
        let p = self.dim();
        let mut columns = self.basis.clone();
        columns.extend(other.basis.iter().map(|v| v.iter().map(|x| -x).collect()));
        if columns.is_empty() {
            return Ok(Subspace::zero(n));
        }
        let relations = Matrix::from_columns(n, &columns)?;
        let vectors: Vec<Vector> = relations
            .kernel()
            .into_iter()
            .map(|k| {
                let mut v = zero_vector(n);
                for (x, a) in k[..p].iter().zip(&self.basis) {
                    axpy(&mut v, x, a);
                }
                v
            })
            .collect();
        Subspace::canonicalize(&vectors, n)
    }

    /// Image under a linear map.
    pub fn image_under(&self, map: &Matrix) -> Result<Subspace> {
        if map.cols() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: map.cols(),
            });
        }
        let images: Vec<Vector> = self.basis.iter().map(|v| map.apply_unchecked(v)).collect();
        Subspace::canonicalize(&images, map.rows())
    }

    /// Invariance under a square operator on the ambient space.
    pub fn is_invariant_under(&self, op: &Matrix) -> bool {
        op.rows() == self.ambient_dim
            && op.cols() == self.ambient_dim
            && self.basis.iter().all(|v| self.contains_vector(&op.apply_unchecked(v)))
    }

    /// Standard unit vectors at the non-pivot columns; they complete the basis.
    pub fn complement_indices(&self) -> Vec<usize> {
        let pivots = self.pivots();
        (0..self.ambient_dim).filter(|c| !pivots.contains(c)).collect()
    }
}

/// Result of combining two subspaces of the same ambient space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceOps {
    pub sum: Subspace,
    pub intersection: Subspace,
    /// `b` is contained in `a`.
    pub contains: bool,
}

pub fn subspace_ops(a: &Subspace, b: &Subspace) -> Result<SubspaceOps> {
    Ok(SubspaceOps {
        sum: a.sum(b)?,
        intersection: a.intersection(b)?,
        contains: a.contains(b)?,
    })
}
