use num_traits::{One, Zero};
use serde::Serialize;

use super::matrix::Matrix;
use crate::error::{Error, Result};
use crate::scalar::GaussianRational;

/// A linear subspace of ℚ(i)ⁿ stored by its canonical RREF basis.
///
/// Two subspaces are equal exactly when their representations are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Subspace {
    ambient_dim: usize,
    pivots: Vec<usize>,
    basis: Vec<Vec<GaussianRational>>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            pivots: Vec::new(),
            basis: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self::from_rref(&Matrix::identity(ambient_dim))
    }

    /// Span of `vectors`, canonicalized.
    pub fn span<I>(ambient_dim: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<GaussianRational>>,
    {
        let mut rows = Vec::new();
        for v in vectors {
            if v.len() != ambient_dim {
                return Err(Error::AmbientMismatch {
                    left: ambient_dim,
                    right: v.len(),
                });
            }
            rows.push(v);
        }
        if rows.is_empty() {
            return Ok(Self::zero(ambient_dim));
        }
        Ok(Self::from_rref(&Matrix::from_rows(rows).rref().0))
    }

    /// Row space of `m`.
    pub fn row_space(m: &Matrix) -> Self {
        if m.rows() == 0 {
            return Self::zero(m.cols());
        }
        Self::from_rref(&m.rref().0)
    }

    /// Null space `{v : m·v = 0}`.
    pub fn kernel(m: &Matrix) -> Self {
        let n = m.cols();
        if m.rows() == 0 {
            return Self::full(n);
        }
        let (r, pivots) = m.rref();
        let mut is_pivot = vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut vectors = Vec::new();
        for free in (0..n).filter(|&c| !is_pivot[c]) {
            let mut v = vec![GaussianRational::zero(); n];
            v[free] = GaussianRational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -&r[(row, free)];
            }
            vectors.push(v);
        }
        Self::span(n, vectors).expect("kernel vectors have ambient length")
    }

    // `m` must already be in RREF.
    fn from_rref(m: &Matrix) -> Self {
        let mut pivots = Vec::new();
        let mut basis = Vec::new();
        for r in 0..m.rows() {
            let row = m.row(r);
            if let Some(p) = row.iter().position(|x| !x.is_zero()) {
                pivots.push(p);
                basis.push(row.to_vec());
            }
        }
        Self {
            ambient_dim: m.cols(),
            pivots,
            basis,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<GaussianRational>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates that carry no pivot; their unit vectors span a complement.
    pub fn non_pivots(&self) -> Vec<usize> {
        (0..self.ambient_dim).filter(|c| !self.pivots.contains(c)).collect()
    }

    fn check_ambient(&self, other: usize) -> Result<()> {
        if self.ambient_dim != other {
            return Err(Error::AmbientMismatch {
                left: self.ambient_dim,
                right: other,
            });
        }
        Ok(())
    }

    /// `v` minus its reduction against the basis; zero iff `v` lies in the space.
    fn residual(&self, v: &[GaussianRational]) -> Vec<GaussianRational> {
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (x, b) in r.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x -= &(&f * b);
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[GaussianRational]) -> Result<bool> {
        self.check_ambient(v.len())?;
        Ok(self.residual(v).iter().all(Zero::is_zero))
    }

    /// Coefficients of `v` in the canonical basis, if `v` is a member.
    pub fn coordinates(&self, v: &[GaussianRational]) -> Result<Option<Vec<GaussianRational>>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    pub fn is_subspace_of(&self, other: &Self) -> Result<bool> {
        other.check_ambient(self.ambient_dim)?;
        for v in &self.basis {
            if !other.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other.ambient_dim)?;
        Self::span(self.ambient_dim, self.basis.iter().chain(&other.basis).cloned())
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other.ambient_dim)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ambient_dim));
        }
        // Columns are the basis of `self` followed by the negated basis of
        // `other`; a kernel vector (a, b) gives the common element Σ aᵢ selfᵢ.
        let r = self.dim();
        let s = other.dim();
        let m = Matrix::from_fn(self.ambient_dim, r + s, |row, col| {
            if col < r {
                self.basis[col][row].clone()
            } else {
                -&other.basis[col - r][row]
            }
        });
        let relations = Self::kernel(&m);
        let vectors = relations.basis.iter().map(|rel| {
            let mut v = vec![GaussianRational::zero(); self.ambient_dim];
            for (a, row) in rel[..r].iter().zip(&self.basis) {
                if a.is_zero() {
                    continue;
                }
                for (x, b) in v.iter_mut().zip(row) {
                    *x += &(a * b);
                }
            }
            v
        });
        Self::span(self.ambient_dim, vectors)
    }

    /// Image under the coordinate projection onto `coords` (in the given order).
    pub fn project(&self, coords: &[usize]) -> Result<Self> {
        if let Some(&bad) = coords.iter().find(|&&c| c >= self.ambient_dim) {
            return Err(Error::CoordinateOutOfRange {
                index: bad,
                ambient: self.ambient_dim,
            });
        }
        Self::span(
            coords.len(),
            self.basis
                .iter()
                .map(|row| coords.iter().map(|&c| row[c].clone()).collect()),
        )
    }
}
