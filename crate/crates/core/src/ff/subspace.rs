//! Subspaces of `GF(q)^n` held as canonical reduced row-echelon bases.
//!
//! Two subspaces are equal exactly when their bases are equal, so the derived
//! `PartialEq` is subspace equality.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ff::field::{Fe, FieldCtx};
use crate::ff::matrix::MatF;
use crate::ff::vector;

#[derive(Clone)]
pub struct Subspace {
    ctx: Arc<FieldCtx>,
    ambient: usize,
    basis: Vec<Vec<Fe>>,
    pivots: Vec<usize>,
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && *self.ctx == *other.ctx && self.basis == other.basis
    }
}

impl Eq for Subspace {}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}) ", self.dim(), self.ambient)?;
        f.debug_list()
            .entries(self.basis.iter().map(|v| vector::raw(v)))
            .finish()
    }
}

impl Subspace {
    pub fn zero(ctx: &Arc<FieldCtx>, ambient: usize) -> Self {
        Subspace {
            ctx: ctx.clone(),
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ctx: &Arc<FieldCtx>, ambient: usize) -> Self {
        Subspace {
            ctx: ctx.clone(),
            ambient,
            basis: (0..ambient).map(|i| vector::unit(ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of arbitrary vectors of length `ambient`.
    pub fn span(ctx: &Arc<FieldCtx>, ambient: usize, vecs: Vec<Vec<Fe>>) -> Self {
        if vecs.is_empty() {
            return Self::zero(ctx, ambient);
        }
        let m = MatF::from_rows(ctx, ambient, &vecs).expect("vectors have ambient length");
        Self::from_matrix_rows(&m)
    }

    /// Row space of a matrix.
    pub fn from_matrix_rows(m: &MatF) -> Self {
        let r = m.rref();
        let basis = (0..r.rank).map(|i| r.reduced.row(i).to_vec()).collect();
        Subspace {
            ctx: m.ctx().clone(),
            ambient: m.cols(),
            basis,
            pivots: r.pivots,
        }
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<Fe>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    /// Basis vectors as the rows of a matrix.
    pub fn basis_matrix(&self) -> MatF {
        MatF::from_rows(&self.ctx, self.ambient, &self.basis).expect("consistent lengths")
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if *self.ctx != *other.ctx {
            return Err(Error::ContextMismatch);
        }
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: other.ambient,
            });
        }
        Ok(())
    }

    /// Normal form of `v` modulo the subspace: zero at every pivot column.
    pub fn reduce(&self, v: &[Fe]) -> Vec<Fe> {
        assert_eq!(v.len(), self.ambient, "vector length does not match ambient");
        let mut w = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let c = w[p];
            if !c.is_zero() {
                vector::axpy(&self.ctx, &mut w, self.ctx.neg(c), row);
            }
        }
        w
    }

    pub fn contains(&self, v: &[Fe]) -> bool {
        vector::is_zero(&self.reduce(v))
    }

    /// Coordinates in the canonical basis, if `v` lies in the subspace.
    pub fn coords(&self, v: &[Fe]) -> Option<Vec<Fe>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p]).collect())
    }

    /// Vector with the given coordinates in the canonical basis.
    pub fn combine(&self, coords: &[Fe]) -> Vec<Fe> {
        let mut out = vector::zeros(self.ambient);
        for (row, &c) in self.basis.iter().zip(coords) {
            vector::axpy(&self.ctx, &mut out, c, row);
        }
        out
    }

    pub fn contains_space(&self, other: &Subspace) -> Result<bool> {
        self.check(other)?;
        Ok(other.basis.iter().all(|v| self.contains(v)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let mut vecs = self.basis.clone();
        vecs.extend(other.basis.iter().cloned());
        Ok(Subspace::span(&self.ctx, self.ambient, vecs))
    }

    /// {w : w·u = 0 for all u in the subspace}
    pub fn annihilator(&self) -> Subspace {
        if self.basis.is_empty() {
            return Subspace::full(&self.ctx, self.ambient);
        }
        self.basis_matrix().kernel()
    }

    /// Intersection as the kernel of the stacked annihilator equations.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let eqs = self.annihilator().sum(&other.annihilator())?;
        Ok(eqs.annihilator())
    }

    /// Canonical complement of `self` inside `v`: the echelon basis of
    /// `v ∩ {x : x vanishes at the pivots of self}`. Together with a basis of
    /// `self` it is a basis of `v`.
    pub fn quotient_basis(&self, v: &Subspace) -> Result<Vec<Vec<Fe>>> {
        self.check(v)?;
        if !v.contains_space(self)? {
            return Err(Error::Invalid {
                what: "quotient",
                detail: "subspace is not contained in the ambient space of the quotient".into(),
            });
        }
        let reduced: Vec<Vec<Fe>> = v.basis.iter().map(|b| self.reduce(b)).collect();
        Ok(Subspace::span(&self.ctx, self.ambient, reduced).basis)
    }

    /// Canonical complement in the whole ambient space: the unit vectors at
    /// non-pivot columns.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&j| !is_pivot[j]).collect()
    }

    /// {x : M x ∈ self}, where M maps into the ambient space of `self`.
    pub fn preimage(&self, m: &MatF) -> Result<Subspace> {
        if m.rows() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: m.rows(),
            });
        }
        let ann = self.annihilator();
        if ann.is_zero() {
            return Ok(Subspace::full(&self.ctx, m.cols()));
        }
        Ok(ann.basis_matrix().mul(m)?.kernel())
    }

    /// Image under M, where M maps from the ambient space of `self`.
    pub fn image_under(&self, m: &MatF) -> Result<Subspace> {
        if m.cols() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: m.cols(),
            });
        }
        let vecs = self.basis.iter().map(|v| m.apply(v)).collect();
        Ok(Subspace::span(&self.ctx, m.rows(), vecs))
    }

    /// U ⊗ V inside the Kronecker-indexed ambient. Products of echelon bases
    /// are already in echelon form.
    pub fn tensor(&self, other: &Subspace) -> Result<Subspace> {
        if *self.ctx != *other.ctx {
            return Err(Error::ContextMismatch);
        }
        let n = other.ambient;
        let mut basis = Vec::with_capacity(self.dim() * other.dim());
        let mut pivots = Vec::with_capacity(basis.capacity());
        for (u, &pu) in self.basis.iter().zip(&self.pivots) {
            for (v, &pv) in other.basis.iter().zip(&other.pivots) {
                basis.push(vector::tensor(&self.ctx, u, v));
                pivots.push(pu * n + pv);
            }
        }
        Ok(Subspace {
            ctx: self.ctx.clone(),
            ambient: self.ambient * n,
            basis,
            pivots,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::field::gf;

    fn e(n: usize, i: usize) -> Vec<Fe> {
        vector::unit(n, i)
    }

    #[test]
    fn sum_intersect_contains() {
        let f2 = gf(2, 1).unwrap();
        let u = Subspace::span(&f2, 3, vec![e(3, 0)]);
        let v = Subspace::span(&f2, 3, vec![e(3, 1)]);
        assert_eq!(u.sum(&v).unwrap().dim(), 2);
        assert_eq!(u.intersect(&v).unwrap().dim(), 0);
        assert!(u.contains_space(&u).unwrap());
        let w = Subspace::span(&f2, 2, vec![e(2, 0)]);
        assert!(matches!(u.sum(&w), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn preimage_of_line() {
        let f3 = gf(3, 1).unwrap();
        // rows list the images of e1 and e2: both go to e1
        let m = MatF::from_columns(&f3, 2, &[vec![Fe(1), Fe(0)], vec![Fe(1), Fe(0)]]).unwrap();
        let line = Subspace::span(&f3, 2, vec![e(2, 0)]);
        assert_eq!(line.preimage(&m).unwrap().dim(), 2);
        // read as acting on columns instead, the same rows send x to (x1, x1)
        let m = MatF::from_rows(&f3, 2, &[vec![Fe(1), Fe(0)], vec![Fe(1), Fe(0)]]).unwrap();
        assert_eq!(line.preimage(&m).unwrap().dim(), 1);
    }

    #[test]
    fn quotient_basis_completes() {
        let f3 = gf(3, 1).unwrap();
        let v = Subspace::span(&f3, 3, vec![vec![Fe(1), Fe(2), Fe(0)], vec![Fe(0), Fe(1), Fe(1)]]);
        let u = Subspace::span(&f3, 3, vec![vec![Fe(1), Fe(0), Fe(1)]]);
        assert!(v.contains_space(&u).unwrap());
        let q = u.quotient_basis(&v).unwrap();
        assert_eq!(q.len(), 1);
        let mut all = u.basis().to_vec();
        all.extend(q);
        assert_eq!(Subspace::span(&f3, 3, all), v);
    }

    #[test]
    fn tensor_is_echelon() {
        let f3 = gf(3, 1).unwrap();
        let u = Subspace::span(&f3, 2, vec![vec![Fe(1), Fe(2)]]);
        let v = Subspace::full(&f3, 2);
        let t = u.tensor(&v).unwrap();
        let recomputed = Subspace::span(&f3, 4, t.basis().to_vec());
        assert_eq!(t, recomputed);
    }
}
