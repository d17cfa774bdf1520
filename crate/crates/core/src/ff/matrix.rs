//! Dense matrices over a finite field and Gauss–Jordan elimination.
//!
//! A matrix acting as a linear map stores the image of the j-th source basis
//! vector in column j, so `apply` computes `M·x` for a column vector `x`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ff::field::{Fe, FieldCtx};
use crate::ff::gf2;
use crate::ff::subspace::Subspace;
use crate::ff::vector;

#[derive(Clone)]
pub struct MatF {
    ctx: Arc<FieldCtx>,
    rows: usize,
    cols: usize,
    data: Vec<Fe>,
}

impl PartialEq for MatF {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && *self.ctx == *other.ctx
            && self.data == other.data
    }
}

impl Eq for MatF {}

impl fmt::Debug for MatF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MatF {}x{} over {:?}", self.rows, self.cols, self.ctx)?;
        for r in 0..self.rows {
            let row: Vec<u32> = self.row(r).iter().map(|x| x.0).collect();
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

/// Output of [`MatF::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    /// Reduced row-echelon form, same shape as the input.
    pub reduced: MatF,
    pub rank: usize,
    /// Pivot column of each of the first `rank` rows.
    pub pivots: Vec<usize>,
}

/// Everything the rank/kernel computation produces at once.
#[derive(Clone, Debug)]
pub struct RrefDecomposition {
    pub reduced: MatF,
    pub rank: usize,
    /// Right kernel {x : M x = 0}.
    pub kernel: Subspace,
    /// Column space, a subspace of the target.
    pub image: Subspace,
}

impl MatF {
    pub fn zeros(ctx: &Arc<FieldCtx>, rows: usize, cols: usize) -> Self {
        MatF {
            ctx: ctx.clone(),
            rows,
            cols,
            data: vec![Fe::ZERO; rows * cols],
        }
    }

    pub fn identity(ctx: &Arc<FieldCtx>, n: usize) -> Self {
        let mut m = Self::zeros(ctx, n, n);
        for i in 0..n {
            m.set(i, i, Fe::ONE);
        }
        m
    }

    pub fn from_rows(ctx: &Arc<FieldCtx>, cols: usize, rows: &[Vec<Fe>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    got: r.len(),
                });
            }
            data.extend_from_slice(r);
        }
        Ok(MatF {
            ctx: ctx.clone(),
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Matrix whose j-th column is `columns[j]`.
    pub fn from_columns(ctx: &Arc<FieldCtx>, rows: usize, columns: &[Vec<Fe>]) -> Result<Self> {
        let mut m = Self::zeros(ctx, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    got: c.len(),
                });
            }
            for (i, &x) in c.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        Ok(m)
    }

    pub fn from_raw(ctx: &Arc<FieldCtx>, rows: usize, cols: usize, data: Vec<Fe>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                got: data.len(),
            });
        }
        Ok(MatF {
            ctx: ctx.clone(),
            rows,
            cols,
            data,
        })
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[Fe] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Fe {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Fe) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Fe] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [Fe] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<Fe>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Fe> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        vector::is_zero(&self.data)
    }

    pub fn transpose(&self) -> MatF {
        let mut t = MatF::zeros(&self.ctx, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    fn check_ctx(&self, other: &MatF) -> Result<()> {
        if *self.ctx == *other.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn mul(&self, other: &MatF) -> Result<MatF> {
        self.check_ctx(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let ctx = &*self.ctx;
        let mut out = MatF::zeros(&self.ctx, self.rows, other.cols);
        for i in 0..self.rows {
            let (lo, hi) = (i * other.cols, (i + 1) * other.cols);
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                vector::axpy(ctx, &mut out.data[lo..hi], a, other.row(k));
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &MatF) -> Result<MatF> {
        self.check_ctx(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                got: other.rows * other.cols,
            });
        }
        Ok(MatF {
            ctx: self.ctx.clone(),
            rows: self.rows,
            cols: self.cols,
            data: vector::add(&self.ctx, &self.data, &other.data),
        })
    }

    pub fn pow(&self, mut e: u64) -> Result<MatF> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: self.cols,
            });
        }
        let mut acc = MatF::identity(&self.ctx, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// M·x
    pub fn apply(&self, x: &[Fe]) -> Vec<Fe> {
        assert_eq!(x.len(), self.cols, "vector length does not match matrix");
        let ctx = &*self.ctx;
        (0..self.rows)
            .map(|i| vector::dot(ctx, self.row(i), x))
            .collect()
    }

    pub fn vstack(&self, other: &MatF) -> Result<MatF> {
        self.check_ctx(other)?;
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(MatF {
            ctx: self.ctx.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn trace(&self) -> Fe {
        (0..self.rows.min(self.cols)).fold(Fe::ZERO, |acc, i| self.ctx.add(acc, self.get(i, i)))
    }

    /// Reduced row-echelon form. GF(2) matrices take the word-packed path.
    pub fn rref(&self) -> Rref {
        if self.ctx.p() == 2 && self.ctx.is_prime_field() {
            gf2::rref_packed(self)
        } else {
            rref_reference(self)
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// {x : M x = 0}
    pub fn kernel(&self) -> Subspace {
        let r = self.rref();
        kernel_from_rref(&r, self.cols)
    }

    /// Column space.
    pub fn image(&self) -> Subspace {
        Subspace::from_matrix_rows(&self.transpose())
    }

    pub fn decompose(&self) -> RrefDecomposition {
        let r = self.rref();
        RrefDecomposition {
            kernel: kernel_from_rref(&r, self.cols),
            image: self.image(),
            rank: r.rank,
            reduced: r.reduced,
        }
    }

    pub fn inverse(&self) -> Option<MatF> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = MatF::zeros(&self.ctx, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, Fe::ONE);
        }
        let r = aug.rref();
        if r.rank < n || r.pivots[..n].iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        let mut inv = MatF::zeros(&self.ctx, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.reduced.get(i, n + j));
            }
        }
        Some(inv)
    }
}

/// Straightforward Gauss–Jordan elimination over any field.
pub fn rref_reference(m: &MatF) -> Rref {
    let ctx = m.ctx.clone();
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(piv) = (r..a.rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        if piv != r {
            for j in 0..a.cols {
                a.data.swap(piv * a.cols + j, r * a.cols + j);
            }
        }
        let inv = ctx.inv(a.get(r, c)).expect("pivot is nonzero");
        for j in c..a.cols {
            let v = a.get(r, j);
            a.set(r, j, ctx.mul(v, inv));
        }
        let pivot_row: Vec<Fe> = a.row(r).to_vec();
        for i in 0..a.rows {
            if i == r {
                continue;
            }
            let f = a.get(i, c);
            if f.is_zero() {
                continue;
            }
            let nf = ctx.neg(f);
            vector::axpy(&ctx, a.row_mut(i), nf, &pivot_row);
        }
        pivots.push(c);
        r += 1;
    }
    Rref {
        reduced: a,
        rank: r,
        pivots,
    }
}

fn kernel_from_rref(r: &Rref, cols: usize) -> Subspace {
    let ctx = r.reduced.ctx();
    let mut is_pivot = vec![false; cols];
    for &p in &r.pivots {
        is_pivot[p] = true;
    }
    let mut vecs = Vec::new();
    for f in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vector::zeros(cols);
        v[f] = Fe::ONE;
        for (i, &p) in r.pivots.iter().enumerate() {
            v[p] = ctx.neg(r.reduced.get(i, f));
        }
        vecs.push(v);
    }
    Subspace::span(ctx, cols, vecs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::field::gf;

    fn m(ctx: &Arc<FieldCtx>, rows: &[&[u32]]) -> MatF {
        let cols = rows[0].len();
        let r: Vec<Vec<Fe>> = rows.iter().map(|r| r.iter().map(|&x| Fe(x)).collect()).collect();
        MatF::from_rows(ctx, cols, &r).unwrap()
    }

    #[test]
    fn rank_and_kernel_examples() {
        let f2 = gf(2, 1).unwrap();
        let id = MatF::identity(&f2, 3);
        let d = id.decompose();
        assert_eq!((d.rank, d.kernel.dim()), (3, 0));

        let z = MatF::zeros(&f2, 2, 2);
        let d = z.decompose();
        assert_eq!((d.rank, d.kernel.dim()), (0, 2));

        let ones = m(&f2, &[&[1, 1], &[1, 1]]);
        let d = ones.decompose();
        assert_eq!(d.rank, 1);
        assert_eq!(d.kernel, Subspace::span(&f2, 2, vec![vec![Fe(1), Fe(1)]]));
    }

    #[test]
    fn inverse_roundtrip() {
        let f3 = gf(3, 1).unwrap();
        let a = m(&f3, &[&[1, 2], &[0, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), MatF::identity(&f3, 2));
        assert!(m(&f3, &[&[1, 2], &[2, 1]]).inverse().is_none());
    }

    #[test]
    fn rref_over_extension_field() {
        let f4 = gf(2, 2).unwrap();
        let t = f4.generator().unwrap();
        let a = MatF::from_rows(&f4, 2, &[vec![t, Fe(1)], vec![Fe(1), f4.inv(t).unwrap()]]).unwrap();
        assert_eq!(a.rank(), 1);
    }
}
