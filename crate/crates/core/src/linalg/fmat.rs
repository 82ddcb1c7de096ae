use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::BinMatrix;
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};
use crate::opcount::{AddStage, OpCounter};

/// A dense matrix over GF(2^m), row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldMatrix {
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl FieldMatrix {
    pub fn zeros(rows: usize, cols: usize) -> FieldMatrix {
        FieldMatrix { rows, cols, data: vec![FieldElement::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> FieldMatrix {
        FieldMatrix::from_fn(n, n, |i, j| FieldElement((i == j) as u16))
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> FieldElement) -> FieldMatrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        FieldMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: &[Vec<FieldElement>]) -> Result<FieldMatrix> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch);
        }
        Ok(FieldMatrix { rows: rows.len(), cols, data: rows.concat() })
    }

    /// Embeds a binary matrix.
    pub fn from_binary(b: &BinMatrix) -> FieldMatrix {
        FieldMatrix::from_fn(b.rows(), b.cols(), |i, j| FieldElement(b.get(i, j) as u16))
    }

    /// Diagonal matrix with the given entries.
    pub fn diag(d: &[FieldElement]) -> FieldMatrix {
        FieldMatrix::from_fn(d.len(), d.len(), |i, j| if i == j { d[i] } else { FieldElement::ZERO })
    }

    /// Parses rows of element text (`0`, `1`, `a^k`).
    pub fn parse_rows<S: AsRef<str>>(ctx: &FieldCtx, rows: &[Vec<S>]) -> Result<FieldMatrix> {
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| ctx.parse_element(s.as_ref())).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        FieldMatrix::from_rows(&parsed)
    }

    pub fn to_text_rows(&self, ctx: &FieldCtx) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|&a| ctx.format_element(a)).collect()).collect()
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> FieldMatrix {
        FieldMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn mul(&self, ctx: &FieldCtx, rhs: &FieldMatrix) -> Result<FieldMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch);
        }
        let mut out = FieldMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = out.get(i, j) + ctx.mul(a, rhs.get(k, j));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Product with a binary matrix on the right, without field multiplications.
    pub fn mul_binary(&self, rhs: &BinMatrix) -> Result<FieldMatrix> {
        if self.cols != rhs.rows() {
            return Err(Error::DimensionMismatch);
        }
        let mut out = FieldMatrix::zeros(self.rows, rhs.cols());
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in rhs.row_ones(k) {
                    let v = out.get(i, j) + a;
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Entrywise map, e.g. a Frobenius power.
    pub fn map(&self, mut f: impl FnMut(FieldElement) -> FieldElement) -> FieldMatrix {
        FieldMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&a| f(a)).collect() }
    }

    pub fn is_binary(&self) -> bool {
        self.data.iter().all(|a| a.is_binary())
    }

    pub fn to_binary(&self) -> Option<BinMatrix> {
        if !self.is_binary() {
            return None;
        }
        let mut b = BinMatrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) == FieldElement::ONE {
                    b.set(i, j, true);
                }
            }
        }
        Some(b)
    }

    pub fn block_diag(blocks: &[&FieldMatrix]) -> FieldMatrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = FieldMatrix::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(r0 + i, c0 + j, b.get(i, j));
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Copies the `rows × cols` block whose top-left corner is `(r0, c0)`.
    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> FieldMatrix {
        FieldMatrix::from_fn(rows, cols, |i, j| self.get(r0 + i, c0 + j))
    }

    pub fn apply(&self, ctx: &FieldCtx, x: &[FieldElement]) -> Result<Vec<FieldElement>> {
        if x.len() != self.cols {
            return Err(Error::LengthMismatch { expected: self.cols, found: x.len() });
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(x).fold(FieldElement::ZERO, |acc, (&a, &b)| acc + ctx.mul(a, b)))
            .collect())
    }

    /// Dense product with site counting: one multiplication per entry outside {0, 1},
    /// and `nonzeros - 1` additions per row.
    pub fn apply_counted(
        &self,
        ctx: &FieldCtx,
        x: &[FieldElement],
        counter: &mut OpCounter,
    ) -> Result<Vec<FieldElement>> {
        let out = self.apply(ctx, x)?;
        for i in 0..self.rows {
            let mut nnz = 0usize;
            for &a in self.row(i) {
                if !a.is_zero() {
                    counter.count_mult_site(a);
                    nnz += 1;
                }
            }
            counter.count_adds(AddStage::Field, nnz.saturating_sub(1));
        }
        Ok(out)
    }

    /// Inverse by Gauss–Jordan elimination over the field.
    pub fn invert(&self, ctx: &FieldCtx) -> Result<FieldMatrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch);
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = FieldMatrix::identity(n);
        for col in 0..n {
            let p = (col..n).find(|&r| !a.get(r, col).is_zero()).ok_or(Error::SingularMatrix)?;
            a.swap_rows(col, p);
            inv.swap_rows(col, p);
            let s = ctx.inv(a.get(col, col))?;
            a.scale_row(ctx, col, s);
            inv.scale_row(ctx, col, s);
            for r in 0..n {
                let f = a.get(r, col);
                if r != col && !f.is_zero() {
                    a.add_scaled_row(ctx, r, col, f);
                    inv.add_scaled_row(ctx, r, col, f);
                }
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn scale_row(&mut self, ctx: &FieldCtx, r: usize, s: FieldElement) {
        for j in 0..self.cols {
            let v = ctx.mul(self.get(r, j), s);
            self.set(r, j, v);
        }
    }

    fn add_scaled_row(&mut self, ctx: &FieldCtx, dst: usize, src: usize, s: FieldElement) {
        for j in 0..self.cols {
            let v = self.get(dst, j) + ctx.mul(s, self.get(src, j));
            self.set(dst, j, v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_inverse() {
        let ctx = FieldCtx::new(4, None).unwrap();
        let v = FieldMatrix::from_fn(4, 4, |i, j| ctx.exp((j << i) as u64));
        let vi = v.invert(&ctx).unwrap();
        assert_eq!(v.mul(&ctx, &vi).unwrap(), FieldMatrix::identity(4));
        assert_eq!(v.transpose().transpose(), v);
        let b = BinMatrix::from_rows(&[[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 1], [1, 0, 0, 1]]).unwrap();
        assert_eq!(v.mul_binary(&b).unwrap(), v.mul(&ctx, &FieldMatrix::from_binary(&b)).unwrap());
    }

    #[test]
    fn counted_apply() {
        let ctx = FieldCtx::new(4, None).unwrap();
        let m = FieldMatrix::from_rows(&[
            vec![FieldElement::ONE, ctx.exp(5)],
            vec![FieldElement::ONE, ctx.exp(10)],
        ])
        .unwrap();
        let mut c = OpCounter::new();
        let x = [ctx.exp(3), ctx.exp(7)];
        let y = m.apply_counted(&ctx, &x, &mut c).unwrap();
        assert_eq!(y[0], ctx.exp(3) + ctx.exp(12));
        assert_eq!((c.mults, c.field_adds), (2, 2));
    }

    #[test]
    fn text_rows() {
        let ctx = FieldCtx::new(4, None).unwrap();
        let rows = vec![vec!["1", "a^5"], vec!["1", "a^10"]];
        let m = FieldMatrix::parse_rows(&ctx, &rows).unwrap();
        assert_eq!(m.to_text_rows(&ctx), rows);
        assert!(m.to_binary().is_none());
        assert!(FieldMatrix::identity(3).to_binary().unwrap().is_identity());
    }
}
