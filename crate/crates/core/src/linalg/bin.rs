use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::opcount::{AddStage, OpCounter};

const WORD: usize = 64;

/// A dense matrix over GF(2), rows packed into `u64` words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl fmt::Debug for BinMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinMatrix {}x{} [", self.rows, self.cols)?;
        for s in self.to_bitstrings() {
            writeln!(f, "  {s}")?;
        }
        write!(f, "]")
    }
}

impl BinMatrix {
    pub fn zeros(rows: usize, cols: usize) -> BinMatrix {
        let stride = cols.div_ceil(WORD);
        BinMatrix { rows, cols, stride, data: vec![0; rows * stride] }
    }

    pub fn identity(n: usize) -> BinMatrix {
        let mut m = BinMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from rows of 0/1 values.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<BinMatrix> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = BinMatrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::DimensionMismatch);
            }
            for (j, &b) in r.iter().enumerate() {
                match b {
                    0 => {}
                    1 => m.set(i, j, true),
                    _ => return Err(Error::DimensionMismatch),
                }
            }
        }
        Ok(m)
    }

    /// Parses rows written as strings of `0`/`1` characters.
    pub fn from_bitstrings<S: AsRef<str>>(rows: &[S]) -> Result<BinMatrix> {
        let parsed: Vec<Vec<u8>> = rows
            .iter()
            .map(|s| {
                s.as_ref()
                    .bytes()
                    .map(|b| match b {
                        b'0' => Ok(0),
                        b'1' => Ok(1),
                        _ => Err(Error::DimensionMismatch),
                    })
                    .collect::<Result<Vec<u8>>>()
            })
            .collect::<Result<_>>()?;
        BinMatrix::from_rows(&parsed)
    }

    pub fn to_bitstrings(&self) -> Vec<String> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| if self.get(i, j) { '1' } else { '0' }).collect())
            .collect()
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
    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.stride + j / WORD] >> (j % WORD) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        debug_assert!(i < self.rows && j < self.cols);
        let w = &mut self.data[i * self.stride + j / WORD];
        if v {
            *w |= 1 << (j % WORD);
        } else {
            *w &= !(1 << (j % WORD));
        }
    }

    #[inline]
    pub fn row_words(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    /// Column indices of the ones in row `i`, ascending.
    pub fn row_ones(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.row_words(i).iter().enumerate().flat_map(|(w, &word)| {
            let mut bits = word;
            core::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(w * WORD + b)
            })
        })
    }

    pub fn row_weight(&self, i: usize) -> usize {
        self.row_words(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn ones(&self) -> usize {
        self.data.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Additions needed to multiply by this matrix row by row without sharing:
    /// `weight - 1` for every nonzero row.
    pub fn naive_additions(&self) -> usize {
        (0..self.rows).map(|i| self.row_weight(i).saturating_sub(1)).sum()
    }

    fn xor_row_from(&mut self, dst: usize, src: &BinMatrix, src_row: usize) {
        let s = src.row_words(src_row);
        let d = &mut self.data[dst * self.stride..(dst + 1) * self.stride];
        for (a, b) in d.iter_mut().zip(s) {
            *a ^= b;
        }
    }

    fn xor_rows(&mut self, dst: usize, src: usize) {
        for w in 0..self.stride {
            let v = self.data[src * self.stride + w];
            self.data[dst * self.stride + w] ^= v;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for w in 0..self.stride {
                self.data.swap(a * self.stride + w, b * self.stride + w);
            }
        }
    }

    pub fn mul(&self, rhs: &BinMatrix) -> Result<BinMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch);
        }
        let mut out = BinMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in self.row_ones(i) {
                out.xor_row_from(i, rhs, k);
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> BinMatrix {
        let mut out = BinMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in self.row_ones(i) {
                out.set(j, i, true);
            }
        }
        out
    }

    /// Rank over GF(2).
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let mut rank = 0;
        for col in 0..a.cols {
            let Some(p) = (rank..a.rows).find(|&r| a.get(r, col)) else {
                continue;
            };
            a.swap_rows(rank, p);
            for r in 0..a.rows {
                if r != rank && a.get(r, col) {
                    a.xor_rows(r, rank);
                }
            }
            rank += 1;
        }
        rank
    }

    /// Inverse over GF(2) by Gauss–Jordan elimination.
    pub fn invert(&self) -> Result<BinMatrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch);
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = BinMatrix::identity(n);
        for col in 0..n {
            let p = (col..n).find(|&r| a.get(r, col)).ok_or(Error::SingularMatrix)?;
            a.swap_rows(col, p);
            inv.swap_rows(col, p);
            for r in 0..n {
                if r != col && a.get(r, col) {
                    a.xor_rows(r, col);
                    inv.xor_rows(r, col);
                }
            }
        }
        Ok(inv)
    }

    pub fn is_identity(&self) -> bool {
        *self == BinMatrix::identity(self.rows)
    }

    /// Block-diagonal matrix with the given blocks along the diagonal.
    pub fn block_diag(blocks: &[&BinMatrix]) -> BinMatrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = BinMatrix::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in b.row_ones(i) {
                    out.set(r0 + i, c0 + j, true);
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Copies rows `start..start + len`.
    pub fn row_block(&self, start: usize, len: usize) -> BinMatrix {
        let mut out = BinMatrix::zeros(len, self.cols);
        out.data.copy_from_slice(&self.data[start * self.stride..(start + len) * self.stride]);
        out
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(parts: &[BinMatrix]) -> Result<BinMatrix> {
        let cols = parts.first().map_or(0, |p| p.cols);
        if parts.iter().any(|p| p.cols != cols) {
            return Err(Error::DimensionMismatch);
        }
        let rows = parts.iter().map(|p| p.rows).sum();
        let mut data = Vec::with_capacity(rows * cols.div_ceil(WORD));
        for p in parts {
            data.extend_from_slice(&p.data);
        }
        Ok(BinMatrix { rows, cols, stride: cols.div_ceil(WORD), data })
    }

    /// Multiplies by a vector of field elements: each output is the XOR of the selected inputs.
    pub fn apply(&self, x: &[FieldElement]) -> Result<Vec<FieldElement>> {
        if x.len() != self.cols {
            return Err(Error::LengthMismatch { expected: self.cols, found: x.len() });
        }
        Ok((0..self.rows).map(|i| self.row_ones(i).fold(FieldElement::ZERO, |acc, j| acc + x[j])).collect())
    }

    /// As [`BinMatrix::apply`], recording `weight - 1` additions per row under `stage`.
    pub fn apply_counted(
        &self,
        x: &[FieldElement],
        counter: &mut OpCounter,
        stage: AddStage,
    ) -> Result<Vec<FieldElement>> {
        let out = self.apply(x)?;
        counter.count_adds(stage, self.naive_additions());
        Ok(out)
    }
}

/// Inverse of a square binary matrix.
pub fn bin_invert(a: &BinMatrix) -> Result<BinMatrix> {
    a.invert()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_inverse() {
        let i = BinMatrix::identity(5);
        assert_eq!(bin_invert(&i).unwrap(), i);
    }

    #[test]
    fn involution() {
        let a = BinMatrix::from_rows(&[[1, 0], [1, 1]]).unwrap();
        assert_eq!(bin_invert(&a).unwrap(), a);
    }

    #[test]
    fn singular() {
        let a = BinMatrix::from_rows(&[[1, 1], [1, 1]]).unwrap();
        assert_eq!(a.invert(), Err(Error::SingularMatrix));
        assert_eq!(a.rank(), 1);
        assert_eq!(BinMatrix::zeros(2, 3).invert(), Err(Error::DimensionMismatch));
    }

    #[test]
    fn wide_rows_span_words() {
        let mut a = BinMatrix::zeros(3, 130);
        a.set(0, 0, true);
        a.set(0, 64, true);
        a.set(0, 129, true);
        a.set(2, 127, true);
        assert_eq!(a.row_ones(0).collect::<Vec<_>>(), vec![0, 64, 129]);
        assert_eq!(a.row_weight(1), 0);
        assert_eq!(a.naive_additions(), 2);
        let t = a.transpose();
        assert!(t.get(129, 0) && t.get(127, 2));
        assert_eq!(t.transpose(), a);
    }

    #[test]
    fn bitstring_roundtrip() {
        let rows = ["1010", "0111", "0000"];
        let a = BinMatrix::from_bitstrings(&rows).unwrap();
        assert_eq!(a.to_bitstrings(), rows);
        assert!(BinMatrix::from_bitstrings(&["10", "1"]).is_err());
        assert!(BinMatrix::from_bitstrings(&["12"]).is_err());
    }

    #[test]
    fn block_diag_and_stack() {
        let a = BinMatrix::from_rows(&[[1, 1]]).unwrap();
        let b = BinMatrix::identity(2);
        let d = BinMatrix::block_diag(&[&a, &b]);
        assert_eq!(d.to_bitstrings(), ["1100", "0010", "0001"]);
        let s = BinMatrix::vstack(&[d.row_block(1, 2), d.row_block(0, 1)]).unwrap();
        assert_eq!(s.to_bitstrings(), ["0010", "0001", "1100"]);
    }

    #[test]
    fn apply_xors_selected_entries() {
        let a = BinMatrix::from_rows(&[[1, 1, 0], [0, 0, 0], [1, 1, 1]]).unwrap();
        let x = [FieldElement(3), FieldElement(5), FieldElement(8)];
        assert_eq!(a.apply(&x).unwrap(), vec![FieldElement(6), FieldElement(0), FieldElement(14)]);
        let mut c = OpCounter::new();
        a.apply_counted(&x, &mut c, AddStage::Binary).unwrap();
        assert_eq!(c.binary_stage_adds, 3);
        assert!(a.apply(&x[..2]).is_err());
    }
}
