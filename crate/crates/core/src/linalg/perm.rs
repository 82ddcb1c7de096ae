use alloc::vec;
use alloc::vec::Vec;

use super::BinMatrix;
use crate::error::{Error, Result};

/// A permutation matrix stored as its image array: row `i` has its single one in column `image[i]`.
///
/// Applying it to a vector gathers: `(P x)[i] = x[image[i]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Permutation> {
        let mut seen = vec![false; image.len()];
        for &j in &image {
            if j >= image.len() || core::mem::replace(&mut seen[j], true) {
                return Err(Error::InvalidPermutation);
            }
        }
        Ok(Permutation { image })
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation { image: (0..n).collect() }
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn apply<T: Copy>(&self, x: &[T]) -> Result<Vec<T>> {
        if x.len() != self.len() {
            return Err(Error::LengthMismatch { expected: self.len(), found: x.len() });
        }
        Ok(self.image.iter().map(|&j| x[j]).collect())
    }

    /// Applies the inverse permutation: `out[image[i]] = x[i]`.
    pub fn scatter<T: Copy + Default>(&self, x: &[T]) -> Result<Vec<T>> {
        if x.len() != self.len() {
            return Err(Error::LengthMismatch { expected: self.len(), found: x.len() });
        }
        let mut out = vec![T::default(); x.len()];
        for (i, &j) in self.image.iter().enumerate() {
            out[j] = x[i];
        }
        Ok(out)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &j) in self.image.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { image: inv }
    }

    /// The matrix product `self · rhs`.
    pub fn compose(&self, rhs: &Permutation) -> Result<Permutation> {
        if self.len() != rhs.len() {
            return Err(Error::DimensionMismatch);
        }
        Ok(Permutation { image: self.image.iter().map(|&j| rhs.image[j]).collect() })
    }

    pub fn to_matrix(&self) -> BinMatrix {
        let mut m = BinMatrix::zeros(self.len(), self.len());
        for (i, &j) in self.image.iter().enumerate() {
            m.set(i, j, true);
        }
        m
    }
}

/// The interleaving permutation Π of size `m`: even-indexed entries first, then odd-indexed ones.
pub fn pi_permutation(m: usize) -> Result<Permutation> {
    if !m.is_multiple_of(2) {
        return Err(Error::OddSize { size: m });
    }
    let h = m / 2;
    Ok(Permutation { image: (0..m).map(|i| if i < h { 2 * i } else { 2 * (i - h) + 1 }).collect() })
}
