use super::BinMatrix;
use crate::error::{Error, Result};
use crate::field::FieldElement;

/// Expresses field elements as GF(2) combinations of a fixed list of basis elements.
///
/// Elements are treated as bit vectors in polynomial coordinates; the solver keeps
/// an echelon form keyed by leading bit, tagging each reduced vector with the set of
/// original basis indices that sum to it.
#[derive(Clone, Debug)]
pub struct BasisSolver {
    len: usize,
    slots: [(u16, u32); 16],
}

impl BasisSolver {
    /// Fails with [`Error::SingularBasis`] if the elements are linearly dependent.
    pub fn new(basis: &[FieldElement]) -> Result<BasisSolver> {
        if basis.len() > 16 {
            return Err(Error::SingularBasis);
        }
        let mut s = BasisSolver { len: basis.len(), slots: [(0, 0); 16] };
        for (i, &b) in basis.iter().enumerate() {
            let (v, tag) = s.reduce(b.bits(), 1 << i);
            if v == 0 {
                return Err(Error::SingularBasis);
            }
            s.slots[15 - v.leading_zeros() as usize] = (v, tag);
        }
        Ok(s)
    }

    fn reduce(&self, mut v: u16, mut tag: u32) -> (u16, u32) {
        for bit in (0..16).rev() {
            if v >> bit & 1 == 1 && self.slots[bit].0 != 0 {
                v ^= self.slots[bit].0;
                tag ^= self.slots[bit].1;
            }
        }
        (v, tag)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Coordinates of `x` as a bit mask (bit `i` = coefficient of basis element `i`).
    pub fn coords(&self, x: FieldElement) -> Result<u32> {
        match self.reduce(x.bits(), 0) {
            (0, tag) => Ok(tag),
            _ => Err(Error::SingularBasis),
        }
    }

    /// Matrix whose row `j` holds the coordinates of `xs[j]`.
    pub fn coord_matrix(&self, xs: &[FieldElement]) -> Result<BinMatrix> {
        let mut m = BinMatrix::zeros(xs.len(), self.len);
        for (j, &x) in xs.iter().enumerate() {
            let c = self.coords(x)?;
            for i in 0..self.len {
                if c >> i & 1 == 1 {
                    m.set(j, i, true);
                }
            }
        }
        Ok(m)
    }
}

/// True if the elements are linearly independent over GF(2).
pub fn independent(xs: &[FieldElement]) -> bool {
    BasisSolver::new(xs).is_ok()
}

/// Rebuilds `Σ coords_i · basis_i`.
pub fn combine(basis: &[FieldElement], coords: u32) -> FieldElement {
    basis
        .iter()
        .enumerate()
        .filter(|(i, _)| coords >> i & 1 == 1)
        .fold(FieldElement::ZERO, |acc, (_, &b)| acc + b)
}

/// Rank over GF(2) of a list of elements.
pub fn rank(xs: &[FieldElement]) -> usize {
    let mut slots = [0u16; 16];
    let mut r = 0;
    for x in xs {
        let mut v = x.bits();
        for bit in (0..16).rev() {
            if v >> bit & 1 == 0 {
                continue;
            }
            if slots[bit] == 0 {
                slots[bit] = v;
                r += 1;
                break;
            }
            v ^= slots[bit];
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldCtx;
    use alloc::vec::Vec;

    #[test]
    fn coordinates_roundtrip() {
        let ctx = FieldCtx::new(4, None).unwrap();
        let basis: Vec<_> = [6u64, 12, 9, 3].iter().map(|&k| ctx.exp(k)).collect();
        let s = BasisSolver::new(&basis).unwrap();
        for k in 0..15 {
            let x = ctx.exp(k);
            assert_eq!(combine(&basis, s.coords(x).unwrap()), x);
        }
        assert_eq!(s.coords(FieldElement::ZERO).unwrap(), 0);
        assert_eq!(rank(&basis), 4);
    }

    #[test]
    fn dependent_and_outside_span() {
        let ctx = FieldCtx::new(4, None).unwrap();
        let dep = [ctx.exp(5), ctx.exp(10), FieldElement::ONE];
        assert!(!independent(&dep));
        assert_eq!(rank(&dep), 2);
        let s = BasisSolver::new(&dep[..2]).unwrap();
        assert_eq!(s.coords(FieldElement::ONE).unwrap(), 0b11);
        assert_eq!(s.coords(ctx.exp(1)), Err(Error::SingularBasis));
    }
}
