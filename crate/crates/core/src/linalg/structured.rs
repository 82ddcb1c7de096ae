use super::FieldMatrix;
use crate::conjugacy::{BasisSpec, ConjugacyClass};
use crate::field::{FieldCtx, FieldElement};

/// Moore–Vandermonde matrix of a class: entry `(i, j)` is `α^(c·j·2^i)`.
pub fn moore_vandermonde(ctx: &FieldCtx, cls: &ConjugacyClass) -> FieldMatrix {
    moore_vandermonde_of(ctx, ctx.exp(cls.c as u64), cls.cardinality())
}

/// Moore–Vandermonde matrix of an arbitrary generator: entry `(i, j)` is `(e^(2^i))^j`.
pub fn moore_vandermonde_of(ctx: &FieldCtx, e: FieldElement, d: usize) -> FieldMatrix {
    let rows: alloc::vec::Vec<FieldElement> = (0..d).map(|i| ctx.frobenius(e, i as u32)).collect();
    FieldMatrix::from_fn(d, d, |i, j| ctx.pow(rows[i], j as u64))
}

/// Basis circulant of a normal basis: entry `(i, j)` is `γ^(2^((i+j) mod d))`.
pub fn basis_circulant(normal: &BasisSpec) -> FieldMatrix {
    let d = normal.vectors.len();
    FieldMatrix::from_fn(d, d, |i, j| normal.vectors[(i + j) % d])
}
