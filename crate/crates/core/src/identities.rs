//! Exact matrix identities behind the algorithms, checked block by block.
//!
//! Block-diagonal identities are verified per block so that no `n × n` field
//! matrix is ever materialized.

use alloc::vec::Vec;

use crate::conjugacy::{
    basis_transform_matrix, enumerate_classes, find_normal_basis, find_special_class_of_degree, BasisSpec,
    ConjugacyClass,
};
use crate::dft::verify_circulant_factorization;
use crate::error::Result;
use crate::evaluator::{
    build_b_matrix, build_evaluator, delta_target, mult_count, remainder_coordinates, remainder_matrix,
    target_matrix,
};
use crate::field::{FieldCtx, FieldElement};
use crate::linalg::{basis_circulant, moore_vandermonde, moore_vandermonde_of, pi_permutation, FieldMatrix};

fn divisors(m: u32) -> impl Iterator<Item = u32> {
    (1..=m).filter(move |d| m.is_multiple_of(*d))
}

fn with_bases(ctx: &FieldCtx) -> Result<Vec<(ConjugacyClass, BasisSpec)>> {
    let mut bases: Vec<Option<BasisSpec>> = (0..=ctx.m()).map(|_| None).collect();
    let mut out = Vec::new();
    for k in enumerate_classes(ctx) {
        let d = k.cardinality();
        if bases[d].is_none() {
            bases[d] = Some(find_normal_basis(ctx, d as u32)?);
        }
        out.push((k, bases[d].clone().expect("set above")));
    }
    Ok(out)
}

/// `V_k^T = M_k · L_k` for every class.
pub fn transpose_factorization(ctx: &FieldCtx) -> Result<bool> {
    for (k, nb) in with_bases(ctx)? {
        let m = FieldMatrix::from_binary(&basis_transform_matrix(ctx, &k, &nb)?);
        if moore_vandermonde(ctx, &k).transpose() != m.mul(ctx, &basis_circulant(&nb))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `V_j = V_k (M_k^T)^{-1} M_j^T` for every class `j` against the first class `k`
/// of the same cardinality.
pub fn cross_class(ctx: &FieldCtx) -> Result<bool> {
    let all = with_bases(ctx)?;
    for (j, nb) in &all {
        let (k, _) =
            all.iter().find(|(k, _)| k.cardinality() == j.cardinality()).expect("j itself qualifies");
        let mk_t_inv = basis_transform_matrix(ctx, k, nb)?.transpose().invert()?;
        let bridge = mk_t_inv.mul(&basis_transform_matrix(ctx, j, nb)?.transpose())?;
        if moore_vandermonde(ctx, j) != moore_vandermonde(ctx, k).mul_binary(&bridge)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `V = L · blockdiag(M_k^T)`, checked per block.
pub fn block_factorization(ctx: &FieldCtx) -> Result<bool> {
    for (k, nb) in with_bases(ctx)? {
        let m_t = basis_transform_matrix(ctx, &k, &nb)?.transpose();
        if moore_vandermonde(ctx, &k) != basis_circulant(&nb).mul_binary(&m_t)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The factor chain of every class's evaluator multiplies out to its Moore–Vandermonde
/// matrix, and its static count obeys the recursion. Classes with unsupported
/// cardinality are skipped.
pub fn evaluator_chain(ctx: &FieldCtx) -> Result<bool> {
    for k in enumerate_classes(ctx) {
        if mult_count(k.cardinality() as u32).is_err() {
            continue;
        }
        let ev = build_evaluator(ctx, &k)?;
        if ev.static_mults != mult_count(ev.degree as u32)? {
            return Ok(false);
        }
        if ev.to_matrix(ctx)? != target_matrix(ctx, &ev) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Even degrees `d ≥ 4` dividing `m` whose evaluators are supported.
fn even_degrees(ctx: &FieldCtx) -> impl Iterator<Item = u32> + '_ {
    divisors(ctx.m()).filter(|&d| d >= 4 && d % 2 == 0 && mult_count(d).is_ok())
}

fn special_and_delta(ctx: &FieldCtx, d: u32) -> Result<(FieldElement, FieldElement)> {
    let e = find_special_class_of_degree(ctx, d)?.generator(ctx);
    Ok((e, ctx.mul(e, ctx.frobenius(e, d / 2))))
}

/// The stacked remainder matrices `U(i)`, rows interleaved as `u_{0,0}, u_{0,1}, u_{1,0}, …`,
/// equal `Π^{-1} · blockdiag(Δ, Δ) · Π · B^{-1}`; also `U(i) = U(0)^(2^i)` entrywise.
pub fn upper_remainders(ctx: &FieldCtx) -> Result<bool> {
    for d in even_degrees(ctx) {
        let (_, delta) = special_and_delta(ctx, d)?;
        let (d, h) = (d as usize, d as usize / 2);
        let u0 = remainder_matrix(ctx, delta, d)?;
        let mut upper = FieldMatrix::zeros(d, d);
        for i in 0..h {
            let ui = remainder_matrix(ctx, ctx.frobenius(delta, i as u32), d)?;
            if ui.u != u0.u.map(|a| ctx.frobenius(a, i as u32)) {
                return Ok(false);
            }
            for r in 0..2 {
                for j in 0..d {
                    upper.set(2 * i + r, j, ui.u.get(r, j));
                }
            }
        }
        let big_delta = moore_vandermonde_of(ctx, delta, h);
        let pi = FieldMatrix::from_binary(&pi_permutation(d)?.to_matrix());
        let rhs = pi
            .transpose()
            .mul(ctx, &FieldMatrix::block_diag(&[&big_delta, &big_delta]))?
            .mul(ctx, &pi)?
            .mul_binary(&remainder_coordinates(ctx, &u0, delta)?)?;
        if upper != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `U·B` equals the interleaved δ-power target, `B` is nonsingular, and `B^{-1}`
/// is unit upper triangular.
pub fn remainder_basis(ctx: &FieldCtx) -> Result<bool> {
    for d in even_degrees(ctx) {
        let (_, delta) = special_and_delta(ctx, d)?;
        let u = remainder_matrix(ctx, delta, d as usize)?;
        let b = build_b_matrix(ctx, &u, delta)?;
        let b_inv = b.invert()?;
        let triangular = (0..b_inv.rows()).all(|i| b_inv.get(i, i) && b_inv.row_ones(i).all(|j| j >= i));
        if !triangular || u.u.mul_binary(&b)? != delta_target(ctx, delta, d as usize) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For each even `d` dividing `m`, the special generator satisfies
/// `e^(2^i) + e^(2^(d/2+i)) = 1` for all `i < d/2`, and the `δ^(2^i)` are distinct.
pub fn special_relation(ctx: &FieldCtx) -> Result<bool> {
    for d in divisors(ctx.m()).filter(|d| d % 2 == 0) {
        let (e, delta) = special_and_delta(ctx, d)?;
        let h = d / 2;
        let mut seen = Vec::new();
        for i in 0..h {
            if ctx.frobenius(e, i) + ctx.frobenius(e, h + i) != FieldElement::ONE {
                return Ok(false);
            }
            let di = ctx.frobenius(delta, i);
            if seen.contains(&di) {
                return Ok(false);
            }
            seen.push(di);
        }
    }
    Ok(true)
}

/// `L = D · P_c` (odd `m` is reported as not applicable).
pub fn circulant_factorization(ctx: &FieldCtx) -> Result<bool> {
    verify_circulant_factorization(ctx)
}

pub type CheckFn = fn(&FieldCtx) -> Result<bool>;

/// Named checks; the `bool` marks those that need even `m`.
pub const CHECKS: [(&str, CheckFn, bool); 8] = [
    ("V^T = M L", transpose_factorization, false),
    ("V_j = V_k (M_k^T)^-1 M_j^T", cross_class, false),
    ("V = L blockdiag(M^T)", block_factorization, false),
    ("evaluator factor chain = V", evaluator_chain, false),
    ("U_upper = Pi^-1 diag(D,D) Pi B^-1", upper_remainders, true),
    ("U B = delta-power target", remainder_basis, true),
    ("special generator relation", special_relation, true),
    ("L = D P_c", circulant_factorization, true),
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_hold_small() {
        for m in [2, 3, 4, 6] {
            let ctx = FieldCtx::new(m, None).unwrap();
            for (name, f, even) in CHECKS {
                if even && m % 2 == 1 {
                    continue;
                }
                assert!(f(&ctx).unwrap(), "{name} m={m}");
            }
        }
    }
}
