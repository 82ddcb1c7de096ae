//! Factored multipoint evaluation over one conjugacy class.
//!
//! A [`FactoredEvaluator`] computes `T_i = t(e^(2^i))`, `i < d`, for a generator `e`
//! of degree `d`, i.e. multiplies by the Moore–Vandermonde matrix of `e`. Even
//! degrees use a two-level division: first by the quadratics `x² + x + δ^(2^i)`
//! over GF(2^(d/2)) (two evaluations in the half-degree subfield), then by the
//! linear factors `x + e^(2^i)` and `x + e^(2^i) + 1`.
//!
//! Every evaluator splits into a leading binary matrix, which carries all additions
//! that happen before the first multiplication, and a core.

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;

use crate::conjugacy::{
    enumerate_classes, find_normal_basis, find_special_class_of_degree, is_special, transform_matrix_of,
    BasisSpec,
};
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};
use crate::linalg::{moore_vandermonde_of, pi_permutation, BinMatrix, FieldMatrix, Permutation};
use crate::opcount::{AddStage, OpCounter};

/// The 2×d matrix of remainders `x^j mod (x² + x + ε) = r_{0,j} + r_{1,j}·x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RemainderMatrix {
    pub epsilon: FieldElement,
    pub u: FieldMatrix,
}

/// Builds the remainder matrix by `r_{·,j} = r_{·,j-1} + ε·r_{·,j-2}`.
pub fn remainder_matrix(ctx: &FieldCtx, epsilon: FieldElement, m: usize) -> Result<RemainderMatrix> {
    if m <= 2 {
        return Err(Error::DegreeTooSmall { m: m as u32 });
    }
    let mut u = FieldMatrix::zeros(2, m);
    u.set(0, 0, FieldElement::ONE);
    u.set(1, 1, FieldElement::ONE);
    for j in 2..m {
        for r in 0..2 {
            let v = u.get(r, j - 1) + ctx.mul(epsilon, u.get(r, j - 2));
            u.set(r, j, v);
        }
    }
    Ok(RemainderMatrix { epsilon, u })
}

/// Coordinates of the remainder columns in powers of δ: entry `(2j, col)` is the
/// `δ^j` coefficient of `r_{0,col}`, entry `(2j+1, col)` that of `r_{1,col}`.
///
/// This is `B^{-1}`; it is unit upper triangular.
pub fn remainder_coordinates(ctx: &FieldCtx, u: &RemainderMatrix, delta: FieldElement) -> Result<BinMatrix> {
    let d = u.u.cols();
    if !d.is_multiple_of(2) {
        return Err(Error::OddExtensionDegree { m: d as u32 });
    }
    let h = d / 2;
    let basis = BasisSpec::polynomial(ctx, delta, h as u32).map_err(|_| Error::SingularSystem)?;
    let solver = basis.solver();
    let mut c = BinMatrix::zeros(d, d);
    for col in 0..d {
        for r in 0..2 {
            let bits = solver.coords(u.u.get(r, col)).map_err(|_| Error::SingularSystem)?;
            for j in 0..h {
                if bits >> j & 1 == 1 {
                    c.set(2 * j + r, col, true);
                }
            }
        }
    }
    Ok(c)
}

/// The binary matrix `B` with `U·B` equal to the interleaved δ-power target
/// (`δ^j` at `(0, 2j)` and `(1, 2j+1)`).
pub fn build_b_matrix(ctx: &FieldCtx, u: &RemainderMatrix, delta: FieldElement) -> Result<BinMatrix> {
    remainder_coordinates(ctx, u, delta)?.invert().map_err(|_| Error::SingularSystem)
}

/// The interleaved δ-power target of `build_b_matrix`.
pub fn delta_target(ctx: &FieldCtx, delta: FieldElement, d: usize) -> FieldMatrix {
    FieldMatrix::from_fn(2, d, |r, col| {
        if col % 2 == r {
            ctx.pow(delta, (col / 2) as u64)
        } else {
            FieldElement::ZERO
        }
    })
}

fn is_unit_upper_triangular(a: &BinMatrix) -> bool {
    (0..a.rows()).all(|i| a.get(i, i) && a.row_ones(i).all(|j| j >= i))
}

/// Multiplicative complexity of evaluation over a class of cardinality `m`:
/// `Mult(1) = 0`, `Mult(2) = 1`, `Mult(3) = 3`, `Mult(m) = 2·Mult(m/2) + m/2` for even `m`.
pub fn mult_count(m: u32) -> Result<u64> {
    match m {
        0 => Err(Error::UnsupportedDegree { degree: 0, missing_kernel: 0 }),
        1 => Ok(0),
        2 => Ok(1),
        3 => Ok(3),
        _ if m.is_multiple_of(2) => Ok(2 * mult_count(m / 2).map_err(|_| unsupported(m))? + (m / 2) as u64),
        _ => Err(unsupported(m)),
    }
}

fn unsupported(degree: u32) -> Error {
    Error::UnsupportedDegree { degree, missing_kernel: degree >> degree.trailing_zeros() }
}

fn check_supported(d: u32) -> Result<()> {
    match d >> d.trailing_zeros() {
        1 | 3 => Ok(()),
        _ => Err(unsupported(d)),
    }
}

/// The generator used for all classes of cardinality `d`: 1 for `d = 1`, the smallest
/// class generator for `d ∈ {2, 3}`, and the special class for even `d ≥ 4`.
pub fn reference_generator(ctx: &FieldCtx, d: u32) -> Result<FieldElement> {
    check_supported(d)?;
    if d.is_multiple_of(2) && d >= 4 {
        return Ok(find_special_class_of_degree(ctx, d)?.generator(ctx));
    }
    if !ctx.m().is_multiple_of(d) {
        return Err(Error::DegreeNotDivisor { d, m: ctx.m() });
    }
    let cls = enumerate_classes(ctx)
        .into_iter()
        .find(|k| k.cardinality() == d as usize)
        .expect("every divisor of m has a class of that cardinality");
    Ok(cls.generator(ctx))
}

/// `(M_ref^T)^{-1}·M_e^T`: maps `t` to the input that makes the reference evaluator
/// return the evaluation over `e`'s class.
pub fn bridge_matrix(
    ctx: &FieldCtx,
    reference: FieldElement,
    e: FieldElement,
    normal: &BasisSpec,
) -> Result<BinMatrix> {
    let m_ref = transform_matrix_of(ctx, reference, normal)?;
    let m_e = transform_matrix_of(ctx, e, normal)?;
    m_ref.transpose().invert()?.mul(&m_e.transpose())
}

/// Structure of a [`FactoredEvaluator`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Variant {
    /// Degree 1: the identity.
    Trivial,
    /// Degree 2: `[[1,0],[1,1]]·[[1,e],[0,1]]`.
    Base2 { constant: FieldElement },
    /// Degree 3: normalized cyclic convolution through CRT modulo `(x+1)(x²+x+1)`.
    ///
    /// `pre` (4×3) produces `(u0, a0, a1, a0+a1)`; the three products by `constants`
    /// are recombined by `post` (3×4).
    Base3 { gamma: FieldElement, pre: BinMatrix, constants: [FieldElement; 3], post: BinMatrix },
    /// Even degree `d ≥ 4` with a special generator.
    Even {
        delta: FieldElement,
        /// `e^(2^i)`, `i < d/2`.
        diag: Vec<FieldElement>,
        pi: Permutation,
        b_inv: BinMatrix,
        /// Lifts δ's evaluation onto the subfield reference evaluator.
        delta_pre: BinMatrix,
        sub: Box<FactoredEvaluator>,
    },
    /// Even degree with a non-special generator, evaluated as `inner · bridge`.
    Bridged { bridge: BinMatrix, inner: Box<FactoredEvaluator> },
}

/// One factor of an evaluator's matrix product, in application order.
#[derive(Clone, Debug)]
pub enum Factor<'a> {
    Binary(BinMatrix),
    Perm(Permutation),
    /// Plain diagonal matrix.
    Diag(Vec<FieldElement>),
    /// `[[I, diag(c)], [0, I]]`.
    UpperDiag(Vec<FieldElement>),
    /// `copies` independent applications of a sub-evaluator on consecutive slices.
    Sub {
        copies: usize,
        eval: &'a FactoredEvaluator,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredEvaluator {
    pub degree: usize,
    pub generator: FieldElement,
    pub variant: Variant,
    pub static_mults: u64,
    /// Field-stage additions of the core.
    pub core_adds: u64,
    leading: BinMatrix,
}

/// Evaluator for the class of `cls`.
pub fn build_evaluator(ctx: &FieldCtx, cls: &crate::conjugacy::ConjugacyClass) -> Result<FactoredEvaluator> {
    build_evaluator_for(ctx, cls.generator(ctx), cls.cardinality() as u32)
}

/// Evaluator for generator `e` of degree `d` over GF(2).
pub fn build_evaluator_for(ctx: &FieldCtx, e: FieldElement, d: u32) -> Result<FactoredEvaluator> {
    check_supported(d)?;
    let deg = ctx.conjugate_count(e);
    if e.is_zero() || deg != d {
        return Err(Error::WrongCardinality { expected: d as usize, found: deg as usize });
    }
    match d {
        1 => Ok(FactoredEvaluator {
            degree: 1,
            generator: e,
            variant: Variant::Trivial,
            static_mults: 0,
            core_adds: 0,
            leading: BinMatrix::identity(1),
        }),
        2 => Ok(FactoredEvaluator {
            degree: 2,
            generator: e,
            variant: Variant::Base2 { constant: e },
            static_mults: 1,
            core_adds: 2,
            leading: BinMatrix::identity(2),
        }),
        3 => build_base3(ctx, e),
        _ if is_special(ctx, e) => build_even(ctx, e, d),
        _ => {
            let reference = reference_generator(ctx, d)?;
            let normal = find_normal_basis(ctx, d)?;
            let bridge = bridge_matrix(ctx, reference, e, &normal)?;
            let inner = build_even(ctx, reference, d)?;
            Ok(FactoredEvaluator {
                degree: d as usize,
                generator: e,
                static_mults: inner.static_mults,
                core_adds: inner.core_adds,
                leading: inner.leading.mul(&bridge)?,
                variant: Variant::Bridged { bridge, inner: Box::new(inner) },
            })
        }
    }
}

fn build_base3(ctx: &FieldCtx, e: FieldElement) -> Result<FactoredEvaluator> {
    let normal = find_normal_basis(ctx, 3)?;
    let g = &normal.vectors;
    let m_t = transform_matrix_of(ctx, e, &normal)?.transpose();
    // y = M^T t, reversed to turn the circulant correlation into a convolution,
    // then reduced modulo x + 1 and x² + x + 1.
    let reduce = BinMatrix::from_rows(&[[1, 1, 1], [1, 0, 1], [0, 1, 1], [1, 1, 0]])?;
    let rev = BinMatrix::from_rows(&[[1, 0, 0], [0, 0, 1], [0, 1, 0]])?;
    let pre = reduce.mul(&rev)?.mul(&m_t)?;
    let b0 = g[0] + g[2];
    let b1 = g[1] + g[2];
    let post = BinMatrix::from_rows(&[[1, 1, 0, 1], [1, 1, 1, 0], [1, 0, 1, 1]])?;
    Ok(FactoredEvaluator {
        degree: 3,
        generator: e,
        variant: Variant::Base3 {
            gamma: normal.generator,
            pre: pre.clone(),
            constants: [b0, b1, b0 + b1],
            post,
        },
        static_mults: 3,
        core_adds: 6,
        leading: pre,
    })
}

fn build_even(ctx: &FieldCtx, e: FieldElement, d: u32) -> Result<FactoredEvaluator> {
    let h = d / 2;
    let delta = ctx.mul(e, ctx.frobenius(e, h));
    let u = remainder_matrix(ctx, delta, d as usize)?;
    let b_inv = remainder_coordinates(ctx, &u, delta)?;
    debug_assert!(is_unit_upper_triangular(&b_inv));
    let pi = pi_permutation(d as usize)?;
    let reference = reference_generator(ctx, h)?;
    let sub = build_evaluator_for(ctx, reference, h)?;
    let delta_pre = bridge_matrix(ctx, reference, delta, &find_normal_basis(ctx, h)?)?;
    let half_lead = sub.leading.mul(&delta_pre)?;
    let leading = BinMatrix::block_diag(&[&half_lead, &half_lead]).mul(&pi.to_matrix())?.mul(&b_inv)?;
    let diag = (0..h).map(|i| ctx.frobenius(e, i)).collect();
    Ok(FactoredEvaluator {
        degree: d as usize,
        generator: e,
        static_mults: 2 * sub.static_mults + h as u64,
        core_adds: 2 * sub.core_adds + d as u64,
        leading,
        variant: Variant::Even { delta, diag, pi, b_inv, delta_pre, sub: Box::new(sub) },
    })
}

impl FactoredEvaluator {
    /// All additions before the first multiplication, as one binary matrix
    /// (`core_len × degree`).
    pub fn leading_binary(&self) -> &BinMatrix {
        &self.leading
    }

    /// Length of the vector consumed by [`FactoredEvaluator::apply_core`].
    pub fn core_len(&self) -> usize {
        self.leading.rows()
    }

    /// Computes `T = V·t`, counting leading additions as binary-stage additions.
    pub fn apply(
        &self,
        ctx: &FieldCtx,
        t: &[FieldElement],
        counter: &mut OpCounter,
    ) -> Result<Vec<FieldElement>> {
        let x = self.leading.apply_counted(t, counter, AddStage::Binary)?;
        self.apply_core(ctx, &x, counter)
    }

    /// Runs the multiplicative core on an input already multiplied by the leading matrix.
    pub fn apply_core(
        &self,
        ctx: &FieldCtx,
        x: &[FieldElement],
        counter: &mut OpCounter,
    ) -> Result<Vec<FieldElement>> {
        if x.len() != self.core_len() {
            return Err(Error::LengthMismatch { expected: self.core_len(), found: x.len() });
        }
        Ok(match &self.variant {
            Variant::Trivial => x.to_vec(),
            Variant::Base2 { constant } => {
                counter.count_mult_site(*constant);
                counter.count_adds(AddStage::Field, 2);
                let y0 = x[0] + ctx.mul(*constant, x[1]);
                vec![y0, y0 + x[1]]
            }
            Variant::Base3 { constants, .. } => {
                let p: Vec<FieldElement> = constants
                    .iter()
                    .zip(&x[1..])
                    .map(|(&c, &a)| {
                        counter.count_mult_site(c);
                        ctx.mul(c, a)
                    })
                    .collect();
                counter.count_adds(AddStage::Field, 6);
                let u0 = x[0];
                vec![u0 + p[0] + p[2], u0 + p[0] + p[1], u0 + p[1] + p[2]]
            }
            Variant::Even { diag, sub, .. } => {
                let half = sub.core_len();
                let lo = sub.apply_core(ctx, &x[..half], counter)?;
                let hi = sub.apply_core(ctx, &x[half..], counter)?;
                let mut out = Vec::with_capacity(self.degree);
                for (i, &c) in diag.iter().enumerate() {
                    counter.count_mult_site(c);
                    out.push(lo[i] + ctx.mul(c, hi[i]));
                }
                for i in 0..diag.len() {
                    let v = out[i] + hi[i];
                    out.push(v);
                }
                counter.count_adds(AddStage::Field, self.degree);
                out
            }
            Variant::Bridged { inner, .. } => inner.apply_core(ctx, x, counter)?,
        })
    }

    /// The stacked upper-level remainders `(u_{i,0})_i ; (u_{i,1})_i` of an even evaluator.
    pub fn upper_stage(&self, ctx: &FieldCtx, t: &[FieldElement]) -> Result<Vec<FieldElement>> {
        match &self.variant {
            Variant::Even { sub, .. } => {
                let mut c = OpCounter::new();
                let x = self.leading.apply(t)?;
                let half = sub.core_len();
                let mut out = sub.apply_core(ctx, &x[..half], &mut c)?;
                out.extend(sub.apply_core(ctx, &x[half..], &mut c)?);
                Ok(out)
            }
            Variant::Bridged { bridge, inner } => inner.upper_stage(ctx, &bridge.apply(t)?),
            _ => Err(Error::DegreeTooSmall { m: self.degree as u32 }),
        }
    }

    /// The factor chain in application order (first element applied first).
    pub fn factors(&self) -> Vec<Factor<'_>> {
        match &self.variant {
            Variant::Trivial => Vec::new(),
            Variant::Base2 { constant } => vec![
                Factor::UpperDiag(vec![*constant]),
                Factor::Binary(BinMatrix::from_rows(&[[1, 0], [1, 1]]).expect("static")),
            ],
            Variant::Base3 { pre, constants, post, .. } => vec![
                Factor::Binary(pre.clone()),
                Factor::Diag(vec![FieldElement::ONE, constants[0], constants[1], constants[2]]),
                Factor::Binary(post.clone()),
            ],
            Variant::Even { diag, pi, b_inv, delta_pre, sub, .. } => {
                let h = diag.len();
                let mut lower = BinMatrix::identity(2 * h);
                for i in 0..h {
                    lower.set(h + i, i, true);
                }
                vec![
                    Factor::Binary(b_inv.clone()),
                    Factor::Perm(pi.clone()),
                    Factor::Binary(BinMatrix::block_diag(&[delta_pre, delta_pre])),
                    Factor::Sub { copies: 2, eval: sub },
                    Factor::UpperDiag(diag.clone()),
                    Factor::Binary(lower),
                ]
            }
            Variant::Bridged { bridge, inner } => {
                vec![Factor::Binary(bridge.clone()), Factor::Sub { copies: 1, eval: inner }]
            }
        }
    }

    /// Multiplies out the factor chain into a dense matrix.
    pub fn to_matrix(&self, ctx: &FieldCtx) -> Result<FieldMatrix> {
        let mut acc = FieldMatrix::identity(self.degree);
        for f in self.factors() {
            acc = factor_matrix(ctx, &f)?.mul(ctx, &acc)?;
        }
        Ok(acc)
    }

    /// Dense matrix of the core, so that `to_matrix = core_matrix · leading_binary`.
    pub fn core_matrix(&self, ctx: &FieldCtx) -> Result<FieldMatrix> {
        Ok(match &self.variant {
            Variant::Trivial => FieldMatrix::identity(1),
            Variant::Base2 { constant } => FieldMatrix::from_rows(&[
                vec![FieldElement::ONE, *constant],
                vec![FieldElement::ONE, *constant + FieldElement::ONE],
            ])?,
            Variant::Base3 { constants, post, .. } => {
                let d = FieldMatrix::diag(&[FieldElement::ONE, constants[0], constants[1], constants[2]]);
                FieldMatrix::from_binary(post).mul(ctx, &d)?
            }
            Variant::Even { diag, sub, .. } => {
                let s = sub.core_matrix(ctx)?;
                let both = FieldMatrix::block_diag(&[&s, &s]);
                factor_matrix(ctx, &Factor::UpperDiag(diag.clone()))
                    .and_then(|ud| {
                        let h = diag.len();
                        let lower = FieldMatrix::from_fn(2 * h, 2 * h, |i, j| {
                            FieldElement((i == j || i == j + h) as u16)
                        });
                        lower.mul(ctx, &ud)
                    })?
                    .mul(ctx, &both)?
            }
            Variant::Bridged { inner, .. } => inner.core_matrix(ctx)?,
        })
    }
}

/// Dense matrix of a single factor.
pub fn factor_matrix(ctx: &FieldCtx, f: &Factor<'_>) -> Result<FieldMatrix> {
    Ok(match f {
        Factor::Binary(b) => FieldMatrix::from_binary(b),
        Factor::Perm(p) => FieldMatrix::from_binary(&p.to_matrix()),
        Factor::Diag(c) => FieldMatrix::diag(c),
        Factor::UpperDiag(c) => {
            let h = c.len();
            FieldMatrix::from_fn(2 * h, 2 * h, |i, j| {
                if i == j {
                    FieldElement::ONE
                } else if j == i + h {
                    c[i]
                } else {
                    FieldElement::ZERO
                }
            })
        }
        Factor::Sub { copies, eval } => {
            let s = eval.to_matrix(ctx)?;
            let blocks: Vec<&FieldMatrix> = (0..*copies).map(|_| &s).collect();
            FieldMatrix::block_diag(&blocks)
        }
    })
}

/// Free-function form of [`FactoredEvaluator::apply`].
pub fn apply_evaluator(
    ctx: &FieldCtx,
    eval: &FactoredEvaluator,
    t: &[FieldElement],
    counter: &mut OpCounter,
) -> Result<Vec<FieldElement>> {
    eval.apply(ctx, t, counter)
}

/// Dense Moore–Vandermonde matrix of the evaluator's generator.
pub fn target_matrix(ctx: &FieldCtx, eval: &FactoredEvaluator) -> FieldMatrix {
    moore_vandermonde_of(ctx, eval.generator, eval.degree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conjugacy::{enumerate_classes, find_special_class};

    fn gf16() -> FieldCtx {
        FieldCtx::new(4, None).unwrap()
    }

    #[test]
    fn mult_counts() {
        let got: Vec<u64> = [1, 2, 4, 6, 8, 12].iter().map(|&m| mult_count(m).unwrap()).collect();
        assert_eq!(got, [0, 1, 4, 9, 12, 24]);
        assert_eq!(mult_count(3).unwrap(), 3);
        assert_eq!(mult_count(16).unwrap(), 32);
        assert_eq!(mult_count(10), Err(Error::UnsupportedDegree { degree: 10, missing_kernel: 5 }));
        assert_eq!(mult_count(5), Err(Error::UnsupportedDegree { degree: 5, missing_kernel: 5 }));
    }

    #[test]
    fn remainder_columns() {
        let ctx = gf16();
        let d = ctx.exp(5);
        let u = remainder_matrix(&ctx, d, 4).unwrap();
        let one = FieldElement::ONE;
        assert_eq!(u.u.row(0), [one, FieldElement::ZERO, d, d]);
        assert_eq!(u.u.row(1), [FieldElement::ZERO, one, one, d + one]);
        assert_eq!(remainder_matrix(&ctx, d, 2), Err(Error::DegreeTooSmall { m: 2 }));
    }

    #[test]
    fn b_matrix_gf16() {
        let ctx = gf16();
        let d = ctx.exp(5);
        let u = remainder_matrix(&ctx, d, 4).unwrap();
        let b = build_b_matrix(&ctx, &u, d).unwrap();
        assert_eq!(b.to_bitstrings(), ["1000", "0110", "0011", "0001"]);
        let c = remainder_coordinates(&ctx, &u, d).unwrap();
        assert_eq!(c.to_bitstrings(), ["1000", "0111", "0011", "0001"]);
        assert!(is_unit_upper_triangular(&c));
        assert_eq!(u.u.mul_binary(&b).unwrap(), delta_target(&ctx, d, 4));
    }

    #[test]
    fn base2_and_even_gf16() {
        let ctx = gf16();
        let k = find_special_class(&ctx).unwrap();
        let ev = build_evaluator(&ctx, &k).unwrap();
        assert_eq!(ev.static_mults, 4);
        assert_eq!(ev.core_adds, 8);
        assert_eq!(ev.to_matrix(&ctx).unwrap(), target_matrix(&ctx, &ev));
        assert_eq!(
            ev.core_matrix(&ctx).unwrap().mul_binary(ev.leading_binary()).unwrap(),
            target_matrix(&ctx, &ev)
        );
        assert_eq!(ev.leading_binary().to_bitstrings(), ["1000", "0011", "0111", "0001"]);
        let b2 = build_evaluator_for(&ctx, ctx.exp(5), 2).unwrap();
        assert_eq!(b2.to_matrix(&ctx).unwrap(), target_matrix(&ctx, &b2));
    }

    #[test]
    fn every_class_of_gf16() {
        let ctx = gf16();
        for k in enumerate_classes(&ctx) {
            let ev = build_evaluator(&ctx, &k).unwrap();
            assert_eq!(ev.to_matrix(&ctx).unwrap(), target_matrix(&ctx, &ev), "class {}", k.c);
            let t: Vec<_> = (0..k.cardinality()).map(|i| ctx.exp(3 * i as u64 + 1)).collect();
            let mut c = OpCounter::new();
            let got = ev.apply(&ctx, &t, &mut c).unwrap();
            assert_eq!(got, target_matrix(&ctx, &ev).apply(&ctx, &t).unwrap());
            assert_eq!(c.mults, ev.static_mults);
        }
    }

    #[test]
    fn base3_in_gf64() {
        let ctx = FieldCtx::new(6, None).unwrap();
        for k in enumerate_classes(&ctx).into_iter().filter(|k| k.cardinality() == 3) {
            let ev = build_evaluator(&ctx, &k).unwrap();
            assert_eq!(ev.static_mults, 3);
            assert_eq!(ev.to_matrix(&ctx).unwrap(), target_matrix(&ctx, &ev));
            if let Variant::Base3 { constants, .. } = &ev.variant {
                assert!(constants.iter().all(|c| !c.is_binary()));
            }
        }
        let ev = build_evaluator(&ctx, &find_special_class(&ctx).unwrap()).unwrap();
        assert_eq!(ev.static_mults, 9);
        assert_eq!(ev.to_matrix(&ctx).unwrap(), target_matrix(&ctx, &ev));
    }

    #[test]
    fn unsupported_degrees() {
        let ctx = FieldCtx::new(10, None).unwrap();
        let k = enumerate_classes(&ctx).into_iter().find(|k| k.cardinality() == 10).unwrap();
        let err = build_evaluator(&ctx, &k).unwrap_err();
        assert_eq!(err, Error::UnsupportedDegree { degree: 10, missing_kernel: 5 });
        assert!(alloc::format!("{err}").contains("missing degree-5 base kernel"));
    }
}
