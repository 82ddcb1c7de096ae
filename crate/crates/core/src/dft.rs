//! DFT pipelines compiled into executable plans with static operation counts.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::conjugacy::{
    basis_transform_matrix, enumerate_classes, find_normal_basis, plan_order, transform_matrix_of, BasisSpec,
    ConjugacyClass,
};
use crate::error::{Error, Result};
use crate::evaluator::{build_evaluator_for, mult_count, reference_generator, FactoredEvaluator};
use crate::field::{FieldCtx, FieldElement};
use crate::linalg::{
    basis_circulant, greedy_cse, moore_vandermonde, AdditionSchedule, BinMatrix, FieldMatrix, Permutation,
};
use crate::opcount::{AddStage, OpCounter};
use crate::poly::minimal_poly_gf2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Naive,
    GoertzelBlahut,
    Cyclotomic,
    Novel,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] =
        [Algorithm::Naive, Algorithm::GoertzelBlahut, Algorithm::Cyclotomic, Algorithm::Novel];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Naive => "naive",
            Algorithm::GoertzelBlahut => "gb",
            Algorithm::Cyclotomic => "cyclotomic",
            Algorithm::Novel => "novel",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = ();

    fn from_str(s: &str) -> core::result::Result<Algorithm, ()> {
        Algorithm::ALL.into_iter().find(|a| a.name() == s).ok_or(())
    }
}

/// How one block of the field stage is evaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlockKind {
    Dense(FieldMatrix),
    /// Core of `plan.evaluators[i]`.
    Core(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StageBlock {
    pub class: ConjugacyClass,
    pub kind: BlockKind,
    pub in_len: usize,
    pub out_len: usize,
}

/// A compiled transform: `F = scatter(π, post · blocks · pre · f)`.
#[derive(Clone, Debug)]
pub struct DftPlan {
    pub algorithm: Algorithm,
    pub m: u32,
    pub modulus: u32,
    /// Binary preaddition matrix (R, PR, or an input gather).
    pub pre_matrix: BinMatrix,
    pub field_stage: Vec<StageBlock>,
    /// Shared evaluators referenced by [`BlockKind::Core`].
    pub evaluators: Vec<FactoredEvaluator>,
    pub post_matrix: Option<BinMatrix>,
    /// Row `r` of the block output is `F[output_perm.image()[r]]`.
    pub output_perm: Permutation,
    pub static_mults: u64,
    pub static_field_adds: u64,
    /// Binary-stage additions when every binary matrix is applied row by row.
    pub static_adds_naive: u64,
    /// Binary-stage additions after [`DftPlan::optimize_additions`].
    pub static_adds_cse: Option<u64>,
    pre_schedule: AdditionSchedule,
    post_schedule: Option<AdditionSchedule>,
}

impl DftPlan {
    #[allow(clippy::too_many_arguments)]
    fn assemble(
        ctx: &FieldCtx,
        algorithm: Algorithm,
        pre_matrix: BinMatrix,
        field_stage: Vec<StageBlock>,
        evaluators: Vec<FactoredEvaluator>,
        post_matrix: Option<BinMatrix>,
        output_perm: Permutation,
    ) -> DftPlan {
        let mut mults = 0;
        let mut field_adds = 0;
        for b in &field_stage {
            match &b.kind {
                BlockKind::Dense(w) => {
                    for i in 0..w.rows() {
                        let row = w.row(i);
                        mults += row.iter().filter(|a| !a.is_binary()).count() as u64;
                        field_adds += row.iter().filter(|a| !a.is_zero()).count().saturating_sub(1) as u64;
                    }
                }
                BlockKind::Core(i) => {
                    mults += evaluators[*i].static_mults;
                    field_adds += evaluators[*i].core_adds;
                }
            }
        }
        let naive = pre_matrix.naive_additions() + post_matrix.as_ref().map_or(0, BinMatrix::naive_additions);
        DftPlan {
            algorithm,
            m: ctx.m(),
            modulus: ctx.modulus(),
            pre_schedule: AdditionSchedule::naive(&pre_matrix),
            post_schedule: post_matrix.as_ref().map(AdditionSchedule::naive),
            pre_matrix,
            field_stage,
            evaluators,
            post_matrix,
            output_perm,
            static_mults: mults,
            static_field_adds: field_adds,
            static_adds_naive: naive as u64,
            static_adds_cse: None,
        }
    }

    /// Replaces the row-by-row binary schedules with greedy CSE schedules.
    ///
    /// Cost grows quickly with `n`; intended for `n ≤ 255`.
    pub fn optimize_additions(&mut self) {
        self.pre_schedule = greedy_cse(&self.pre_matrix);
        self.post_schedule = self.post_matrix.as_ref().map(greedy_cse);
        self.static_adds_cse = Some(self.binary_stage_adds());
    }

    /// Binary-stage additions of the schedules execution will use.
    pub fn binary_stage_adds(&self) -> u64 {
        (self.pre_schedule.len() + self.post_schedule.as_ref().map_or(0, AdditionSchedule::len)) as u64
    }

    pub fn pre_schedule(&self) -> &AdditionSchedule {
        &self.pre_schedule
    }

    /// Static counts as an [`OpCounter`], using the active schedules.
    pub fn static_counts(&self) -> OpCounter {
        OpCounter {
            mults: self.static_mults,
            field_adds: self.static_field_adds,
            binary_stage_adds: self.binary_stage_adds(),
        }
    }

    pub fn n(&self) -> usize {
        self.output_perm.len()
    }

    fn check_field(&self, ctx: &FieldCtx) -> Result<()> {
        if ctx.m() != self.m || ctx.modulus() != self.modulus {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }
}

/// `F_j = Σ f_i α^(ij)`.
pub fn naive_dft(ctx: &FieldCtx, f: &[FieldElement]) -> Result<Vec<FieldElement>> {
    naive_transform(ctx, f, 1, &mut OpCounter::new())
}

/// `f_i = Σ F_j α^(-ij)`; no scaling is needed because `n` is odd.
pub fn naive_idft(ctx: &FieldCtx, big_f: &[FieldElement]) -> Result<Vec<FieldElement>> {
    naive_transform(ctx, big_f, ctx.n() as u64 - 1, &mut OpCounter::new())
}

fn naive_transform(
    ctx: &FieldCtx,
    f: &[FieldElement],
    step: u64,
    counter: &mut OpCounter,
) -> Result<Vec<FieldElement>> {
    let n = ctx.n() as usize;
    if f.len() != n {
        return Err(Error::LengthMismatch { expected: n, found: f.len() });
    }
    let mut out = Vec::with_capacity(n);
    for j in 0..n as u64 {
        let mut acc = FieldElement::ZERO;
        for (i, &x) in f.iter().enumerate() {
            let w = ctx.exp(i as u64 * j % n as u64 * step);
            counter.count_mult_site(w);
            acc += ctx.mul(w, x);
        }
        counter.count_adds(AddStage::Field, n - 1);
        out.push(acc);
    }
    Ok(out)
}

/// The definitional transform as a plan (no dense matrix is stored).
pub fn naive_plan(ctx: &FieldCtx) -> DftPlan {
    let n = ctx.n() as usize;
    let mut plan = DftPlan::assemble(
        ctx,
        Algorithm::Naive,
        BinMatrix::identity(n),
        Vec::new(),
        Vec::new(),
        None,
        Permutation::identity(n),
    );
    let nz = |i: u64| gcd(i, n as u64);
    let trivial: u64 = (0..n as u64).map(nz).sum();
    plan.static_mults = (n * n) as u64 - trivial;
    plan.static_field_adds = (n * (n - 1)) as u64;
    plan
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Rows of `R` for one class: entry `(i, j)` is the coefficient of `x^i` in `x^j mod M_k(x)`.
pub fn remainder_rows(ctx: &FieldCtx, cls: &ConjugacyClass) -> Result<BinMatrix> {
    let mk = minimal_poly_gf2(ctx, cls.generator(ctx))?;
    let d = cls.cardinality();
    let n = ctx.n() as usize;
    let mut r = BinMatrix::zeros(d, n);
    let mut x = 1u64;
    for j in 0..n {
        for i in 0..d {
            if x >> i & 1 == 1 {
                r.set(i, j, true);
            }
        }
        x <<= 1;
        if x >> d & 1 == 1 {
            x ^= mk.bits();
        }
    }
    Ok(r)
}

fn member_order(classes: &[ConjugacyClass]) -> Result<Permutation> {
    Permutation::new(classes.iter().flat_map(|k| k.members.iter().map(|&x| x as usize)).collect())
}

/// Goertzel–Blahut: remainders modulo each minimal polynomial, then dense evaluation.
pub fn gb_plan(ctx: &FieldCtx) -> Result<DftPlan> {
    let classes = plan_order(enumerate_classes(ctx));
    let mut rows = Vec::with_capacity(classes.len());
    let mut blocks = Vec::with_capacity(classes.len());
    for k in &classes {
        rows.push(remainder_rows(ctx, k)?);
        let d = k.cardinality();
        blocks.push(StageBlock {
            class: k.clone(),
            kind: BlockKind::Dense(moore_vandermonde(ctx, k)),
            in_len: d,
            out_len: d,
        });
    }
    let perm = member_order(&classes)?;
    Ok(DftPlan::assemble(
        ctx,
        Algorithm::GoertzelBlahut,
        BinMatrix::vstack(&rows)?,
        blocks,
        Vec::new(),
        None,
        perm,
    ))
}

/// One normal basis per class cardinality, generated by the smallest qualifying exponent.
fn normal_bases(ctx: &FieldCtx, classes: &[ConjugacyClass]) -> Result<Vec<Option<BasisSpec>>> {
    let mut out: Vec<Option<BasisSpec>> = (0..=ctx.m()).map(|_| None).collect();
    for k in classes {
        let d = k.cardinality();
        if out[d].is_none() {
            out[d] = Some(find_normal_basis(ctx, d as u32)?);
        }
    }
    Ok(out)
}

/// Cyclotomic algorithm: `F = A · L · (π f)`.
pub fn cyclotomic_plan(ctx: &FieldCtx) -> Result<DftPlan> {
    let n = ctx.n() as usize;
    let classes = plan_order(enumerate_classes(ctx));
    let bases = normal_bases(ctx, &classes)?;
    let gather = member_order(&classes)?;
    let mut blocks = Vec::with_capacity(classes.len());
    let mut a = BinMatrix::zeros(n, n);
    let mut col0 = 0;
    for k in &classes {
        let d = k.cardinality();
        let nb = bases[d].as_ref().expect("filled above");
        let solver = nb.solver();
        for j in 0..n {
            let c = solver.coords(ctx.exp(j as u64 * k.c as u64))?;
            for s in 0..d {
                if c >> s & 1 == 1 {
                    a.set(j, col0 + s, true);
                }
            }
        }
        blocks.push(StageBlock {
            class: k.clone(),
            kind: BlockKind::Dense(basis_circulant(nb)),
            in_len: d,
            out_len: d,
        });
        col0 += d;
    }
    Ok(DftPlan::assemble(
        ctx,
        Algorithm::Cyclotomic,
        gather.to_matrix(),
        blocks,
        Vec::new(),
        Some(a),
        Permutation::identity(n),
    ))
}

/// Reduced-multiplication method: `πF = D · (P R) · f` with one shared factored
/// evaluator per class cardinality.
pub fn novel_plan(ctx: &FieldCtx) -> Result<DftPlan> {
    if !ctx.m().is_multiple_of(2) {
        return Err(Error::OddExtensionDegree { m: ctx.m() });
    }
    for d in (1..=ctx.m()).filter(|d| ctx.m().is_multiple_of(*d)) {
        mult_count(d)?;
    }
    let classes = plan_order(enumerate_classes(ctx));
    let bases = normal_bases(ctx, &classes)?;
    let mut evaluators: Vec<FactoredEvaluator> = Vec::new();
    // per cardinality: evaluator index and (M_ref^T)^{-1}
    let mut shared: Vec<Option<(usize, BinMatrix)>> = (0..=ctx.m()).map(|_| None).collect();
    let mut pr_rows = Vec::with_capacity(classes.len());
    let mut blocks = Vec::with_capacity(classes.len());
    for k in &classes {
        let d = k.cardinality();
        let nb = bases[d].as_ref().expect("filled above");
        if shared[d].is_none() {
            let g = reference_generator(ctx, d as u32)?;
            let ev = build_evaluator_for(ctx, g, d as u32)?;
            let m_ref_t_inv = transform_matrix_of(ctx, g, nb)?.transpose().invert()?;
            evaluators.push(ev);
            shared[d] = Some((evaluators.len() - 1, m_ref_t_inv));
        }
        let (idx, m_ref_t_inv) = shared[d].as_ref().expect("set above");
        let ev = &evaluators[*idx];
        let p =
            ev.leading_binary().mul(m_ref_t_inv)?.mul(&basis_transform_matrix(ctx, k, nb)?.transpose())?;
        pr_rows.push(p.mul(&remainder_rows(ctx, k)?)?);
        blocks.push(StageBlock {
            class: k.clone(),
            kind: BlockKind::Core(*idx),
            in_len: ev.core_len(),
            out_len: d,
        });
    }
    let perm = member_order(&classes)?;
    Ok(DftPlan::assemble(ctx, Algorithm::Novel, BinMatrix::vstack(&pr_rows)?, blocks, evaluators, None, perm))
}

/// Builds the plan for `algo`.
pub fn build_plan(ctx: &FieldCtx, algo: Algorithm) -> Result<DftPlan> {
    match algo {
        Algorithm::Naive => Ok(naive_plan(ctx)),
        Algorithm::GoertzelBlahut => gb_plan(ctx),
        Algorithm::Cyclotomic => cyclotomic_plan(ctx),
        Algorithm::Novel => novel_plan(ctx),
    }
}

/// Runs a plan; the result is in natural index order.
pub fn execute(
    ctx: &FieldCtx,
    plan: &DftPlan,
    f: &[FieldElement],
    counter: &mut OpCounter,
) -> Result<Vec<FieldElement>> {
    plan.check_field(ctx)?;
    let n = ctx.n() as usize;
    if f.len() != n {
        return Err(Error::LengthMismatch { expected: n, found: f.len() });
    }
    if plan.algorithm == Algorithm::Naive {
        return naive_transform(ctx, f, 1, counter);
    }
    let x = plan.pre_schedule.replay_counted(f, counter)?;
    let mut y = Vec::with_capacity(n);
    let mut off = 0;
    for b in &plan.field_stage {
        let slice = &x[off..off + b.in_len];
        match &b.kind {
            BlockKind::Dense(w) => y.extend(w.apply_counted(ctx, slice, counter)?),
            BlockKind::Core(i) => y.extend(plan.evaluators[*i].apply_core(ctx, slice, counter)?),
        }
        off += b.in_len;
    }
    if let Some(s) = &plan.post_schedule {
        y = s.replay_counted(&y, counter)?;
    }
    plan.output_perm.scatter(&y)
}

/// Number of binary irreducible polynomials of degree `i`.
pub fn irreducible_count(i: u32) -> u64 {
    let mut sum: i64 = 0;
    for d in (1..=i).filter(|d| i.is_multiple_of(*d)) {
        sum += mobius(d) * (1i64 << (i / d));
    }
    (sum / i as i64) as u64
}

fn mobius(mut d: u32) -> i64 {
    let mut mu = 1;
    let mut p = 2;
    while p * p <= d {
        if d.is_multiple_of(p) {
            d /= p;
            if d.is_multiple_of(p) {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if d > 1 {
        mu = -mu;
    }
    mu
}

/// `Σ_{i | m} Mult(i) · Irreducible(i)`.
pub fn total_mult_formula(m: u32) -> Result<u64> {
    let mut total = 0;
    for i in (1..=m).filter(|i| m.is_multiple_of(*i)) {
        total += mult_count(i)? * irreducible_count(i);
    }
    Ok(total)
}

/// Checks `L = D·P_c` blockwise: for every class, its basis circulant equals the
/// shared reference evaluator's matrix times `(M_ref^T)^{-1}`.
pub fn verify_circulant_factorization(ctx: &FieldCtx) -> Result<bool> {
    if !ctx.m().is_multiple_of(2) {
        return Err(Error::OddExtensionDegree { m: ctx.m() });
    }
    let classes = plan_order(enumerate_classes(ctx));
    let bases = normal_bases(ctx, &classes)?;
    let mut d_blocks: Vec<Option<FieldMatrix>> = (0..=ctx.m()).map(|_| None).collect();
    for k in &classes {
        let d = k.cardinality();
        let nb = bases[d].as_ref().expect("filled above");
        if d_blocks[d].is_none() {
            let g = reference_generator(ctx, d as u32)?;
            let ev = build_evaluator_for(ctx, g, d as u32)?;
            let p_c = transform_matrix_of(ctx, g, nb)?.transpose().invert()?;
            d_blocks[d] = Some(ev.to_matrix(ctx)?.mul_binary(&p_c)?);
        }
        if d_blocks[d].as_ref() != Some(&basis_circulant(nb)) {
            return Ok(false);
        }
    }
    Ok(true)
}
