//! JSON shapes for fields, classes, matrices, operation counts and plans.

use gfdft_core::evaluator::{Factor, FactoredEvaluator};
use gfdft_core::{BinMatrix, ConjugacyClass, DftPlan, FieldCtx, FieldMatrix, OpCounter};
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct FieldJson {
    pub m: u32,
    pub modulus_bits: u32,
}

impl FieldJson {
    pub fn of(ctx: &FieldCtx) -> FieldJson {
        FieldJson { m: ctx.m(), modulus_bits: ctx.modulus() }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ClassJson {
    pub c: u32,
    pub members: Vec<u32>,
    pub cardinality: usize,
}

impl From<&ConjugacyClass> for ClassJson {
    fn from(k: &ConjugacyClass) -> ClassJson {
        ClassJson { c: k.c, members: k.members.clone(), cardinality: k.cardinality() }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, Copy, PartialEq, Eq)]
pub struct OpReport {
    pub mults: u64,
    pub field_adds: u64,
    pub binary_stage_adds: u64,
    pub total_adds: u64,
}

impl From<&OpCounter> for OpReport {
    fn from(c: &OpCounter) -> OpReport {
        OpReport {
            mults: c.mults,
            field_adds: c.field_adds,
            binary_stage_adds: c.binary_stage_adds,
            total_adds: c.total_adds(),
        }
    }
}

impl std::fmt::Display for OpReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "mults={} field_adds={} binary_stage_adds={} total_adds={}",
            self.mults, self.field_adds, self.binary_stage_adds, self.total_adds
        )
    }
}

/// Binary matrix as row bitstrings.
pub fn bin_rows(b: &BinMatrix) -> Vec<String> {
    b.to_bitstrings()
}

/// Field matrix as rows of element text.
pub fn field_rows(ctx: &FieldCtx, a: &FieldMatrix) -> Vec<Vec<String>> {
    a.to_text_rows(ctx)
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum DiagShape {
    /// A plain diagonal matrix.
    Diagonal,
    /// `[[I, diag(values)], [0, I]]`.
    UpperBlock,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct DiagPayload {
    pub shape: DiagShape,
    pub values: Vec<String>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct SubPayload {
    pub copies: usize,
    pub degree: usize,
    pub generator: String,
    pub factors: Vec<FactorJson>,
}

/// One factor of an evaluator chain, in application order.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(tag = "kind", content = "payload", rename_all = "snake_case")]
pub enum FactorJson {
    Binary(Vec<String>),
    Perm(Vec<usize>),
    Diag(DiagPayload),
    Sub(SubPayload),
}

pub fn factor_chain(ctx: &FieldCtx, ev: &FactoredEvaluator) -> Vec<FactorJson> {
    let text = |v: &[gfdft_core::FieldElement]| v.iter().map(|&a| ctx.format_element(a)).collect();
    ev.factors()
        .iter()
        .map(|f| match f {
            Factor::Binary(b) => FactorJson::Binary(bin_rows(b)),
            Factor::Perm(p) => FactorJson::Perm(p.image().to_vec()),
            Factor::Diag(v) => FactorJson::Diag(DiagPayload { shape: DiagShape::Diagonal, values: text(v) }),
            Factor::UpperDiag(v) => {
                FactorJson::Diag(DiagPayload { shape: DiagShape::UpperBlock, values: text(v) })
            }
            Factor::Sub { copies, eval } => FactorJson::Sub(SubPayload {
                copies: *copies,
                degree: eval.degree,
                generator: ctx.format_element(eval.generator),
                factors: factor_chain(ctx, eval),
            }),
        })
        .collect()
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct EvaluatorJson {
    pub degree: usize,
    pub generator: String,
    pub mults: u64,
    pub field_adds: u64,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct PlanSummary {
    pub algorithm: String,
    pub field: FieldJson,
    pub n: usize,
    /// Classes in field-stage order.
    pub classes: Vec<ClassJson>,
    pub evaluators: Vec<EvaluatorJson>,
    pub pre_matrix_ones: usize,
    pub ops: OpReport,
    pub binary_adds_naive: u64,
    pub binary_adds_cse: Option<u64>,
    /// Output index produced by each row of the field stage.
    pub output_order: Vec<usize>,
}

impl PlanSummary {
    pub fn of(ctx: &FieldCtx, plan: &DftPlan) -> PlanSummary {
        PlanSummary {
            algorithm: plan.algorithm.name().to_string(),
            field: FieldJson::of(ctx),
            n: plan.n(),
            classes: plan.field_stage.iter().map(|b| ClassJson::from(&b.class)).collect(),
            evaluators: plan
                .evaluators
                .iter()
                .map(|e| EvaluatorJson {
                    degree: e.degree,
                    generator: ctx.format_element(e.generator),
                    mults: e.static_mults,
                    field_adds: e.core_adds,
                })
                .collect(),
            pre_matrix_ones: plan.pre_matrix.ones(),
            ops: OpReport::from(&plan.static_counts()),
            binary_adds_naive: plan.static_adds_naive,
            binary_adds_cse: plan.static_adds_cse,
            output_order: plan.output_perm.image().to_vec(),
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct TransformJson {
    pub algorithm: String,
    pub field: FieldJson,
    pub output: Vec<String>,
    pub ops: OpReport,
}
