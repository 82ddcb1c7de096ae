//! Reference matrices for GF(16) with modulus `x^4 + x + 1`, and the
//! checks that compare them with what the library builds.

use std::collections::BTreeMap;

use gfdft_core::conjugacy::{basis_transform_matrix, enumerate_classes};
use gfdft_core::dft::novel_plan;
use gfdft_core::evaluator::{build_evaluator, factor_matrix, Factor};
use gfdft_core::linalg::moore_vandermonde;
use gfdft_core::{BasisSpec, BinMatrix, ConjugacyClass, FieldCtx, FieldMatrix};
use serde::Deserialize;

pub const M4_JSON: &str = include_str!("../golden/m4.json");

#[derive(Deserialize, Debug, Clone)]
pub struct NormalBases {
    pub generator: String,
    pub subfield_generator: String,
}

#[derive(Deserialize, Debug, Clone)]
#[serde(tag = "kind", content = "rows", rename_all = "snake_case")]
pub enum GoldenFactor {
    Binary(Vec<String>),
    Field(Vec<Vec<String>>),
}

impl GoldenFactor {
    fn matrix(&self, ctx: &FieldCtx) -> Result<FieldMatrix, String> {
        match self {
            GoldenFactor::Binary(rows) => BinMatrix::from_bitstrings(rows)
                .map(|b| FieldMatrix::from_binary(&b))
                .map_err(|e| e.to_string()),
            GoldenFactor::Field(rows) => FieldMatrix::parse_rows(ctx, rows).map_err(|e| e.to_string()),
        }
    }
}

/// Factor lists are written left to right, so the rightmost acts first.
#[derive(Deserialize, Debug, Clone)]
pub struct Golden {
    pub field: crate::schema::FieldJson,
    pub normal_basis: NormalBases,
    pub v1: Vec<Vec<String>>,
    pub v1_factors: Vec<GoldenFactor>,
    pub delta: Vec<Vec<String>>,
    pub delta_factors: Vec<GoldenFactor>,
    pub s: Vec<Vec<String>>,
    pub p1: Vec<String>,
    /// `M_k^T` keyed by class representative.
    pub m_transposed: BTreeMap<u32, Vec<String>>,
    pub output_order: Vec<usize>,
    pub pr: Vec<String>,
}

pub fn load_m4() -> Golden {
    serde_json::from_str(M4_JSON).expect("bundled golden file parses")
}

pub type Outcome = Result<(), String>;

fn same(name: &str, got: &FieldMatrix, want: &FieldMatrix, ctx: &FieldCtx) -> Outcome {
    if got == want {
        Ok(())
    } else {
        Err(format!("{name}: got {:?}, want {:?}", got.to_text_rows(ctx), want.to_text_rows(ctx)))
    }
}

fn same_bin(name: &str, got: &BinMatrix, want: &[String]) -> Outcome {
    if got.to_bitstrings() == want {
        Ok(())
    } else {
        Err(format!("{name}: got {:?}, want {want:?}", got.to_bitstrings()))
    }
}

/// Chain of an evaluator as a left-to-right product: dense factor matrices, last-applied first,
/// with identity binary factors dropped.
fn left_to_right(ctx: &FieldCtx, factors: &[Factor<'_>]) -> Result<Vec<FieldMatrix>, String> {
    let mut out = Vec::new();
    for f in factors.iter().rev() {
        if let Factor::Binary(b) = f {
            if b.is_identity() {
                continue;
            }
        }
        out.push(factor_matrix(ctx, f).map_err(|e| e.to_string())?);
    }
    Ok(out)
}

fn compare_chain(name: &str, ctx: &FieldCtx, got: &[FieldMatrix], want: &[GoldenFactor]) -> Outcome {
    if got.len() != want.len() {
        return Err(format!("{name}: {} factors, want {}", got.len(), want.len()));
    }
    for (i, (g, w)) in got.iter().zip(want).enumerate() {
        same(&format!("{name} factor {i}"), g, &w.matrix(ctx)?, ctx)?;
    }
    Ok(())
}

fn class(ctx: &FieldCtx, c: u32) -> Result<ConjugacyClass, String> {
    enumerate_classes(ctx)
        .into_iter()
        .find(|k| k.c == c)
        .ok_or_else(|| format!("no class with representative {c}"))
}

/// Runs every golden comparison; `ctx` must be GF(16) with modulus `x^4+x+1`.
pub fn check_m4(ctx: &FieldCtx) -> Vec<(&'static str, Outcome)> {
    let g = load_m4();
    let mut out: Vec<(&'static str, Outcome)> = Vec::new();
    if ctx.m() != g.field.m || ctx.modulus() != g.field.modulus_bits {
        out.push(("golden field", Err("golden matrices need m = 4, modulus x^4+x+1".into())));
        return out;
    }
    let err = |e: gfdft_core::Error| e.to_string();

    let v1_parts = || -> Result<(ConjugacyClass, gfdft_core::FactoredEvaluator), String> {
        let k = class(ctx, 1)?;
        let ev = build_evaluator(ctx, &k).map_err(err)?;
        Ok((k, ev))
    };
    out.push((
        "V_1 factor chain",
        v1_parts().and_then(|(k, ev)| {
            let want = FieldMatrix::parse_rows(ctx, &g.v1).map_err(err)?;
            same("V_1", &moore_vandermonde(ctx, &k), &want, ctx)?;
            same("V_1 product", &ev.to_matrix(ctx).map_err(err)?, &want, ctx)?;
            compare_chain("V_1", ctx, &left_to_right(ctx, &ev.factors())?, &g.v1_factors)
        }),
    ));
    out.push((
        "Delta and its factors",
        class(ctx, 5).and_then(|k| {
            let ev = build_evaluator(ctx, &k).map_err(err)?;
            let want = FieldMatrix::parse_rows(ctx, &g.delta).map_err(err)?;
            same("Delta", &ev.to_matrix(ctx).map_err(err)?, &want, ctx)?;
            compare_chain("Delta", ctx, &left_to_right(ctx, &ev.factors())?, &g.delta_factors)
        }),
    ));
    out.push((
        "S and P_1",
        v1_parts().and_then(|(_, ev)| {
            let want = FieldMatrix::parse_rows(ctx, &g.s).map_err(err)?;
            same("S", &ev.core_matrix(ctx).map_err(err)?, &want, ctx)?;
            same_bin("P_1", ev.leading_binary(), &g.p1)
        }),
    ));
    out.push((
        "basis transforms M_k^T",
        (|| {
            let gamma = ctx.parse_element(&g.normal_basis.generator).map_err(err)?;
            let beta = ctx.parse_element(&g.normal_basis.subfield_generator).map_err(err)?;
            for (&c, want) in &g.m_transposed {
                let k = class(ctx, c)?;
                let d = k.cardinality() as u32;
                let nb = match d {
                    4 => BasisSpec::normal(ctx, gamma, 4),
                    2 => BasisSpec::normal(ctx, beta, 2),
                    _ => BasisSpec::normal(ctx, gfdft_core::FieldElement::ONE, 1),
                }
                .map_err(err)?;
                let m = basis_transform_matrix(ctx, &k, &nb).map_err(err)?;
                same_bin(&format!("M^T for class {c}"), &m.transpose(), want)?;
            }
            Ok(())
        })(),
    ));
    let plan = novel_plan(ctx).map_err(err);
    out.push((
        "combined preadditions PR",
        plan.as_ref().map_err(Clone::clone).and_then(|p| same_bin("PR", &p.pre_matrix, &g.pr)),
    ));
    out.push((
        "output order",
        plan.as_ref().map_err(Clone::clone).and_then(|p| {
            if p.output_perm.image() == g.output_order.as_slice() {
                Ok(())
            } else {
                Err(format!("output order {:?}, want {:?}", p.output_perm.image(), g.output_order))
            }
        }),
    ));
    out
}
