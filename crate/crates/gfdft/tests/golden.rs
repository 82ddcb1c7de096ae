use gfdft::golden::{check_m4, load_m4};
use gfdft::schema::{factor_chain, FactorJson, PlanSummary};
use gfdft_core::conjugacy::enumerate_classes;
use gfdft_core::dft::novel_plan;
use gfdft_core::evaluator::build_evaluator;
use gfdft_core::{BinMatrix, FieldCtx};

#[test]
fn every_group_matches() {
    let ctx = FieldCtx::new(4, None).unwrap();
    for (name, r) in check_m4(&ctx) {
        assert_eq!(r, Ok(()), "{name}");
    }
}

#[test]
fn other_modulus_is_rejected() {
    let ctx = FieldCtx::new(4, Some(0x19)).unwrap();
    let res = check_m4(&ctx);
    assert_eq!(res.len(), 1);
    assert!(res[0].1.is_err());
}

#[test]
fn pr_weight_and_pi() {
    let g = load_m4();
    let pr = BinMatrix::from_bitstrings(&g.pr).unwrap();
    assert_eq!(pr.ones(), 129);
    assert_eq!(pr.naive_additions(), 114);
    assert_eq!(pr.rank(), 15);
}

#[test]
fn dump_chain_roundtrips() {
    let ctx = FieldCtx::new(6, None).unwrap();
    for k in enumerate_classes(&ctx) {
        let ev = build_evaluator(&ctx, &k).unwrap();
        let chain = factor_chain(&ctx, &ev);
        let text = serde_json::to_string(&chain).unwrap();
        assert_eq!(serde_json::from_str::<Vec<FactorJson>>(&text).unwrap(), chain);
    }
}

#[test]
fn m4_dump_shape() {
    let ctx = FieldCtx::new(4, None).unwrap();
    let k = &enumerate_classes(&ctx)[1];
    let v = serde_json::to_value(factor_chain(&ctx, &build_evaluator(&ctx, k).unwrap())).unwrap();
    let kinds: Vec<&str> = v.as_array().unwrap().iter().map(|f| f["kind"].as_str().unwrap()).collect();
    assert_eq!(kinds, ["binary", "perm", "binary", "sub", "diag", "binary"]);
    assert_eq!(v[0]["payload"], serde_json::json!(["1000", "0111", "0011", "0001"]));
    assert_eq!(v[3]["payload"]["copies"], 2);
    assert_eq!(v[4]["payload"]["values"], serde_json::json!(["a^1", "a^2"]));
}

#[test]
fn plan_summary_roundtrips() {
    let ctx = FieldCtx::new(4, None).unwrap();
    let s = PlanSummary::of(&ctx, &novel_plan(&ctx).unwrap());
    assert_eq!(s.ops.mults, 13);
    assert_eq!(s.output_order, load_m4().output_order);
    let back: PlanSummary = serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
    assert_eq!(back, s);
}
