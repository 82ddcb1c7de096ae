use gfdft_core::conjugacy::{enumerate_classes, find_special_class};
use gfdft_core::evaluator::{
    apply_evaluator, build_b_matrix, build_evaluator, build_evaluator_for, remainder_matrix, target_matrix,
    Variant,
};
use gfdft_core::linalg::moore_vandermonde;
use gfdft_core::{FieldCtx, FieldElement, OpCounter};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_vec(ctx: &FieldCtx, rng: &mut ChaCha8Rng, len: usize) -> Vec<FieldElement> {
    (0..len).map(|_| FieldElement(rng.gen_range(0..ctx.size()) as u16)).collect()
}

#[test]
fn special_evaluators_match_dense() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for m in [2u32, 4, 6, 8, 12] {
        let ctx = FieldCtx::new(m, None).unwrap();
        let k = find_special_class(&ctx).unwrap();
        let ev = build_evaluator(&ctx, &k).unwrap();
        let v = moore_vandermonde(&ctx, &k);
        for _ in 0..100 {
            let t = random_vec(&ctx, &mut rng, k.cardinality());
            let mut c = OpCounter::new();
            assert_eq!(apply_evaluator(&ctx, &ev, &t, &mut c).unwrap(), v.apply(&ctx, &t).unwrap());
            assert_eq!(c.mults, ev.static_mults);
        }
    }
}

#[test]
fn unit_and_zero_inputs() {
    let ctx = FieldCtx::new(8, None).unwrap();
    let ev = build_evaluator(&ctx, &find_special_class(&ctx).unwrap()).unwrap();
    let mut t = vec![FieldElement::ZERO; 8];
    let mut c = OpCounter::new();
    assert_eq!(ev.apply(&ctx, &t, &mut c).unwrap(), t);
    assert_eq!(c.mults, 12);
    t[0] = FieldElement::ONE;
    assert_eq!(ev.apply(&ctx, &t, &mut OpCounter::new()).unwrap(), vec![FieldElement::ONE; 8]);
    assert!(ev.apply(&ctx, &t[..7], &mut OpCounter::new()).is_err());
}

#[test]
fn lower_level_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for m in [4u32, 6, 8, 12] {
        let ctx = FieldCtx::new(m, None).unwrap();
        let ev = build_evaluator(&ctx, &find_special_class(&ctx).unwrap()).unwrap();
        let h = m as usize / 2;
        for _ in 0..20 {
            let t = random_vec(&ctx, &mut rng, m as usize);
            let big_t = ev.apply(&ctx, &t, &mut OpCounter::new()).unwrap();
            let u = ev.upper_stage(&ctx, &t).unwrap();
            for i in 0..h {
                assert_eq!(big_t[h + i], big_t[i] + u[h + i]);
            }
        }
    }
}

#[test]
fn every_supported_class_matches_dense() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for m in [2u32, 3, 4, 6, 8] {
        let ctx = FieldCtx::new(m, None).unwrap();
        for k in enumerate_classes(&ctx) {
            let ev = build_evaluator(&ctx, &k).unwrap();
            let v = moore_vandermonde(&ctx, &k);
            let t = random_vec(&ctx, &mut rng, k.cardinality());
            let mut c = OpCounter::new();
            assert_eq!(ev.apply(&ctx, &t, &mut c).unwrap(), v.apply(&ctx, &t).unwrap());
            assert_eq!(c.mults, ev.static_mults);
            if k.cardinality() >= 4 && !matches!(ev.variant, Variant::Even { .. }) {
                assert!(matches!(ev.variant, Variant::Bridged { .. }));
            }
        }
    }
}

#[test]
fn base3_exhaustive_in_gf8() {
    let ctx = FieldCtx::new(3, None).unwrap();
    for k in enumerate_classes(&ctx).into_iter().filter(|k| k.cardinality() == 3) {
        let ev = build_evaluator(&ctx, &k).unwrap();
        let v = target_matrix(&ctx, &ev);
        for x in 0..512u16 {
            let t = [FieldElement(x & 7), FieldElement(x >> 3 & 7), FieldElement(x >> 6)];
            let mut c = OpCounter::new();
            assert_eq!(ev.apply(&ctx, &t, &mut c).unwrap(), v.apply(&ctx, &t).unwrap());
            assert_eq!(c.mults, 3);
        }
    }
}

#[test]
fn base3_embedded_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for m in [6u32, 12] {
        let ctx = FieldCtx::new(m, None).unwrap();
        for k in enumerate_classes(&ctx).into_iter().filter(|k| k.cardinality() == 3) {
            let ev = build_evaluator(&ctx, &k).unwrap();
            for _ in 0..50 {
                let t = random_vec(&ctx, &mut rng, 3);
                let want = moore_vandermonde(&ctx, &k).apply(&ctx, &t).unwrap();
                assert_eq!(ev.apply(&ctx, &t, &mut OpCounter::new()).unwrap(), want);
            }
        }
    }
}

#[test]
fn base2_factorization() {
    let ctx = FieldCtx::new(2, None).unwrap();
    let ev = build_evaluator_for(&ctx, ctx.exp(1), 2).unwrap();
    assert_eq!(ev.static_mults, 1);
    assert!(ev.leading_binary().is_identity());
    assert_eq!(ev.to_matrix(&ctx).unwrap(), target_matrix(&ctx, &ev));
}

#[test]
fn remainder_frobenius_powers() {
    for m in [4u32, 6, 8, 12] {
        let ctx = FieldCtx::new(m, None).unwrap();
        let e = find_special_class(&ctx).unwrap().generator(&ctx);
        let delta = ctx.mul(e, ctx.frobenius(e, m / 2));
        let u0 = remainder_matrix(&ctx, delta, m as usize).unwrap();
        for r in 0..2 {
            for j in 0..m as usize {
                assert!(ctx.in_subfield(u0.u.get(r, j), m / 2).unwrap());
                if j >= 1 && r == 0 {
                    assert_eq!(u0.u.get(0, j), ctx.mul(delta, u0.u.get(1, j - 1)));
                }
            }
        }
        for i in 1..m / 2 {
            let ui = remainder_matrix(&ctx, ctx.frobenius(delta, i), m as usize).unwrap();
            assert_eq!(ui.u, u0.u.map(|a| ctx.frobenius(a, i)));
        }
        let b = build_b_matrix(&ctx, &u0, delta).unwrap();
        assert!(b.get(0, 0) && b.row_ones(0).count() == 1 && (1..b.rows()).all(|i| !b.get(i, 0)));
    }
}
