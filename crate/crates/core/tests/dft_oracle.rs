use gfdft_core::conjugacy::{enumerate_classes, plan_order};
use gfdft_core::dft::{
    build_plan, execute, gb_plan, naive_dft, naive_idft, remainder_rows, total_mult_formula,
};
use gfdft_core::poly::{divmod, minimal_poly_gf2};
use gfdft_core::{Algorithm, FieldCtx, FieldElement, FieldPoly, OpCounter};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_vec(ctx: &FieldCtx, rng: &mut ChaCha8Rng) -> Vec<FieldElement> {
    (0..ctx.n()).map(|_| FieldElement(rng.gen_range(0..ctx.size()) as u16)).collect()
}

#[test]
fn all_plans_equal_naive() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for m in [2u32, 3, 4, 6, 8] {
        let ctx = FieldCtx::new(m, None).unwrap();
        let plans: Vec<_> = Algorithm::ALL
            .into_iter()
            .filter(|&a| a != Algorithm::Naive && (m % 2 == 0 || a != Algorithm::Novel))
            .map(|a| build_plan(&ctx, a).unwrap())
            .collect();
        for _ in 0..100 {
            let f = random_vec(&ctx, &mut rng);
            let want = naive_dft(&ctx, &f).unwrap();
            for p in &plans {
                let mut c = OpCounter::new();
                assert_eq!(execute(&ctx, p, &f, &mut c).unwrap(), want, "{} m={m}", p.algorithm);
                assert_eq!(c, p.static_counts());
            }
        }
    }
}

#[test]
fn naive_plan_counts_match_execution() {
    let ctx = FieldCtx::new(4, None).unwrap();
    let p = build_plan(&ctx, Algorithm::Naive).unwrap();
    let mut c = OpCounter::new();
    let f: Vec<_> = (0..15).map(|i| ctx.exp(i)).collect();
    execute(&ctx, &p, &f, &mut c).unwrap();
    assert_eq!(c.mults, p.static_mults);
    assert_eq!(c.field_adds, p.static_field_adds);
}

#[test]
fn zero_input_gives_zero() {
    for m in [2u32, 4, 6] {
        let ctx = FieldCtx::new(m, None).unwrap();
        let zero = vec![FieldElement::ZERO; ctx.n() as usize];
        for a in Algorithm::ALL {
            let p = build_plan(&ctx, a).unwrap();
            assert_eq!(execute(&ctx, &p, &zero, &mut OpCounter::new()).unwrap(), zero);
        }
    }
}

#[test]
fn inverse_roundtrip() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for m in [2u32, 4, 6, 8] {
        let ctx = FieldCtx::new(m, None).unwrap();
        for _ in 0..100 {
            let f = random_vec(&ctx, &mut rng);
            assert_eq!(naive_idft(&ctx, &naive_dft(&ctx, &f).unwrap()).unwrap(), f);
        }
    }
}

#[test]
fn gb_rows_are_remainders() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for m in [3u32, 4, 6] {
        let ctx = FieldCtx::new(m, None).unwrap();
        let plan = gb_plan(&ctx).unwrap();
        let classes = plan_order(enumerate_classes(&ctx));
        for _ in 0..10 {
            let f = random_vec(&ctx, &mut rng);
            let r = plan.pre_matrix.apply(&f).unwrap();
            let mut off = 0;
            for k in &classes {
                let mk = minimal_poly_gf2(&ctx, k.generator(&ctx)).unwrap().to_field_poly();
                let (_, rem) = divmod(&ctx, &FieldPoly::new(f.clone()), &mk).unwrap();
                for i in 0..k.cardinality() {
                    assert_eq!(r[off + i], rem.coeff(i));
                }
                assert_eq!(remainder_rows(&ctx, k).unwrap().rows(), k.cardinality());
                off += k.cardinality();
            }
        }
    }
}

#[test]
fn gb_n3_remainder_matrix() {
    let ctx = FieldCtx::new(2, None).unwrap();
    let plan = gb_plan(&ctx).unwrap();
    assert_eq!(plan.pre_matrix.to_bitstrings(), ["111", "101", "011"]);
}

#[test]
fn novel_counts_and_formula() {
    for (m, want) in [(2u32, 1u64), (4, 13), (6, 88), (8, 373)] {
        let ctx = FieldCtx::new(m, None).unwrap();
        let p = build_plan(&ctx, Algorithm::Novel).unwrap();
        assert_eq!(p.static_mults, want);
        assert_eq!(total_mult_formula(m).unwrap(), want);
    }
}

#[test]
fn delta0_maps_to_ones() {
    let ctx = FieldCtx::new(6, None).unwrap();
    let mut f = vec![FieldElement::ZERO; 63];
    f[0] = FieldElement::ONE;
    for a in Algorithm::ALL {
        let p = build_plan(&ctx, a).unwrap();
        assert_eq!(execute(&ctx, &p, &f, &mut OpCounter::new()).unwrap(), vec![FieldElement::ONE; 63]);
    }
}
