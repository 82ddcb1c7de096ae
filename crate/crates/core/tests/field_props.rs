use gfdft_core::field::{subfield_elements, DEFAULT_MODULI};
use gfdft_core::{Error, FieldCtx, FieldElement};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Carry-less product reduced by the modulus, bit by bit.
fn clmul_mod(a: u32, b: u32, modulus: u32, m: u32) -> u32 {
    let mut acc: u64 = 0;
    for i in 0..m {
        if b >> i & 1 == 1 {
            acc ^= (a as u64) << i;
        }
    }
    for i in (m..2 * m).rev() {
        if acc >> i & 1 == 1 {
            acc ^= (modulus as u64) << (i - m);
        }
    }
    acc as u32
}

#[test]
fn tables_agree_with_clmul() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for m in 1..=16u32 {
        let ctx = FieldCtx::new(m, None).unwrap();
        let mask = (1u32 << m) - 1;
        for _ in 0..1000 {
            let (a, b) = (rng.gen::<u32>() & mask, rng.gen::<u32>() & mask);
            let want = clmul_mod(a, b, ctx.modulus(), m);
            assert_eq!(ctx.mul(FieldElement(a as u16), FieldElement(b as u16)).bits() as u32, want);
        }
    }
}

#[test]
fn exp_log_bijection() {
    for m in [1u32, 2, 4, 8, 12] {
        let ctx = FieldCtx::new(m, None).unwrap();
        let mut seen = vec![false; ctx.size()];
        for k in 0..ctx.n() {
            let a = ctx.exp(k as u64);
            assert!(!a.is_zero() && !seen[a.bits() as usize]);
            seen[a.bits() as usize] = true;
            assert_eq!(ctx.log(a), Some(k));
        }
    }
}

#[test]
fn construction_examples() {
    let ctx = FieldCtx::new(4, Some(0x13)).unwrap();
    assert_eq!(ctx.n(), 15);
    assert_eq!(ctx.exp(4), ctx.exp(1) + FieldElement::ONE);
    assert_eq!(FieldCtx::new(2, None).unwrap().modulus(), 0b111);
    assert_eq!(FieldCtx::new(4, Some(0b11111)).unwrap_err(), Error::NonPrimitiveModulus { modulus: 0b11111 });
    assert!(matches!(FieldCtx::new(0, None), Err(Error::DegreeOutOfRange { .. })));
    assert!(matches!(FieldCtx::new(17, None), Err(Error::DegreeOutOfRange { .. })));
    assert!(matches!(FieldCtx::new(4, Some(0b111)), Err(Error::ModulusDegree { .. })));
    assert_eq!(DEFAULT_MODULI[7], 0x11d);
    assert_eq!(DEFAULT_MODULI[11], 0x1053);
}

#[test]
fn gf16_examples() {
    let ctx = FieldCtx::new(4, None).unwrap();
    let a = |k| ctx.exp(k);
    assert_eq!(a(4) + a(1), FieldElement::ONE);
    assert_eq!(ctx.mul(a(7), a(8)), FieldElement::ONE);
    assert_eq!(ctx.mul(a(5), a(5)), a(10));
    assert_eq!(ctx.mul(FieldElement::ZERO, a(3)), FieldElement::ZERO);
    assert_eq!(ctx.frobenius(a(1), 2), a(4));
    assert_eq!(ctx.frobenius(a(5), 1), a(10));
    assert!(ctx.in_subfield(a(5), 2).unwrap());
    assert!(!ctx.in_subfield(a(1), 2).unwrap());
    assert!(ctx.in_subfield(FieldElement::ZERO, 1).unwrap());
    assert_eq!(ctx.in_subfield(a(1), 3), Err(Error::DegreeNotDivisor { d: 3, m: 4 }));
    assert_eq!(subfield_elements(&ctx, 2).unwrap(), [a(0), a(5), a(10)]);
}

fn field_and_elems() -> impl Strategy<Value = (u32, u16, u16)> {
    (1u32..=16)
        .prop_flat_map(|m| (Just(m), 0..1u32 << m, 0..1u32 << m))
        .prop_map(|(m, a, b)| (m, a as u16, b as u16))
}

proptest! {
    #[test]
    fn inverse_and_frobenius((m, a, b) in field_and_elems(), i in 0u32..40) {
        let ctx = FieldCtx::new(m, None).unwrap();
        let (a, b) = (FieldElement(a), FieldElement(b));
        if !a.is_zero() {
            prop_assert_eq!(ctx.mul(a, ctx.inv(a).unwrap()), FieldElement::ONE);
        }
        prop_assert_eq!(ctx.frobenius(a + b, i), ctx.frobenius(a, i) + ctx.frobenius(b, i));
        prop_assert_eq!(ctx.frobenius(a, m), a);
        prop_assert_eq!(a + a, FieldElement::ZERO);
        prop_assert_eq!(ctx.pow(a, 1u64 << (i % 16)), ctx.frobenius(a, i % 16));
    }

    #[test]
    fn element_text_roundtrip((m, a, _b) in field_and_elems()) {
        let ctx = FieldCtx::new(m, None).unwrap();
        let a = FieldElement(a);
        let s = ctx.format_element(a);
        prop_assert_eq!(ctx.parse_element(&s).unwrap(), a);
    }
}

#[test]
fn element_text_rejects_garbage() {
    let ctx = FieldCtx::new(4, None).unwrap();
    for bad in ["", "2", "a^", "a^15", "a^-1", "x^3", "a^ 3", "a^1a"] {
        assert!(ctx.parse_element(bad).is_err(), "{bad:?}");
    }
    assert_eq!(ctx.parse_element("a^0").unwrap(), FieldElement::ONE);
    assert_eq!(format!("{}", ctx.display(ctx.exp(14))), "a^14");
}
