use gfdft_core::dft::verify_circulant_factorization;
use gfdft_core::identities::CHECKS;
use gfdft_core::{Error, FieldCtx};

#[test]
fn identities_hold_for_even_m() {
    for m in [2u32, 4, 6, 8, 12] {
        let ctx = FieldCtx::new(m, None).unwrap();
        for (name, check, _) in CHECKS {
            assert!(check(&ctx).unwrap(), "{name} failed for m = {m}");
        }
    }
}

#[test]
fn odd_subset_for_m3() {
    let ctx = FieldCtx::new(3, None).unwrap();
    for (name, check, needs_even) in CHECKS {
        if !needs_even {
            assert!(check(&ctx).unwrap(), "{name}");
        }
    }
    assert_eq!(verify_circulant_factorization(&ctx), Err(Error::OddExtensionDegree { m: 3 }));
}
