use gfdft_core::conjugacy::find_normal_basis;
use gfdft_core::linalg::{
    basis_circulant, bin_invert, greedy_cse, pi_permutation, AdditionSchedule, BinMatrix,
};
use gfdft_core::{FieldCtx, FieldElement};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_bin(rng: &mut ChaCha8Rng, rows: usize, cols: usize, density: f64) -> BinMatrix {
    let mut a = BinMatrix::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            a.set(i, j, rng.gen_bool(density));
        }
    }
    a
}

#[test]
fn random_inverses() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut found = 0;
    while found < 50 {
        let a = random_bin(&mut rng, 8, 8, 0.5);
        match bin_invert(&a) {
            Ok(inv) => {
                assert!(a.mul(&inv).unwrap().is_identity());
                assert!(inv.mul(&a).unwrap().is_identity());
                assert_eq!(a.rank(), 8);
                found += 1;
            }
            Err(_) => assert!(a.rank() < 8),
        }
    }
}

#[test]
fn pi_is_bijection() {
    for m in (2..=16).step_by(2) {
        let p = pi_permutation(m).unwrap();
        let mut img = p.image().to_vec();
        img.sort_unstable();
        assert_eq!(img, (0..m).collect::<Vec<_>>());
        assert_eq!(p.to_matrix().invert().unwrap(), p.inverse().to_matrix());
    }
}

#[test]
fn circulants_symmetric() {
    for m in [4u32, 6, 8, 12] {
        let ctx = FieldCtx::new(m, None).unwrap();
        for d in (1..=m).filter(|d| m % d == 0) {
            let l = basis_circulant(&find_normal_basis(&ctx, d).unwrap());
            assert_eq!(l.transpose(), l);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn cse_replay_matches_product(seed in any::<u64>(), rows in 1usize..40, cols in 1usize..40, density in 0.05f64..0.9) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_bin(&mut rng, rows, cols, density);
        let s = greedy_cse(&a);
        prop_assert!(s.len() <= a.naive_additions());
        prop_assert_eq!(AdditionSchedule::naive(&a).len(), a.naive_additions());
        let ctx = FieldCtx::new(8, None).unwrap();
        let x: Vec<FieldElement> = (0..cols).map(|_| ctx.exp(rng.gen_range(0..255))).collect();
        prop_assert_eq!(s.replay(&x).unwrap(), a.apply(&x).unwrap());
        for (k, &(p, q)) in s.steps.iter().enumerate() {
            prop_assert!(p != q && p < cols + k && q < cols + k);
        }
    }
}
