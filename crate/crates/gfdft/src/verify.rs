//! The invariant suite behind `gfdft verify`.

use gfdft_core::dft::{build_plan, execute, naive_dft, naive_idft, total_mult_formula};
use gfdft_core::identities::CHECKS;
use gfdft_core::{Algorithm, Error, FieldCtx, OpCounter};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::input::random_vector_from;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail(String),
    Skipped(String),
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub m: u32,
    pub name: String,
    pub status: Status,
}

impl CheckResult {
    pub fn failed(&self) -> bool {
        matches!(self.status, Status::Fail(_))
    }
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub modulus: Option<u32>,
    pub seed: u64,
    /// Random vectors per algorithm; reduced automatically for `m > 8`.
    pub vectors: usize,
    pub golden: bool,
}

impl Default for VerifyConfig {
    fn default() -> VerifyConfig {
        VerifyConfig { modulus: None, seed: 0, vectors: 20, golden: false }
    }
}

fn unsupported(e: &Error) -> bool {
    matches!(e, Error::OddExtensionDegree { .. } | Error::UnsupportedDegree { .. })
}

fn status_of(r: Result<bool, Error>) -> Status {
    match r {
        Ok(true) => Status::Pass,
        Ok(false) => Status::Fail("identity does not hold".into()),
        Err(e) if unsupported(&e) => Status::Skipped(e.to_string()),
        Err(e) => Status::Fail(e.to_string()),
    }
}

/// Every plan agrees with the definitional transform, and execution counts equal
/// the static counts.
fn oracle(ctx: &FieldCtx, algo: Algorithm, cfg: &VerifyConfig) -> Status {
    let plan = match build_plan(ctx, algo) {
        Ok(p) => p,
        Err(e) => return status_of(Err(e)),
    };
    let vectors = if ctx.m() > 8 { cfg.vectors.min(2) } else { cfg.vectors };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..vectors {
        let f = random_vector_from(ctx, &mut rng);
        let mut counter = OpCounter::new();
        let got = match execute(ctx, &plan, &f, &mut counter) {
            Ok(v) => v,
            Err(e) => return Status::Fail(e.to_string()),
        };
        if Ok(got) != naive_dft(ctx, &f) {
            return Status::Fail("output differs from the definitional transform".into());
        }
        if counter != plan.static_counts() {
            return Status::Fail(format!("dynamic counts {counter:?} differ from static counts"));
        }
    }
    Status::Pass
}

fn roundtrip(ctx: &FieldCtx, cfg: &VerifyConfig) -> Status {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x5eed);
    let vectors = if ctx.m() > 8 { cfg.vectors.min(2) } else { cfg.vectors };
    for _ in 0..vectors {
        let f = random_vector_from(ctx, &mut rng);
        match naive_dft(ctx, &f).and_then(|big| naive_idft(ctx, &big)) {
            Ok(back) if back == f => {}
            Ok(_) => return Status::Fail("inverse does not recover the input".into()),
            Err(e) => return Status::Fail(e.to_string()),
        }
    }
    Status::Pass
}

fn count_law(ctx: &FieldCtx) -> Status {
    let plan = match build_plan(ctx, Algorithm::Novel) {
        Ok(p) => p,
        Err(e) => return status_of(Err(e)),
    };
    match total_mult_formula(ctx.m()) {
        Ok(t) if t == plan.static_mults => Status::Pass,
        Ok(t) => Status::Fail(format!("static mults {} but formula gives {t}", plan.static_mults)),
        Err(e) => status_of(Err(e)),
    }
}

/// Runs the suite for one extension degree.
pub fn verify_m(m: u32, cfg: &VerifyConfig) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let mut push = |name: String, status: Status| out.push(CheckResult { m, name, status });
    let ctx = match FieldCtx::new(m, cfg.modulus) {
        Ok(c) => c,
        Err(e) => {
            push("field".into(), Status::Fail(e.to_string()));
            return out;
        }
    };
    for algo in [Algorithm::GoertzelBlahut, Algorithm::Cyclotomic, Algorithm::Novel] {
        push(format!("oracle {algo} = naive"), oracle(&ctx, algo, cfg));
    }
    push("inverse roundtrip".into(), roundtrip(&ctx, cfg));
    push("novel mults = formula".into(), count_law(&ctx));
    for (name, check, needs_even) in CHECKS {
        let status = if needs_even && m % 2 == 1 {
            Status::Skipped(format!("needs even m (got m = {m})"))
        } else {
            status_of(check(&ctx))
        };
        push(name.to_string(), status);
    }
    if cfg.golden {
        if m == 4 && ctx.modulus() == 0x13 {
            for (name, r) in crate::golden::check_m4(&ctx) {
                push(format!("golden {name}"), r.map_or_else(Status::Fail, |_| Status::Pass));
            }
        } else {
            push("golden".into(), Status::Skipped("golden matrices exist for m = 4, x^4+x+1 only".into()));
        }
    }
    out
}

pub fn verify_all(ms: &[u32], cfg: &VerifyConfig) -> Vec<CheckResult> {
    ms.iter().flat_map(|&m| verify_m(m, cfg)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes() {
        let cfg = VerifyConfig { vectors: 3, golden: true, ..Default::default() };
        let res = verify_all(&[2, 3, 4], &cfg);
        for r in &res {
            assert!(!r.failed(), "m={} {}: {:?}", r.m, r.name, r.status);
        }
        let m3_novel = res.iter().find(|r| r.m == 3 && r.name.contains("novel")).unwrap();
        assert!(matches!(m3_novel.status, Status::Skipped(_)));
        assert!(res.iter().filter(|r| r.name.starts_with("golden ")).all(|r| r.status == Status::Pass));
    }
}
