//! Discrete Fourier transforms of length `n = 2^m - 1` over GF(2^m).
//!
//! Four pipelines are provided: the definitional transform, Goertzel–Blahut,
//! the cyclotomic algorithm, and a reduced-multiplication method that factors
//! each Moore–Vandermonde evaluation matrix recursively through its subfield.
//! Every pipeline compiles to a [`DftPlan`] whose operation counts are known
//! before execution.
//!
//! ```
//! use gfdft_core::{FieldCtx, OpCounter, dft};
//!
//! let ctx = FieldCtx::new(4, None).unwrap();
//! let plan = dft::novel_plan(&ctx).unwrap();
//! assert_eq!(plan.static_mults, 13);
//!
//! let f: Vec<_> = (0..15).map(|i| ctx.exp(i * 7)).collect();
//! let mut counter = OpCounter::new();
//! let out = dft::execute(&ctx, &plan, &f, &mut counter).unwrap();
//! assert_eq!(out, dft::naive_dft(&ctx, &f).unwrap());
//! assert_eq!(counter.mults, 13);
//! ```
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod conjugacy;
pub mod dft;
pub mod error;
pub mod evaluator;
pub mod field;
pub mod identities;
pub mod linalg;
pub mod opcount;
pub mod poly;

pub use conjugacy::{BasisKind, BasisSpec, ConjugacyClass};
pub use dft::{Algorithm, DftPlan};

pub use error::{Error, Result};
pub use evaluator::{FactoredEvaluator, RemainderMatrix};

pub use field::{FieldCtx, FieldElement};
pub use linalg::{AdditionSchedule, BinMatrix, FieldMatrix, Permutation};
pub use opcount::{AddStage, OpCounter};
pub use poly::{BinPoly, FieldPoly};
