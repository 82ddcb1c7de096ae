//! Matrices over GF(2) and GF(2^m), permutations, and XOR scheduling.

mod bin;
mod coords;
mod cse;
mod fmat;
mod perm;
mod structured;

pub use bin::{bin_invert, BinMatrix};
pub use coords::{combine, independent, rank, BasisSolver};
pub use cse::{greedy_cse, AdditionSchedule};
pub use fmat::FieldMatrix;
pub use perm::{pi_permutation, Permutation};
pub use structured::{basis_circulant, moore_vandermonde, moore_vandermonde_of};
