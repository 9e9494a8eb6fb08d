//! Exact rational and cyclotomic arithmetic.

mod cyc;
mod rat;

pub use cyc::{cyclotomic_poly, euler_phi, CycRat};
pub use rat::{lcm_u64, BigRat};
