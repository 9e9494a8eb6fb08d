//! Fixed inputs shared by the benchmarks.

use mockq::{BigRat, CycRat, QMonomial};

pub fn order(n: i64) -> BigRat {
    BigRat::from_int(n)
}

/// A generic point `x = ζ₆ q^{2/3}`, `y = −q^{1/2}`.
pub fn generic_xy() -> (QMonomial, QMonomial) {
    (
        QMonomial::new(CycRat::zeta(1, 6), BigRat::new(2, 3)),
        QMonomial::new(CycRat::from_int(-1), BigRat::new(1, 2)),
    )
}

pub const ORDERS: [i64; 3] = [50, 100, 200];
