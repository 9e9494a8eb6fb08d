//! Index ranges for lacunary sums whose exponent is convex in the index.

use crate::arith::BigRat;

/// Integers `n` with `f(n) < bound`, for `f` convex on the integers.
///
/// Walks downhill from `start` to a minimizer, then widens the interval in
/// both directions while the exponent stays below `bound`. Returns `None`
/// when no index qualifies.
pub fn convex_range<F>(f: F, start: i64, bound: &BigRat) -> Option<(i64, i64)>
where
    F: Fn(i64) -> BigRat,
{
    let mut n = start;
    let mut fn_ = f(n);
    loop {
        let right = f(n + 1);
        if right < fn_ {
            n += 1;
            fn_ = right;
            continue;
        }
        let left = f(n - 1);
        if left < fn_ {
            n -= 1;
            fn_ = left;
            continue;
        }
        break;
    }
    if &fn_ >= bound {
        return None;
    }
    let (mut lo, mut hi) = (n, n);
    while &f(lo - 1) < bound {
        lo -= 1;
    }
    while &f(hi + 1) < bound {
        hi += 1;
    }
    Some((lo, hi))
}

/// Like [`convex_range`], restricted to `n >= min`.
pub fn convex_range_from<F>(f: F, min: i64, bound: &BigRat) -> Option<(i64, i64)>
where
    F: Fn(i64) -> BigRat,
{
    let (lo, hi) = convex_range(&f, min, bound)?;
    (hi >= min).then(|| (lo.max(min), hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_window() {
        // n(n-1)/2 < 10 for n in -3..=4
        let f = |n: i64| BigRat::from_int(n * (n - 1) / 2);
        assert_eq!(convex_range(f, 0, &BigRat::from_int(10)), Some((-3, 4)));
        assert_eq!(convex_range(f, 0, &BigRat::from_int(0)), None);
        assert_eq!(convex_range_from(f, 2, &BigRat::from_int(10)), Some((2, 4)));
    }

    #[test]
    fn far_minimum() {
        let f = |n: i64| BigRat::from_int((n - 50) * (n - 50));
        assert_eq!(convex_range(f, 0, &BigRat::from_int(5)), Some((48, 52)));
    }
}
