#![allow(dead_code)]

use mockq::{BigRat, CycRat, Node, QError, QMonomial, QResult, QSeries};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn o(n: i64) -> BigRat {
    BigRat::from_int(n)
}

pub fn q(n: i64) -> QMonomial {
    QMonomial::qi(n)
}

pub fn mq(n: i64) -> QMonomial {
    QMonomial::ci(-1, n)
}

pub fn qr(n: i64, d: i64) -> QMonomial {
    QMonomial::q(BigRat::new(n, d))
}

pub fn c(n: i64) -> QMonomial {
    QMonomial::ci(n, 0)
}

/// `±q^{k/d}` with `d ∈ {1,2,3}` and `|k/d| ≤ span`.
pub fn random_mono(r: &mut ChaCha8Rng, span: i64) -> QMonomial {
    let d = r.gen_range(1..=3);
    let k = r.gen_range(-span * d..=span * d);
    let s = if r.gen_bool(0.5) { 1 } else { -1 };
    QMonomial::new(CycRat::from_int(s), BigRat::new(k, d))
}

#[derive(Debug)]
pub enum Outcome {
    Agree,
    /// Both sides vanish on the window, so the sample says nothing.
    Vacuous,
    Mismatch(BigRat, CycRat, CycRat),
}

/// Evaluate both sides and compare on the window.
pub fn compare(lhs: &Node, rhs: &Node, order: &BigRat) -> QResult<Outcome> {
    let a = lhs.eval(order)?;
    let b = rhs.eval(order)?;
    if a.has_no_terms() && b.has_no_terms() {
        return Ok(Outcome::Vacuous);
    }
    Ok(match a.first_mismatch(&b, order) {
        None => Outcome::Agree,
        Some((e, x, y)) => Outcome::Mismatch(e, x, y),
    })
}

pub fn is_degenerate(e: &QError) -> bool {
    matches!(e.root(), QError::Genericity(_) | QError::DivisionByZero(_))
}

/// Run `check` on `count` generic samples drawn by `draw`, skipping
/// degenerate specializations. Panics with the first failure.
pub fn for_generic<S: std::fmt::Debug>(
    seed: u64,
    count: usize,
    mut draw: impl FnMut(&mut ChaCha8Rng) -> S,
    mut build: impl FnMut(&S) -> QResult<(Node, Node)>,
    order: &BigRat,
) {
    let mut r = rng(seed);
    let mut done = 0;
    let mut tries = 0;
    while done < count {
        tries += 1;
        assert!(tries < 50 * count, "too many degenerate samples");
        let s = draw(&mut r);
        let result = build(&s).and_then(|(l, rh)| compare(&l, &rh, order));
        match result {
            Ok(Outcome::Agree) => done += 1,
            Ok(Outcome::Vacuous) => {}
            Ok(Outcome::Mismatch(e, a, b)) => panic!("{s:?}: mismatch at q^{e}: {a} vs {b}"),
            Err(e) if is_degenerate(&e) => {}
            Err(e) => panic!("{s:?}: {e}"),
        }
    }
}

pub fn series_eq(a: &QSeries, b: &QSeries, order: &BigRat) -> bool {
    a.agrees_with(b, order)
}

/// `ζ_N^k q^{e}` with `N ∈ {1,2,3,4,6}` and `e` as in [`random_mono`].
pub fn random_cyc_mono(r: &mut ChaCha8Rng, span: i64) -> QMonomial {
    let n = [1u32, 2, 3, 4, 6][r.gen_range(0..5)];
    let k = r.gen_range(0..n as i64);
    let m = random_mono(r, span);
    m.scale(&CycRat::zeta(k, n))
}
