//! Pochhammer products and the theta function `j(x;q)`.
//!
//! All functions take the base as a monomial, so `j(x;−q)` or `j(x;q^{1/4})`
//! are evaluated directly. Products are expanded only as far as the requested
//! window: a factor `1 − m` with `m` at or beyond the window is exactly `1`
//! there.

use std::cell::RefCell;
use std::collections::HashMap;

use num_integer::Integer;

use crate::arith::{BigRat, CycRat};
use crate::error::{QError, QResult};
use crate::lazy::Node;
use crate::monomial::QMonomial;
use crate::scan::convex_range;
use crate::series::{den, Dense, QSeries};

fn check_base(base: &QMonomial) -> QResult<()> {
    if base.is_zero() || !base.expo.is_positive() {
        return Err(QError::InvalidParameter(format!(
            "theta base {base} must have positive exponent"
        )));
    }
    Ok(())
}

/// Multiply `d` by `∏_{i≥0} (1 − x·base^i)` below the window `w`.
fn mul_poch_into(d: &mut Dense, x: &QMonomial, base: &QMonomial, w: &BigRat, count: Option<u64>) {
    let mut m = x.clone();
    let mut i = 0u64;
    while &m.expo < w && count.is_none_or(|n| i < n) {
        d.mul_binomial(&m);
        m = m.mul(base);
        i += 1;
    }
}

fn is_exact_one(m: &QMonomial) -> bool {
    m.is_one()
}

/// `(x;base)_∞` known below `order`.
pub fn poch_inf(x: &QMonomial, base: &QMonomial, order: &BigRat) -> QResult<QSeries> {
    check_base(base)?;
    if x.is_zero() {
        return Ok(QSeries::one());
    }
    if x.expo.is_negative() {
        return Err(QError::UnsupportedArgument(format!(
            "infinite product ({x};{base}) has a factor with negative exponent"
        )));
    }
    if is_exact_one(x) {
        return Ok(QSeries::zero());
    }
    let scale = den(&x.expo).lcm(&den(&base.expo));
    let mut d = Dense::one(order, scale);
    mul_poch_into(&mut d, x, base, order, None);
    Ok(d.into_series())
}

/// `(x;base)_n` for `n ≥ 0`, known below `order`. Factors with negative
/// exponent are allowed.
pub fn poch_fin(x: &QMonomial, base: &QMonomial, n: u64, order: &BigRat) -> QResult<QSeries> {
    check_base(base)?;
    let mut pre = QMonomial::one();
    let mut positive = Vec::new();
    let mut m = x.clone();
    for _ in 0..n {
        if m.is_zero() {
            break;
        }
        if is_exact_one(&m) {
            return Ok(QSeries::zero());
        }
        if m.expo.is_negative() {
            // 1 − m = −m(1 − 1/m)
            pre = pre.mul(&m.neg());
            positive.push(m.inv()?);
        } else {
            positive.push(m.clone());
        }
        m = m.mul(base);
    }
    let w = order - &pre.expo;
    let mut scale = den(&x.expo).lcm(&den(&base.expo));
    scale = scale.lcm(&den(&w));
    let mut d = Dense::one(&w, scale);
    for f in &positive {
        if f.expo < w {
            d.mul_binomial(f);
        }
    }
    Ok(d.into_series().mul_mono(&pre))
}

thread_local! {
    static J_CACHE: RefCell<HashMap<(QMonomial, QMonomial), QSeries>> = RefCell::new(HashMap::new());
}

const J_CACHE_LIMIT: usize = 4096;

/// `x = base^n·x'` with `0 < expo(x') ≤ expo(base)`.
fn normalize(x: &QMonomial, base: &QMonomial) -> QResult<(i64, QMonomial)> {
    let t = &x.expo / &base.expo;
    let n = t.ceil_i64() - 1;
    let xr = x.div(&base.pow(n)?)?;
    Ok((n, xr))
}

/// `j(x';base)` for a normalized argument, known below `w`.
fn j_unit(x: &QMonomial, base: &QMonomial, w: &BigRat) -> QResult<QSeries> {
    let key = (x.clone(), base.clone());
    let hit = J_CACHE.with(|c| {
        c.borrow()
            .get(&key)
            .and_then(|s| (s.prec().is_none_or(|p| p >= w)).then(|| s.truncate(w)))
    });
    if let Some(s) = hit {
        return Ok(s);
    }
    let scale = den(&x.expo).lcm(&den(&base.expo));
    let mut d = Dense::one(w, scale);
    let y = base.div(x)?;
    if is_exact_one(&y) {
        return Err(QError::Genericity(format!(
            "j({x};{base}) normalization hit a pole"
        )));
    }
    mul_poch_into(&mut d, x, base, w, None);
    mul_poch_into(&mut d, &y, base, w, None);
    mul_poch_into(&mut d, base, base, w, None);
    let s = d.into_series();
    J_CACHE.with(|c| {
        let mut c = c.borrow_mut();
        if c.len() >= J_CACHE_LIMIT {
            c.clear();
        }
        c.insert(key, s.clone());
    });
    Ok(s)
}

/// `j(x;base) = (x)_∞(base/x)_∞(base)_∞` known below `order`.
pub fn jtheta(x: &QMonomial, base: &QMonomial, order: &BigRat) -> QResult<QSeries> {
    check_base(base)?;
    if x.is_zero() {
        return Err(QError::InvalidParameter("j(0;q) is undefined".into()));
    }
    let (n, xr) = normalize(x, base)?;
    if xr == *base {
        return Ok(QSeries::zero());
    }
    // j(base^n x') = (-1)^n base^{-C(n,2)} x'^{-n} j(x')
    let sign = if n.is_odd() { -1 } else { 1 };
    let pre = base
        .pow(-(n * (n - 1) / 2))?
        .mul(&xr.pow(-n)?)
        .scale(&CycRat::from_int(sign));
    let w = order - &pre.expo;
    Ok(j_unit(&xr, base, &w)?.mul_mono(&pre))
}

/// The exponent of the leading term of `j(x;base)`, or `None` if it vanishes.
pub fn jtheta_valuation(x: &QMonomial, base: &QMonomial) -> QResult<Option<BigRat>> {
    check_base(base)?;
    let (n, xr) = normalize(x, base)?;
    if xr == *base {
        return Ok(None);
    }
    let n_r = BigRat::from_int(n);
    let e = &(&(-&BigRat::from_int(n * (n - 1) / 2)) * &base.expo) - &(&n_r * &xr.expo);
    Ok(Some(e))
}

/// `j(x;base)` as the bilateral sum `Σ (−1)^n base^{C(n,2)} x^n`.
pub fn jtheta_sum_oracle(x: &QMonomial, base: &QMonomial, order: &BigRat) -> QResult<QSeries> {
    check_base(base)?;
    let expo = |n: i64| {
        &(&base.expo * &BigRat::from_int(n * (n - 1) / 2)) + &(&x.expo * &BigRat::from_int(n))
    };
    let Some((lo, hi)) = convex_range(expo, 0, order) else {
        return Ok(QSeries::zero_to(order.clone()));
    };
    let mut terms = Vec::with_capacity((hi - lo + 1) as usize);
    for n in lo..=hi {
        let sign = if n.is_odd() { -1 } else { 1 };
        let t = base
            .pow(n * (n - 1) / 2)?
            .mul(&x.pow(n)?)
            .scale(&CycRat::from_int(sign));
        terms.push((t.expo, t.coeff));
    }
    Ok(QSeries::from_terms(terms, Some(order.clone())))
}

/// Lazy `j(x;base)`.
pub fn j_node(x: &QMonomial, base: &QMonomial) -> Node {
    let (x, b) = (x.clone(), base.clone());
    Node::leaf(format!("j({x}; {b})"), move |o| jtheta(&x, &b, o))
}

/// Lazy product `j(x_1;base)⋯j(x_k;base)`.
pub fn j_prod(xs: &[QMonomial], base: &QMonomial) -> Node {
    Node::product(xs.iter().map(|x| j_node(x, base)).collect())
}

/// Lazy `(x;base)_∞`.
pub fn poch_inf_node(x: &QMonomial, base: &QMonomial) -> Node {
    let (x, b) = (x.clone(), base.clone());
    Node::leaf(format!("({x}; {b})_inf"), move |o| poch_inf(&x, &b, o))
}

/// Lazy `(x;base)_n`.
pub fn poch_fin_node(x: &QMonomial, base: &QMonomial, n: u64) -> Node {
    let (x, b) = (x.clone(), base.clone());
    Node::leaf(format!("({x}; {b})_{n}"), move |o| poch_fin(&x, &b, n, o))
}

/// `J_{a,m} = j(q^a;q^m)`.
#[allow(non_snake_case)]
pub fn J(a: i64, m: i64) -> Node {
    j_node(&QMonomial::qi(a), &QMonomial::qi(m))
}

/// `J̄_{a,m} = j(−q^a;q^m)`.
pub fn jbar(a: i64, m: i64) -> Node {
    j_node(&QMonomial::ci(-1, a), &QMonomial::qi(m))
}

/// `J_m = (q^m;q^m)_∞`.
pub fn jm(m: i64) -> Node {
    poch_inf_node(&QMonomial::qi(m), &QMonomial::qi(m))
}

/// The three standard theta constants.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThetaKind {
    J,
    JBar,
    Jm,
}

/// `J_{a,m}`, `J̄_{a,m}` or `J_m` known below `order` (`a` ignored for `J_m`).
pub fn j_std(kind: ThetaKind, a: i64, m: i64, order: &BigRat) -> QResult<QSeries> {
    if m <= 0 {
        return Err(QError::InvalidParameter(format!(
            "theta modulus {m} must be positive"
        )));
    }
    let base = QMonomial::qi(m);
    match kind {
        ThetaKind::J => jtheta(&QMonomial::qi(a), &base, order),
        ThetaKind::JBar => jtheta(&QMonomial::ci(-1, a), &base, order),
        ThetaKind::Jm => poch_inf(&base, &base, order),
    }
}
