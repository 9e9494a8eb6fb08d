//! Truncated Laurent series in a fractional power of `q`.
//!
//! A [`QSeries`] stores its nonzero coefficients at exponents `k/D` and a
//! precision bound `P`: every coefficient at an exponent below `P` is known
//! exactly, nothing is claimed at or above it. Exact (finite, fully known)
//! series carry no bound at all. All arithmetic propagates the bound by the
//! sound rules
//!
//! * `a·b` is known below `min(P_a + v_b, P_b + v_a)`
//! * `a/b` is known below `min(P_a − v_b, P_b − 2v_b + v_a)`
//!
//! where `v` is the lowest known exponent (the valuation, or the precision
//! bound of a series with no known nonzero term).

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;

use crate::arith::{BigRat, CycRat};
use crate::error::{QError, QResult};
use crate::monomial::QMonomial;

#[derive(Clone)]
pub struct QSeries {
    scale: u64,
    prec: Option<BigRat>,
    terms: BTreeMap<i64, CycRat>,
}

fn key_of(e: &BigRat, scale: u64) -> i64 {
    let k = e * &BigRat::from_int(scale as i64);
    k.to_i64()
        .expect("exponent not representable at this scale")
}

fn expo_of(k: i64, scale: u64) -> BigRat {
    BigRat::new(k, scale as i64)
}

/// Smallest key `k` (at scale `d`) with `k/d >= p`: keys below it are
/// exactly the exponents below `p`.
fn key_bound(p: &BigRat, d: u64) -> i64 {
    (p * &BigRat::from_int(d as i64)).ceil_i64()
}

fn min_opt(a: Option<BigRat>, b: Option<BigRat>) -> Option<BigRat> {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(x), Some(y)) => Some(if x <= y { x } else { y }),
    }
}

fn add_opt(a: &Option<BigRat>, b: &BigRat) -> Option<BigRat> {
    a.as_ref().map(|x| x + b)
}

impl QSeries {
    /// The exact zero series.
    pub fn zero() -> Self {
        QSeries {
            scale: 1,
            prec: None,
            terms: BTreeMap::new(),
        }
    }

    /// Zero, known only below `prec`.
    pub fn zero_to(prec: BigRat) -> Self {
        QSeries {
            scale: 1,
            prec: Some(prec),
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        QSeries::constant(CycRat::one())
    }

    pub fn constant(c: CycRat) -> Self {
        QSeries::monomial(&QMonomial::constant(c))
    }

    pub fn monomial(m: &QMonomial) -> Self {
        QSeries::from_terms([(m.expo.clone(), m.coeff.clone())], None)
    }

    /// Build from (exponent, coefficient) pairs; repeated exponents are summed
    /// and terms at or beyond `prec` are dropped.
    pub fn from_terms<I>(terms: I, prec: Option<BigRat>) -> Self
    where
        I: IntoIterator<Item = (BigRat, CycRat)>,
    {
        let terms: Vec<(BigRat, CycRat)> = terms.into_iter().collect();
        let mut scale = 1u64;
        for (e, _) in &terms {
            scale = scale.lcm(&e.denom_u64().expect("exponent denominator too large"));
        }
        let mut map: BTreeMap<i64, CycRat> = BTreeMap::new();
        for (e, c) in terms {
            if prec.as_ref().is_some_and(|p| &e >= p) || c.is_zero() {
                continue;
            }
            *map.entry(key_of(&e, scale)).or_default() += &c;
        }
        map.retain(|_, c| !c.is_zero());
        QSeries {
            scale,
            prec,
            terms: map,
        }
        .normalized()
    }

    fn from_keys(scale: u64, prec: Option<BigRat>, terms: BTreeMap<i64, CycRat>) -> Self {
        QSeries { scale, prec, terms }.normalized()
    }

    fn normalized(mut self) -> Self {
        let mut g = self.scale;
        for k in self.terms.keys() {
            if g == 1 {
                break;
            }
            g = g.gcd(&k.unsigned_abs());
        }
        if g > 1 {
            let gi = g as i64;
            self.terms = std::mem::take(&mut self.terms)
                .into_iter()
                .map(|(k, c)| (k / gi, c))
                .collect();
            self.scale /= g;
        }
        self
    }

    /// Exponent denominator `D`.
    pub fn scale(&self) -> u64 {
        self.scale
    }

    /// Precision bound; `None` for exact series.
    pub fn prec(&self) -> Option<&BigRat> {
        self.prec.as_ref()
    }

    pub fn is_exact(&self) -> bool {
        self.prec.is_none()
    }

    /// True if no nonzero coefficient is known.
    pub fn has_no_terms(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_exact_zero(&self) -> bool {
        self.terms.is_empty() && self.prec.is_none()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Exponent of the lowest nonzero known coefficient.
    pub fn valuation(&self) -> Option<BigRat> {
        self.terms.keys().next().map(|&k| expo_of(k, self.scale))
    }

    /// Valuation, or the precision bound when no term is known. `None` only
    /// for the exact zero.
    pub fn lowest(&self) -> Option<BigRat> {
        self.valuation().or_else(|| self.prec.clone())
    }

    pub fn leading(&self) -> Option<QMonomial> {
        self.terms
            .iter()
            .next()
            .map(|(&k, c)| QMonomial::new(c.clone(), expo_of(k, self.scale)))
    }

    pub fn iter(&self) -> impl Iterator<Item = (BigRat, &CycRat)> + '_ {
        self.terms
            .iter()
            .map(move |(&k, c)| (expo_of(k, self.scale), c))
    }

    pub fn coeff_at(&self, e: &BigRat) -> QResult<CycRat> {
        if let Some(p) = &self.prec {
            if e >= p {
                return Err(QError::OrderExceeded {
                    exponent: e.clone(),
                    order: p.clone(),
                });
            }
        }
        let k = e * &BigRat::from_int(self.scale as i64);
        match k.to_i64() {
            Some(k) => Ok(self.terms.get(&k).cloned().unwrap_or_default()),
            None => Ok(CycRat::zero()),
        }
    }

    /// Forget everything at or above `p`.
    pub fn truncate(&self, p: &BigRat) -> QSeries {
        if self.prec.as_ref().is_some_and(|own| own <= p) {
            return self.clone();
        }
        let kb = key_bound(p, self.scale);
        let terms = self
            .terms
            .range(..kb)
            .map(|(&k, c)| (k, c.clone()))
            .collect();
        QSeries::from_keys(self.scale, Some(p.clone()), terms)
    }

    fn keys_at(&self, scale: u64) -> Vec<(i64, &CycRat)> {
        let f = (scale / self.scale) as i64;
        self.terms.iter().map(|(&k, c)| (k * f, c)).collect()
    }

    pub fn neg(&self) -> QSeries {
        QSeries {
            scale: self.scale,
            prec: self.prec.clone(),
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }

    pub fn scale_by(&self, c: &CycRat) -> QSeries {
        if c.is_zero() {
            return match &self.prec {
                None => QSeries::zero(),
                Some(_) => QSeries::zero_to(self.lowest().unwrap()),
            };
        }
        QSeries {
            scale: self.scale,
            prec: self.prec.clone(),
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    /// Multiply by an exact monomial.
    pub fn mul_mono(&self, m: &QMonomial) -> QSeries {
        if m.is_zero() {
            return QSeries::zero();
        }
        let prec = add_opt(&self.prec, &m.expo);
        let scale = self
            .scale
            .lcm(&m.expo.denom_u64().expect("exponent denominator too large"));
        let shift = key_of(&m.expo, scale);
        let f = (scale / self.scale) as i64;
        let terms = self
            .terms
            .iter()
            .map(|(&k, c)| (k * f + shift, c * &m.coeff))
            .collect();
        QSeries::from_keys(scale, prec, terms)
    }

    fn add_impl(&self, other: &QSeries, negate: bool) -> QSeries {
        let prec = min_opt(self.prec.clone(), other.prec.clone());
        let scale = self.scale.lcm(&other.scale);
        let kb = prec.as_ref().map(|p| key_bound(p, scale));
        let mut terms: BTreeMap<i64, CycRat> = BTreeMap::new();
        for (k, c) in self.keys_at(scale) {
            if kb.is_none_or(|b| k < b) {
                terms.insert(k, c.clone());
            }
        }
        for (k, c) in other.keys_at(scale) {
            if kb.is_none_or(|b| k < b) {
                let e = terms.entry(k).or_default();
                if negate {
                    *e -= c;
                } else {
                    *e += c;
                }
            }
        }
        terms.retain(|_, c| !c.is_zero());
        QSeries::from_keys(scale, prec, terms)
    }

    pub fn add(&self, other: &QSeries) -> QSeries {
        self.add_impl(other, false)
    }

    pub fn sub(&self, other: &QSeries) -> QSeries {
        self.add_impl(other, true)
    }

    pub fn mul(&self, other: &QSeries) -> QSeries {
        self.mul_capped(other, None)
    }

    /// Product, additionally forgetting everything at or above `cap`.
    pub fn mul_capped(&self, other: &QSeries, cap: Option<&BigRat>) -> QSeries {
        if self.is_exact_zero() || other.is_exact_zero() {
            return QSeries::zero();
        }
        let (va, vb) = (self.lowest().unwrap(), other.lowest().unwrap());
        let prec = min_opt(
            min_opt(add_opt(&self.prec, &vb), add_opt(&other.prec, &va)),
            cap.cloned(),
        );
        let scale = self.scale.lcm(&other.scale);
        if self.terms.is_empty() || other.terms.is_empty() {
            return QSeries {
                scale: 1,
                prec,
                terms: BTreeMap::new(),
            };
        }
        let a = self.keys_at(scale);
        let b = other.keys_at(scale);
        let lo = a[0].0 + b[0].0;
        let mut hi = a[a.len() - 1].0 + b[b.len() - 1].0 + 1;
        if let Some(p) = &prec {
            hi = hi.min(key_bound(p, scale));
        }
        if hi <= lo {
            return QSeries {
                scale: 1,
                prec,
                terms: BTreeMap::new(),
            };
        }
        let span = (hi - lo) as usize;
        let mut terms = BTreeMap::new();
        if span <= 1 << 22 {
            let mut acc = vec![CycRat::zero(); span];
            for &(ka, ca) in &a {
                for &(kb, cb) in &b {
                    let k = ka + kb;
                    if k >= hi {
                        break;
                    }
                    acc[(k - lo) as usize].add_mul(ca, cb);
                }
            }
            for (i, c) in acc.into_iter().enumerate() {
                if !c.is_zero() {
                    terms.insert(lo + i as i64, c);
                }
            }
        } else {
            for &(ka, ca) in &a {
                for &(kb, cb) in &b {
                    let k = ka + kb;
                    if k >= hi {
                        break;
                    }
                    terms.entry(k).or_insert_with(CycRat::zero).add_mul(ca, cb);
                }
            }
            terms.retain(|_, c: &mut CycRat| !c.is_zero());
        }
        QSeries::from_keys(scale, prec, terms)
    }

    pub fn div(&self, other: &QSeries) -> QResult<QSeries> {
        self.div_capped(other, None)
    }

    /// Quotient by long division, forgetting everything at or above `cap`.
    /// Two exact operands need a cap unless the divisor is a monomial.
    pub fn div_capped(&self, other: &QSeries, cap: Option<&BigRat>) -> QResult<QSeries> {
        let lead = other.leading().ok_or_else(|| {
            QError::DivisionByZero(match &other.prec {
                None => "divisor is exactly zero".to_string(),
                Some(p) => format!("divisor vanishes below q^{p}"),
            })
        })?;
        if self.is_exact_zero() {
            return Ok(QSeries::zero());
        }
        let vb = lead.expo.clone();
        let va = self.lowest().unwrap();
        let natural = min_opt(
            self.prec.as_ref().map(|p| p - &vb),
            other.prec.as_ref().map(|p| &(p - &(&vb + &vb)) + &va),
        );
        let prec = min_opt(natural, cap.cloned());
        if other.terms.len() == 1 {
            let inv = lead.inv()?;
            let q = self.mul_mono(&inv);
            return Ok(match &prec {
                Some(p) => q.truncate(p),
                None => q,
            });
        }
        let prec = prec.ok_or_else(|| {
            QError::PrecisionLoss("quotient of exact series needs a truncation bound".into())
        })?;
        let scale = self.scale.lcm(&other.scale);
        if self.terms.is_empty() {
            return Ok(QSeries::zero_to(prec));
        }
        let a = self.keys_at(scale);
        let b = other.keys_at(scale);
        let kb0 = b[0].0;
        let lead_inv = b[0].1.inv()?;
        let tail: Vec<(i64, &CycRat)> = b[1..].iter().map(|&(k, c)| (k - kb0, c)).collect();
        let qlo = a[0].0 - kb0;
        let qhi = key_bound(&prec, scale);
        if qhi <= qlo {
            return Ok(QSeries::zero_to(prec));
        }
        let n = (qhi - qlo) as usize;
        let mut q = vec![CycRat::zero(); n];
        for &(k, c) in &a {
            let i = k - kb0 - qlo;
            if i >= n as i64 {
                break;
            }
            q[i as usize] = c.clone();
        }
        for i in 0..n {
            let mut s = std::mem::take(&mut q[i]);
            for &(j, c) in &tail {
                if j as usize > i {
                    break;
                }
                let prev = &q[i - j as usize];
                if !prev.is_zero() {
                    s -= &(c * prev);
                }
            }
            q[i] = if s.is_zero() { s } else { &s * &lead_inv };
        }
        let terms = q
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (qlo + i as i64, c))
            .collect();
        Ok(QSeries::from_keys(scale, Some(prec), terms))
    }

    /// Non-negative integer power.
    pub fn pow(&self, k: u32, cap: Option<&BigRat>) -> QSeries {
        let mut acc = QSeries::one();
        for _ in 0..k {
            acc = acc.mul_capped(self, cap);
        }
        acc
    }

    /// `1/(1−m)` known below `prec`.
    pub fn geom_inv(m: &QMonomial, prec: &BigRat) -> QResult<QSeries> {
        if m.is_zero() {
            return Ok(QSeries::one());
        }
        if m.expo.is_zero() {
            if m.coeff.is_one() {
                return Err(QError::Genericity("1/(1-m) with m = 1".into()));
            }
            return Ok(QSeries::constant((&CycRat::one() - &m.coeff).inv()?));
        }
        // expo < 0: 1/(1-m) = -Σ_{k≥1} m^{-k}
        let (step, sign, first) = if m.expo.is_positive() {
            (m.clone(), CycRat::one(), 0)
        } else {
            (m.inv()?, -CycRat::one(), 1)
        };
        let mut terms = Vec::new();
        let mut cur = step.pow(first)?;
        while &cur.expo < prec {
            terms.push((cur.expo.clone(), &cur.coeff * &sign));
            cur = cur.mul(&step);
        }
        Ok(QSeries::from_terms(terms, Some(prec.clone())))
    }

    /// Substitute `q := base`.
    pub fn compose_monomial(&self, base: &QMonomial) -> QResult<QSeries> {
        if !base.expo.is_positive() {
            return Err(QError::InvalidParameter(format!(
                "substitution base {base} must have positive exponent"
            )));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (e, c) in self.iter() {
            let p = base.pow_rat(&e)?;
            terms.push((p.expo, c * &p.coeff));
        }
        let prec = self.prec.as_ref().map(|p| p * &base.expo);
        Ok(QSeries::from_terms(terms, prec))
    }

    /// Smallest exponent below `upto` where the two series differ, with both
    /// coefficients. Both series must be known below `upto`.
    pub fn first_mismatch(
        &self,
        other: &QSeries,
        upto: &BigRat,
    ) -> Option<(BigRat, CycRat, CycRat)> {
        let d = self.sub(other).truncate(upto);
        let (e, _) = d.iter().next()?;
        let a = self.coeff_at(&e).unwrap_or_default();
        let b = other.coeff_at(&e).unwrap_or_default();
        Some((e, a, b))
    }

    /// Exact equality of the known coefficients below `upto`.
    pub fn agrees_with(&self, other: &QSeries, upto: &BigRat) -> bool {
        self.first_mismatch(other, upto).is_none()
    }
}

impl PartialEq for QSeries {
    /// Same precision bound and same known coefficients.
    fn eq(&self, other: &Self) -> bool {
        self.prec == other.prec && {
            let d = self.sub(other);
            d.terms.is_empty()
        }
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.iter() {
            let m = QMonomial::new(c.clone(), e);
            let s = match c.as_rational() {
                Some(_) => m.to_string(),
                None => {
                    let q = QMonomial::q(m.expo.clone());
                    if m.expo.is_zero() {
                        format!("({c})")
                    } else {
                        format!("({c})*{q}")
                    }
                }
            };
            if first {
                write!(f, "{s}")?;
            } else if let Some(rest) = s.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {s}")?;
            }
            first = false;
        }
        match &self.prec {
            Some(p) if first => write!(f, "O(q^{p})"),
            Some(p) => write!(f, " + O(q^{p})"),
            None if first => write!(f, "0"),
            None => Ok(()),
        }
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Dense working buffer for long runs of binomial products and quotients.
///
/// Holds coefficients at keys `lo..hi` (scale `scale`); keys below `lo` are
/// zero and keys at or above `hi` are unknown.
#[derive(Clone)]
pub(crate) struct Dense {
    scale: u64,
    lo: i64,
    coeffs: Vec<CycRat>,
}

impl Dense {
    /// The constant 1, known below `prec`. Every exponent later multiplied in
    /// must be a multiple of `1/scale`.
    pub fn one(prec: &BigRat, scale: u64) -> Dense {
        let hi = key_bound(prec, scale).max(0);
        let mut coeffs = vec![CycRat::zero(); hi as usize];
        if let Some(c) = coeffs.first_mut() {
            *c = CycRat::one();
        }
        Dense {
            scale,
            lo: 0,
            coeffs,
        }
    }

    fn key(&self, e: &BigRat) -> i64 {
        key_of(e, self.scale)
    }

    /// Multiply by `(1 − m)` with `m.expo ≥ 0`.
    pub fn mul_binomial(&mut self, m: &QMonomial) {
        let e = self.key(&m.expo);
        debug_assert!(e >= 0);
        if e == 0 {
            let f = &CycRat::one() - &m.coeff;
            for c in self.coeffs.iter_mut() {
                if !c.is_zero() {
                    *c = &*c * &f;
                }
            }
            return;
        }
        let e = e as usize;
        let neg = -&m.coeff;
        for i in (e..self.coeffs.len()).rev() {
            if self.coeffs[i - e].is_zero() {
                continue;
            }
            let (head, tail) = self.coeffs.split_at_mut(i);
            tail[0].add_mul(&head[i - e], &neg);
        }
    }

    /// Divide by `(1 − m)`, `m.expo > 0` or `m` a constant other than 1.
    pub fn div_binomial(&mut self, m: &QMonomial) -> QResult<()> {
        let e = self.key(&m.expo);
        if e == 0 {
            if m.coeff.is_one() {
                return Err(QError::Genericity(
                    "vanishing factor (1 - 1) in a denominator".into(),
                ));
            }
            let f = (&CycRat::one() - &m.coeff).inv()?;
            for c in self.coeffs.iter_mut() {
                if !c.is_zero() {
                    *c = &*c * &f;
                }
            }
            return Ok(());
        }
        debug_assert!(e > 0);
        let e = e as usize;
        for i in e..self.coeffs.len() {
            if self.coeffs[i - e].is_zero() {
                continue;
            }
            let (head, tail) = self.coeffs.split_at_mut(i);
            tail[0].add_mul(&head[i - e], &m.coeff);
        }
        Ok(())
    }

    /// Forget everything at or above `prec`.
    pub fn truncate(&mut self, prec: &BigRat) {
        let hi = key_bound(prec, self.scale);
        let len = (hi - self.lo).max(0) as usize;
        if len < self.coeffs.len() {
            self.coeffs.truncate(len);
        }
    }

    pub fn into_series(self) -> QSeries {
        let prec = expo_of(self.lo + self.coeffs.len() as i64, self.scale);
        let lo = self.lo;
        let terms = self
            .coeffs
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (lo + i as i64, c))
            .collect();
        QSeries::from_keys(self.scale, Some(prec), terms)
    }
}

/// Denominator of a rational exponent as a scale factor.
pub(crate) fn den(e: &BigRat) -> u64 {
    e.denom_u64().expect("exponent denominator too large")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRat {
        BigRat::new(n, d)
    }

    fn poly(cs: &[i64]) -> QSeries {
        QSeries::from_terms(
            cs.iter()
                .enumerate()
                .map(|(i, &c)| (BigRat::from_int(i as i64), CycRat::from_int(c))),
            None,
        )
    }

    #[test]
    fn geometric_times_binomial_is_one() {
        let g = QSeries::geom_inv(&QMonomial::qi(1), &r(20, 1)).unwrap();
        let p = poly(&[1, -1]).mul(&g);
        assert_eq!(p.prec(), Some(&r(20, 1)));
        assert!(p.agrees_with(&QSeries::one(), &r(20, 1)));
        assert_eq!(p.num_terms(), 1);
    }

    #[test]
    fn zero_times_series_keeps_window() {
        let g = QSeries::geom_inv(&QMonomial::qi(1), &r(10, 1)).unwrap();
        let z = QSeries::zero_to(r(5, 1));
        let p = z.mul(&g);
        assert!(p.has_no_terms());
        assert_eq!(p.prec(), Some(&r(5, 1)));
    }

    #[test]
    fn exact_polynomial_arithmetic() {
        let a = poly(&[1, 1]);
        assert_eq!(a.mul(&a), poly(&[1, 2, 1]));
        let q = poly(&[1, 0, -1])
            .div_capped(&poly(&[1, -1]), Some(&r(10, 1)))
            .unwrap();
        assert!(q.agrees_with(&poly(&[1, 1]), &r(10, 1)));
    }

    #[test]
    fn negative_exponent_geometric() {
        let prec = r(12, 1);
        let g = QSeries::geom_inv(&QMonomial::qi(-1), &prec).unwrap();
        assert_eq!(g.valuation(), Some(r(1, 1)));
        assert_eq!(g.coeff_at(&r(3, 1)).unwrap(), CycRat::from_int(-1));
        let back = g.mul(&QSeries::from_terms(
            [(r(0, 1), CycRat::one()), (r(-1, 1), CycRat::from_int(-1))],
            None,
        ));
        assert!(back.agrees_with(&QSeries::one(), back.prec().unwrap()));
        let half = QSeries::geom_inv(&QMonomial::ci(-1, 0), &prec).unwrap();
        assert_eq!(half, QSeries::constant(CycRat::from_rat(r(1, 2))));
        assert!(QSeries::geom_inv(&QMonomial::one(), &prec).is_err());
    }

    #[test]
    fn division_window_rule() {
        // a = q^2 + O(q^10), b = q - q^3 + O(q^8): a/b known below min(10-1, 8-2+2) = 8
        let a = QSeries::from_terms([(r(2, 1), CycRat::one())], Some(r(10, 1)));
        let b = QSeries::from_terms(
            [(r(1, 1), CycRat::one()), (r(3, 1), CycRat::from_int(-1))],
            Some(r(8, 1)),
        );
        let q = a.div(&b).unwrap();
        assert_eq!(q.prec(), Some(&r(8, 1)));
        assert_eq!(q.coeff_at(&r(3, 1)).unwrap(), CycRat::one());
        assert!(matches!(
            q.coeff_at(&r(8, 1)),
            Err(QError::OrderExceeded { .. })
        ));
        assert!(a.div(&QSeries::zero_to(r(4, 1))).is_err());
    }

    #[test]
    fn scales_and_coefficients() {
        let s = QSeries::from_terms(
            [(r(1, 2), CycRat::one()), (r(1, 1), CycRat::from_int(2))],
            None,
        );
        assert_eq!(s.scale(), 2);
        assert_eq!(s.coeff_at(&r(1, 1)).unwrap(), CycRat::from_int(2));
        assert_eq!(s.coeff_at(&r(1, 3)).unwrap(), CycRat::zero());
        let t = s.sub(&QSeries::monomial(&QMonomial::q(r(1, 2))));
        assert_eq!(t.scale(), 1);
    }

    #[test]
    fn composition() {
        let s = poly(&[1, 1]);
        assert_eq!(
            s.compose_monomial(&QMonomial::qi(2)).unwrap(),
            poly(&[1, 0, 1])
        );
        let g = QSeries::geom_inv(&QMonomial::qi(1), &r(8, 1)).unwrap();
        let alt = g.compose_monomial(&QMonomial::ci(-1, 1)).unwrap();
        assert_eq!(alt.coeff_at(&r(5, 1)).unwrap(), CycRat::from_int(-1));
        let h = g.compose_monomial(&QMonomial::q(r(1, 2))).unwrap();
        assert_eq!(h.prec(), Some(&r(4, 1)));
        assert_eq!(h.scale(), 2);
    }

    #[test]
    fn dense_binomials_roundtrip() {
        let prec = r(30, 1);
        let mut d = Dense::one(&prec, 1);
        for i in 1..30 {
            d.mul_binomial(&QMonomial::qi(i));
        }
        for i in 1..30 {
            d.div_binomial(&QMonomial::qi(i)).unwrap();
        }
        assert!(d.into_series().agrees_with(&QSeries::one(), &prec));
    }

    #[test]
    fn display() {
        let s = QSeries::from_terms(
            [(r(0, 1), CycRat::one()), (r(1, 1), CycRat::from_int(-2))],
            Some(r(3, 1)),
        );
        assert_eq!(s.to_string(), "1 - 2*q + O(q^3)");
    }
}
