//! Elements of cyclotomic fields ℚ(ζ_N) in the power basis mod Φ_N.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::sync::{Arc, OnceLock, RwLock};

use num_integer::Integer;

use super::rat::BigRat;
use crate::error::{QError, QResult};

/// An exact element of ℚ(ζ_N).
///
/// Rational values are always stored as [`CycRat::is_rational`] with
/// conductor 1; anything else keeps the conductor it was built in, and
/// binary operations lift both sides to the lcm conductor. Conductors
/// `≡ 2 (mod 4)` never occur because ℚ(ζ_{2M}) = ℚ(ζ_M) for odd `M`.
#[derive(Clone)]
pub struct CycRat(Inner);

#[derive(Clone)]
enum Inner {
    Rat(BigRat),
    // conductor n >= 3, coefficient vector of length φ(n), not all of c[1..] zero
    Cyc(u32, Box<[BigRat]>),
}

pub fn euler_phi(n: u32) -> u32 {
    let mut m = n;
    let mut phi = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if m > 1 {
        phi -= phi / m;
    }
    phi
}

fn mobius(n: u32) -> i64 {
    let mut m = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

/// Coefficients of Φ_n, constant term first.
pub fn cyclotomic_poly(n: u32) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(p) = cache.read().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let q = cyclotomic_poly(d);
            p = exact_div_monic(&p, &q);
        }
    }
    let p = Arc::new(p);
    cache.write().unwrap().insert(n, p.clone());
    p
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut r = num.to_vec();
    let qlen = num.len() - dn;
    let mut q = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let t = r[i + dn];
        q[i] = t;
        if t != 0 {
            for (j, &c) in den.iter().enumerate() {
                r[i + j] -= t * c;
            }
        }
    }
    debug_assert!(r.iter().all(|&c| c == 0));
    q
}

/// Reduce `p` modulo Φ_n into a vector of length φ(n).
fn reduce_mod_cyclo(mut p: Vec<BigRat>, n: u32) -> Vec<BigRat> {
    let phi = cyclotomic_poly(n);
    let deg = phi.len() - 1;
    if p.len() > deg {
        for i in (deg..p.len()).rev() {
            if p[i].is_zero() {
                continue;
            }
            let t = std::mem::take(&mut p[i]);
            for (j, &c) in phi.iter().enumerate().take(deg) {
                if c != 0 {
                    let k = i - deg + j;
                    p[k] -= &(&t * &BigRat::from_int(c));
                }
            }
        }
        p.truncate(deg);
    } else {
        p.resize(deg, BigRat::zero());
    }
    p
}

/// Conductor with the `2 mod 4` redundancy removed.
fn canonical_conductor(n: u32) -> u32 {
    if n % 4 == 2 {
        n / 2
    } else {
        n
    }
}

impl CycRat {
    pub fn zero() -> Self {
        CycRat(Inner::Rat(BigRat::zero()))
    }

    pub fn one() -> Self {
        CycRat(Inner::Rat(BigRat::one()))
    }

    pub fn from_int(n: i64) -> Self {
        CycRat(Inner::Rat(BigRat::from_int(n)))
    }

    pub fn from_rat(r: BigRat) -> Self {
        CycRat(Inner::Rat(r))
    }

    /// ζ_N^k.
    pub fn zeta(k: i64, n: u32) -> Self {
        assert!(n >= 1, "root of unity order must be positive");
        if n % 4 == 2 {
            // ζ_{2M} = -ζ_M^{(M+1)/2} for odd M
            let m = n / 2;
            let z = CycRat::zeta(k.rem_euclid(n as i64) * ((m as i64 + 1) / 2), m);
            return if k.rem_euclid(2) == 1 { -z } else { z };
        }
        let k = k.rem_euclid(n as i64) as usize;
        if n == 1 || k == 0 {
            return CycRat::one();
        }
        let mut p = vec![BigRat::zero(); k + 1];
        p[k] = BigRat::one();
        CycRat::from_poly(p, n)
    }

    fn from_poly(p: Vec<BigRat>, n: u32) -> Self {
        if n <= 2 {
            let v = p.iter().enumerate().fold(BigRat::zero(), |acc, (k, c)| {
                if n == 2 && k % 2 == 1 {
                    &acc - c
                } else {
                    &acc + c
                }
            });
            return CycRat(Inner::Rat(v));
        }
        let r = reduce_mod_cyclo(p, n);
        if r[1..].iter().all(BigRat::is_zero) {
            CycRat(Inner::Rat(r.into_iter().next().unwrap()))
        } else {
            CycRat(Inner::Cyc(n, r.into_boxed_slice()))
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(&self.0, Inner::Rat(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(&self.0, Inner::Rat(r) if r.is_one())
    }

    pub fn is_rational(&self) -> bool {
        matches!(self.0, Inner::Rat(_))
    }

    pub fn as_rational(&self) -> Option<&BigRat> {
        match &self.0 {
            Inner::Rat(r) => Some(r),
            Inner::Cyc(..) => None,
        }
    }

    pub fn conductor(&self) -> u32 {
        match &self.0 {
            Inner::Rat(_) => 1,
            Inner::Cyc(n, _) => *n,
        }
    }

    /// Power-basis coefficients in ℚ(ζ_n); `n` must be a multiple of the conductor.
    pub fn coeffs_in(&self, n: u32) -> Vec<BigRat> {
        let n = canonical_conductor(n);
        let own = self.conductor();
        assert!(n % own == 0, "cannot lift conductor {own} into {n}");
        match &self.0 {
            Inner::Rat(r) => {
                let mut v = vec![BigRat::zero(); euler_phi(n) as usize];
                v[0] = r.clone();
                v
            }
            Inner::Cyc(m, c) if *m == n => c.to_vec(),
            Inner::Cyc(m, c) => {
                let step = (n / m) as usize;
                let mut p = vec![BigRat::zero(); (c.len() - 1) * step + 1];
                for (k, ck) in c.iter().enumerate() {
                    p[k * step] = ck.clone();
                }
                reduce_mod_cyclo(p, n)
            }
        }
    }

    /// The same element represented in ℚ(ζ_n).
    pub fn lift(&self, n: u32) -> CycRat {
        let n = canonical_conductor(n);
        if self.is_rational() || self.conductor() == n {
            return self.clone();
        }
        CycRat(Inner::Cyc(n, self.coeffs_in(n).into_boxed_slice()))
    }

    fn common(a: &CycRat, b: &CycRat) -> (u32, Vec<BigRat>, Vec<BigRat>) {
        let n = canonical_conductor(a.conductor().lcm(&b.conductor()));
        (n, a.coeffs_in(n), b.coeffs_in(n))
    }

    pub fn scale(&self, r: &BigRat) -> CycRat {
        match &self.0 {
            Inner::Rat(a) => CycRat(Inner::Rat(a * r)),
            Inner::Cyc(n, c) => {
                if r.is_zero() {
                    return CycRat::zero();
                }
                CycRat(Inner::Cyc(*n, c.iter().map(|x| x * r).collect()))
            }
        }
    }

    pub fn inv(&self) -> QResult<CycRat> {
        match &self.0 {
            Inner::Rat(r) => r
                .recip()
                .map(CycRat::from_rat)
                .ok_or_else(|| QError::DivisionByZero("inverse of zero".into())),
            Inner::Cyc(n, c) => {
                let phi: Vec<BigRat> = cyclotomic_poly(*n)
                    .iter()
                    .map(|&v| BigRat::from_int(v))
                    .collect();
                let u = poly_inverse_mod(c, &phi);
                Ok(CycRat::from_poly(u, *n))
            }
        }
    }

    pub fn pow(&self, e: i64) -> QResult<CycRat> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        if let Inner::Rat(r) = &self.0 {
            if e <= i32::MAX as i64 {
                return Ok(CycRat::from_rat(r.pow(e as i32)));
            }
        }
        let mut acc = CycRat::one();
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// Writes a nonzero element as `r·e^{2πiθ}` with `r > 0` rational and `θ ∈ [0,1)`,
    /// if it has that shape.
    pub fn polar(&self) -> Option<(BigRat, BigRat)> {
        match &self.0 {
            Inner::Rat(r) if r.is_zero() => None,
            Inner::Rat(r) if r.is_negative() => Some((-r, BigRat::new(1, 2))),
            Inner::Rat(r) => Some((r.clone(), BigRat::zero())),
            Inner::Cyc(n, _) => {
                for k in 1..*n as i64 {
                    let t = self * &CycRat::zeta(-k, *n);
                    if let Some(r) = t.as_rational() {
                        let theta = BigRat::new(k, *n as i64);
                        return Some(if r.is_negative() {
                            (-r, (&theta + &BigRat::new(1, 2)).fract())
                        } else {
                            (r.clone(), theta)
                        });
                    }
                }
                None
            }
        }
    }

    /// `self^e` for rational `e`, taking the principal branch
    /// `r^e·e^{2πiθe}` of the polar form. `None` if the value leaves the
    /// cyclotomic rationals (e.g. `2^{1/2}`) or the element has no polar form.
    pub fn pow_rat(&self, e: &BigRat) -> Option<CycRat> {
        if let Some(k) = e.to_i64() {
            return self.pow(k).ok();
        }
        let (r, theta) = self.polar()?;
        let p = i32::try_from(e.numer()).ok()?;
        let q = u32::try_from(e.denom()).ok()?;
        let modulus = r.pow(p).nth_root(q)?;
        let angle = (&theta * e).fract();
        let n = u32::try_from(angle.denom()).ok()?;
        let k = i64::try_from(angle.numer()).ok()?;
        Some(CycRat::zeta(k, n).scale(&modulus))
    }

    /// `self += a * b`.
    pub fn add_mul(&mut self, a: &CycRat, b: &CycRat) {
        if let (Inner::Rat(s), Inner::Rat(x), Inner::Rat(y)) = (&mut self.0, &a.0, &b.0) {
            s.add_mul(x, y);
            return;
        }
        *self = &*self + &(a * b);
    }

    /// Trace down to ℚ divided by the field degree; invariant under lifting.
    fn normalized_trace(&self) -> BigRat {
        match &self.0 {
            Inner::Rat(r) => r.clone(),
            Inner::Cyc(n, c) => {
                let mut t = BigRat::zero();
                for (k, ck) in c.iter().enumerate() {
                    if ck.is_zero() {
                        continue;
                    }
                    let g = (k as u32).gcd(n);
                    let m = n / g;
                    t += &(ck * &BigRat::new(mobius(m), euler_phi(m) as i64));
                }
                t
            }
        }
    }
}

fn poly_trim(p: &mut Vec<BigRat>) {
    while p.len() > 1 && p.last().is_some_and(BigRat::is_zero) {
        p.pop();
    }
}

fn poly_divmod(a: &[BigRat], b: &[BigRat]) -> (Vec<BigRat>, Vec<BigRat>) {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let db = b.len() - 1;
    if r.len() < b.len() {
        return (vec![BigRat::zero()], r);
    }
    let lead_inv = b[db].recip().expect("zero leading coefficient");
    let mut q = vec![BigRat::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let t = &r[i + db] * &lead_inv;
        if !t.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                r[i + j] -= &(&t * bj);
            }
        }
        q[i] = t;
    }
    r.truncate(db.max(1));
    poly_trim(&mut r);
    (q, r)
}

fn poly_mul(a: &[BigRat], b: &[BigRat]) -> Vec<BigRat> {
    let mut out = vec![BigRat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j].add_mul(x, y);
        }
    }
    out
}

fn poly_sub(a: &[BigRat], b: &[BigRat]) -> Vec<BigRat> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRat::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    poly_trim(&mut out);
    out
}

/// `u` with `u·a ≡ 1 (mod m)` for coprime `a`, `m` (extended Euclid over ℚ).
fn poly_inverse_mod(a: &[BigRat], m: &[BigRat]) -> Vec<BigRat> {
    let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
    poly_trim(&mut r1);
    let (mut s0, mut s1) = (vec![BigRat::zero()], vec![BigRat::one()]);
    while !(r1.len() == 1 && r1[0].is_zero()) {
        let (q, r) = poly_divmod(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    // r0 is a nonzero constant since Φ_n is irreducible.
    let c = r0[0].recip().expect("element not invertible");
    s0.iter().map(|x| x * &c).collect()
}

fn add_impl(a: &CycRat, b: &CycRat, negate_b: bool) -> CycRat {
    match (&a.0, &b.0) {
        (Inner::Rat(x), Inner::Rat(y)) => CycRat(Inner::Rat(if negate_b { x - y } else { x + y })),
        _ => {
            let (n, mut x, y) = CycRat::common(a, b);
            for (xi, yi) in x.iter_mut().zip(&y) {
                if negate_b {
                    *xi -= yi;
                } else {
                    *xi += yi;
                }
            }
            CycRat::from_poly(x, n)
        }
    }
}

fn mul_impl(a: &CycRat, b: &CycRat) -> CycRat {
    match (&a.0, &b.0) {
        (Inner::Rat(x), Inner::Rat(y)) => CycRat(Inner::Rat(x * y)),
        (Inner::Rat(x), _) => b.scale(x),
        (_, Inner::Rat(y)) => a.scale(y),
        _ => {
            let (n, x, y) = CycRat::common(a, b);
            CycRat::from_poly(poly_mul(&x, &y), n)
        }
    }
}

impl Default for CycRat {
    fn default() -> Self {
        CycRat::zero()
    }
}

impl From<BigRat> for CycRat {
    fn from(r: BigRat) -> Self {
        CycRat::from_rat(r)
    }
}

impl From<i64> for CycRat {
    fn from(n: i64) -> Self {
        CycRat::from_int(n)
    }
}

impl PartialEq for CycRat {
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Inner::Rat(x), Inner::Rat(y)) => x == y,
            (Inner::Rat(_), _) | (_, Inner::Rat(_)) => false,
            _ => {
                let (_, x, y) = CycRat::common(self, other);
                x == y
            }
        }
    }
}

impl Eq for CycRat {}

impl Hash for CycRat {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.normalized_trace().hash(state);
    }
}

impl fmt::Display for CycRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Inner::Rat(r) => write!(f, "{r}"),
            Inner::Cyc(n, c) => {
                let mut first = true;
                for (k, ck) in c.iter().enumerate() {
                    if ck.is_zero() {
                        continue;
                    }
                    let neg = ck.is_negative();
                    let mag = ck.abs();
                    if first {
                        if neg {
                            write!(f, "-")?;
                        }
                    } else {
                        write!(f, " {} ", if neg { '-' } else { '+' })?;
                    }
                    first = false;
                    match (k, mag.is_one()) {
                        (0, _) => write!(f, "{mag}")?,
                        (_, true) => write!(f, "zeta({k},{n})")?,
                        (_, false) => write!(f, "{mag}*zeta({k},{n})")?,
                    }
                }
                Ok(())
            }
        }
    }
}

impl fmt::Debug for CycRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Neg for &CycRat {
    type Output = CycRat;
    fn neg(self) -> CycRat {
        match &self.0 {
            Inner::Rat(r) => CycRat(Inner::Rat(-r)),
            Inner::Cyc(n, c) => CycRat(Inner::Cyc(*n, c.iter().map(|x| -x).collect())),
        }
    }
}

impl Neg for CycRat {
    type Output = CycRat;
    fn neg(self) -> CycRat {
        -&self
    }
}

impl Add<&CycRat> for &CycRat {
    type Output = CycRat;
    fn add(self, rhs: &CycRat) -> CycRat {
        add_impl(self, rhs, false)
    }
}

impl Sub<&CycRat> for &CycRat {
    type Output = CycRat;
    fn sub(self, rhs: &CycRat) -> CycRat {
        add_impl(self, rhs, true)
    }
}

impl Mul<&CycRat> for &CycRat {
    type Output = CycRat;
    fn mul(self, rhs: &CycRat) -> CycRat {
        mul_impl(self, rhs)
    }
}

impl Div<&CycRat> for &CycRat {
    type Output = CycRat;
    /// Panics on division by zero; use [`CycRat::inv`] for a checked inverse.
    fn div(self, rhs: &CycRat) -> CycRat {
        mul_impl(self, &rhs.inv().expect("division by zero"))
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<CycRat> for CycRat {
            type Output = CycRat;
            fn $m(self, rhs: CycRat) -> CycRat { (&self).$m(&rhs) }
        }
        impl $tr<&CycRat> for CycRat {
            type Output = CycRat;
            fn $m(self, rhs: &CycRat) -> CycRat { (&self).$m(rhs) }
        }
        impl $tr<CycRat> for &CycRat {
            type Output = CycRat;
            fn $m(self, rhs: CycRat) -> CycRat { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&CycRat> for CycRat {
    fn add_assign(&mut self, rhs: &CycRat) {
        if let (Inner::Rat(x), Inner::Rat(y)) = (&mut self.0, &rhs.0) {
            *x += y;
            return;
        }
        *self = add_impl(self, rhs, false);
    }
}

impl SubAssign<&CycRat> for CycRat {
    fn sub_assign(&mut self, rhs: &CycRat) {
        if let (Inner::Rat(x), Inner::Rat(y)) = (&mut self.0, &rhs.0) {
            *x -= y;
            return;
        }
        *self = add_impl(self, rhs, true);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn omega() -> CycRat {
        CycRat::zeta(1, 3)
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        // Φ_105 is the first with a coefficient of magnitude 2.
        assert!(cyclotomic_poly(105).contains(&-2));
        assert_eq!(cyclotomic_poly(105).len() - 1, euler_phi(105) as usize);
    }

    #[test]
    fn zeta_basics() {
        assert_eq!(CycRat::zeta(2, 4), CycRat::from_int(-1));
        let s = &(&CycRat::zeta(0, 3) + &CycRat::zeta(1, 3)) + &CycRat::zeta(2, 3);
        assert!(s.is_zero());
        // ζ_6 = −ζ_3²
        assert_eq!(CycRat::zeta(1, 6), -CycRat::zeta(2, 3));
        assert_eq!(CycRat::zeta(7, 7), CycRat::one());
        assert_eq!(CycRat::zeta(1, 2), CycRat::from_int(-1));
        assert_eq!(CycRat::zeta(3, 12).pow(4).unwrap(), CycRat::one());
    }

    #[test]
    fn products_and_inverses() {
        let w = omega();
        let w2 = CycRat::zeta(2, 3);
        assert_eq!(&w * &w2, CycRat::one());
        let i = CycRat::zeta(1, 4);
        assert_eq!(&i * &i, CycRat::from_int(-1));
        let one = CycRat::one();
        assert_eq!(&(&one - &w) * &(&one - &w2), CycRat::from_int(3));
        let inv = (&one - &w).inv().unwrap();
        assert_eq!(inv, (&one - &w2).scale(&BigRat::new(1, 3)));
        assert_eq!(CycRat::from_int(-1).inv().unwrap(), CycRat::from_int(-1));
        assert_eq!(
            CycRat::from_rat(BigRat::new(2, 3)).inv().unwrap(),
            CycRat::from_rat(BigRat::new(3, 2))
        );
        assert!(CycRat::zero().inv().is_err());
    }

    #[test]
    fn mixed_conductors_lift() {
        let i = CycRat::zeta(1, 4);
        let w = omega();
        let p = &i * &w;
        assert_eq!(p.conductor(), 12);
        assert_eq!(p, CycRat::zeta(7, 12));
        assert_eq!(&p * &w.inv().unwrap(), i);
        assert_eq!(i.lift(12), i);
    }

    #[test]
    fn polar_form_and_rational_powers() {
        let m1 = CycRat::from_int(-1);
        assert_eq!(m1.pow_rat(&BigRat::new(1, 2)), Some(CycRat::zeta(1, 4)));
        assert_eq!(m1.pow_rat(&BigRat::new(1, 4)), Some(CycRat::zeta(1, 8)));
        let w = omega();
        let (r, th) = w.scale(&BigRat::from_int(-2)).polar().unwrap();
        assert_eq!(r, BigRat::from_int(2));
        assert_eq!(th, BigRat::new(5, 6));
        assert_eq!(
            CycRat::from_int(4).pow_rat(&BigRat::new(3, 2)),
            Some(CycRat::from_int(8))
        );
        assert_eq!(CycRat::from_int(2).pow_rat(&BigRat::new(1, 2)), None);
        let one_plus_i = &CycRat::one() + &CycRat::zeta(1, 4);
        assert!(one_plus_i.polar().is_none());
    }

    #[test]
    fn hash_agrees_with_equality_across_conductors() {
        use std::collections::hash_map::DefaultHasher;
        let h = |c: &CycRat| {
            let mut s = DefaultHasher::new();
            c.hash(&mut s);
            s.finish()
        };
        let w = omega();
        assert_eq!(h(&w), h(&w.lift(12)));
        assert_eq!(w, w.lift(12));
    }

    #[test]
    fn display_round_trip_shape() {
        let x =
            &CycRat::from_rat(BigRat::new(1, 2)) - &CycRat::zeta(1, 4).scale(&BigRat::from_int(3));
        assert_eq!(x.to_string(), "1/2 - 3*zeta(1,4)");
    }
}
