//! Exact rationals with an allocation-free fast path.
//!
//! Almost every coefficient that shows up in a q-expansion is a small
//! integer, so values that fit in an `i64` pair are kept inline and only
//! spill to `num_rational::BigRational` on overflow.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An exact rational number in lowest terms with positive denominator.
#[derive(Clone)]
pub struct BigRat(Repr);

#[derive(Clone)]
enum Repr {
    // numerator, denominator > 0, reduced, numerator != i64::MIN
    Small(i64, i64),
    Big(Box<BigRational>),
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl BigRat {
    pub fn zero() -> Self {
        BigRat(Repr::Small(0, 1))
    }

    pub fn one() -> Self {
        BigRat(Repr::Small(1, 1))
    }

    pub fn from_int(n: i64) -> Self {
        if n == i64::MIN {
            return Self::from_big(BigRational::from_integer(BigInt::from(n)));
        }
        BigRat(Repr::Small(n, 1))
    }

    /// `num/den`, reduced. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_i128(num as i128, den as i128)
    }

    pub fn from_bigints(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Self::from_big(BigRational::new(num, den))
    }

    fn from_i128(num: i128, den: i128) -> Self {
        let (mut n, mut d) = if den < 0 { (-num, -den) } else { (num, den) };
        let g = gcd_u128(n.unsigned_abs(), d as u128) as i128;
        if g > 1 {
            n /= g;
            d /= g;
        }
        if n > i64::MIN as i128 && n <= i64::MAX as i128 && d <= i64::MAX as i128 {
            BigRat(Repr::Small(n as i64, d as i64))
        } else {
            BigRat(Repr::Big(Box::new(BigRational::new_raw(
                BigInt::from(n),
                BigInt::from(d),
            ))))
        }
    }

    fn from_big(r: BigRational) -> Self {
        if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
            if n != i64::MIN {
                return BigRat(Repr::Small(n, d));
            }
        }
        BigRat(Repr::Big(Box::new(r)))
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(b) => (**b).clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(b) => b.denom().clone(),
        }
    }

    /// Denominator as a machine integer, if it fits.
    pub fn denom_u64(&self) -> Option<u64> {
        match &self.0 {
            Repr::Small(_, d) => Some(*d as u64),
            Repr::Big(b) => b.denom().to_u64(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(b) => b.is_integer(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n < 0,
            Repr::Big(b) => b.is_negative(),
        }
    }

    pub fn is_positive(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n > 0,
            Repr::Big(b) => b.is_positive(),
        }
    }

    /// The value as an `i64` when it is an integer that fits.
    pub fn to_i64(&self) -> Option<i64> {
        match &self.0 {
            Repr::Small(n, 1) => Some(*n),
            Repr::Small(..) => None,
            Repr::Big(b) if b.is_integer() => b.numer().to_i64(),
            Repr::Big(_) => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match &self.0 {
            Repr::Small(n, d) => *n as f64 / *d as f64,
            Repr::Big(b) => b.to_f64().unwrap_or(f64::NAN),
        }
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn floor(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, d) => BigInt::from(n.div_euclid(*d)),
            Repr::Big(b) => b.floor().to_integer(),
        }
    }

    pub fn ceil(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, d) => BigInt::from(-((-n).div_euclid(*d))),
            Repr::Big(b) => b.ceil().to_integer(),
        }
    }

    pub fn floor_i64(&self) -> i64 {
        self.floor().to_i64().expect("floor out of i64 range")
    }

    pub fn ceil_i64(&self) -> i64 {
        self.ceil().to_i64().expect("ceil out of i64 range")
    }

    /// Fractional part in `[0, 1)`.
    pub fn fract(&self) -> Self {
        self - &BigRat::from_bigints(self.floor(), BigInt::one())
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        match &self.0 {
            Repr::Small(0, _) => None,
            Repr::Small(n, d) => Some(Self::from_i128(*d as i128, *n as i128)),
            Repr::Big(b) => Some(Self::from_big(b.recip())),
        }
    }

    pub fn pow(&self, e: i32) -> Self {
        if e < 0 {
            return self.recip().expect("zero to a negative power").pow(-e);
        }
        let mut acc = BigRat::one();
        let mut base = self.clone();
        let mut e = e as u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact `k`-th root of a non-negative rational, if it exists.
    pub fn nth_root(&self, k: u32) -> Option<Self> {
        if self.is_negative() || k == 0 {
            return None;
        }
        let n = self.numer();
        let d = self.denom();
        let rn = n.nth_root(k);
        let rd = d.nth_root(k);
        if num_traits::pow(rn.clone(), k as usize) == n
            && num_traits::pow(rd.clone(), k as usize) == d
        {
            Some(BigRat::from_bigints(rn, rd))
        } else {
            None
        }
    }

    /// `x(x-1)/2`, the binomial coefficient on rational arguments.
    pub fn binom2(&self) -> Self {
        &(self * &(self - &BigRat::one())) / &BigRat::from_int(2)
    }

    pub fn min(a: &Self, b: &Self) -> Self {
        if a <= b {
            a.clone()
        } else {
            b.clone()
        }
    }

    pub fn max(a: &Self, b: &Self) -> Self {
        if a >= b {
            a.clone()
        } else {
            b.clone()
        }
    }

    /// `self + a * b`, in place.
    pub fn add_mul(&mut self, a: &BigRat, b: &BigRat) {
        if let (Repr::Small(x, 1), Repr::Small(y, 1), Repr::Small(z, 1)) = (&self.0, &a.0, &b.0) {
            if let Some(v) = y.checked_mul(*z).and_then(|p| p.checked_add(*x)) {
                if v != i64::MIN {
                    self.0 = Repr::Small(v, 1);
                    return;
                }
            }
        }
        *self = &*self + &(a * b);
    }
}

fn add_impl(a: &BigRat, b: &BigRat) -> BigRat {
    match (&a.0, &b.0) {
        (Repr::Small(x, 1), Repr::Small(y, 1)) => match x.checked_add(*y) {
            Some(s) if s != i64::MIN => BigRat(Repr::Small(s, 1)),
            _ => BigRat::from_i128(*x as i128 + *y as i128, 1),
        },
        (Repr::Small(x, d), Repr::Small(y, e)) if d == e => {
            BigRat::from_i128(*x as i128 + *y as i128, *d as i128)
        }
        (Repr::Small(x, d), Repr::Small(y, e)) => {
            let (x, d, y, e) = (*x as i128, *d as i128, *y as i128, *e as i128);
            BigRat::from_i128(x * e + y * d, d * e)
        }
        _ => BigRat::from_big(a.to_big() + b.to_big()),
    }
}

fn mul_impl(a: &BigRat, b: &BigRat) -> BigRat {
    match (&a.0, &b.0) {
        (Repr::Small(x, 1), Repr::Small(y, 1)) => match x.checked_mul(*y) {
            Some(p) if p != i64::MIN => BigRat(Repr::Small(p, 1)),
            _ => BigRat::from_i128(*x as i128 * *y as i128, 1),
        },
        (Repr::Small(x, d), Repr::Small(y, e)) => {
            let (x, d, y, e) = (*x as i128, *d as i128, *y as i128, *e as i128);
            BigRat::from_i128(x * y, d * e)
        }
        _ => BigRat::from_big(a.to_big() * b.to_big()),
    }
}

impl Default for BigRat {
    fn default() -> Self {
        BigRat::zero()
    }
}

impl From<i64> for BigRat {
    fn from(n: i64) -> Self {
        BigRat::from_int(n)
    }
}

impl From<i32> for BigRat {
    fn from(n: i32) -> Self {
        BigRat::from_int(n as i64)
    }
}

impl From<BigInt> for BigRat {
    fn from(n: BigInt) -> Self {
        BigRat::from_big(BigRational::from_integer(n))
    }
}

impl PartialEq for BigRat {
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => a == c && b == d,
            (Repr::Big(a), Repr::Big(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for BigRat {}

impl Hash for BigRat {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match &self.0 {
            Repr::Small(n, d) => {
                n.hash(state);
                d.hash(state);
            }
            Repr::Big(b) => {
                b.numer().hash(state);
                b.denom().hash(state);
            }
        }
    }
}

impl Ord for BigRat {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for BigRat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BigRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(b) if b.is_integer() => write!(f, "{}", b.numer()),
            Repr::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
        }
    }
}

impl fmt::Debug for BigRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for BigRat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| format!("bad rational `{s}`"))?;
        let d: BigInt = d.parse().map_err(|_| format!("bad rational `{s}`"))?;
        if d.is_zero() {
            return Err(format!("zero denominator in `{s}`"));
        }
        Ok(BigRat::from_bigints(n, d))
    }
}

impl Neg for &BigRat {
    type Output = BigRat;
    fn neg(self) -> BigRat {
        match &self.0 {
            Repr::Small(n, d) => BigRat(Repr::Small(-n, *d)),
            Repr::Big(b) => BigRat::from_big(-(**b).clone()),
        }
    }
}

impl Neg for BigRat {
    type Output = BigRat;
    fn neg(self) -> BigRat {
        -&self
    }
}

impl Add<&BigRat> for &BigRat {
    type Output = BigRat;
    fn add(self, rhs: &BigRat) -> BigRat {
        add_impl(self, rhs)
    }
}

impl Sub<&BigRat> for &BigRat {
    type Output = BigRat;
    fn sub(self, rhs: &BigRat) -> BigRat {
        add_impl(self, &-rhs)
    }
}

impl Mul<&BigRat> for &BigRat {
    type Output = BigRat;
    fn mul(self, rhs: &BigRat) -> BigRat {
        mul_impl(self, rhs)
    }
}

impl Div<&BigRat> for &BigRat {
    type Output = BigRat;
    fn div(self, rhs: &BigRat) -> BigRat {
        mul_impl(self, &rhs.recip().expect("division by zero rational"))
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<BigRat> for BigRat {
            type Output = BigRat;
            fn $m(self, rhs: BigRat) -> BigRat { (&self).$m(&rhs) }
        }
        impl $tr<&BigRat> for BigRat {
            type Output = BigRat;
            fn $m(self, rhs: &BigRat) -> BigRat { (&self).$m(rhs) }
        }
        impl $tr<BigRat> for &BigRat {
            type Output = BigRat;
            fn $m(self, rhs: BigRat) -> BigRat { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&BigRat> for BigRat {
    fn add_assign(&mut self, rhs: &BigRat) {
        *self = add_impl(self, rhs);
    }
}

impl SubAssign<&BigRat> for BigRat {
    fn sub_assign(&mut self, rhs: &BigRat) {
        *self = add_impl(self, &-rhs);
    }
}

impl MulAssign<&BigRat> for BigRat {
    fn mul_assign(&mut self, rhs: &BigRat) {
        *self = mul_impl(self, rhs);
    }
}

/// Least common multiple of two positive machine integers.
pub fn lcm_u64(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}
