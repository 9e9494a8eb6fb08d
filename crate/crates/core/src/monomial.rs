//! Monomials `c·q^e`, the argument type of every evaluator.

use std::fmt;
use std::ops::{Div, Mul, Neg};

use crate::arith::{BigRat, CycRat};
use crate::error::{QError, QResult};

/// `coeff · q^expo` with an exact cyclotomic coefficient and rational exponent.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QMonomial {
    pub coeff: CycRat,
    pub expo: BigRat,
}

impl QMonomial {
    pub fn new(coeff: CycRat, expo: BigRat) -> Self {
        if coeff.is_zero() {
            return QMonomial::zero();
        }
        QMonomial { coeff, expo }
    }

    pub fn zero() -> Self {
        QMonomial {
            coeff: CycRat::zero(),
            expo: BigRat::zero(),
        }
    }

    pub fn one() -> Self {
        QMonomial {
            coeff: CycRat::one(),
            expo: BigRat::zero(),
        }
    }

    /// `q^e`.
    pub fn q(expo: BigRat) -> Self {
        QMonomial {
            coeff: CycRat::one(),
            expo,
        }
    }

    /// `q^e` for an integer exponent.
    pub fn qi(expo: i64) -> Self {
        QMonomial::q(BigRat::from_int(expo))
    }

    /// `c·q^e` with integer coefficient and exponent.
    pub fn ci(coeff: i64, expo: i64) -> Self {
        QMonomial::new(CycRat::from_int(coeff), BigRat::from_int(expo))
    }

    pub fn constant(c: CycRat) -> Self {
        QMonomial::new(c, BigRat::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// True for the exact monomial `1·q^0`.
    pub fn is_one(&self) -> bool {
        self.coeff.is_one() && self.expo.is_zero()
    }

    pub fn mul(&self, other: &QMonomial) -> QMonomial {
        QMonomial::new(&self.coeff * &other.coeff, &self.expo + &other.expo)
    }

    pub fn inv(&self) -> QResult<QMonomial> {
        Ok(QMonomial {
            coeff: self.coeff.inv()?,
            expo: -&self.expo,
        })
    }

    pub fn div(&self, other: &QMonomial) -> QResult<QMonomial> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn neg(&self) -> QMonomial {
        QMonomial {
            coeff: -&self.coeff,
            expo: self.expo.clone(),
        }
    }

    pub fn scale(&self, c: &CycRat) -> QMonomial {
        QMonomial::new(&self.coeff * c, self.expo.clone())
    }

    /// Multiply by `q^e`.
    pub fn shift(&self, e: &BigRat) -> QMonomial {
        QMonomial {
            coeff: self.coeff.clone(),
            expo: &self.expo + e,
        }
    }

    pub fn pow(&self, k: i64) -> QResult<QMonomial> {
        Ok(QMonomial::new(
            self.coeff.pow(k)?,
            &self.expo * &BigRat::from_int(k),
        ))
    }

    /// Integer power of a monomial known to be nonzero.
    pub fn powi(&self, k: i64) -> QMonomial {
        self.pow(k).expect("negative power of the zero monomial")
    }

    /// Rational power on the principal branch of the coefficient.
    pub fn pow_rat(&self, e: &BigRat) -> QResult<QMonomial> {
        if let Some(k) = e.to_i64() {
            return self.pow(k);
        }
        let c = self.coeff.pow_rat(e).ok_or_else(|| {
            QError::UnsupportedSubstitution(format!(
                "({})^({e}) is not a cyclotomic monomial",
                self
            ))
        })?;
        Ok(QMonomial::new(c, &self.expo * e))
    }
}

/// Formats a coefficient as a product of a rational and a root of unity,
/// the shape the monomial grammar accepts. Returns `None` for `±1`.
fn coeff_factor(c: &CycRat) -> (bool, Option<String>) {
    match c.polar() {
        Some((r, theta)) => {
            let half = BigRat::new(1, 2);
            let (neg, theta) = if theta == half {
                (true, BigRat::zero())
            } else {
                (false, theta)
            };
            let root = if theta.is_zero() {
                None
            } else {
                Some(format!("zeta({},{})", theta.numer(), theta.denom()))
            };
            let s = match (r.is_one(), root) {
                (true, None) => None,
                (true, Some(z)) => Some(z),
                (false, None) => Some(r.to_string()),
                (false, Some(z)) => Some(format!("{r}*{z}")),
            };
            (neg, s)
        }
        None => (false, Some(format!("({c})"))),
    }
}

impl fmt::Display for QMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let (neg, coeff) = coeff_factor(&self.coeff);
        let qpart = if self.expo.is_zero() {
            None
        } else if self.expo.is_one() {
            Some("q".to_string())
        } else if self.expo.is_integer() && self.expo.is_positive() {
            Some(format!("q^{}", self.expo))
        } else {
            Some(format!("q^({})", self.expo))
        };
        if neg {
            write!(f, "-")?;
        }
        match (coeff, qpart) {
            (None, None) => write!(f, "1"),
            (None, Some(q)) => write!(f, "{q}"),
            (Some(c), None) => write!(f, "{c}"),
            (Some(c), Some(q)) => write!(f, "{c}*{q}"),
        }
    }
}

impl Mul for &QMonomial {
    type Output = QMonomial;
    fn mul(self, rhs: &QMonomial) -> QMonomial {
        QMonomial::mul(self, rhs)
    }
}

impl Div for &QMonomial {
    type Output = QMonomial;
    /// Panics on a zero divisor; callers validate arguments first.
    fn div(self, rhs: &QMonomial) -> QMonomial {
        QMonomial::div(self, rhs).expect("division by the zero monomial")
    }
}

impl Neg for &QMonomial {
    type Output = QMonomial;
    fn neg(self) -> QMonomial {
        QMonomial::neg(self)
    }
}

impl fmt::Debug for QMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
