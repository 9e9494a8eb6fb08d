//! Single sums of q-hypergeometric type.
//!
//! A [`HyperSum`] is
//!
//! ```text
//! Σ_{n ≥ start}  lead · ratio^n · quad^{n²} · ∏_f (arg_f · step_f^n ; base_f)_{λ_f n + κ_f}^{power_f}
//! ```
//!
//! which covers the Eulerian forms of the classical mock theta functions and
//! the universal function `g`. Products whose argument does not move with `n`
//! are maintained incrementally from one term to the next.

use std::fmt;

use num_integer::Integer;

use crate::arith::BigRat;
use crate::error::{QError, QResult};
use crate::lazy::Node;
use crate::monomial::QMonomial;
use crate::series::{den, Dense, QSeries};

/// `(arg·step^n ; base)_{λn+κ}` raised to `power`.
#[derive(Clone, Debug)]
pub struct Poch {
    pub arg: QMonomial,
    pub step: QMonomial,
    pub base: QMonomial,
    pub len_mul: u32,
    pub len_add: i64,
    pub power: i32,
}

impl Poch {
    /// `(arg;base)_{λn+κ}^power` with an argument that does not depend on `n`.
    pub fn fixed(arg: QMonomial, base: QMonomial, len_mul: u32, len_add: i64, power: i32) -> Poch {
        Poch {
            arg,
            step: QMonomial::one(),
            base,
            len_mul,
            len_add,
            power,
        }
    }

    /// `(arg·step^n ; base)_{λn+κ}^power`.
    pub fn moving(
        arg: QMonomial,
        step: QMonomial,
        base: QMonomial,
        len_mul: u32,
        len_add: i64,
        power: i32,
    ) -> Poch {
        Poch {
            arg,
            step,
            base,
            len_mul,
            len_add,
            power,
        }
    }

    fn is_static(&self) -> bool {
        self.step.is_one()
    }

    fn len(&self, n: i64) -> u64 {
        (self.len_mul as i64 * n + self.len_add).max(0) as u64
    }
}

#[derive(Clone, Debug)]
pub struct HyperSum {
    pub start: i64,
    pub lead: QMonomial,
    pub ratio: QMonomial,
    pub quad: QMonomial,
    pub factors: Vec<Poch>,
}

/// The unit part of a running product together with its monomial prefactor.
struct Running {
    unit: Dense,
    pre: QMonomial,
    dead: bool,
}

impl Running {
    /// Apply `(1 − m)^{±1}`.
    fn apply(&mut self, m: &QMonomial, numerator: bool) -> QResult<()> {
        if m.is_zero() || self.dead {
            return Ok(());
        }
        if m.is_one() {
            if numerator {
                self.dead = true;
                return Ok(());
            }
            return Err(QError::Genericity("denominator factor (1 - 1)".into()));
        }
        if m.expo.is_negative() {
            // 1 − m = −m (1 − 1/m)
            let inv = m.inv()?;
            let pre = m.neg();
            if numerator {
                self.pre = self.pre.mul(&pre);
                self.unit.mul_binomial(&inv);
            } else {
                self.pre = self.pre.div(&pre)?;
                self.unit.div_binomial(&inv)?;
            }
            return Ok(());
        }
        if numerator {
            self.unit.mul_binomial(m);
            Ok(())
        } else {
            self.unit.div_binomial(m)
        }
    }

    fn apply_poch(&mut self, p: &Poch, arg: &QMonomial, from: u64, to: u64) -> QResult<()> {
        let mut m = arg.mul(&p.base.pow(from as i64)?);
        for _ in from..to {
            for _ in 0..p.power.unsigned_abs() {
                self.apply(&m, p.power > 0)?;
            }
            m = m.mul(&p.base);
        }
        Ok(())
    }
}

impl HyperSum {
    pub fn new(lead: QMonomial, ratio: QMonomial, quad: QMonomial) -> HyperSum {
        HyperSum {
            start: 0,
            lead,
            ratio,
            quad,
            factors: Vec::new(),
        }
    }

    pub fn starting_at(mut self, start: i64) -> HyperSum {
        self.start = start;
        self
    }

    pub fn with(mut self, p: Poch) -> HyperSum {
        self.factors.push(p);
        self
    }

    fn expo(&self, n: i64) -> BigRat {
        let nn = BigRat::from_int(n);
        &(&self.lead.expo + &(&nn * &self.ratio.expo)) + &(&(&nn * &nn) * &self.quad.expo)
    }

    fn validate(&self) -> QResult<()> {
        let grows = self.quad.expo.is_positive()
            || (self.quad.expo.is_zero() && self.ratio.expo.is_positive());
        if self.quad.expo.is_negative() || !grows {
            return Err(QError::InvalidParameter(
                "summand exponents must grow with n".into(),
            ));
        }
        for p in &self.factors {
            if !p.base.expo.is_positive() {
                return Err(QError::InvalidParameter(format!(
                    "Pochhammer base {} must have positive exponent",
                    p.base
                )));
            }
            if p.step.expo.is_negative() {
                return Err(QError::InvalidParameter(format!(
                    "Pochhammer step {} must not decrease exponents",
                    p.step
                )));
            }
            if p.power > 0 && p.is_static() && p.arg.expo.is_negative() {
                return Err(QError::InvalidParameter(format!(
                    "numerator factor ({};{}) has negative exponent",
                    p.arg, p.base
                )));
            }
            if (p.len_mul as i64) * self.start + p.len_add < 0 {
                return Err(QError::InvalidParameter(
                    "negative Pochhammer length".into(),
                ));
            }
        }
        Ok(())
    }

    fn scale(&self, order: &BigRat) -> u64 {
        let mut d = den(order).lcm(&den(&self.lead.expo));
        d = d.lcm(&den(&self.ratio.expo)).lcm(&den(&self.quad.expo));
        for p in &self.factors {
            d = d
                .lcm(&den(&p.arg.expo))
                .lcm(&den(&p.step.expo))
                .lcm(&den(&p.base.expo));
        }
        d
    }

    fn monomial(&self, n: i64) -> QResult<QMonomial> {
        Ok(self
            .lead
            .mul(&self.ratio.pow(n)?)
            .mul(&self.quad.pow(n * n)?))
    }

    /// The sum known below `order`.
    pub fn eval(&self, order: &BigRat) -> QResult<QSeries> {
        self.validate()?;
        // past the vertex, the first n at or above the window ends the sum
        let mut end = self.start;
        loop {
            let e = self.expo(end);
            if &e >= order && self.expo(end + 1) >= e {
                break;
            }
            end += 1;
            if end - self.start > 1_000_000 {
                return Err(QError::PrecisionLoss(
                    "summation range does not close".into(),
                ));
            }
        }
        let count = (end - self.start) as usize;
        let mut suffix_min = vec![order.clone(); count + 1];
        for i in (0..count).rev() {
            let e = self.expo(self.start + i as i64);
            suffix_min[i] = if e < suffix_min[i + 1] {
                e
            } else {
                suffix_min[i + 1].clone()
            };
        }
        let scale = self.scale(order);
        let mut stat = Running {
            unit: Dense::one(&(order - &suffix_min[0]), scale),
            pre: QMonomial::one(),
            dead: false,
        };
        let mut lens = vec![0u64; self.factors.len()];
        let mut acc = QSeries::zero();
        for (i, floor) in suffix_min.iter().take(count).enumerate() {
            let n = self.start + i as i64;
            for (p, len) in self.factors.iter().zip(lens.iter_mut()) {
                if p.is_static() {
                    let new = p.len(n);
                    stat.apply_poch(p, &p.arg, *len, new)?;
                    *len = new;
                }
            }
            if stat.dead {
                break;
            }
            stat.unit.truncate(&(&(order - floor) - &stat.pre.expo));
            let e = self.expo(n);
            if &e >= order {
                continue;
            }
            let mut term = Running {
                unit: stat.unit.clone(),
                pre: stat.pre.clone(),
                dead: false,
            };
            term.unit.truncate(&(&(order - &e) - &stat.pre.expo));
            for p in self.factors.iter().filter(|p| !p.is_static()) {
                let arg = p.arg.mul(&p.step.pow(n)?);
                if p.power > 0 && arg.expo.is_negative() {
                    return Err(QError::InvalidParameter(format!(
                        "numerator factor ({arg};{}) has negative exponent",
                        p.base
                    )));
                }
                term.apply_poch(p, &arg, 0, p.len(n))?;
            }
            if term.dead {
                continue;
            }
            let m = self.monomial(n)?.mul(&term.pre);
            acc = acc.add(&term.unit.into_series().mul_mono(&m));
        }
        Ok(acc.truncate(order))
    }

    pub fn node(self, label: impl Into<String>) -> Node {
        Node::leaf(label, move |o| self.eval(o))
    }
}

impl fmt::Display for Poch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arg = if self.is_static() {
            self.arg.to_string()
        } else {
            format!("{}*({})^n", self.arg, self.step)
        };
        write!(
            f,
            "({arg};{})_({}n+{})",
            self.base, self.len_mul, self.len_add
        )?;
        if self.power != 1 {
            write!(f, "^{}", self.power)?;
        }
        Ok(())
    }
}

/// `Σ_{n≥0} base^{n²} / ((x)_{n+1} (base/x)_n)`, the Eulerian core of `g`.
fn g_core(x: &QMonomial, base: &QMonomial) -> QResult<HyperSum> {
    Ok(
        HyperSum::new(QMonomial::one(), QMonomial::one(), base.clone())
            .with(Poch::fixed(x.clone(), base.clone(), 1, 1, -1))
            .with(Poch::fixed(base.div(x)?, base.clone(), 1, 0, -1)),
    )
}

/// `g(x;base) = x^{-1}(−1 + Σ_{n≥0} base^{n²}/((x)_{n+1}(base/x)_n))`.
pub fn g_eval(x: &QMonomial, base: &QMonomial, order: &BigRat) -> QResult<QSeries> {
    let xi = x.inv()?;
    let inner = order - &xi.expo;
    let s = g_core(x, base)?.eval(&inner)?;
    Ok(s.sub(&QSeries::one()).mul_mono(&xi))
}

/// `Σ_{n≥0} base^{n(n+1)} / ((x)_{n+1} (base/x)_{n+1})`, the second form of `g`.
pub fn g_alt_eval(x: &QMonomial, base: &QMonomial, order: &BigRat) -> QResult<QSeries> {
    HyperSum::new(QMonomial::one(), base.clone(), base.clone())
        .with(Poch::fixed(x.clone(), base.clone(), 1, 1, -1))
        .with(Poch::fixed(base.div(x)?, base.clone(), 1, 1, -1))
        .eval(order)
}

/// Lazy `g(x;base)`.
pub fn g_node(x: &QMonomial, base: &QMonomial) -> Node {
    let (x, b) = (x.clone(), base.clone());
    Node::leaf(format!("g({x}; {b})"), move |o| g_eval(&x, &b, o))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::CycRat;
    use crate::theta::poch_fin;

    fn o(n: i64) -> BigRat {
        BigRat::from_int(n)
    }

    /// Direct summation with independently computed finite products.
    fn naive(h: &HyperSum, nmax: i64, order: &BigRat) -> QSeries {
        let mut acc = QSeries::zero();
        for n in h.start..=nmax {
            let mut t = QSeries::monomial(&h.monomial(n).unwrap());
            for p in &h.factors {
                let arg = p.arg.mul(&p.step.pow(n).unwrap());
                let wide = &(order - &t.lowest().unwrap()) + &o(40);
                let f = poch_fin(&arg, &p.base, p.len(n), &wide).unwrap();
                t = if p.power > 0 {
                    t.mul(&f.pow(p.power as u32, None))
                } else {
                    t.div_capped(&f.pow(p.power.unsigned_abs(), None), Some(order))
                        .unwrap()
                };
            }
            acc = acc.add(&t.truncate(order));
        }
        acc.truncate(order)
    }

    #[test]
    fn third_order_f_against_naive() {
        // Σ q^{n²}/(−q;q)_n²
        let h = HyperSum::new(QMonomial::one(), QMonomial::one(), QMonomial::qi(1)).with(
            Poch::fixed(QMonomial::ci(-1, 1), QMonomial::qi(1), 1, 0, -2),
        );
        let order = o(50);
        assert_eq!(h.eval(&order).unwrap(), naive(&h, 8, &order));
    }

    #[test]
    fn moving_arguments_against_naive() {
        // Σ q^n/(q^{n+1};q)_n and Σ q^{n²}(1+q^n)
        let h =
            HyperSum::new(QMonomial::one(), QMonomial::qi(1), QMonomial::one()).with(Poch::moving(
                QMonomial::qi(1),
                QMonomial::qi(1),
                QMonomial::qi(1),
                1,
                0,
                -1,
            ));
        let order = o(40);
        assert_eq!(h.eval(&order).unwrap(), naive(&h, 40, &order));
        let k =
            HyperSum::new(QMonomial::one(), QMonomial::one(), QMonomial::qi(1)).with(Poch::moving(
                QMonomial::ci(-1, 0),
                QMonomial::qi(1),
                QMonomial::qi(1),
                0,
                1,
                1,
            ));
        assert_eq!(k.eval(&order).unwrap(), naive(&k, 7, &order));
    }

    #[test]
    fn g_forms_agree() {
        let cases = [
            (QMonomial::qi(2), QMonomial::qi(10)),
            (QMonomial::qi(1), QMonomial::qi(4)),
            (QMonomial::ci(-1, 0), QMonomial::qi(1)),
            (QMonomial::ci(1, 7), QMonomial::qi(3)),
            (QMonomial::ci(-1, -2), QMonomial::qi(2)),
            (
                QMonomial::new(CycRat::zeta(1, 4), BigRat::new(1, 2)),
                QMonomial::qi(1),
            ),
        ];
        for (x, b) in cases {
            let order = o(60);
            let a = g_eval(&x, &b, &order).unwrap();
            let c = g_alt_eval(&x, &b, &order).unwrap();
            assert_eq!(a, c, "g({x};{b})");
        }
    }

    #[test]
    fn g_pole() {
        assert!(matches!(
            g_eval(&QMonomial::qi(3), &QMonomial::qi(1), &o(10)),
            Err(QError::Genericity(_))
        ));
    }
}
