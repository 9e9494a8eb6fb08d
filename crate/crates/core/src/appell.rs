//! The Appell-Lerch sum `m(x,q,z)`, the Lambert-type series `h` and `k`,
//! and the theta-quotient corrections relating Appell-Lerch sums with
//! different parameters.

use crate::arith::{BigRat, CycRat};
use crate::error::{QError, QResult};
use crate::lazy::Node;
use crate::monomial::QMonomial;
use crate::scan::convex_range;
use crate::series::QSeries;
use crate::theta::{j_node, poch_inf_node};

/// `Σ_r N_r/(1 − M_r)` with `N_r = n0·ratio^r·quad^{C(r,2)}` and
/// `M_r = m0·step^r`.
#[derive(Clone, Debug)]
pub struct LerchSum {
    pub n0: QMonomial,
    pub ratio: QMonomial,
    pub quad: QMonomial,
    pub m0: QMonomial,
    pub step: QMonomial,
}

fn c2(r: i64) -> i64 {
    r * (r - 1) / 2
}

impl LerchSum {
    fn numer(&self, r: i64) -> QMonomial {
        &(&self.n0 * &self.ratio.powi(r)) * &self.quad.powi(c2(r))
    }

    fn denom(&self, r: i64) -> QMonomial {
        &self.m0 * &self.step.powi(r)
    }

    /// Lowest exponent contributed by term `r`.
    fn floor(&self, r: i64) -> BigRat {
        let rr = BigRat::from_int(r);
        let en = &(&self.n0.expo + &(&rr * &self.ratio.expo))
            + &(&BigRat::from_int(c2(r)) * &self.quad.expo);
        let em = &self.m0.expo + &(&rr * &self.step.expo);
        if em.is_negative() {
            &en - &em
        } else {
            en
        }
    }

    /// The index at which `M_r = 1`, if any.
    fn pole(&self) -> Option<i64> {
        if self.step.expo.is_zero() {
            return None;
        }
        let r = -&(&self.m0.expo / &self.step.expo);
        let r = r.to_i64()?;
        self.denom(r).is_one().then_some(r)
    }

    pub fn eval(&self, order: &BigRat) -> QResult<QSeries> {
        if !self.quad.expo.is_positive() || self.step.expo.is_negative() {
            return Err(QError::InvalidParameter(
                "Lerch sum exponents must grow".into(),
            ));
        }
        if let Some(r) = self.pole() {
            return Err(QError::Genericity(format!(
                "term r = {r} has denominator 1 - {}",
                self.denom(r)
            )));
        }
        let Some((lo, hi)) = convex_range(|r| self.floor(r), 0, order) else {
            return Ok(QSeries::zero_to(order.clone()));
        };
        let mut terms = Vec::new();
        for r in lo..=hi {
            let n = self.numer(r);
            let m = self.denom(r);
            if m.expo.is_zero() {
                let c = (&CycRat::one() - &m.coeff).inv()?;
                terms.push((n.expo, &n.coeff * &c));
                continue;
            }
            // 1/(1-m) = Σ_{k≥0} m^k, or −Σ_{k≥1} m^{-k} when m has negative exponent
            let (step, mut cur, sign) = if m.expo.is_positive() {
                (m.clone(), n, CycRat::one())
            } else {
                let mi = m.inv()?;
                (mi.clone(), &n * &mi, -CycRat::one())
            };
            while &cur.expo < order {
                terms.push((cur.expo.clone(), &cur.coeff * &sign));
                cur = &cur * &step;
            }
        }
        Ok(QSeries::from_terms(terms, Some(order.clone())))
    }

    pub fn node(self, label: impl Into<String>) -> Node {
        Node::leaf(label, move |o| self.eval(o))
    }
}

fn nonzero(ms: &[&QMonomial]) -> QResult<()> {
    for m in ms {
        if m.is_zero() {
            return Err(QError::InvalidParameter(
                "argument must be a nonzero monomial".into(),
            ));
        }
    }
    Ok(())
}

fn check_base(base: &QMonomial) -> QResult<()> {
    if base.is_zero() || !base.expo.is_positive() {
        return Err(QError::InvalidParameter(format!(
            "base {base} must have positive exponent"
        )));
    }
    Ok(())
}

/// `J_n = (q^n;q^n)_∞` relative to `base`.
pub fn jb(base: &QMonomial, n: i64) -> Node {
    let b = base.powi(n);
    poch_inf_node(&b, &b)
}

fn mono(m: QMonomial) -> Node {
    Node::mono(&m)
}

/// `m(x,q,z) = (1/j(z;q)) Σ_r (−1)^r q^{C(r,2)} z^r / (1 − q^{r−1}xz)`.
pub fn m_node(x: &QMonomial, base: &QMonomial, z: &QMonomial) -> QResult<Node> {
    nonzero(&[x, z])?;
    check_base(base)?;
    let sum = LerchSum {
        n0: QMonomial::one(),
        ratio: -z,
        quad: base.clone(),
        m0: &(x * z) / base,
        step: base.clone(),
    };
    let label = format!("m({x}, {base}, {z})");
    Ok(Node::quot(sum.node(format!("{label} sum")), j_node(z, base)).labeled(label))
}

pub fn m_eval(x: &QMonomial, base: &QMonomial, z: &QMonomial, order: &BigRat) -> QResult<QSeries> {
    m_node(x, base, z)?.eval(order)
}

/// `h(x,q) = (1/j(q;q²)) Σ_n (−1)^n q^{n(n+1)} / (1 − q^n x)`.
pub fn h_node(x: &QMonomial, base: &QMonomial) -> QResult<Node> {
    nonzero(&[x])?;
    check_base(base)?;
    let b2 = base.powi(2);
    let sum = LerchSum {
        n0: QMonomial::one(),
        ratio: -&b2,
        quad: b2.clone(),
        m0: x.clone(),
        step: base.clone(),
    };
    let label = format!("h({x}; {base})");
    Ok(Node::quot(sum.node(format!("{label} sum")), j_node(base, &b2)).labeled(label))
}

pub fn h_eval(x: &QMonomial, base: &QMonomial, order: &BigRat) -> QResult<QSeries> {
    h_node(x, base)?.eval(order)
}

/// `k(x,q) = (1/(x·j(−q;q⁴))) Σ_n q^{n(2n+1)} / (1 − q^{2n} x²)`.
pub fn k_node(x: &QMonomial, base: &QMonomial) -> QResult<Node> {
    nonzero(&[x])?;
    check_base(base)?;
    let sum = LerchSum {
        n0: QMonomial::one(),
        ratio: base.powi(3),
        quad: base.powi(4),
        m0: x.powi(2),
        step: base.powi(2),
    };
    let label = format!("k({x}; {base})");
    let den = mono(x.clone()) * j_node(&-base, &base.powi(4));
    Ok(Node::quot(sum.node(format!("{label} sum")), den).labeled(label))
}

pub fn k_eval(x: &QMonomial, base: &QMonomial, order: &BigRat) -> QResult<QSeries> {
    k_node(x, base)?.eval(order)
}

/// `m(x,q,z₁) − m(x,q,z₀)` as a theta quotient.
pub fn changing_z_node(
    x: &QMonomial,
    base: &QMonomial,
    z0: &QMonomial,
    z1: &QMonomial,
) -> QResult<Node> {
    nonzero(&[x, z0, z1])?;
    check_base(base)?;
    let q = base;
    let num =
        mono(z0.clone()) * jb(q, 1).pow(3) * j_node(&(z1 / z0), q) * j_node(&(&(x * z0) * z1), q);
    let den = Node::product(vec![
        j_node(z0, q),
        j_node(z1, q),
        j_node(&(x * z0), q),
        j_node(&(x * z1), q),
    ]);
    Ok(num / den)
}

pub fn changing_z_delta(
    x: &QMonomial,
    base: &QMonomial,
    z0: &QMonomial,
    z1: &QMonomial,
    order: &BigRat,
) -> QResult<QSeries> {
    changing_z_node(x, base, z0, z1)?.eval(order)
}

fn q_pow(base: &QMonomial, e: i64) -> QMonomial {
    base.powi(e)
}

/// Right-hand side of the `n`-fold splitting of `m(x,q,z)` into Appell-Lerch
/// sums with base `q^{n²}` and parameter `z'`.
pub fn m_split_node(
    x: &QMonomial,
    base: &QMonomial,
    z: &QMonomial,
    zp: &QMonomial,
    n: i64,
) -> QResult<Node> {
    nonzero(&[x, z, zp])?;
    check_base(base)?;
    if n < 1 {
        return Err(QError::InvalidParameter(format!(
            "split order {n} must be positive"
        )));
    }
    let q = base;
    let qn = q.powi(n);
    let qnn = q.powi(n * n);
    let mx_n = (-x).powi(n);
    let cn2 = c2(n);
    let mut terms = Vec::new();
    for r in 0..n {
        let pre = &q_pow(q, -(r * (r + 1) / 2)) * &(-x).powi(r);
        let arg = -&(&q_pow(q, cn2 - n * r) * &mx_n);
        terms.push(mono(pre) * m_node(&arg, &qnn, zp)?);
    }
    let mut corr = Vec::new();
    for r in 0..n {
        let pre = &q_pow(q, c2(r)) * &(&(-x) * z).powi(r);
        let a = -&(&(&(&q_pow(q, cn2 + r) * &mx_n) * z) * zp);
        let b = &(&q_pow(q, n * r) * &z.powi(n)) / zp;
        let c = -&(&(&q_pow(q, cn2) * &mx_n) * zp);
        let d = &q_pow(q, r) * z;
        corr.push(
            mono(pre) * j_node(&a, &qn) * j_node(&b, &qnn) / (j_node(&c, &qn) * j_node(&d, &qn)),
        );
    }
    let front = mono(zp.clone()) * jb(q, n).pow(3) / (j_node(&(x * z), q) * j_node(zp, &qnn));
    terms.push(front * Node::sum(corr));
    Ok(Node::sum(terms))
}

/// The two-fold splitting with `z' = z⁴`, closed form.
pub fn m_split2_node(x: &QMonomial, base: &QMonomial, z: &QMonomial) -> QResult<Node> {
    nonzero(&[x, z])?;
    check_base(base)?;
    let q = base;
    let q4 = q.powi(4);
    let x2 = x.powi(2);
    let z4 = z.powi(4);
    let t1 = m_node(&-&(q * &x2), &q4, &z4)?;
    let t2 = mono(-&(x / q)) * m_node(&-&(&x2 / q), &q4, &z4)?;
    let num = jb(q, 2) * jb(q, 4) * j_node(&-&(x * &z.powi(2)), q) * j_node(&-&(x * &z.powi(3)), q);
    let den = Node::product(vec![
        mono(x.clone()),
        j_node(&(x * z), q),
        j_node(&z4, &q4),
        j_node(&-&(&(q * &x2) * &z4), &q.powi(2)),
    ]);
    Ok(t1 + t2 - num / den)
}

/// The three-fold splitting of `m(x,q,−1)`, closed form.
pub fn m_split3_node(x: &QMonomial, base: &QMonomial) -> QResult<Node> {
    nonzero(&[x])?;
    check_base(base)?;
    let q = base;
    let q9 = q.powi(9);
    let x3 = x.powi(3);
    let m1 = QMonomial::ci(-1, 0);
    let t1 = m_node(&(&q.powi(3) * &x3), &q9, &m1)?;
    let t2 = mono(-&(x / q)) * m_node(&x3, &q9, &m1)?;
    let t3 = mono(&x.powi(2) / &q.powi(3)) * m_node(&(&x3 / &q.powi(3)), &q9, &m1)?;
    let num = mono(x.clone())
        * jb(q, 1)
        * jb(q, 3).pow(2)
        * jb(q, 6)
        * jb(q, 9)
        * j_node(&(q * &x.powi(2)), &q.powi(2));
    let den = mono(&QMonomial::ci(2, 0) * q)
        * jb(q, 2).pow(2)
        * jb(q, 18).pow(2)
        * j_node(&-&x3, &q.powi(3));
    Ok(t1 + t2 + t3 + num / den)
}

/// `Σ_t ω^{−kt} m(ω^t x, q, z)` for `ω = ζ_n`.
pub fn roots_of_unity_lhs(
    x: &QMonomial,
    base: &QMonomial,
    z: &QMonomial,
    n: i64,
    k: i64,
) -> QResult<Node> {
    let mut terms = Vec::new();
    for t in 0..n {
        let w = CycRat::zeta(-k * t, n as u32);
        let wx = x.scale(&CycRat::zeta(t, n as u32));
        terms.push(Node::constant(w) * m_node(&wx, base, z)?);
    }
    Ok(Node::sum(terms))
}

/// The right-hand side of the roots-of-unity dissection.
pub fn roots_of_unity_rhs(
    x: &QMonomial,
    base: &QMonomial,
    z: &QMonomial,
    zp: &QMonomial,
    n: i64,
    k: i64,
) -> QResult<Node> {
    nonzero(&[x, z, zp])?;
    check_base(base)?;
    if n < 1 || k < 0 || k >= n {
        return Err(QError::InvalidParameter(format!(
            "need 0 <= k < n, got n = {n}, k = {k}"
        )));
    }
    let q = base;
    let qnn = q.powi(n * n);
    let nn = QMonomial::ci(n, 0);
    let mx_n = (-x).powi(n);
    let xz_n = (x * z).powi(n);
    let lead = &(&nn * &q.powi(-(k * (k + 1) / 2))) * &(-x).powi(k);
    let arg = -&(&q.powi(c2(n) - n * k) * &mx_n);
    let main = mono(lead) * m_node(&arg, &qnn, zp)?;
    let mut corr = Vec::new();
    for t in 0..n {
        let pre = &q.powi(t * (t + 1) / 2 + k * t) * &(-z).powi(t);
        let a = -&(&(&q.powi(n * (n + 1) / 2 + n * k + n * t) * &(-z).powi(n)) / zp);
        let b = &(&q.powi(n * t) * &xz_n) * zp;
        let c = -&(&(&q.powi(c2(n) - n * k) * &mx_n) * zp);
        let d = &q.powi(n * t) * &xz_n;
        corr.push(
            mono(pre) * j_node(&a, &qnn) * j_node(&b, &qnn) / (j_node(&c, &qnn) * j_node(&d, &qnn)),
        );
    }
    let front = mono(&(&nn * &x.powi(k)) * &z.powi(k + 1)) * jb(q, n * n).pow(3)
        / (j_node(z, q) * j_node(zp, &qnn));
    Ok(main - front * Node::sum(corr))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euler::{HyperSum, Poch};

    fn o(n: i64) -> BigRat {
        BigRat::from_int(n)
    }

    #[test]
    fn evaluations() {
        let half = QSeries::constant(CycRat::from_rat(BigRat::new(1, 2)));
        let a = m_eval(
            &QMonomial::qi(1),
            &QMonomial::qi(2),
            &QMonomial::ci(-1, 0),
            &o(60),
        )
        .unwrap();
        assert!(a.agrees_with(&half, &o(60)));
        let b = m_eval(
            &QMonomial::ci(-1, 0),
            &QMonomial::qi(2),
            &QMonomial::qi(1),
            &o(60),
        )
        .unwrap();
        assert!(b.has_no_terms());
    }

    #[test]
    fn second_order_a() {
        // A(q) = Σ q^{n+1}(−q²;q²)_n/(q;q²)_{n+1} = −m(q,q⁴,q²)
        let a = HyperSum::new(QMonomial::qi(1), QMonomial::qi(1), QMonomial::one())
            .with(Poch::fixed(QMonomial::ci(-1, 2), QMonomial::qi(2), 1, 0, 1))
            .with(Poch::fixed(QMonomial::qi(1), QMonomial::qi(2), 1, 1, -1));
        let order = o(60);
        let lhs = a.eval(&order).unwrap();
        let rhs = m_eval(
            &QMonomial::qi(1),
            &QMonomial::qi(4),
            &QMonomial::qi(2),
            &order,
        )
        .unwrap()
        .neg();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn poles_are_reported() {
        let half = BigRat::new(1, 2);
        let x = QMonomial::q(BigRat::new(7, 2));
        let e = m_eval(&x, &QMonomial::qi(1), &QMonomial::q(half), &o(10)).unwrap_err();
        assert!(matches!(e.root(), QError::Genericity(_)));
        let e = m_eval(
            &QMonomial::qi(1),
            &QMonomial::qi(2),
            &QMonomial::qi(4),
            &o(10),
        )
        .unwrap_err();
        assert!(matches!(e.root(), QError::DivisionByZero(_)));
    }

    #[test]
    fn h_matches_m_form() {
        let x = QMonomial::qi(1);
        let b = QMonomial::qi(3);
        let order = o(50);
        let h = h_eval(&x, &b, &order).unwrap();
        let m = mono(-&x.powi(-1)) * m_node(&QMonomial::qi(1), &QMonomial::qi(6), &x).unwrap();
        assert_eq!(h, m.eval(&order).unwrap());
    }
}
