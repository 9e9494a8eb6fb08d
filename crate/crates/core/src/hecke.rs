//! Hecke-type double sums `f_{a,b,c}` and the Appell-Lerch and theta
//! quotient expressions that evaluate them.
//!
//! Every formula takes a general monomial `base` in the role of `q`, so
//! `q^k` below means `base^k` and a base such as `−q^{1/4}` carries its sign
//! into every power.

use num_integer::Integer;

use crate::appell::{jb, m_node};
use crate::arith::{BigRat, CycRat};
use crate::error::{QError, QResult};
use crate::lazy::Node;
use crate::monomial::QMonomial;
use crate::scan::convex_range_from;
use crate::series::QSeries;
use crate::theta::j_node;

/// Parameters of `f_{a,b,c}(x,y,q)`.
#[derive(Clone, Debug, PartialEq)]
pub struct HeckeParams {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub x: QMonomial,
    pub y: QMonomial,
    pub base: QMonomial,
}

impl HeckeParams {
    pub fn new(a: i64, b: i64, c: i64, x: QMonomial, y: QMonomial, base: QMonomial) -> Self {
        HeckeParams {
            a,
            b,
            c,
            x,
            y,
            base,
        }
    }

    fn validate(&self) -> QResult<()> {
        if self.a < 1 || self.b < 1 || self.c < 1 {
            return Err(QError::InvalidParameter(format!(
                "f_{{{},{},{}}} needs positive a, b, c",
                self.a, self.b, self.c
            )));
        }
        nonzero(&[&self.x, &self.y])?;
        check_base(&self.base)
    }

    fn label(&self) -> String {
        format!(
            "f_{{{},{},{}}}({}, {}; {})",
            self.a, self.b, self.c, self.x, self.y, self.base
        )
    }

    /// `a·C(r,2) + b·r·s + c·C(s,2)`.
    fn form(&self, r: i64, s: i64) -> i64 {
        self.a * c2(r) + self.b * r * s + self.c * c2(s)
    }

    fn expo(&self, r: i64, s: i64) -> BigRat {
        let lin = &(&BigRat::from_int(r) * &self.x.expo) + &(&BigRat::from_int(s) * &self.y.expo);
        &lin + &(&BigRat::from_int(self.form(r, s)) * &self.base.expo)
    }

    /// Exponent with the cross term dropped; a lower bound on either cone.
    fn split_bound(&self, r: i64, s: i64) -> (BigRat, BigRat) {
        let beta = &self.base.expo;
        let fx =
            &(&BigRat::from_int(r) * &self.x.expo) + &(&BigRat::from_int(self.a * c2(r)) * beta);
        let fy =
            &(&BigRat::from_int(s) * &self.y.expo) + &(&BigRat::from_int(self.c * c2(s)) * beta);
        (fx, fy)
    }
}

fn c2(r: i64) -> i64 {
    r * (r - 1) / 2
}

fn nonzero(ms: &[&QMonomial]) -> QResult<()> {
    if ms.iter().any(|m| m.is_zero()) {
        return Err(QError::InvalidParameter(
            "argument must be a nonzero monomial".into(),
        ));
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

/// Smallest value of a convex `f` on `n >= 0`.
fn min_from_zero<F: Fn(i64) -> BigRat>(f: F) -> BigRat {
    let mut n = 0;
    let mut cur = f(0);
    loop {
        let next = f(n + 1);
        if next >= cur {
            return cur;
        }
        cur = next;
        n += 1;
    }
}

/// `Σ_{sg(r)=sg(s)} sg(r) (−1)^{r+s} x^r y^s q^{a·C(r,2)+b·r·s+c·C(s,2)}` below `order`.
///
/// The cone `r,s ≥ 0` is walked directly and `r,s < 0` through
/// `r → −1−r`, `s → −1−s`. On either cone `b·r·s ≥ 0`, so dropping it leaves
/// a separable convex lower bound that fixes the outer range; each row is
/// then solved exactly.
pub fn f_eval(p: &HeckeParams, order: &BigRat) -> QResult<QSeries> {
    p.validate()?;
    let mx = p.x.neg();
    let my = p.y.neg();
    let mut terms = Vec::new();
    for neg in [false, true] {
        let idx = |u: i64| if neg { -1 - u } else { u };
        let bmin = min_from_zero(|v| p.split_bound(0, idx(v)).1);
        let bound = order - &bmin;
        let Some((_, umax)) = convex_range_from(|u| p.split_bound(idx(u), 0).0, 0, &bound) else {
            continue;
        };
        for u in 0..=umax {
            let r = idx(u);
            let Some((vlo, vhi)) = convex_range_from(|v| p.expo(r, idx(v)), 0, order) else {
                continue;
            };
            let row = &mx.powi(r);
            for v in vlo..=vhi {
                let s = idx(v);
                let mut t = &(row * &my.powi(s)) * &p.base.powi(p.form(r, s));
                if neg {
                    t = t.neg();
                }
                terms.push((t.expo, t.coeff));
            }
        }
    }
    Ok(QSeries::from_terms(terms, Some(order.clone())))
}

/// Lazy `f_{a,b,c}(x,y,q)`.
pub fn f_node(p: HeckeParams) -> QResult<Node> {
    p.validate()?;
    Ok(Node::leaf(p.label(), move |o| f_eval(&p, o)))
}

fn mono(m: QMonomial) -> Node {
    Node::mono(&m)
}

/// `J̄_{0,m} = j(−1;q^m)` relative to `base`.
fn jbar0(base: &QMonomial, m: i64) -> Node {
    j_node(&QMonomial::ci(-1, 0), &base.powi(m))
}

/// `J_{a,m} = j(q^a;q^m)` relative to `base`.
fn jam(base: &QMonomial, a: i64, m: i64) -> Node {
    j_node(&base.powi(a), &base.powi(m))
}

/// `base^e` for a rational exponent.
fn qr(base: &QMonomial, e: &BigRat) -> QResult<QMonomial> {
    base.pow_rat(e)
}

/// The Appell-Lerch expression `g_{a,b,c}(x,y,q,z_1,z_0)`:
/// `Σ_{t<a} (−y)^t q^{c·C(t,2)} j(q^{bt}x;q^a) m(−q^{a·C(b+1,2)−c·C(a+1,2)−t(b²−ac)}(−y)^a/(−x)^b, q^{a(b²−ac)}, z_0)`
/// plus the same with `x ↔ y`, `a ↔ c` and `z_1`.
#[allow(clippy::too_many_arguments)]
pub fn g_abc_node(
    a: i64,
    b: i64,
    c: i64,
    x: &QMonomial,
    y: &QMonomial,
    base: &QMonomial,
    z1: &QMonomial,
    z0: &QMonomial,
) -> QResult<Node> {
    nonzero(&[x, y, z0, z1])?;
    check_base(base)?;
    let d = b * b - a * c;
    if a < 1 || b < 1 || c < 1 || d <= 0 {
        return Err(QError::InvalidParameter(format!(
            "g_{{{a},{b},{c}}} needs positive a, b, c with b^2 > ac"
        )));
    }
    let half =
        |a: i64, c: i64, x: &QMonomial, y: &QMonomial, z: &QMonomial| -> QResult<Vec<Node>> {
            let (mx, my) = (x.neg(), y.neg());
            let ratio = &my.powi(a) * &mx.powi(-b);
            let mut out = Vec::new();
            for t in 0..a {
                let arg = (&ratio * &base.powi(a * c2(b + 1) - c * c2(a + 1) - t * d)).neg();
                // m first: a pole next to a vanishing theta factor is non-generic
                out.push(Node::product(vec![
                    m_node(&arg, &base.powi(a * d), z)?,
                    j_node(&(x * &base.powi(b * t)), &base.powi(a)),
                    mono(&my.powi(t) * &base.powi(c * c2(t))),
                ]));
            }
            Ok(out)
        };
    let mut terms = half(a, c, x, y, z0)?;
    terms.extend(half(c, a, y, x, z1)?);
    Ok(Node::sum(terms).labeled(format!("g_{{{a},{b},{c}}}({x}, {y}; {base}; {z1}, {z0})")))
}

/// `h_{a,b,c}(x,y,q,z_1,z_0)` for `a | b`, `c | b`.
#[allow(clippy::too_many_arguments)]
pub fn h_abc_node(
    a: i64,
    b: i64,
    c: i64,
    x: &QMonomial,
    y: &QMonomial,
    base: &QMonomial,
    z1: &QMonomial,
    z0: &QMonomial,
) -> QResult<Node> {
    nonzero(&[x, y, z0, z1])?;
    check_base(base)?;
    check_divisible(a, b, c)?;
    let (ba, bc) = (b / a, b / c);
    let (mx, my) = (x.neg(), y.neg());
    let arg1 = (&(&my * &mx.powi(-ba)) * &base.powi(a * c2(ba + 1) - c)).neg();
    let arg0 = (&(&mx * &my.powi(-bc)) * &base.powi(c * c2(bc + 1) - a)).neg();
    let t1 = m_node(&arg1, &base.powi(b * ba - c), z1)? * j_node(x, &base.powi(a));
    let t0 = m_node(&arg0, &base.powi(b * bc - a), z0)? * j_node(y, &base.powi(c));
    Ok((t1 + t0).labeled(format!("h_{{{a},{b},{c}}}({x}, {y}; {base}; {z1}, {z0})")))
}

fn check_divisible(a: i64, b: i64, c: i64) -> QResult<()> {
    if a < 1 || b < 1 || c < 1 || b % a != 0 || b % c != 0 || a * c >= b * b {
        return Err(QError::InvalidParameter(format!(
            "({a},{b},{c}) needs a | b, c | b and ac < b^2"
        )));
    }
    Ok(())
}

fn check_coprime(n: i64, p: i64) -> QResult<()> {
    if n < 1 || p < 1 || n.gcd(&p) != 1 {
        return Err(QError::InvalidParameter(format!(
            "(n,p) = ({n},{p}) must be coprime positive integers"
        )));
    }
    Ok(())
}

/// The theta-quotient sum `θ_{n,p}(x,y,q)` over `0 ≤ r*, s* < p`, with
/// `r = r* + {(n−1)/2}` and `s = s* + {(n−1)/2}`.
pub fn theta_np_node(
    n: i64,
    p: i64,
    x: &QMonomial,
    y: &QMonomial,
    base: &QMonomial,
) -> QResult<Node> {
    nonzero(&[x, y])?;
    check_base(base)?;
    check_coprime(n, p)?;
    let (mx, my) = (x.neg(), y.neg());
    let int = BigRat::from_int;
    let delta = BigRat::new(n - 1, 2).fract();
    let big = p * p * (2 * n + p);
    let lo = &int(n - 1) / &int(2);
    let hi = &int(n + 1) / &int(2);
    let xn_yn = &x.powi(n) * &y.powi(-n);
    let xy_p = &x.powi(p) * &y.powi(p);
    let den_x = &my.powi(n + p) * &mx.powi(-n);
    let den_y = &mx.powi(n + p) * &my.powi(-n);
    let shift = BigRat::new(p * (n + p), 2);
    let jbig = jb(base, big).pow(3);
    let mut terms = Vec::new();
    for rs in 0..p {
        for ss in 0..p {
            let r = &int(rs) + &delta;
            let s = &int(ss) + &delta;
            let rr = &r - &lo;
            let sr = &s + &hi;
            let e = &(&(&int(n) * &rr.binom2()) + &(&(&int(n + p) * &rr) * &sr))
                + &(&int(n) * &sr.binom2());
            let pre = &(&qr(base, &e)? * &mx.pow_rat(&rr)?) * &my.pow_rat(&sr)?;
            let e1 = &int(n * p) * &(&s - &r);
            let e2 = &(&int(p * (2 * n + p)) * &(&r + &s)) + &int(p * (n + p));
            let e3 = &(&int(p * (2 * n + p)) * &r) + &shift;
            let e4 = &(&int(p * (2 * n + p)) * &s) + &shift;
            let num = Node::product(vec![
                j_node(&(&qr(base, &e1)? * &xn_yn).neg(), &base.powi(n * p * p)),
                j_node(&(&qr(base, &e2)? * &xy_p), &base.powi(big)),
                mono(pre),
                jbig.clone(),
            ]);
            let den = Node::product(vec![
                j_node(&(&qr(base, &e3)? * &den_x), &base.powi(big)),
                j_node(&(&qr(base, &e4)? * &den_y), &base.powi(big)),
            ]);
            terms.push(num / den);
        }
    }
    Ok(Node::sum(terms).labeled(format!("theta_{{{n},{p}}}({x}, {y}; {base})")))
}

/// The triple theta-quotient sum `θ_{a,b,c}(x,y,q)` for `a | b`, `c | b`.
pub fn theta_abc_node(
    a: i64,
    b: i64,
    c: i64,
    x: &QMonomial,
    y: &QMonomial,
    base: &QMonomial,
) -> QResult<Node> {
    nonzero(&[x, y])?;
    check_base(base)?;
    check_divisible(a, b, c)?;
    let (mx, my) = (x.neg(), y.neg());
    let (ba, bc) = (b / a, b / c);
    let ap = b * ba - c;
    let cp = b * bc - a;
    let k = ba * bc - 1;
    let per = b * k;
    let odd = BigRat::new(ba * ba * bc * (b - a), 2);
    let j3 = jb(base, per).pow(3);
    let mut terms = Vec::new();
    for d in 0..bc {
        for e in 0..ba {
            for f in 0..ba {
                let pre = &mx.powi(f) * &base.powi(ap * c2(d + 1) + cp * c2(e + f + 1) + a * c2(f));
                let ex2 = &BigRat::from_int(per * (e + f + 1) - ap * (d + 1)) + &odd;
                let arg2 = &(&qr(base, &ex2)? * &mx.powi(ba)) * &y.powi(-1);
                let arg3 = &(&mx.powi(1 - ba) * &my.powi(1 - bc))
                    * &base.powi(cp * (e + 1) + ap * (d + 1) - c * c2(bc) - a * c2(ba));
                let arg4 = &(&mx * &my.powi(-bc)) * &base.powi(cp * (e + 1) - c * c2(bc));
                let arg5 = &(&mx.powi(-ba) * &my) * &base.powi(ap * (d + 1) - a * c2(ba));
                let num = Node::product(vec![
                    j_node(&(y * &base.powi(ap * (d + 1) + b * f)), &base.powi(b * ba)),
                    j_node(&arg2, &base.powi(b * ba * k)),
                    j_node(&arg3, &base.powi(per)),
                    mono(pre),
                    j3.clone(),
                ]);
                let den = Node::product(vec![
                    j_node(&arg4, &base.powi(per)),
                    j_node(&arg5, &base.powi(per)),
                ]);
                terms.push(num / den);
            }
        }
    }
    Ok(Node::sum(terms).labeled(format!("theta_{{{a},{b},{c}}}({x}, {y}; {base})")))
}

/// Right side of the `f_{n,n+p,n}` theorem:
/// `g_{n,n+p,n}(x,y,q,−1,−1) + θ_{n,p}(x,y,q)/J̄_{0,np(2n+p)}`.
pub fn master_rhs_node(
    n: i64,
    p: i64,
    x: &QMonomial,
    y: &QMonomial,
    base: &QMonomial,
) -> QResult<Node> {
    let m1 = QMonomial::ci(-1, 0);
    let g = g_abc_node(n, n + p, n, x, y, base, &m1, &m1)?;
    let t = theta_np_node(n, p, x, y, base)?;
    Ok(g + t / jbar0(base, n * p * (2 * n + p)))
}

/// Right side of the divisible-`b` theorem:
/// `h_{a,b,c}(x,y,q,−1,−1) − θ_{a,b,c}(x,y,q)/(J̄_{0,b²/a−c} J̄_{0,b²/c−a})`.
pub fn divisible_rhs_node(
    a: i64,
    b: i64,
    c: i64,
    x: &QMonomial,
    y: &QMonomial,
    base: &QMonomial,
) -> QResult<Node> {
    let m1 = QMonomial::ci(-1, 0);
    let h = h_abc_node(a, b, c, x, y, base, &m1, &m1)?;
    let t = theta_abc_node(a, b, c, x, y, base)?;
    let den = jbar0(base, b * (b / a) - c) * jbar0(base, b * (b / c) - a);
    Ok(h - t / den)
}

/// The correction `Θ_{n,p}(x,y,q)` for `p ∈ {1,2,3,4}`; `Θ_{n,1} = 0`.
pub fn big_theta_node(
    n: i64,
    p: i64,
    x: &QMonomial,
    y: &QMonomial,
    base: &QMonomial,
) -> QResult<Node> {
    nonzero(&[x, y])?;
    check_base(base)?;
    let node = match p {
        1 if n >= 1 => Node::zero(),
        2 if n >= 1 && n % 2 == 1 => big_theta2(n, x, y, base),
        3 if n >= 1 && n % 3 != 0 => big_theta3(n, x, y, base),
        4 if n >= 1 && n % 2 == 1 => big_theta4(n, x, y, base),
        _ => {
            return Err(QError::InvalidParameter(format!(
                "Theta_{{{n},{p}}} is not defined"
            )));
        }
    };
    Ok(node.labeled(format!("Theta_{{{n},{p}}}({x}, {y}; {base})")))
}

fn big_theta2(n: i64, x: &QMonomial, y: &QMonomial, q: &QMonomial) -> Node {
    let m = 4 * (n + 1);
    let qm = q.powi(m);
    let pre = &(&y.powi((n + 1) / 2) * &x.powi(-(n - 3) / 2)) * &q.powi(-(n * n - 3) / 2);
    let xy = x * y;
    let num = Node::product(vec![
        j_node(&(y / x), &qm),
        j_node(&(&xy * &q.powi(n + 2)), &qm),
        j_node(&(&q.powi(2 * n) / &xy.powi(2)), &q.powi(2 * m)),
        mono(pre),
        jam(q, 2 * n, 4 * n),
        jam(q, m, 2 * m),
    ]);
    let den = Node::product(vec![
        j_node(&(&y.powi(n) / &x.powi(n)), &q.powi(n * m)),
        j_node(&(&x.powi(2) * &q.powi(n + 2)).neg(), &qm),
        j_node(&(&y.powi(2) * &q.powi(n + 2)).neg(), &qm),
    ]);
    num / den
}

fn big_theta3(n: i64, x: &QMonomial, y: &QMonomial, q: &QMonomial) -> Node {
    let m = 2 * n + 3;
    let q3m = q.powi(3 * m);
    let pre = &(&x.neg() * &y.neg().powi(n)) * &q.powi(n * c2(n + 1));
    let xy = x * y;
    let x2y = &xy * x;
    let xy2 = &xy * y;
    let num = Node::product(vec![
        j_node(&(y / x), &q3m),
        j_node(&(x * &q.powi(n * n + n)), &q.powi(m)),
        j_node(&(y * &q.powi(n * n + n)), &q.powi(m)),
        mono(pre),
        jb(q, 3 * n),
        jb(q, 3 * m),
    ]);
    let den = Node::product(vec![
        jb(q, m).pow(2),
        j_node(&(&y.powi(n) / &x.powi(n)), &q.powi(3 * n * m)),
        j_node(&(&x.powi(3) * &q.powi(3 * n * n + 3 * n)), &q3m),
        j_node(&(&y.powi(3) * &q.powi(3 * n * n + 3 * n)), &q3m),
    ]);
    let e1 = q.powi(3 * n * n + 5 * n + 3);
    let e2 = q.powi(3 * n * n + 7 * n + 6);
    let brace = Node::product(vec![
        j_node(&(&x2y * &e1), &q3m),
        j_node(&(&xy2 * &e1), &q3m),
    ]) - Node::product(vec![
        j_node(&(&x2y * &e2), &q3m),
        j_node(&(&xy2 * &e2), &q3m),
        mono(&xy * &q.powi(2 * n * n + 2 * n)),
    ]);
    num * brace / den
}

fn big_theta4(n: i64, x: &QMonomial, y: &QMonomial, q: &QMonomial) -> Node {
    let m = 2 * n + 4;
    let (q2m, q4m, q8m) = (q.powi(2 * m), q.powi(4 * m), q.powi(8 * m));
    let xy = x * y;
    let x2y2 = xy.powi(2);
    let yx = y / x;
    let y2x2 = yx.powi(2);
    let j4 = |arg: QMonomial| j_node(&arg, &q4m);
    let pre = &(&x.powi(-(n - 3) / 2) * &y.powi((n + 1) / 2)) * &q.powi(-(n * n + n - 3));
    let outer = Node::product(vec![j4(yx.clone()), mono(pre)])
        / Node::product(vec![
            j_node(&(&y.powi(n) / &x.powi(n)), &q.powi(4 * n * m)),
            j4((&x.powi(4) * &q.powi(2 * n + 8)).neg()),
            j4((&y.powi(4) * &q.powi(2 * n + 8)).neg()),
        ]);
    let s1_head = Node::product(vec![
        j4(&x2y2 * &q.powi(6 * n + 16)),
        j4((&yx * &q2m).neg()),
        j_node(&(&xy * &q.powi(n + 4)), &q2m),
    ]) / Node::product(vec![jb(q, 2 * m).pow(3), jb(q, 8 * m)]);
    let s1_brace = Node::product(vec![
        j4((&x2y2 * &q.powi(2 * n + 8)).neg()),
        j4(&y2x2 * &q2m),
        jb(q, 4 * m).pow(2),
    ]) + Node::product(vec![
        j4((&x2y2 * &q.powi(6 * n + 16)).neg()),
        Node::product(vec![j4(&yx * &q2m), j4(yx.neg())]).pow(2),
        mono(&x.powi(2) * &q.powi(n + 4)),
    ]) / jb(q, 4 * m);
    let s1 = s1_head * s1_brace;
    let s2_head = Node::product(vec![
        j4(&x2y2 * &q.powi(2 * n + 8)),
        j4(yx.neg()),
        j_node(&(&xy * &q.powi(3 * n + 8)), &q2m),
    ]) / jb(q, 2 * m).pow(2);
    let s2_brace = Node::product(vec![
        j4((&x2y2 * &q.powi(2 * n + 8)).neg()),
        j4(&y2x2 * &q2m),
        mono(&q.powi(n + 1) / y),
        jb(q, 8 * m),
    ]) / jb(q, 4 * m)
        + Node::product(vec![
            j4((&x2y2 * &q.powi(6 * n + 16)).neg()),
            j_node(&(&y2x2 * &q4m), &q8m).pow(2),
            mono(x * q),
        ]) / jb(q, 8 * m);
    let s2 = s2_head * s2_brace;
    let brace = jam(q, 4 * n, 16 * n) * s1
        - Node::product(vec![jam(q, 8 * n, 16 * n), mono(q.clone()), s2]);
    outer * brace
}

/// Right side of the `f_{n,n+p,n}` subtheorems:
/// `g_{n,n+p,n}(x,y,q,y^n/x^n,x^n/y^n) − Θ_{n,p}(x,y,q)`.
pub fn subtheorem_rhs_node(
    n: i64,
    p: i64,
    x: &QMonomial,
    y: &QMonomial,
    base: &QMonomial,
) -> QResult<Node> {
    nonzero(&[x, y])?;
    let z1 = &y.powi(n) / &x.powi(n);
    let z0 = &x.powi(n) / &y.powi(n);
    let g = g_abc_node(n, n + p, n, x, y, base, &z1, &z0)?;
    Ok(g - big_theta_node(n, p, x, y, base)?)
}

fn check_string(level: i64, m: i64, l: i64) -> QResult<()> {
    if level < 1 || l < 0 || l > level || (m - l) % 2 != 0 {
        return Err(QError::InvalidParameter(format!(
            "string function C^{level}_{{{m},{l}}} needs N >= 1, 0 <= l <= N and m = l mod 2"
        )));
    }
    Ok(())
}

/// The level-`N` string function `C^N_{m,l} = f_{1,1+N,1}(q^{1+(m+l)/2}, q^{1−(m−l)/2}, q)/J_1^3`.
pub fn string_function_node(level: i64, m: i64, l: i64) -> QResult<Node> {
    check_string(level, m, l)?;
    let x = QMonomial::qi(1 + (m + l) / 2);
    let y = QMonomial::qi(1 - (m - l) / 2);
    let f = f_node(HeckeParams::new(1, 1 + level, 1, x, y, QMonomial::qi(1)))?;
    Ok((f / jb(&QMonomial::qi(1), 1).pow(3)).labeled(format!("C^{level}_{{{m},{l}}}")))
}

pub fn string_function(level: i64, m: i64, l: i64, order: &BigRat) -> QResult<QSeries> {
    string_function_node(level, m, l)?.eval(order)
}

/// The numerator of `C^N_{m,l}` summed in its original shape,
/// `{Σ_{j≥1,k≤0} − Σ_{j≤0,k≥1}} (−1)^{k−j} q^{C(k−j,2) − Njk + k(m−l)/2 + j(m+l)/2}`,
/// enumerated by `t = |k − j|` with no use of `f_{a,b,c}`.
pub fn string_numerator_oracle(level: i64, m: i64, l: i64, order: &BigRat) -> QResult<QSeries> {
    check_string(level, m, l)?;
    let slope = BigRat::new((m - l).abs().max((m + l).abs()), 2);
    let expo = |j: i64, k: i64| {
        let base = BigRat::from_int(c2(k - j) - level * j * k);
        &(&base + &BigRat::new(k * (m - l), 2)) + &BigRat::new(j * (m + l), 2)
    };
    let mut terms = Vec::new();
    let mut t = 1i64;
    loop {
        let floor = &BigRat::from_int(c2(t)) - &(&BigRat::from_int(t) * &slope);
        if &floor >= order && BigRat::from_int(t) > &slope + &BigRat::one() {
            break;
        }
        let sign = if t % 2 == 0 { 1 } else { -1 };
        for i in 1..=t {
            // j ≥ 1, k ≤ 0 with j − k = t
            terms.push((expo(i, i - t), CycRat::from_int(sign)));
            // j ≤ 0, k ≥ 1 with k − j = t
            terms.push((expo(i - t, i), CycRat::from_int(-sign)));
        }
        t += 1;
    }
    Ok(QSeries::from_terms(terms, Some(order.clone())))
}
