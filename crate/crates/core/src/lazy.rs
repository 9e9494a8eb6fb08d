//! Demand-driven evaluation of series expressions.
//!
//! A [`Node`] is a shared expression DAG whose leaves produce series on
//! request. Asking a node for `order` returns a series known at least below
//! `order`; products and quotients work out how far each operand must be
//! expanded from the operands' valuations, so a factor with a large negative
//! leading exponent automatically pulls its partners further out.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, Mutex};

use crate::arith::{BigRat, CycRat};
use crate::error::{QError, QResult};
use crate::monomial::QMonomial;
use crate::series::QSeries;

type LeafFn = dyn Fn(&BigRat) -> QResult<QSeries> + Send + Sync;

enum Kind {
    Exact(QSeries),
    Leaf { label: String, f: Box<LeafFn> },
    Sum(Vec<Node>),
    Prod(Vec<Node>),
    Quot(Node, Node),
    Neg(Node),
    Subst(Node, QMonomial),
    Labeled(String, Node),
}

struct Inner {
    kind: Kind,
    cache: Mutex<Option<QSeries>>,
}

/// A lazily evaluated series expression. Cloning is cheap and shares the
/// evaluation cache.
#[derive(Clone)]
pub struct Node(Arc<Inner>);

const PROD_ROUNDS: usize = 40;
const DENOM_RETRIES: usize = 4;

fn covers(s: &QSeries, order: &BigRat) -> bool {
    s.prec().is_none_or(|p| p >= order)
}

impl Node {
    fn new(kind: Kind) -> Node {
        Node(Arc::new(Inner {
            kind,
            cache: Mutex::new(None),
        }))
    }

    pub fn exact(s: QSeries) -> Node {
        Node::new(Kind::Exact(s))
    }

    pub fn zero() -> Node {
        Node::exact(QSeries::zero())
    }

    pub fn one() -> Node {
        Node::exact(QSeries::one())
    }

    pub fn constant(c: CycRat) -> Node {
        Node::exact(QSeries::constant(c))
    }

    pub fn int(n: i64) -> Node {
        Node::constant(CycRat::from_int(n))
    }

    pub fn rat(r: BigRat) -> Node {
        Node::constant(CycRat::from_rat(r))
    }

    pub fn mono(m: &QMonomial) -> Node {
        Node::exact(QSeries::monomial(m))
    }

    /// A leaf computed by `f(order)`, which must return a series known at
    /// least below `order`.
    pub fn leaf<F>(label: impl Into<String>, f: F) -> Node
    where
        F: Fn(&BigRat) -> QResult<QSeries> + Send + Sync + 'static,
    {
        Node::new(Kind::Leaf {
            label: label.into(),
            f: Box::new(f),
        })
    }

    pub fn sum(terms: Vec<Node>) -> Node {
        match terms.len() {
            0 => Node::zero(),
            1 => terms.into_iter().next().unwrap(),
            _ => Node::new(Kind::Sum(terms)),
        }
    }

    pub fn product(factors: Vec<Node>) -> Node {
        match factors.len() {
            0 => Node::one(),
            1 => factors.into_iter().next().unwrap(),
            _ => Node::new(Kind::Prod(factors)),
        }
    }

    pub fn quot(num: Node, den: Node) -> Node {
        Node::new(Kind::Quot(num, den))
    }

    /// Integer power; negative exponents divide.
    pub fn pow(&self, k: i64) -> Node {
        let base = Node::product(vec![self.clone(); k.unsigned_abs() as usize]);
        if k < 0 {
            Node::quot(Node::one(), base)
        } else {
            base
        }
    }

    /// Substitute `q := base` (`base.expo > 0`).
    pub fn subst(&self, base: QMonomial) -> Node {
        Node::new(Kind::Subst(self.clone(), base))
    }

    /// Attach a name that is reported in error context.
    pub fn labeled(self, label: impl Into<String>) -> Node {
        Node::new(Kind::Labeled(label.into(), self))
    }

    /// Multiply by an exact monomial.
    pub fn times(&self, m: &QMonomial) -> Node {
        Node::mono(m) * self.clone()
    }

    /// The series known at least below `order`, truncated there unless exact.
    pub fn eval(&self, order: &BigRat) -> QResult<QSeries> {
        if let Some(c) = self.0.cache.lock().unwrap().as_ref() {
            if covers(c, order) {
                return Ok(match c.prec() {
                    None => c.clone(),
                    Some(_) => c.truncate(order),
                });
            }
        }
        let s = self.compute(order)?;
        if !covers(&s, order) {
            return Err(QError::PrecisionLoss(format!(
                "{} evaluated below q^{} instead of q^{order}",
                self,
                s.prec().unwrap()
            )));
        }
        let s = match s.prec() {
            None => s,
            Some(_) => s.truncate(order),
        };
        *self.0.cache.lock().unwrap() = Some(s.clone());
        Ok(s)
    }

    fn compute(&self, order: &BigRat) -> QResult<QSeries> {
        match &self.0.kind {
            Kind::Exact(s) => Ok(s.clone()),
            Kind::Leaf { label, f } => f(order).map_err(|e| e.context(label.clone())),
            Kind::Labeled(label, n) => n.eval(order).map_err(|e| e.context(label.clone())),
            Kind::Neg(n) => Ok(n.eval(order)?.neg()),
            Kind::Sum(ts) => {
                let mut acc = QSeries::zero();
                for t in ts {
                    acc = acc.add(&t.eval(order)?);
                }
                Ok(acc)
            }
            Kind::Prod(fs) => eval_product(fs, order),
            Kind::Quot(n, d) => eval_quotient(n, d, order),
            Kind::Subst(n, base) => {
                let inner = order / &base.expo;
                n.eval(&inner)?.compose_monomial(base)
            }
        }
    }
}

fn eval_product(fs: &[Node], order: &BigRat) -> QResult<QSeries> {
    let mut vals = Vec::with_capacity(fs.len());
    for f in fs {
        let v = f.eval(order)?;
        if v.is_exact_zero() {
            return Ok(QSeries::zero());
        }
        vals.push(v);
    }
    for _ in 0..PROD_ROUNDS {
        let lows: Vec<BigRat> = vals.iter().map(|v| v.lowest().unwrap()).collect();
        let total = lows.iter().fold(BigRat::zero(), |a, b| &a + b);
        let mut changed = false;
        for i in 0..fs.len() {
            let need = &(order - &total) + &lows[i];
            if !covers(&vals[i], &need) {
                vals[i] = fs[i].eval(&need)?;
                if vals[i].is_exact_zero() {
                    return Ok(QSeries::zero());
                }
                changed = true;
            }
        }
        if !changed {
            let mut rest = total.clone();
            let mut acc = QSeries::one();
            for (v, low) in vals.iter().zip(&lows) {
                rest -= low;
                let cap = order - &rest;
                acc = acc.mul_capped(v, Some(&cap));
            }
            return Ok(acc);
        }
    }
    Err(QError::PrecisionLoss(
        "product factors did not settle on a common window".into(),
    ))
}

fn eval_quotient(num: &Node, den: &Node, order: &BigRat) -> QResult<QSeries> {
    let mut probe = order.clone();
    let step = BigRat::max(&order.abs(), &BigRat::from_int(16));
    let mut d = den.eval(&probe)?;
    let mut tries = 0;
    while d.has_no_terms() {
        if d.is_exact() || tries == DENOM_RETRIES {
            return Err(QError::DivisionByZero(match d.prec() {
                None => format!("{den} is exactly zero"),
                Some(p) => format!("{den} vanishes below q^{p}"),
            }));
        }
        probe = &probe + &step;
        d = den.eval(&probe)?;
        tries += 1;
    }
    let b = d.valuation().unwrap();
    let n = num.eval(&(order + &b))?;
    if n.is_exact_zero() {
        return Ok(QSeries::zero());
    }
    let a = n.lowest().unwrap();
    let need = &(order + &(&b + &b)) - &a;
    if !covers(&d, &need) {
        d = den.eval(&need)?;
    }
    n.div_capped(&d, Some(order))
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn join(f: &mut fmt::Formatter<'_>, xs: &[Node], sep: &str) -> fmt::Result {
            write!(f, "(")?;
            for (i, x) in xs.iter().enumerate() {
                if i > 0 {
                    write!(f, "{sep}")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")
        }
        match &self.0.kind {
            Kind::Exact(s) if s.num_terms() <= 1 => write!(f, "{s}"),
            Kind::Exact(_) => write!(f, "<series>"),
            Kind::Leaf { label, .. } | Kind::Labeled(label, _) => write!(f, "{label}"),
            Kind::Sum(ts) => join(f, ts, " + "),
            Kind::Prod(ts) => join(f, ts, " * "),
            Kind::Quot(n, d) => write!(f, "({n} / {d})"),
            Kind::Neg(n) => write!(f, "-{n}"),
            Kind::Subst(n, b) => write!(f, "{n}|q={b}"),
        }
    }
}

impl fmt::Debug for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Neg for Node {
    type Output = Node;
    fn neg(self) -> Node {
        Node::new(Kind::Neg(self))
    }
}

impl Add for Node {
    type Output = Node;
    fn add(self, rhs: Node) -> Node {
        Node::sum(vec![self, rhs])
    }
}

impl Sub for Node {
    type Output = Node;
    fn sub(self, rhs: Node) -> Node {
        Node::sum(vec![self, -rhs])
    }
}

impl Mul for Node {
    type Output = Node;
    fn mul(self, rhs: Node) -> Node {
        Node::product(vec![self, rhs])
    }
}

impl Div for Node {
    type Output = Node;
    fn div(self, rhs: Node) -> Node {
        Node::quot(self, rhs)
    }
}

impl From<QSeries> for Node {
    fn from(s: QSeries) -> Node {
        Node::exact(s)
    }
}

impl From<QMonomial> for Node {
    fn from(m: QMonomial) -> Node {
        Node::mono(&m)
    }
}
