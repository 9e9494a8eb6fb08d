//! The identity language.
//!
//! ```text
//! # comment
//! identity f551_product order 300 tags(hecke) {
//!     lhs = f[5,5,1](q^5, q^2; q);
//!     rhs = Jm[2]*Jm[10];
//! }
//! ```
//!
//! Constant and monomial subexpressions are folded while parsing, so every
//! argument slot that wants a monomial can be written as any expression that
//! reduces to one, e.g. `zeta(1,4)*q^(1/2)` or `-q^3/2`.

mod lexer;
mod parser;
mod print;

use std::collections::BTreeSet;

use crate::monomial::QMonomial;

pub use parser::{parse_expr, parse_identities};

#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum Expr {
    /// Any folded constant, root of unity or monomial.
    Mono(QMonomial),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, i64),
    Call(Call),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Call {
    /// `j(x; base)`
    Theta {
        x: QMonomial,
        base: QMonomial,
    },
    /// `J[a,m]`
    J {
        a: i64,
        m: i64,
    },
    /// `JB[a,m]`
    JBar {
        a: i64,
        m: i64,
    },
    /// `Jm[m]`
    Jm {
        m: i64,
    },
    /// `m(x, base, z)`
    M {
        x: QMonomial,
        base: QMonomial,
        z: QMonomial,
    },
    G {
        x: QMonomial,
        base: QMonomial,
    },
    H {
        x: QMonomial,
        base: QMonomial,
    },
    K {
        x: QMonomial,
        base: QMonomial,
    },
    /// `poch(x; base; n)`; `None` is the infinite product.
    Poch {
        x: QMonomial,
        base: QMonomial,
        len: Option<u64>,
    },
    F {
        abc: [i64; 3],
        x: QMonomial,
        y: QMonomial,
        base: QMonomial,
    },
    Gabc {
        abc: [i64; 3],
        x: QMonomial,
        y: QMonomial,
        base: QMonomial,
        z1: QMonomial,
        z0: QMonomial,
    },
    Habc {
        abc: [i64; 3],
        x: QMonomial,
        y: QMonomial,
        base: QMonomial,
        z1: QMonomial,
        z0: QMonomial,
    },
    ThetaNp {
        n: i64,
        p: i64,
        x: QMonomial,
        y: QMonomial,
        base: QMonomial,
    },
    ThetaAbc {
        abc: [i64; 3],
        x: QMonomial,
        y: QMonomial,
        base: QMonomial,
    },
    BigTheta {
        n: i64,
        p: i64,
        x: QMonomial,
        y: QMonomial,
        base: QMonomial,
    },
    StrFn {
        level: i64,
        m: i64,
        l: i64,
    },
    /// `catalog("name")` or `catalog("name").repr[i]`.
    Catalog {
        name: String,
        repr: Option<usize>,
    },
    /// `subst(e; base)`: replace `q` by `base` in `e`.
    Subst {
        inner: Box<Expr>,
        base: QMonomial,
    },
}

/// One `identity` block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityRecord {
    pub name: String,
    pub order: Option<u32>,
    pub tags: BTreeSet<String>,
    pub lhs: Expr,
    pub rhs: Expr,
}

impl IdentityRecord {
    pub fn new(name: impl Into<String>, lhs: Expr, rhs: Expr) -> Self {
        IdentityRecord {
            name: name.into(),
            order: None,
            tags: BTreeSet::new(),
            lhs,
            rhs,
        }
    }

    pub fn with_order(mut self, order: u32) -> Self {
        self.order = Some(order);
        self
    }

    pub fn tagged(mut self, tag: &str) -> Self {
        self.tags.insert(tag.to_string());
        self
    }
}

impl Expr {
    pub fn int(n: i64) -> Expr {
        Expr::Mono(QMonomial::ci(n, 0))
    }

    pub fn catalog(name: &str, repr: Option<usize>) -> Expr {
        Expr::Call(Call::Catalog {
            name: name.to_string(),
            repr,
        })
    }
}
