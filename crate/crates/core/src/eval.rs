//! Turning expressions into lazy series.

use crate::appell::{h_node, k_node, m_node};
use crate::arith::BigRat;
use crate::catalog;
use crate::dsl::{Call, Expr};
use crate::error::{QError, QResult};
use crate::euler::g_node;
use crate::hecke::{
    big_theta_node, f_node, g_abc_node, h_abc_node, string_function_node, theta_abc_node,
    theta_np_node, HeckeParams,
};
use crate::lazy::Node;
use crate::series::QSeries;
use crate::theta::{j_node, jbar, jm, poch_fin_node, poch_inf_node, J};

/// Builds the lazy series for `e`. Every call node is labelled with its
/// source text, so evaluation errors carry the path to the failing call.
pub fn to_node(e: &Expr) -> QResult<Node> {
    Ok(match e {
        Expr::Mono(m) => Node::mono(m),
        Expr::Add(a, b) => to_node(a)? + to_node(b)?,
        Expr::Sub(a, b) => to_node(a)? - to_node(b)?,
        Expr::Mul(a, b) => to_node(a)? * to_node(b)?,
        Expr::Div(a, b) => to_node(a)? / to_node(b)?,
        Expr::Neg(a) => -to_node(a)?,
        Expr::Pow(a, k) => to_node(a)?.pow(*k),
        Expr::Call(c) => call_node(c)
            .map_err(|err| err.context(c.to_string()))?
            .labeled(c.to_string()),
    })
}

fn call_node(c: &Call) -> QResult<Node> {
    Ok(match c {
        Call::Theta { x, base } => j_node(x, base),
        Call::J { a, m } => J(*a, *m),
        Call::JBar { a, m } => jbar(*a, *m),
        Call::Jm { m } => jm(*m),
        Call::M { x, base, z } => m_node(x, base, z)?,
        Call::G { x, base } => {
            if x.is_zero() || base.is_zero() {
                return Err(QError::InvalidParameter("g needs nonzero arguments".into()));
            }
            g_node(x, base)
        }
        Call::H { x, base } => h_node(x, base)?,
        Call::K { x, base } => k_node(x, base)?,
        Call::Poch { x, base, len: None } => poch_inf_node(x, base),
        Call::Poch {
            x,
            base,
            len: Some(n),
        } => poch_fin_node(x, base, *n),
        Call::F {
            abc: [a, b, c],
            x,
            y,
            base,
        } => f_node(HeckeParams::new(
            *a,
            *b,
            *c,
            x.clone(),
            y.clone(),
            base.clone(),
        ))?,
        Call::Gabc {
            abc: [a, b, c],
            x,
            y,
            base,
            z1,
            z0,
        } => g_abc_node(*a, *b, *c, x, y, base, z1, z0)?,
        Call::Habc {
            abc: [a, b, c],
            x,
            y,
            base,
            z1,
            z0,
        } => h_abc_node(*a, *b, *c, x, y, base, z1, z0)?,
        Call::ThetaNp { n, p, x, y, base } => theta_np_node(*n, *p, x, y, base)?,
        Call::ThetaAbc {
            abc: [a, b, c],
            x,
            y,
            base,
        } => theta_abc_node(*a, *b, *c, x, y, base)?,
        Call::BigTheta { n, p, x, y, base } => big_theta_node(*n, *p, x, y, base)?,
        Call::StrFn { level, m, l } => string_function_node(*level, *m, *l)?,
        Call::Catalog { name, repr: None } => catalog::lookup(name)?.eulerian_node(),
        Call::Catalog {
            name,
            repr: Some(i),
        } => catalog::lookup(name)?.representation_node(*i)?,
        Call::Subst { inner, base } => to_node(inner)?.subst(base.clone()),
    })
}

/// Evaluates `e` below `q^order`.
pub fn eval_expr(e: &Expr, order: &BigRat) -> QResult<QSeries> {
    to_node(e)?.eval(order)
}
