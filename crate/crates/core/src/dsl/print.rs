//! Printing in the surface syntax. The output parses back to the same tree.

use std::fmt;

use super::{Call, Expr, IdentityRecord};

const ADD: u8 = 1;
const MUL: u8 = 2;
const NEG: u8 = 3;
const POW: u8 = 4;
const ATOM: u8 = 5;

/// Binding strength of a monomial's printed form.
fn mono_prec(s: &str) -> u8 {
    if s.starts_with('-') {
        return NEG;
    }
    let mut depth = 0i32;
    for c in s.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '*' | '/' if depth == 0 => return MUL,
            _ => {}
        }
    }
    ATOM
}

fn prec(e: &Expr) -> u8 {
    match e {
        Expr::Mono(m) => mono_prec(&m.to_string()),
        Expr::Add(..) | Expr::Sub(..) => ADD,
        Expr::Mul(..) | Expr::Div(..) => MUL,
        Expr::Neg(_) => NEG,
        Expr::Pow(..) => POW,
        Expr::Call(_) => ATOM,
    }
}

fn operand(e: &Expr, min: u8) -> String {
    let s = e.to_string();
    if prec(e) < min {
        format!("({s})")
    } else {
        s
    }
}

/// Right operands bind strictly tighter, and a leading sign is bracketed.
fn right_operand(e: &Expr, op: u8) -> String {
    let s = operand(e, op + 1);
    if s.starts_with('-') {
        format!("({s})")
    } else {
        s
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bin = |f: &mut fmt::Formatter<'_>, a: &Expr, b: &Expr, op: &str, p: u8| {
            write!(f, "{}{op}{}", operand(a, p), right_operand(b, p))
        };
        match self {
            Expr::Mono(m) => write!(f, "{m}"),
            Expr::Add(a, b) => bin(f, a, b, " + ", ADD),
            Expr::Sub(a, b) => bin(f, a, b, " - ", ADD),
            Expr::Mul(a, b) => bin(f, a, b, "*", MUL),
            Expr::Div(a, b) => bin(f, a, b, "/", MUL),
            Expr::Neg(a) => write!(f, "-{}", operand(a, NEG)),
            Expr::Pow(a, k) if *k < 0 => write!(f, "{}^({k})", operand(a, ATOM)),
            Expr::Pow(a, k) => write!(f, "{}^{k}", operand(a, ATOM)),
            Expr::Call(c) => write!(f, "{c}"),
        }
    }
}

impl fmt::Display for Call {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Call::Theta { x, base } => write!(f, "j({x}; {base})"),
            Call::J { a, m } => write!(f, "J[{a},{m}]"),
            Call::JBar { a, m } => write!(f, "JB[{a},{m}]"),
            Call::Jm { m } => write!(f, "Jm[{m}]"),
            Call::M { x, base, z } => write!(f, "m({x}, {base}, {z})"),
            Call::G { x, base } => write!(f, "g({x}; {base})"),
            Call::H { x, base } => write!(f, "h({x}; {base})"),
            Call::K { x, base } => write!(f, "k({x}; {base})"),
            Call::Poch { x, base, len: None } => write!(f, "poch({x}; {base}; inf)"),
            Call::Poch {
                x,
                base,
                len: Some(n),
            } => write!(f, "poch({x}; {base}; {n})"),
            Call::F {
                abc: [a, b, c],
                x,
                y,
                base,
            } => write!(f, "f[{a},{b},{c}]({x}, {y}; {base})"),
            Call::Gabc {
                abc: [a, b, c],
                x,
                y,
                base,
                z1,
                z0,
            } => {
                write!(f, "gabc[{a},{b},{c}]({x}, {y}; {base}; {z1}, {z0})")
            }
            Call::Habc {
                abc: [a, b, c],
                x,
                y,
                base,
                z1,
                z0,
            } => {
                write!(f, "habc[{a},{b},{c}]({x}, {y}; {base}; {z1}, {z0})")
            }
            Call::ThetaNp { n, p, x, y, base } => write!(f, "thetanp[{n},{p}]({x}, {y}; {base})"),
            Call::ThetaAbc {
                abc: [a, b, c],
                x,
                y,
                base,
            } => write!(f, "thetaabc[{a},{b},{c}]({x}, {y}; {base})"),
            Call::BigTheta { n, p, x, y, base } => write!(f, "bigtheta[{n},{p}]({x}, {y}; {base})"),
            Call::StrFn { level, m, l } => write!(f, "strfn[{level},{m},{l}]"),
            Call::Catalog { name, repr: None } => write!(f, "catalog(\"{name}\")"),
            Call::Catalog {
                name,
                repr: Some(i),
            } => write!(f, "catalog(\"{name}\").repr[{i}]"),
            Call::Subst { inner, base } => write!(f, "subst({inner}; {base})"),
        }
    }
}

impl fmt::Display for IdentityRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "identity {}", self.name)?;
        if let Some(o) = self.order {
            write!(f, " order {o}")?;
        }
        if !self.tags.is_empty() {
            let tags: Vec<&str> = self.tags.iter().map(String::as_str).collect();
            write!(f, " tags({})", tags.join(", "))?;
        }
        writeln!(f, " {{")?;
        writeln!(f, "    lhs = {};", self.lhs)?;
        writeln!(f, "    rhs = {};", self.rhs)?;
        write!(f, "}}")
    }
}
