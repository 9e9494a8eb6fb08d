use std::collections::{BTreeSet, HashSet};

use super::lexer::{err, tokenize, Tok, Token};
use super::{Call, Expr, IdentityRecord};
use crate::arith::{BigRat, CycRat};
use crate::error::QResult;
use crate::monomial::QMonomial;

/// Parses a file of `identity` blocks.
pub fn parse_identities(src: &str) -> QResult<Vec<IdentityRecord>> {
    let mut p = Parser::new(src)?;
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    while !p.at_eof() {
        let (line, col) = p.pos();
        let rec = p.identity()?;
        if !seen.insert(rec.name.clone()) {
            return Err(err(
                line,
                col,
                format!("duplicate identity name `{}`", rec.name),
            ));
        }
        out.push(rec);
    }
    Ok(out)
}

/// Parses a single expression.
pub fn parse_expr(src: &str) -> QResult<Expr> {
    let mut p = Parser::new(src)?;
    let e = p.expr()?;
    if !p.at_eof() {
        let t = p.peek();
        return Err(err(
            t.line,
            t.col,
            format!("unexpected {} after expression", describe(&t.tok)),
        ));
    }
    Ok(e)
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Int(n) => format!("`{n}`"),
        Tok::Str(s) => format!("\"{s}\""),
        Tok::Punct(c) => format!("`{c}`"),
        Tok::Eof => "end of input".into(),
    }
}

struct Arg {
    expr: Option<Expr>,
    line: usize,
    col: usize,
}

struct Parser {
    toks: Vec<Token>,
    at: usize,
}

impl Parser {
    fn new(src: &str) -> QResult<Parser> {
        Ok(Parser {
            toks: tokenize(src)?,
            at: 0,
        })
    }

    fn peek(&self) -> &Token {
        &self.toks[self.at]
    }

    fn pos(&self) -> (usize, usize) {
        let t = self.peek();
        (t.line, t.col)
    }

    fn at_eof(&self) -> bool {
        self.peek().tok == Tok::Eof
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if t.tok != Tok::Eof {
            self.at += 1;
        }
        t
    }

    fn is_punct(&self, c: char) -> bool {
        self.peek().tok == Tok::Punct(c)
    }

    fn eat_punct(&mut self, c: char) -> bool {
        let hit = self.is_punct(c);
        if hit {
            self.bump();
        }
        hit
    }

    fn is_ident(&self, s: &str) -> bool {
        matches!(&self.peek().tok, Tok::Ident(x) if x == s)
    }

    fn fail<T>(&self, msg: impl Into<String>) -> QResult<T> {
        let (l, c) = self.pos();
        Err(err(l, c, msg))
    }

    fn expect_punct(&mut self, c: char) -> QResult<()> {
        if self.eat_punct(c) {
            Ok(())
        } else {
            self.fail(format!(
                "expected `{c}`, found {}",
                describe(&self.peek().tok)
            ))
        }
    }

    fn expect_keyword(&mut self, s: &str) -> QResult<()> {
        if self.is_ident(s) {
            self.bump();
            Ok(())
        } else {
            self.fail(format!(
                "expected `{s}`, found {}",
                describe(&self.peek().tok)
            ))
        }
    }

    fn ident(&mut self) -> QResult<String> {
        match self.peek().tok.clone() {
            Tok::Ident(s) => {
                self.bump();
                Ok(s)
            }
            t => self.fail(format!("expected a name, found {}", describe(&t))),
        }
    }

    fn uint(&mut self) -> QResult<u64> {
        match self.peek().tok {
            Tok::Int(n) => {
                self.bump();
                Ok(n)
            }
            ref t => self.fail(format!("expected an integer, found {}", describe(t))),
        }
    }

    fn sint(&mut self) -> QResult<i64> {
        let neg = self.eat_punct('-');
        let (l, c) = self.pos();
        let n = i64::try_from(self.uint()?).map_err(|_| err(l, c, "integer out of range"))?;
        Ok(if neg { -n } else { n })
    }

    fn identity(&mut self) -> QResult<IdentityRecord> {
        self.expect_keyword("identity")?;
        let name = self.ident()?;
        let mut order = None;
        let mut tags = BTreeSet::new();
        if self.is_ident("order") {
            self.bump();
            let (l, c) = self.pos();
            let n = self.uint()?;
            order = Some(
                u32::try_from(n)
                    .ok()
                    .filter(|&n| n > 0)
                    .ok_or_else(|| err(l, c, "order must be a positive integer"))?,
            );
        }
        if self.is_ident("tags") {
            self.bump();
            self.expect_punct('(')?;
            if !self.is_punct(')') {
                loop {
                    tags.insert(self.ident()?);
                    if !self.eat_punct(',') {
                        break;
                    }
                }
            }
            self.expect_punct(')')?;
        }
        self.expect_punct('{')?;
        self.expect_keyword("lhs")?;
        self.expect_punct('=')?;
        let lhs = self.expr()?;
        self.expect_punct(';')?;
        self.expect_keyword("rhs")?;
        self.expect_punct('=')?;
        let rhs = self.expr()?;
        self.eat_punct(';');
        self.expect_punct('}')?;
        Ok(IdentityRecord {
            name,
            order,
            tags,
            lhs,
            rhs,
        })
    }

    fn expr(&mut self) -> QResult<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat_punct('+') {
                lhs = fold_add(lhs, self.term()?, false);
            } else if self.eat_punct('-') {
                lhs = fold_add(lhs, self.term()?, true);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> QResult<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat_punct('*') {
                lhs = match (lhs, self.unary()?) {
                    (Expr::Mono(a), Expr::Mono(b)) => Expr::Mono(a.mul(&b)),
                    (a, b) => Expr::Mul(Box::new(a), Box::new(b)),
                };
            } else if self.is_punct('/') {
                let (l, c) = self.pos();
                self.bump();
                lhs = match (lhs, self.unary()?) {
                    (_, Expr::Mono(b)) if b.is_zero() => return Err(err(l, c, "division by zero")),
                    (Expr::Mono(a), Expr::Mono(b)) => Expr::Mono(a.div(&b)?),
                    (a, b) => Expr::Div(Box::new(a), Box::new(b)),
                };
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> QResult<Expr> {
        if self.eat_punct('-') {
            return Ok(match self.unary()? {
                Expr::Mono(m) => Expr::Mono(m.neg()),
                e => Expr::Neg(Box::new(e)),
            });
        }
        self.power()
    }

    fn power(&mut self) -> QResult<Expr> {
        let base = self.atom()?;
        if !self.is_punct('^') {
            return Ok(base);
        }
        let (l, c) = self.pos();
        self.bump();
        let e = self.exponent()?;
        match (base, e.to_i64()) {
            (Expr::Mono(m), _) => {
                if m.is_zero() && !e.is_positive() {
                    return Err(err(l, c, "non-positive power of zero"));
                }
                m.pow_rat(&e)
                    .map(Expr::Mono)
                    .map_err(|x| err(l, c, x.to_string()))
            }
            (b, Some(k)) => Ok(Expr::Pow(Box::new(b), k)),
            (_, None) => Err(err(l, c, "fractional powers apply only to monomials")),
        }
    }

    /// `INT`, `-INT` or `(p/q)` with optional sign.
    fn exponent(&mut self) -> QResult<BigRat> {
        if self.eat_punct('(') {
            let p = self.sint()?;
            let q = if self.eat_punct('/') {
                let (l, c) = self.pos();
                let q = self.uint()?;
                if q == 0 {
                    return Err(err(l, c, "zero denominator"));
                }
                i64::try_from(q).map_err(|_| err(l, c, "integer out of range"))?
            } else {
                1
            };
            self.expect_punct(')')?;
            Ok(BigRat::new(p, q))
        } else {
            Ok(BigRat::from_int(self.sint()?))
        }
    }

    fn atom(&mut self) -> QResult<Expr> {
        let tok = self.peek().clone();
        match tok.tok {
            Tok::Int(n) => {
                self.bump();
                let n =
                    i64::try_from(n).map_err(|_| err(tok.line, tok.col, "integer out of range"))?;
                Ok(Expr::int(n))
            }
            Tok::Punct('(') => {
                self.bump();
                let e = self.expr()?;
                self.expect_punct(')')?;
                Ok(e)
            }
            Tok::Ident(name) => {
                self.bump();
                self.named(&name, tok.line, tok.col)
            }
            t => self.fail(format!("expected an expression, found {}", describe(&t))),
        }
    }

    fn named(&mut self, name: &str, line: usize, col: usize) -> QResult<Expr> {
        let call = match name {
            "q" => return Ok(Expr::Mono(QMonomial::qi(1))),
            "zeta" => {
                self.expect_punct('(')?;
                let k = self.sint()?;
                self.expect_punct(',')?;
                let (l, c) = self.pos();
                let n = u32::try_from(self.uint()?).ok().filter(|&n| n > 0);
                let n =
                    n.ok_or_else(|| err(l, c, "root of unity order must be a positive integer"))?;
                self.expect_punct(')')?;
                return Ok(Expr::Mono(QMonomial::constant(CycRat::zeta(k, n))));
            }
            "j" => {
                let [x, base] = self.monos(name, line, col)?;
                Call::Theta { x, base }
            }
            "J" | "JB" => {
                let [a, m] = self.params(name, line, col)?;
                positive(m, "m", line, col)?;
                if name == "J" {
                    Call::J { a, m }
                } else {
                    Call::JBar { a, m }
                }
            }
            "Jm" => {
                let [m] = self.params(name, line, col)?;
                positive(m, "m", line, col)?;
                Call::Jm { m }
            }
            "m" => {
                let [x, base, z] = self.monos(name, line, col)?;
                Call::M { x, base, z }
            }
            "g" => {
                let [x, base] = self.monos(name, line, col)?;
                Call::G { x, base }
            }
            "h" => {
                let [x, base] = self.monos(name, line, col)?;
                Call::H { x, base }
            }
            "k" => {
                let [x, base] = self.monos(name, line, col)?;
                Call::K { x, base }
            }
            "poch" => {
                let args = self.args(name, 3, line, col)?;
                let x = mono_arg(&args[0])?;
                let base = mono_arg(&args[1])?;
                let len = match &args[2].expr {
                    None => None,
                    Some(Expr::Mono(m))
                        if m.expo.is_zero()
                            && m.coeff
                                .as_rational()
                                .is_some_and(|r| r.is_integer() && !r.is_negative()) =>
                    {
                        Some(m.coeff.as_rational().unwrap().to_i64().unwrap() as u64)
                    }
                    Some(_) => {
                        return Err(err(
                            args[2].line,
                            args[2].col,
                            "poch length must be a non-negative integer or `inf`",
                        ))
                    }
                };
                Call::Poch { x, base, len }
            }
            "f" => {
                let abc = self.params(name, line, col)?;
                let [x, y, base] = self.monos(name, line, col)?;
                Call::F { abc, x, y, base }
            }
            "gabc" | "habc" => {
                let abc = self.params(name, line, col)?;
                let [x, y, base, z1, z0] = self.monos(name, line, col)?;
                if name == "gabc" {
                    Call::Gabc {
                        abc,
                        x,
                        y,
                        base,
                        z1,
                        z0,
                    }
                } else {
                    Call::Habc {
                        abc,
                        x,
                        y,
                        base,
                        z1,
                        z0,
                    }
                }
            }
            "thetanp" | "bigtheta" => {
                let [n, p] = self.params(name, line, col)?;
                let [x, y, base] = self.monos(name, line, col)?;
                if name == "thetanp" {
                    Call::ThetaNp { n, p, x, y, base }
                } else {
                    Call::BigTheta { n, p, x, y, base }
                }
            }
            "thetaabc" => {
                let abc = self.params(name, line, col)?;
                let [x, y, base] = self.monos(name, line, col)?;
                Call::ThetaAbc { abc, x, y, base }
            }
            "strfn" => {
                let [level, m, l] = self.params(name, line, col)?;
                positive(level, "N", line, col)?;
                Call::StrFn { level, m, l }
            }
            "catalog" => {
                self.expect_punct('(')?;
                let name = match self.peek().tok.clone() {
                    Tok::Str(s) => {
                        self.bump();
                        s
                    }
                    t => {
                        return self.fail(format!(
                            "expected a quoted catalog name, found {}",
                            describe(&t)
                        ))
                    }
                };
                self.expect_punct(')')?;
                let repr = if self.eat_punct('.') {
                    self.expect_keyword("repr")?;
                    self.expect_punct('[')?;
                    let (l, c) = self.pos();
                    let i = usize::try_from(self.uint()?)
                        .map_err(|_| err(l, c, "index out of range"))?;
                    self.expect_punct(']')?;
                    Some(i)
                } else {
                    None
                };
                Call::Catalog { name, repr }
            }
            "subst" => {
                let mut args = self.args(name, 2, line, col)?;
                let base = mono_arg(&args[1])?;
                if !base.expo.is_positive() {
                    return Err(err(
                        args[1].line,
                        args[1].col,
                        "substituted base needs a positive exponent",
                    ));
                }
                let a = args.swap_remove(0);
                let inner = a
                    .expr
                    .ok_or_else(|| err(a.line, a.col, "expected an expression"))?;
                Call::Subst {
                    inner: Box::new(inner),
                    base,
                }
            }
            _ => return Err(err(line, col, format!("unknown name `{name}`"))),
        };
        Ok(Expr::Call(call))
    }

    /// `[p1, …, pN]` with exactly `N` signed integers.
    fn params<const N: usize>(&mut self, name: &str, line: usize, col: usize) -> QResult<[i64; N]> {
        if !self.is_punct('[') {
            return self.fail(format!("`{name}` needs {N} integer parameters in brackets"));
        }
        self.bump();
        let mut out = Vec::new();
        if !self.is_punct(']') {
            loop {
                out.push(self.sint()?);
                if !self.eat_punct(',') {
                    break;
                }
            }
        }
        self.expect_punct(']')?;
        out.try_into().map_err(|v: Vec<i64>| {
            err(
                line,
                col,
                format!("`{name}` takes {N} integer parameters, found {}", v.len()),
            )
        })
    }

    /// Parenthesized arguments separated by `,` or `;`.
    fn args(&mut self, name: &str, n: usize, line: usize, col: usize) -> QResult<Vec<Arg>> {
        self.expect_punct('(')?;
        let mut out = Vec::new();
        if !self.is_punct(')') {
            loop {
                let (l, c) = self.pos();
                let inf = self.is_ident("inf")
                    && matches!(
                        self.toks.get(self.at + 1).map(|t| &t.tok),
                        Some(Tok::Punct(')' | ',' | ';'))
                    );
                let expr = if inf {
                    self.bump();
                    None
                } else {
                    Some(self.expr()?)
                };
                out.push(Arg {
                    expr,
                    line: l,
                    col: c,
                });
                if !(self.eat_punct(',') || self.eat_punct(';')) {
                    break;
                }
            }
        }
        self.expect_punct(')')?;
        if out.len() != n {
            return Err(err(
                line,
                col,
                format!("`{name}` takes {n} arguments, found {}", out.len()),
            ));
        }
        Ok(out)
    }

    fn monos<const N: usize>(
        &mut self,
        name: &str,
        line: usize,
        col: usize,
    ) -> QResult<[QMonomial; N]> {
        let args = self.args(name, N, line, col)?;
        let v = args.iter().map(mono_arg).collect::<QResult<Vec<_>>>()?;
        Ok(v.try_into().unwrap())
    }
}

fn positive(v: i64, what: &str, line: usize, col: usize) -> QResult<()> {
    if v < 1 {
        return Err(err(line, col, format!("{what} must be positive")));
    }
    Ok(())
}

fn mono_arg(a: &Arg) -> QResult<QMonomial> {
    match &a.expr {
        Some(Expr::Mono(m)) => Ok(m.clone()),
        Some(_) => Err(err(
            a.line,
            a.col,
            "argument must reduce to a single monomial c*q^e",
        )),
        None => Err(err(a.line, a.col, "`inf` is only allowed as a poch length")),
    }
}

/// `a ± b`, merging like monomials.
fn fold_add(a: Expr, b: Expr, sub: bool) -> Expr {
    match (a, b) {
        (Expr::Mono(x), Expr::Mono(y)) if x.is_zero() || y.is_zero() || x.expo == y.expo => {
            let y = if sub { y.neg() } else { y };
            if x.is_zero() {
                Expr::Mono(y)
            } else if y.is_zero() {
                Expr::Mono(x)
            } else {
                Expr::Mono(QMonomial::new(&x.coeff + &y.coeff, x.expo.clone()))
            }
        }
        (a, b) if sub => Expr::Sub(Box::new(a), Box::new(b)),
        (a, b) => Expr::Add(Box::new(a), Box::new(b)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::QError;

    fn mono(s: &str) -> QMonomial {
        match parse_expr(s).unwrap() {
            Expr::Mono(m) => m,
            e => panic!("{s} did not fold: {e:?}"),
        }
    }

    fn parse_err(s: &str) -> (usize, usize, String) {
        let r = if s.starts_with("identity") {
            parse_identities(s).map(|_| ())
        } else {
            parse_expr(s).map(|_| ())
        };
        match r {
            Err(QError::Parse { line, col, msg }) => (line, col, msg),
            other => panic!("{s}: expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn folds_monomials() {
        assert_eq!(mono("q^(1/2)"), QMonomial::q(BigRat::new(1, 2)));
        assert_eq!(mono("-q^2"), QMonomial::ci(-1, 2));
        assert_eq!(mono("(-q)^2"), QMonomial::ci(1, 2));
        assert_eq!(mono("3*q/q^4"), QMonomial::ci(3, -3));
        assert_eq!(
            mono("-1/2*q"),
            QMonomial::new(CycRat::from_rat(BigRat::new(-1, 2)), BigRat::one())
        );
        let i = CycRat::zeta(1, 4);
        assert_eq!(
            mono("zeta(1,4)*q^(1/2)"),
            QMonomial::new(i.clone(), BigRat::new(1, 2))
        );
        assert_eq!(
            mono("(-q)^(1/2)"),
            QMonomial::new(i.clone(), BigRat::new(1, 2))
        );
        assert_eq!(
            mono("1 - zeta(1,4)"),
            QMonomial::constant(&CycRat::one() - &i)
        );
        assert_eq!(mono("q^-2"), QMonomial::qi(-2));
        assert_eq!(mono("q - q"), QMonomial::zero());
    }

    #[test]
    fn calls() {
        let e = parse_expr("f[5,5,1](q^5, q^2; q)").unwrap();
        let want = Call::F {
            abc: [5, 5, 1],
            x: QMonomial::qi(5),
            y: QMonomial::qi(2),
            base: QMonomial::qi(1),
        };
        assert_eq!(e, Expr::Call(want));
        let e = parse_expr("poch(-q; q^2; inf)^2").unwrap();
        assert!(matches!(e, Expr::Pow(_, 2)));
        let e = parse_expr("catalog(\"phi_6th\").repr[0]").unwrap();
        assert_eq!(e, Expr::catalog("phi_6th", Some(0)));
        assert!(matches!(parse_expr("1 + q").unwrap(), Expr::Add(..)));
    }

    #[test]
    fn identity_blocks() {
        let src = "
            # a product identity
            identity f551_product { lhs = f[5,5,1](q^5, q^2; q); rhs = Jm[2]*Jm[10]; }
            identity half order 40 tags(appell, small) {
                lhs = 2*m(q, q^2, -1);
                rhs = 1;
            }";
        let recs = parse_identities(src).unwrap();
        assert_eq!(recs.len(), 2);
        assert_eq!(recs[0].name, "f551_product");
        assert_eq!(recs[1].order, Some(40));
        assert!(recs[1].tags.contains("small"));
        assert_eq!(recs[1].rhs, Expr::int(1));
    }

    #[test]
    fn diagnostics() {
        let (l, c, msg) = parse_err("f[5,5](q)");
        assert_eq!((l, c), (1, 1));
        assert!(msg.contains("3 integer parameters"), "{msg}");
        let (_, c, msg) = parse_err("m(q, q^2)");
        assert_eq!(c, 1);
        assert!(msg.contains("3 arguments"), "{msg}");
        let (_, c, _) = parse_err("j(1 + q; q)");
        assert_eq!(c, 3);
        let (_, c, _) = parse_err("Jm[1]^(1/2)");
        assert_eq!(c, 6);
        let (l, c, _) = parse_err("identity a { lhs = 1;\n rhs = 1 + ; }");
        assert_eq!((l, c), (2, 12));
        let (_, _, msg) =
            parse_err("identity a { lhs = 1; rhs = 1; } identity a { lhs = 1; rhs = 1; }");
        assert!(msg.contains("duplicate"));
        let (_, _, msg) = parse_err("frobnicate(q)");
        assert!(msg.contains("unknown name"));
        let (_, _, msg) = parse_err("1/(q - q)");
        assert!(msg.contains("division by zero"));
    }
}
