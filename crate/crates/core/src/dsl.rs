//! A small expression language for classes in ℤ[𝕃].
//!
//! ```text
//! expr := cmp
//! cmp  := sum ("==" sum)?
//! sum  := prod (("+" | "-") prod)*
//! prod := atom (("*" | "div") atom)*
//! atom := INT | "L" | ctor "(" args ")" | "(" expr ")"
//! ```
//!
//! Constructors: `P(n)`, `Gr(2,n)`, `H(2,n)`, `F1(n)`, `F2(n)`, `SumEven(n)`.

use std::fmt;

use num_bigint::BigInt;

use crate::pairs::fiber_classes;
use crate::ring::{projective_class, LPoly};
use crate::schubert::{grassmannian_class, hyperplane_section_class, sum_even, ClassMethod};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ctor {
    Projective,
    Grassmannian,
    HyperplaneSection,
    SmoothFibre,
    SingularFibre,
    SumEven,
}

impl Ctor {
    fn from_name(name: &str) -> Option<Ctor> {
        Some(match name {
            "P" => Ctor::Projective,
            "Gr" => Ctor::Grassmannian,
            "H" => Ctor::HyperplaneSection,
            "F1" => Ctor::SmoothFibre,
            "F2" => Ctor::SingularFibre,
            "SumEven" => Ctor::SumEven,
            _ => return None,
        })
    }

    fn arity(self) -> usize {
        match self {
            Ctor::Grassmannian | Ctor::HyperplaneSection => 2,
            _ => 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprKind {
    Int(BigInt),
    Lefschetz,
    Ctor(Ctor, Vec<u32>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Equals(Box<Expr>, Box<Expr>),
}

/// A parsed expression with the byte range it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Class(LPoly),
    Bool(bool),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Class(c) => write!(f, "{c}"),
            Value::Bool(b) => write!(f, "{b}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    LParen,
    RParen,
    Comma,
    Plus,
    Minus,
    Star,
    EqEq,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(v) => write!(f, "integer {v}"),
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Star => f.write_str("`*`"),
            Tok::EqEq => f.write_str("`==`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

struct Token {
    tok: Tok,
    start: usize,
    end: usize,
}

/// 1-based line and column of a byte offset.
fn position(src: &str, offset: usize) -> (usize, usize) {
    let before = &src[..offset.min(src.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

fn parse_error(src: &str, offset: usize, message: String) -> Error {
    let (line, column) = position(src, offset);
    Error::Parse {
        line,
        column,
        message,
    }
}

fn lex(src: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = src.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        let single = match c {
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ',' => Some(Tok::Comma),
            '+' => Some(Tok::Plus),
            '-' | '−' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            _ => None,
        };
        if let Some(tok) = single {
            chars.next();
            out.push(Token {
                tok,
                start: i,
                end: i + c.len_utf8(),
            });
            continue;
        }
        if c == '=' {
            chars.next();
            match chars.peek() {
                Some(&(_, '=')) => {
                    chars.next();
                    out.push(Token {
                        tok: Tok::EqEq,
                        start: i,
                        end: i + 2,
                    });
                    continue;
                }
                _ => return Err(parse_error(src, i, "expected `==`".into())),
            }
        }
        if c.is_ascii_digit() || c.is_alphabetic() || c == '_' {
            let digits = c.is_ascii_digit();
            let mut end = i;
            while let Some(&(j, d)) = chars.peek() {
                let more = if digits {
                    d.is_ascii_digit()
                } else {
                    d.is_alphanumeric() || d == '_'
                };
                if !more {
                    break;
                }
                end = j + d.len_utf8();
                chars.next();
            }
            let text = &src[i..end];
            let tok = if digits {
                Tok::Int(text.parse().expect("digits parse"))
            } else {
                Tok::Ident(text.to_string())
            };
            out.push(Token { tok, start: i, end });
            continue;
        }
        return Err(parse_error(src, i, format!("unexpected character `{c}`")));
    }
    out.push(Token {
        tok: Tok::Eof,
        start: src.len(),
        end: src.len(),
    });
    Ok(out)
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<Token>,
    at: usize,
}

impl Parser<'_> {
    fn peek(&self) -> &Token {
        &self.toks[self.at]
    }

    fn bump(&mut self) -> &Token {
        let t = &self.toks[self.at];
        if t.tok != Tok::Eof {
            self.at += 1;
        }
        t
    }

    fn error_here(&self, expected: &str) -> Error {
        let t = self.peek();
        parse_error(self.src, t.start, format!("expected {expected}, found {}", t.tok))
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<usize> {
        if self.peek().tok == tok {
            Ok(self.bump().end)
        } else {
            Err(self.error_here(what))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let lhs = self.sum()?;
        if self.peek().tok == Tok::EqEq {
            self.bump();
            let rhs = self.sum()?;
            let span = (lhs.span.0, rhs.span.1);
            return Ok(Expr {
                kind: ExprKind::Equals(Box::new(lhs), Box::new(rhs)),
                span,
            });
        }
        Ok(lhs)
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut lhs = self.prod()?;
        loop {
            let op = match self.peek().tok {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.prod()?;
            lhs = binary(op, lhs, rhs);
        }
    }

    fn prod(&mut self) -> Result<Expr> {
        let mut lhs = self.atom()?;
        loop {
            let op = match &self.peek().tok {
                Tok::Star => BinOp::Mul,
                Tok::Ident(s) if s == "div" => BinOp::Div,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.atom()?;
            lhs = binary(op, lhs, rhs);
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        let (tok, start, end) = {
            let t = self.peek();
            (t.tok.clone(), t.start, t.end)
        };
        match tok {
            Tok::Int(v) => {
                self.bump();
                Ok(Expr {
                    kind: ExprKind::Int(v),
                    span: (start, end),
                })
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                let close = self.expect(Tok::RParen, "`)`")?;
                Ok(Expr {
                    kind: inner.kind,
                    span: (start, close),
                })
            }
            Tok::Ident(name) if name == "L" => {
                self.bump();
                Ok(Expr {
                    kind: ExprKind::Lefschetz,
                    span: (start, end),
                })
            }
            Tok::Ident(name) => {
                let Some(ctor) = Ctor::from_name(&name) else {
                    return Err(parse_error(
                        self.src,
                        start,
                        format!("unknown name `{name}`"),
                    ));
                };
                self.bump();
                self.expect(Tok::LParen, "`(`")?;
                let mut args = Vec::new();
                loop {
                    let t = self.peek();
                    let arg_start = t.start;
                    match &t.tok {
                        Tok::Int(v) => {
                            let v = u32::try_from(v).map_err(|_| {
                                parse_error(self.src, arg_start, format!("argument {v} is too large"))
                            })?;
                            args.push((v, arg_start));
                            self.bump();
                        }
                        _ => return Err(self.error_here("an integer argument")),
                    }
                    if self.peek().tok == Tok::Comma {
                        self.bump();
                    } else {
                        break;
                    }
                }
                let close = self.expect(Tok::RParen, "`)` or `,`")?;
                if args.len() != ctor.arity() {
                    return Err(parse_error(
                        self.src,
                        start,
                        format!(
                            "`{name}` takes {} argument(s), got {}",
                            ctor.arity(),
                            args.len()
                        ),
                    ));
                }
                if ctor.arity() == 2 && args[0].0 != 2 {
                    return Err(parse_error(
                        self.src,
                        args[0].1,
                        format!("only `{name}(2,n)` is supported"),
                    ));
                }
                Ok(Expr {
                    kind: ExprKind::Ctor(ctor, args.into_iter().map(|(v, _)| v).collect()),
                    span: (start, close),
                })
            }
            _ => Err(self.error_here("an integer, `L`, a constructor or `(`")),
        }
    }
}

fn binary(op: BinOp, lhs: Expr, rhs: Expr) -> Expr {
    let span = (lhs.span.0, rhs.span.1);
    Expr {
        kind: ExprKind::Binary(op, Box::new(lhs), Box::new(rhs)),
        span,
    }
}

pub fn parse(src: &str) -> Result<Expr> {
    let mut p = Parser {
        src,
        toks: lex(src)?,
        at: 0,
    };
    let e = p.expr()?;
    if p.peek().tok != Tok::Eof {
        return Err(p.error_here("an operator or end of input"));
    }
    Ok(e)
}

struct Evaluator<'a> {
    src: &'a str,
}

impl Evaluator<'_> {
    fn fail(&self, e: &Expr, message: String) -> Error {
        Error::Eval {
            expr: self.src[e.span.0..e.span.1].to_string(),
            message,
        }
    }

    fn class(&self, e: &Expr) -> Result<LPoly> {
        match self.eval(e)? {
            Value::Class(c) => Ok(c),
            Value::Bool(_) => Err(self.fail(e, "a comparison cannot be used as a class".into())),
        }
    }

    fn eval(&self, e: &Expr) -> Result<Value> {
        let class = match &e.kind {
            ExprKind::Int(v) => LPoly::constant(v.clone()),
            ExprKind::Lefschetz => LPoly::lefschetz(),
            ExprKind::Ctor(ctor, args) => self.construct(e, *ctor, args)?,
            ExprKind::Binary(op, l, r) => {
                let (a, b) = (self.class(l)?, self.class(r)?);
                match op {
                    BinOp::Add => &a + &b,
                    BinOp::Sub => &a - &b,
                    BinOp::Mul => &a * &b,
                    BinOp::Div => a.div_exact(&b).map_err(|err| self.fail(e, err.to_string()))?,
                }
            }
            ExprKind::Equals(l, r) => return Ok(Value::Bool(self.class(l)? == self.class(r)?)),
        };
        Ok(Value::Class(class))
    }

    fn construct(&self, e: &Expr, ctor: Ctor, args: &[u32]) -> Result<LPoly> {
        let n = *args.last().expect("arity checked by the parser");
        let out_of_range = |min: u32| self.fail(e, format!("argument {n} is below the minimum {min}"));
        match ctor {
            Ctor::Projective => Ok(projective_class(n as i64)),
            Ctor::SumEven if n < 2 => Err(out_of_range(2)),
            Ctor::SumEven => Ok(sum_even(n)),
            _ if n < 4 => Err(out_of_range(4)),
            Ctor::Grassmannian => grassmannian_class(n, ClassMethod::Cells),
            Ctor::HyperplaneSection => hyperplane_section_class(n),
            Ctor::SmoothFibre => Ok(fiber_classes(n)?.0),
            Ctor::SingularFibre => Ok(fiber_classes(n)?.1),
        }
    }
}

pub fn eval(src: &str, e: &Expr) -> Result<Value> {
    Evaluator { src }.eval(e)
}

/// Parse and evaluate.
pub fn eval_dsl(src: &str) -> Result<Value> {
    let e = parse(src)?;
    eval(src, &e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identities() {
        assert_eq!(eval_dsl("Gr(2,5) == P(4) * SumEven(5)").unwrap(), Value::Bool(true));
        assert_eq!(eval_dsl("P(6)*H(2,7) == P(5)*Gr(2,7)").unwrap(), Value::Bool(true));
        assert_eq!(eval_dsl("F2(6) - F1(6) == L*L*L*L").unwrap(), Value::Bool(true));
        assert_eq!(eval_dsl("Gr(2,4) == 1").unwrap(), Value::Bool(false));
    }

    #[test]
    fn arithmetic() {
        assert_eq!(
            eval_dsl("(1 + L) * (1 - L)").unwrap(),
            Value::Class(LPoly::from_coeffs(&[1, 0, -1]))
        );
        assert_eq!(
            eval_dsl("Gr(2,4) div P(2)").unwrap(),
            Value::Class(LPoly::from_coeffs(&[1, 0, 1]))
        );
        assert_eq!(eval_dsl("2 - 3 - 4").unwrap(), Value::Class(LPoly::constant(-5)));
        assert_eq!(
            eval_dsl("1 + 2 * L").unwrap(),
            Value::Class(LPoly::from_coeffs(&[1, 2]))
        );
    }

    #[test]
    fn non_exact_division() {
        match eval_dsl("(1 + L) div (1 + L*L)") {
            Err(Error::Eval { expr, message }) => {
                assert_eq!(expr, "(1 + L) div (1 + L*L)");
                assert!(message.contains("not exact"), "{message}");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn parse_errors_carry_positions() {
        let at = |src: &str| match parse(src) {
            Err(Error::Parse { line, column, .. }) => (line, column),
            other => panic!("{src}: {other:?}"),
        };
        assert_eq!(at("1 +"), (1, 4));
        assert_eq!(at("Gr(3,5)"), (1, 4));
        assert_eq!(at("1 +\n  Foo(2)"), (2, 3));
        assert_eq!(at("P(1,2)"), (1, 1));
        assert_eq!(at("1 = 1"), (1, 3));
        assert_eq!(at("(1 + L"), (1, 7));
        assert_eq!(at("1 2"), (1, 3));
        assert_eq!(at("1 $ 2"), (1, 3));
    }

    #[test]
    fn range_and_type_errors() {
        assert!(matches!(eval_dsl("Gr(2,3)"), Err(Error::Eval { .. })));
        assert!(matches!(eval_dsl("SumEven(1)"), Err(Error::Eval { .. })));
        assert!(matches!(eval_dsl("(1 == 1) + 1"), Err(Error::Eval { .. })));
    }
}
