//! Text grammar shared system-wide.
//!
//! Scalars use the parameter symbols `L A B G`, integers and rationals
//! (`p/q`), operators `+ - * / ^` and parentheses. Polynomial contexts add
//! the variables `s t` (or `d0 h0` on the classification side); algebra
//! contexts add the generators `e[i] f[i] h[i] d[i]` and `c`, with `*` as
//! word concatenation and `1` as the empty word. Example inputs:
//!
//! ```text
//! -(1/(4*A))*t^2 - (1/(2*A))*t + B*(B+1)/A
//! 2*e[1] - (1/L)*d[-2] + c
//! E0 = A; F0 = -(1/(4*A))*h0^2 - (1/(2*A))*h0 + B*(B+1)/A; lambda = L; gamma = G
//! ```
//!
//! Errors carry the 1-based line/column of the offending token and the set
//! of token kinds that would have been accepted there.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::classify::{EFCandidate, HFreeData};
use crate::liealg::{AlgebraElement, EnvelopingElement, Gen};
use crate::polymod::{Family, ModuleSpec, SPoly};
use crate::scalars::rat::Rat;
use crate::scalars::{Param, Scalar};

/// Parameter bindings from `--set`-style assignments; binding a symbol to a
/// rational switches every occurrence to instantiated mode.
#[derive(Clone, Debug, Default)]
pub struct Bindings(pub BTreeMap<Param, Rat>);

impl Bindings {
    pub fn empty() -> Self {
        Bindings::default()
    }

    pub fn set(&mut self, p: Param, value: Rat) {
        self.0.insert(p, value);
    }

    pub fn lookup(&self, p: Param) -> Option<&Rat> {
        self.0.get(&p)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
    pub expected: Vec<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at line {}, column {}: {}",
            self.line, self.col, self.message
        )?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(", "))?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Equals,
    Semicolon,
    Comma,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("integer `{}`", n),
            Tok::Ident(s) => format!("identifier `{}`", s),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
            Tok::Equals => "`=`".into(),
            Tok::Semicolon => "`;`".into(),
            Tok::Comma => "`,`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

struct Lexer {
    tokens: Vec<(Tok, usize, usize)>, // token, line, col
    pos: usize,
}

fn lex(text: &str) -> Result<Lexer, ParseError> {
    let mut tokens = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&ch) = chars.peek() {
        let (tline, tcol) = (line, col);
        let bump = |c: char, line: &mut usize, col: &mut usize| {
            if c == '\n' {
                *line += 1;
                *col = 1;
            } else {
                *col += 1;
            }
        };
        match ch {
            ' ' | '\t' | '\r' | '\n' => {
                chars.next();
                bump(ch, &mut line, &mut col);
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_digit() {
                        digits.push(c);
                        chars.next();
                        bump(c, &mut line, &mut col);
                    } else {
                        break;
                    }
                }
                tokens.push((Tok::Int(digits.parse().unwrap()), tline, tcol));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut ident = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        ident.push(c);
                        chars.next();
                        bump(c, &mut line, &mut col);
                    } else {
                        break;
                    }
                }
                tokens.push((Tok::Ident(ident), tline, tcol));
            }
            _ => {
                let tok = match ch {
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    '/' => Tok::Slash,
                    '^' => Tok::Caret,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    '[' => Tok::LBracket,
                    ']' => Tok::RBracket,
                    '=' => Tok::Equals,
                    ';' => Tok::Semicolon,
                    ',' => Tok::Comma,
                    other => {
                        return Err(ParseError {
                            line: tline,
                            col: tcol,
                            message: format!("unexpected character `{}`", other),
                            expected: vec![],
                        })
                    }
                };
                chars.next();
                bump(ch, &mut line, &mut col);
                tokens.push((tok, tline, tcol));
            }
        }
    }
    tokens.push((Tok::End, line, col));
    Ok(Lexer { tokens, pos: 0 })
}

impl Lexer {
    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].0
    }

    fn here(&self) -> (usize, usize) {
        let t = &self.tokens[self.pos];
        (t.1, t.2)
    }

    fn advance(&mut self) -> Tok {
        let t = self.tokens[self.pos].0.clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: &Tok, expected: &[&str]) -> Result<(), ParseError> {
        if self.peek() == want {
            self.advance();
            Ok(())
        } else {
            Err(self.error_here(
                format!("found {}", self.peek().describe()),
                expected.iter().map(|s| s.to_string()).collect(),
            ))
        }
    }

    fn error_here(&self, message: String, expected: Vec<String>) -> ParseError {
        let (line, col) = self.here();
        ParseError {
            line,
            col,
            message,
            expected,
        }
    }
}

/// What a context evaluates to; scalars embed into both richer kinds.
#[derive(Clone, Debug)]
enum Value {
    Num(Scalar),
    Poly(SPoly),
    Env(EnvelopingElement),
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum CtxKind {
    Scalar,
    Poly,
    Env,
}

struct Ctx<'a> {
    kind: CtxKind,
    var_s: &'a str,
    var_t: &'a str,
    bindings: &'a Bindings,
}

impl Value {
    fn into_poly(self) -> SPoly {
        match self {
            Value::Num(c) => SPoly::constant(c),
            Value::Poly(p) => p,
            Value::Env(_) => unreachable!("algebra values never coerce to polynomials"),
        }
    }

    fn into_env(self) -> EnvelopingElement {
        match self {
            Value::Num(c) => EnvelopingElement::one().scale(&c),
            Value::Env(e) => e,
            Value::Poly(_) => unreachable!("polynomial values never coerce to algebra elements"),
        }
    }
}

struct Parser<'a> {
    lexer: Lexer,
    ctx: Ctx<'a>,
}

impl<'a> Parser<'a> {
    fn parse_expr(&mut self) -> Result<Value, ParseError> {
        let mut acc = self.parse_term()?;
        loop {
            match self.lexer.peek() {
                Tok::Plus => {
                    self.lexer.advance();
                    let rhs = self.parse_term()?;
                    acc = self.combine_add(acc, rhs, false)?;
                }
                Tok::Minus => {
                    self.lexer.advance();
                    let rhs = self.parse_term()?;
                    acc = self.combine_add(acc, rhs, true)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_term(&mut self) -> Result<Value, ParseError> {
        let mut acc = self.parse_unary()?;
        loop {
            match self.lexer.peek() {
                Tok::Star => {
                    self.lexer.advance();
                    let rhs = self.parse_unary()?;
                    acc = self.combine_mul(acc, rhs)?;
                }
                Tok::Slash => {
                    let (line, col) = self.lexer.here();
                    self.lexer.advance();
                    let rhs = self.parse_unary()?;
                    acc = self.combine_div(acc, rhs, line, col)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_unary(&mut self) -> Result<Value, ParseError> {
        if *self.lexer.peek() == Tok::Minus {
            self.lexer.advance();
            let v = self.parse_unary()?;
            return Ok(match v {
                Value::Num(c) => Value::Num(-&c),
                Value::Poly(p) => Value::Poly(p.neg()),
                Value::Env(e) => Value::Env(e.scale(&Scalar::from_int(-1))),
            });
        }
        self.parse_power()
    }

    fn parse_power(&mut self) -> Result<Value, ParseError> {
        let base = self.parse_atom()?;
        if *self.lexer.peek() != Tok::Caret {
            return Ok(base);
        }
        let (line, col) = self.lexer.here();
        self.lexer.advance();
        let exp = self.parse_exponent()?;
        match base {
            Value::Num(c) => {
                if exp < 0 && c.is_zero() {
                    return Err(ParseError {
                        line,
                        col,
                        message: "zero raised to a negative power".into(),
                        expected: vec![],
                    });
                }
                Ok(Value::Num(c.pow(exp)))
            }
            Value::Poly(p) => {
                if exp < 0 {
                    return Err(ParseError {
                        line,
                        col,
                        message: "negative powers of polynomial variables are not defined".into(),
                        expected: vec![],
                    });
                }
                let mut acc = SPoly::one();
                for _ in 0..exp {
                    acc = acc.mul(&p);
                }
                Ok(Value::Poly(acc))
            }
            Value::Env(e) => {
                if exp < 0 {
                    return Err(ParseError {
                        line,
                        col,
                        message: "negative powers of algebra elements are not defined".into(),
                        expected: vec![],
                    });
                }
                Ok(Value::Env(e.pow(exp as u32)))
            }
        }
    }

    fn parse_exponent(&mut self) -> Result<i64, ParseError> {
        let negative = if *self.lexer.peek() == Tok::Minus {
            self.lexer.advance();
            true
        } else if *self.lexer.peek() == Tok::LParen {
            // allow ^(-2)
            self.lexer.advance();
            let n = self.parse_exponent()?;
            self.lexer.expect(&Tok::RParen, &["`)`"])?;
            return Ok(n);
        } else {
            false
        };
        match self.lexer.peek().clone() {
            Tok::Int(n) => {
                self.lexer.advance();
                let v: i64 = n
                    .try_into()
                    .ok()
                    .filter(|v: &i64| *v <= 10_000)
                    .ok_or_else(|| {
                        self.lexer
                            .error_here("exponent out of range (limit 10000)".into(), vec![])
                    })?;
                Ok(if negative { -v } else { v })
            }
            other => Err(self.lexer.error_here(
                format!("found {}", other.describe()),
                vec!["integer exponent".into()],
            )),
        }
    }

    fn parse_atom(&mut self) -> Result<Value, ParseError> {
        match self.lexer.peek().clone() {
            Tok::Int(n) => {
                self.lexer.advance();
                Ok(Value::Num(Scalar::from_rat(Rat::from_integer(n))))
            }
            Tok::LParen => {
                self.lexer.advance();
                let v = self.parse_expr()?;
                self.lexer.expect(&Tok::RParen, &["`)`"])?;
                Ok(v)
            }
            Tok::Ident(name) => {
                let (line, col) = self.lexer.here();
                self.lexer.advance();
                self.resolve_ident(&name, line, col)
            }
            other => Err(self.lexer.error_here(
                format!("found {}", other.describe()),
                vec![
                    "integer".into(),
                    "identifier".into(),
                    "`(`".into(),
                    "`-`".into(),
                ],
            )),
        }
    }

    fn resolve_ident(&mut self, name: &str, line: usize, col: usize) -> Result<Value, ParseError> {
        // Parameter symbols are valid in every context.
        if let Some(p) = Param::from_symbol(name) {
            return Ok(Value::Num(match self.ctx.bindings.lookup(p) {
                Some(r) => Scalar::from_rat(r.clone()),
                None => Scalar::symbol(p),
            }));
        }
        if self.ctx.kind == CtxKind::Poly {
            if name == self.ctx.var_s {
                return Ok(Value::Poly(SPoly::var_s()));
            }
            if name == self.ctx.var_t {
                return Ok(Value::Poly(SPoly::var_t()));
            }
        }
        if self.ctx.kind == CtxKind::Env {
            if name == "c" {
                return Ok(Value::Env(EnvelopingElement::from_gen(Gen::C)));
            }
            if let "e" | "f" | "h" | "d" = name {
                self.lexer.expect(&Tok::LBracket, &["`[`"])?;
                let negative = if *self.lexer.peek() == Tok::Minus {
                    self.lexer.advance();
                    true
                } else {
                    false
                };
                let index: i64 = match self.lexer.peek().clone() {
                    Tok::Int(n) => {
                        self.lexer.advance();
                        let v: i64 = n
                            .try_into()
                            .ok()
                            .filter(|v: &i64| *v <= 10_000)
                            .ok_or_else(|| {
                                self.lexer
                                    .error_here("index out of range (limit 10000)".into(), vec![])
                            })?;
                        if negative {
                            -v
                        } else {
                            v
                        }
                    }
                    other => {
                        return Err(self.lexer.error_here(
                            format!("found {}", other.describe()),
                            vec!["integer index".into()],
                        ))
                    }
                };
                self.lexer.expect(&Tok::RBracket, &["`]`"])?;
                let gen = match name {
                    "e" => Gen::E(index),
                    "f" => Gen::F(index),
                    "h" => Gen::H(index),
                    _ => Gen::D(index),
                };
                return Ok(Value::Env(EnvelopingElement::from_gen(gen)));
            }
        }
        let mut expected = vec!["`L`".into(), "`A`".into(), "`B`".into(), "`G`".into()];
        match self.ctx.kind {
            CtxKind::Poly => {
                expected.push(format!("`{}`", self.ctx.var_s));
                expected.push(format!("`{}`", self.ctx.var_t));
            }
            CtxKind::Env => {
                expected.extend(["`e[i]`".into(), "`f[i]`".into(), "`h[i]`".into(), "`d[i]`".into(), "`c`".into()]);
            }
            CtxKind::Scalar => {}
        }
        Err(ParseError {
            line,
            col,
            message: format!("unknown identifier `{}` in this context", name),
            expected,
        })
    }

    fn combine_add(&self, a: Value, b: Value, subtract: bool) -> Result<Value, ParseError> {
        use Value::*;
        Ok(match (a, b) {
            (Num(x), Num(y)) => Num(if subtract { &x - &y } else { &x + &y }),
            (Poly(x), y @ (Num(_) | Poly(_))) => {
                let y = y.into_poly();
                Poly(if subtract { x.sub(&y) } else { x.add(&y) })
            }
            (x @ Num(_), Poly(y)) => {
                let x = x.into_poly();
                Poly(if subtract { x.sub(&y) } else { x.add(&y) })
            }
            (Env(x), y @ (Num(_) | Env(_))) => {
                let y = y.into_env();
                Env(if subtract { x.sub(&y) } else { x.add(&y) })
            }
            (x @ Num(_), Env(y)) => {
                let x = x.into_env();
                Env(if subtract { x.sub(&y) } else { x.add(&y) })
            }
            _ => {
                return Err(self.lexer.error_here(
                    "cannot mix polynomial variables and algebra generators".into(),
                    vec![],
                ))
            }
        })
    }

    fn combine_mul(&self, a: Value, b: Value) -> Result<Value, ParseError> {
        use Value::*;
        Ok(match (a, b) {
            (Num(x), Num(y)) => Num(&x * &y),
            (Num(x), Poly(y)) | (Poly(y), Num(x)) => Poly(y.scale(&x)),
            (Poly(x), Poly(y)) => Poly(x.mul(&y)),
            (Num(x), Env(y)) | (Env(y), Num(x)) => Env(y.scale(&x)),
            (Env(x), Env(y)) => Env(x.word_mul(&y)),
            _ => {
                return Err(self.lexer.error_here(
                    "cannot mix polynomial variables and algebra generators".into(),
                    vec![],
                ))
            }
        })
    }

    fn combine_div(&self, a: Value, b: Value, line: usize, col: usize) -> Result<Value, ParseError> {
        use Value::*;
        let divisor = match b {
            Num(y) => y,
            Poly(p) => match p.as_constant() {
                Some(c) => c,
                None => {
                    return Err(ParseError {
                        line,
                        col,
                        message: "cannot divide by a polynomial in the module variables".into(),
                        expected: vec![],
                    })
                }
            },
            Env(_) => {
                return Err(ParseError {
                    line,
                    col,
                    message: "cannot divide by an algebra element".into(),
                    expected: vec![],
                })
            }
        };
        if divisor.is_zero() {
            return Err(ParseError {
                line,
                col,
                message: "division by zero".into(),
                expected: vec![],
            });
        }
        let inv = divisor.inv().unwrap();
        Ok(match a {
            Num(x) => Num(&x * &inv),
            Poly(x) => Poly(x.scale(&inv)),
            Env(x) => Env(x.scale(&inv)),
        })
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        if *self.lexer.peek() != Tok::End {
            return Err(self.lexer.error_here(
                format!("found {}", self.lexer.peek().describe()),
                vec!["end of input".into(), "operator".into()],
            ));
        }
        Ok(())
    }
}

fn run_parser(
    text: &str,
    kind: CtxKind,
    var_s: &str,
    var_t: &str,
    bindings: &Bindings,
) -> Result<Value, ParseError> {
    let lexer = lex(text)?;
    let mut parser = Parser {
        lexer,
        ctx: Ctx {
            kind,
            var_s,
            var_t,
            bindings,
        },
    };
    let v = parser.parse_expr()?;
    parser.finish()?;
    Ok(v)
}

/// Parse a scalar (parameter symbols and rationals only).
pub fn parse_scalar(text: &str, bindings: &Bindings) -> Result<Scalar, ParseError> {
    Ok(run_parser(text, CtxKind::Scalar, "", "", bindings)?
        .into_poly()
        .as_constant()
        .expect("scalar context produces constants"))
}

/// Parse a polynomial in the given pair of variable names.
pub fn parse_spoly_named(
    text: &str,
    var_s: &str,
    var_t: &str,
    bindings: &Bindings,
) -> Result<SPoly, ParseError> {
    Ok(run_parser(text, CtxKind::Poly, var_s, var_t, bindings)?.into_poly())
}

/// Parse a polynomial in s, t.
pub fn parse_spoly(text: &str, bindings: &Bindings) -> Result<SPoly, ParseError> {
    parse_spoly_named(text, "s", "t", bindings)
}

/// Parse an enveloping-algebra expression (scalars, generators, sums,
/// products, powers).
pub fn parse_envelope(text: &str, bindings: &Bindings) -> Result<EnvelopingElement, ParseError> {
    Ok(run_parser(text, CtxKind::Env, "", "", bindings)?.into_env())
}

/// Parse a Lie algebra element: an enveloping expression whose words all
/// have length one.
pub fn parse_algebra(text: &str, bindings: &Bindings) -> Result<AlgebraElement, ParseError> {
    let env = parse_envelope(text, bindings)?;
    let mut out = AlgebraElement::zero();
    for (word, c) in env.terms() {
        if word.len() != 1 {
            return Err(ParseError {
                line: 1,
                col: 1,
                message: format!(
                    "`{}` is not a Lie algebra element (constants and products of \
                     generators are enveloping-algebra expressions)",
                    word
                ),
                expected: vec![],
            });
        }
        out.add_term(word.0[0], c.clone());
    }
    Ok(out)
}

/// Parse candidate data `E0 = ...; F0 = ...; lambda = ...; gamma = ...`
/// with E0, F0 given in the variables d0, h0.
pub fn parse_candidate(text: &str, bindings: &Bindings) -> Result<EFCandidate, ParseError> {
    let lexer = lex(text)?;
    let mut parser = Parser {
        lexer,
        ctx: Ctx {
            kind: CtxKind::Poly,
            var_s: "d0",
            var_t: "h0",
            bindings,
        },
    };
    let mut e0: Option<SPoly> = None;
    let mut f0: Option<SPoly> = None;
    let mut lambda: Option<Scalar> = None;
    let mut gamma: Option<Scalar> = None;
    loop {
        if *parser.lexer.peek() == Tok::End {
            break;
        }
        let key = match parser.lexer.peek().clone() {
            Tok::Ident(k) => {
                parser.lexer.advance();
                k
            }
            other => {
                return Err(parser.lexer.error_here(
                    format!("found {}", other.describe()),
                    vec!["`E0`".into(), "`F0`".into(), "`lambda`".into(), "`gamma`".into()],
                ))
            }
        };
        parser.lexer.expect(&Tok::Equals, &["`=`"])?;
        let value = parser.parse_expr()?;
        match key.as_str() {
            "E0" => e0 = Some(value.into_poly()),
            "F0" => f0 = Some(value.into_poly()),
            "lambda" => {
                lambda = Some(value.into_poly().as_constant().ok_or_else(|| {
                    parser
                        .lexer
                        .error_here("lambda must be a scalar".into(), vec![])
                })?)
            }
            "gamma" => {
                gamma = Some(value.into_poly().as_constant().ok_or_else(|| {
                    parser
                        .lexer
                        .error_here("gamma must be a scalar".into(), vec![])
                })?)
            }
            other => {
                return Err(parser.lexer.error_here(
                    format!("unknown candidate field `{}`", other),
                    vec!["`E0`".into(), "`F0`".into(), "`lambda`".into(), "`gamma`".into()],
                ))
            }
        }
        if *parser.lexer.peek() == Tok::Semicolon {
            parser.lexer.advance();
        }
    }
    let missing = |what: &str| ParseError {
        line: 1,
        col: 1,
        message: format!("candidate is missing `{}`", what),
        expected: vec![],
    };
    let e0 = e0.ok_or_else(|| missing("E0"))?;
    let f0 = f0.ok_or_else(|| missing("F0"))?;
    let lambda = lambda.ok_or_else(|| missing("lambda"))?;
    let gamma = gamma.ok_or_else(|| missing("gamma"))?;
    let base = HFreeData::new(lambda, gamma).map_err(|e| ParseError {
        line: 1,
        col: 1,
        message: e.to_string(),
        expected: vec![],
    })?;
    EFCandidate::new(e0, f0, base).map_err(|e| ParseError {
        line: 1,
        col: 1,
        message: e.to_string(),
        expected: vec![],
    })
}

/// Parse a module literal `Family(lambda, alpha, beta, gamma)`, e.g.
/// `Omega(2, 3, 1, 0)` or `Theta(L, A, 1/2, G)`.
pub fn parse_spec_literal(text: &str, bindings: &Bindings) -> Result<ModuleSpec, ParseError> {
    let lexer = lex(text)?;
    let mut parser = Parser {
        lexer,
        ctx: Ctx {
            kind: CtxKind::Scalar,
            var_s: "",
            var_t: "",
            bindings,
        },
    };
    let family: Family = match parser.lexer.peek().clone() {
        Tok::Ident(name) => {
            parser.lexer.advance();
            name.parse().map_err(|e: String| ParseError {
                line: 1,
                col: 1,
                message: e,
                expected: vec!["`Omega`".into(), "`Delta`".into(), "`Theta`".into()],
            })?
        }
        other => {
            return Err(parser.lexer.error_here(
                format!("found {}", other.describe()),
                vec!["family name".into()],
            ))
        }
    };
    parser.lexer.expect(&Tok::LParen, &["`(`"])?;
    let mut params = Vec::with_capacity(4);
    for k in 0..4 {
        let v = parser.parse_expr()?.into_poly();
        let c = v.as_constant().ok_or_else(|| {
            parser
                .lexer
                .error_here("module parameters must be scalars".into(), vec![])
        })?;
        params.push(c);
        if k < 3 {
            parser.lexer.expect(&Tok::Comma, &["`,`"])?;
        }
    }
    parser.lexer.expect(&Tok::RParen, &["`)`"])?;
    parser.finish()?;
    let mut it = params.into_iter();
    ModuleSpec::new(
        family,
        it.next().unwrap(),
        it.next().unwrap(),
        it.next().unwrap(),
        it.next().unwrap(),
    )
    .map_err(|e| ParseError {
        line: 1,
        col: 1,
        message: e.to_string(),
        expected: vec![],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::Word;
    use crate::scalars::rat::rat;

    fn b() -> Bindings {
        Bindings::empty()
    }

    #[test]
    fn parse_scalar_grammar() {
        let s = parse_scalar("-(1/(4*A))", &b()).unwrap();
        assert_eq!(s, -&(&Scalar::one() / &(&Scalar::from_int(4) * &Scalar::alpha())));
        let q = parse_scalar("B*(B+1)/A", &b()).unwrap();
        let expected = &(&Scalar::beta() * &(&Scalar::beta() + &Scalar::one())) / &Scalar::alpha();
        assert_eq!(q, expected);
        assert_eq!(parse_scalar("L^-2", &b()).unwrap(), Scalar::lambda().pow(-2));
        assert_eq!(parse_scalar("L^(-2)", &b()).unwrap(), Scalar::lambda().pow(-2));
    }

    #[test]
    fn parse_spoly_grammar() {
        let p = parse_spoly("s^2*t - 3/2", &b()).unwrap();
        let expected = SPoly::monomial(2, 1, Scalar::one())
            .sub(&SPoly::constant(Scalar::from_rat(rat(3, 2))));
        assert_eq!(p, expected);

        let q = parse_spoly("-(1/(4*A))*t^2 - (1/(2*A))*t + B*(B+1)/A", &b()).unwrap();
        assert_eq!(q.deg_t(), 2);
    }

    #[test]
    fn parse_algebra_grammar() {
        let x = parse_algebra("2*e[1] - (1/L)*d[-2] + c", &b()).unwrap();
        let mut expected = AlgebraElement::from_gen(Gen::E(1)).scale(&Scalar::from_int(2));
        expected.add_term(Gen::D(-2), -&(&Scalar::one() / &Scalar::lambda()));
        expected.add_term(Gen::C, Scalar::one());
        assert_eq!(x, expected);
        // two terms expected per the grammar example
        assert_eq!(parse_algebra("e[1] - (1/L)*f[-1]", &b()).unwrap().terms().count(), 2);
    }

    #[test]
    fn parse_envelope_words() {
        let u = parse_envelope("(1/2)*1 - (1/(2*A))*e[0]", &b()).unwrap();
        let mut expected = EnvelopingElement::zero();
        expected.add_term(Word::unit(), Scalar::from_rat(rat(1, 2)));
        expected.add_term(
            Word(vec![Gen::E(0)]),
            -&(&Scalar::one() / &(&Scalar::from_int(2) * &Scalar::alpha())),
        );
        assert_eq!(u, expected);

        let sq = parse_envelope("(L*e[0])^2", &b()).unwrap();
        let le0 = EnvelopingElement::from_gen(Gen::E(0)).scale(&Scalar::lambda());
        assert_eq!(sq, le0.word_mul(&le0));
    }

    #[test]
    fn parse_error_position() {
        let err = parse_envelope("e[1", &b()).unwrap_err();
        assert_eq!((err.line, err.col), (1, 4));
        let err = parse_scalar("L + ", &b()).unwrap_err();
        assert_eq!(err.line, 1);
        assert_eq!(err.col, 5);
        let err = parse_spoly("s * q", &b()).unwrap_err();
        assert_eq!(err.col, 5);
    }

    #[test]
    fn products_of_generators_rejected_in_algebra_context() {
        assert!(parse_algebra("e[0]*h[1]", &b()).is_err());
        assert!(parse_envelope("e[0]*h[1]", &b()).is_ok());
    }

    #[test]
    fn bindings_substitute() {
        let mut bind = Bindings::empty();
        bind.set(Param::Lambda, rat(2, 1));
        assert_eq!(parse_scalar("L^3", &bind).unwrap(), Scalar::from_int(8));
    }

    #[test]
    fn candidate_text() {
        let text = "E0 = A; F0 = -(1/(4*A))*h0^2 - (1/(2*A))*h0 + B*(B+1)/A; lambda = L; gamma = G";
        let c = parse_candidate(text, &b()).unwrap();
        let expected = crate::classify::roundtrip_extract(&ModuleSpec::symbolic(Family::Omega));
        assert_eq!(c.e0(), expected.e0());
        assert_eq!(c.f0(), expected.f0());
    }

    #[test]
    fn spec_literal() {
        let spec = parse_spec_literal("Omega(2, 3, 1, 0)", &b()).unwrap();
        assert_eq!(spec.family(), Family::Omega);
        assert_eq!(spec.lambda(), &Scalar::from_int(2));
        assert!(parse_spec_literal("Theta(0, 1, 1, 0)", &b()).is_err());
    }

    #[test]
    fn print_parse_roundtrip() {
        let polys = [
            "s*t^2",
            "(1/4)*t^2 - 1/4",
            "-(1/(4*A))*t^2 - (1/(2*A))*t + (B^2 + B)/A",
        ];
        for text in polys {
            let p = parse_spoly(text, &b()).unwrap();
            let printed = format!("{}", p);
            let q = parse_spoly(&printed, &b()).unwrap();
            assert_eq!(p, q, "roundtrip failed for {}", text);
        }
    }
}
